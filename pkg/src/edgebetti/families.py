"""Standard graph families and seeded random generators.

Random graphs use Python's ``random.Random`` (MT19937) seeded with the
seed reduced mod 2**64, so every 64-bit seed, signed or unsigned, names a
fixed stream on every platform.
"""
from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphInputError

__all__ = [
    "empty_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "cycle_graph",
    "path_graph",
    "wheel_graph",
    "star_graph",
    "graph_d",
    "random_gnp",
    "random_tree",
    "seeded_rng",
]

_SEED_MOD = 1 << 64


def _build(n, edges) -> Graph:
    return Graph.from_edges(n, edges, allow_large=True)


def seeded_rng(seed: int) -> random.Random:
    if not isinstance(seed, int) or not -(1 << 63) <= seed < _SEED_MOD:
        raise GraphInputError(f"seed must be a 64-bit integer, got {seed!r}")
    return random.Random(seed % _SEED_MOD)


def _need(cond: bool, msg: str):
    if not cond:
        raise GraphInputError(msg)


def empty_graph(n: int) -> Graph:
    _need(n >= 0, "n must be >= 0")
    return _build(n, [])


def complete_graph(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return _build(n, combinations(range(1, n + 1), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Parts are {1..a} and {a+1..a+b}."""
    _need(a >= 1 and b >= 1, "complete bipartite graph needs a, b >= 1")
    return _build(a + b, [(x, y) for x in range(1, a + 1) for y in range(a + 1, a + b + 1)])


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return _build(n, [(v, v % n + 1) for v in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return _build(n, [(v, v + 1) for v in range(1, n)])


def star_graph(leaves: int) -> Graph:
    """Centre 1 joined to ``leaves`` other vertices."""
    _need(leaves >= 0, "leaf count must be >= 0")
    return _build(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


def wheel_graph(n: int) -> Graph:
    """The cycle C_n on 1..n plus a hub n+1 joined to every rim vertex."""
    _need(n >= 3, "wheel needs n >= 3")
    rim = [(v, v % n + 1) for v in range(1, n + 1)]
    return _build(n + 1, rim + [(v, n + 1) for v in range(1, n + 1)])


def graph_d() -> Graph:
    """The 5-vertex, 7-edge graph whose complement is P3 + K2.

    Vertices a..e are 1..5; edges ab, ac, cd, bd, ce, be, ed.
    """
    a, b, c, d, e = range(1, 6)
    return _build(5, [(a, b), (a, c), (c, d), (b, d), (c, e), (b, e), (e, d)])


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Pairs (u, v), u < v, are visited in lexicographic order with one
    ``random()`` draw each; the edge is present iff the draw is < p.
    """
    _need(n >= 1, "n must be >= 1")
    _need(0.0 <= p <= 1.0, f"p must lie in [0, 1], got {p}")
    rng = seeded_rng(seed)
    return _build(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on 1..n decoded from a random Pruefer sequence."""
    _need(n >= 1, "n must be >= 1")
    rng = seeded_rng(seed)
    if n == 1:
        return _build(1, [])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    deg = [1] * (n + 1)
    for v in seq:
        deg[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if deg[u] == 1)
        edges.append((leaf, v))
        deg[leaf] -= 1
        deg[v] -= 1
    u, w = (x for x in range(1, n + 1) if deg[x] == 1)
    edges.append((u, w))
    return _build(n, edges)
