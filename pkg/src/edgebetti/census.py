"""Induced-subgraph counts for the small patterns the strand formulas use.

Everything here is exhaustive subset enumeration over bitsets.  Each
specialised counter tests the induced graph structurally; the generic
:func:`count_induced_isomorphic` compares canonical forms instead, so the
two routes can check each other.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .families import complete_bipartite_graph, complete_graph, cycle_graph, graph_d, wheel_graph
from .graph import Graph, bits, component_masks

__all__ = [
    "MAX_PATTERN_SIZE",
    "UnsupportedPatternError",
    "Pattern",
    "CensusReport",
    "canonical_form",
    "count_cliques",
    "count_complete_bipartite",
    "count_induced_cycles",
    "count_wheels_w4",
    "count_pattern_d",
    "count_induced_isomorphic",
    "census",
    "PATTERN_D",
    "PATTERN_W4",
]

MAX_PATTERN_SIZE = 5


class UnsupportedPatternError(ValueError):
    pass


def _subsets(adj: Sequence[int], n: int, k: int, edges: int | None = None) -> Iterator[int]:
    """Yield bitmasks of the k-subsets of range(n), ascending lexicographically.

    With ``edges`` set, only subsets inducing exactly that many edges are
    yielded; branches that can no longer hit the target are cut.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        if not edges:
            yield 0
        return

    def rec(start: int, chosen: int, size: int, e: int):
        if size == k:
            yield chosen
            return
        need = k - size
        for v in range(start, n - need + 1):
            e2 = e + (adj[v] & chosen).bit_count()
            if edges is not None:
                if e2 > edges:
                    continue
                rest = need - 1
                # most edges the remaining picks could still add
                if e2 + rest * (size + 1) + rest * (rest - 1) // 2 < edges:
                    continue
            yield from rec(v + 1, chosen | 1 << v, size + 1, e2)

    yield from rec(0, 0, 0, 0)


def _local_adj(adj: Sequence[int], sub: int) -> tuple[int, ...]:
    """Adjacency of the subgraph induced on ``sub``, relabelled 0..|sub|-1."""
    members = list(bits(sub))
    pos = {v: t for t, v in enumerate(members)}
    out = []
    for v in members:
        nb = 0
        for u in bits(adj[v] & sub):
            nb |= 1 << pos[u]
        out.append(nb)
    return tuple(out)


def _pair_mask(adj: Sequence[int]) -> int:
    m = 0
    for t, (u, v) in enumerate(combinations(range(len(adj)), 2)):
        if adj[u] >> v & 1:
            m |= 1 << t
    return m


@lru_cache(maxsize=None)
def _canonical(adj: tuple[int, ...]) -> int:
    k = len(adj)
    pairs = list(combinations(range(k), 2))
    best = None
    for perm in permutations(range(k)):
        m = 0
        for t, (u, v) in enumerate(pairs):
            if adj[perm[u]] >> perm[v] & 1:
                m |= 1 << t
        if best is None or m < best:
            best = m
    return best


def canonical_form(g: Graph) -> tuple[int, int]:
    """(vertex count, minimal pair mask over all relabellings); graphs of at most 5 vertices."""
    if g.n > MAX_PATTERN_SIZE:
        raise UnsupportedPatternError(f"canonical forms are limited to {MAX_PATTERN_SIZE} vertices")
    return g.n, _canonical(g.adj)


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    disconnected: bool = False

    def __post_init__(self):
        if self.graph.n > MAX_PATTERN_SIZE:
            raise UnsupportedPatternError(
                f"pattern {self.name!r} has {self.graph.n} vertices; at most {MAX_PATTERN_SIZE} supported"
            )
        connected = len(component_masks(self.graph.adj, self.graph.vertex_mask)) <= 1
        if not connected and not self.disconnected:
            raise ValueError(f"pattern {self.name!r} is disconnected; pass disconnected=True")

    @property
    def canonical(self) -> tuple[int, int]:
        return canonical_form(self.graph)


PATTERN_W4 = Pattern("w4", wheel_graph(4))
PATTERN_D = Pattern("d", graph_d())


def count_induced_isomorphic(g: Graph, pattern: Pattern | Graph) -> int:
    pg = pattern.graph if isinstance(pattern, Pattern) else pattern
    if pg.n > MAX_PATTERN_SIZE:
        raise UnsupportedPatternError(f"patterns are limited to {MAX_PATTERN_SIZE} vertices")
    target = _canonical(pg.adj)
    return sum(
        1
        for sub in _subsets(g.adj, g.n, pg.n, pg.num_edges)
        if _canonical(_local_adj(g.adj, sub)) == target
    )


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-vertex cliques (k_r)."""
    if r < 1:
        raise ValueError("clique size must be >= 1")

    def rec(cand: int, depth: int) -> int:
        if depth == r:
            return 1
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only extend by later vertices so each clique is built once
            total += rec(cand & g.adj[v], depth + 1)
        return total

    return rec(g.vertex_mask, 0)


def count_complete_bipartite(g: Graph, a: int, b: int) -> int:
    """Induced copies of K_{a,b}, one per vertex subset."""
    if a < 1 or b < 1:
        raise ValueError("part sizes must be >= 1")
    k = a + b
    count = 0
    for sub in _subsets(g.adj, g.n, k, a * b):
        co = [~g.adj[v] & sub & ~(1 << v) for v in range(g.n)]
        comps = component_masks(co, sub)
        # with a*b edges present the complement has C(a,2)+C(b,2); two
        # components of sizes a, b can then only be two cliques
        if len(comps) == 2 and sorted(c.bit_count() for c in comps) == sorted((a, b)):
            count += 1
    return count


def _degree_profile(adj: Sequence[int], sub: int) -> list[int]:
    return sorted((adj[v] & sub).bit_count() for v in bits(sub))


def count_induced_cycles(g: Graph, length: int) -> int:
    """Induced chordless cycles c_length, for lengths 3..5."""
    if not 3 <= length <= MAX_PATTERN_SIZE:
        raise UnsupportedPatternError(f"cycle length {length} outside 3..{MAX_PATTERN_SIZE}")
    return sum(
        1
        for sub in _subsets(g.adj, g.n, length, length)
        if _degree_profile(g.adj, sub) == [2] * length and len(component_masks(g.adj, sub)) == 1
    )


def count_wheels_w4(g: Graph) -> int:
    """Induced W_4: a hub seeing four rim vertices that form a chordless 4-cycle."""
    count = 0
    for sub in _subsets(g.adj, g.n, 5, 8):
        if _degree_profile(g.adj, sub) != [3, 3, 3, 3, 4]:
            continue
        hub = next(v for v in bits(sub) if (g.adj[v] & sub).bit_count() == 4)
        rim = sub & ~(1 << hub)
        if _degree_profile(g.adj, rim) == [2, 2, 2, 2] and len(component_masks(g.adj, rim)) == 1:
            count += 1
    return count


def count_pattern_d(g: Graph) -> int:
    """Induced copies of the graph D, i.e. 5-subsets whose complement is P3 + K2."""
    count = 0
    for sub in _subsets(g.adj, g.n, 5, 7):
        co = [~g.adj[v] & sub & ~(1 << v) for v in range(g.n)]
        comps = component_masks(co, sub)
        if len(comps) == 2 and sorted(c.bit_count() for c in comps) == [2, 3]:
            # three complement edges on a 3-set and a 2-set: the 3-set holds
            # two of them, which makes it a path
            count += 1
    return count


@dataclass
class CensusReport:
    k: dict[int, int] = field(default_factory=dict)
    k_bipartite: dict[tuple[int, int], int] = field(default_factory=dict)
    c4: int = 0
    w4: int = 0
    d: int = 0

    def bipartite(self, a: int, b: int) -> int:
        return self.k_bipartite[(min(a, b), max(a, b))]

    def to_dict(self) -> dict:
        return {
            "k": {str(r): v for r, v in sorted(self.k.items())},
            "k_bipartite": {f"{a},{b}": v for (a, b), v in sorted(self.k_bipartite.items())},
            "c4": self.c4,
            "w4": self.w4,
            "d": self.d,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CensusReport":
        kb = {}
        for key, v in data["k_bipartite"].items():
            a, b = (int(x) for x in key.split(","))
            kb[(min(a, b), max(a, b))] = v
        return cls(
            k={int(r): v for r, v in data["k"].items()},
            k_bipartite=kb,
            c4=data["c4"],
            w4=data["w4"],
            d=data["d"],
        )

    @classmethod
    def from_json(cls, text: str) -> "CensusReport":
        return cls.from_dict(json.loads(text))


def census(g: Graph, max_size: int = MAX_PATTERN_SIZE) -> CensusReport:
    """Counts of K_r (2 <= r <= max_size), K_{a,b} (a <= b, a + b <= max_size), C_4, W_4 and D."""
    report = CensusReport()
    for r in range(2, max_size + 1):
        report.k[r] = count_cliques(g, r)
    for size in range(2, max_size + 1):
        for a in range(1, size // 2 + 1):
            report.k_bipartite[(a, size - a)] = count_complete_bipartite(g, a, size - a)
    report.c4 = count_induced_cycles(g, 4)
    report.w4 = count_wheels_w4(g)
    report.d = count_pattern_d(g)
    return report


def standard_patterns() -> dict[str, Pattern]:
    """Canonical patterns keyed like the census fields."""
    out = {f"k{r}": Pattern(f"k{r}", complete_graph(r)) for r in range(1, MAX_PATTERN_SIZE + 1)}
    for size in range(2, MAX_PATTERN_SIZE + 1):
        for a in range(1, size // 2 + 1):
            name = f"k{a},{size - a}"
            out[name] = Pattern(name, complete_bipartite_graph(a, size - a))
    for length in range(3, MAX_PATTERN_SIZE + 1):
        out[f"c{length}"] = Pattern(f"c{length}", cycle_graph(length))
    out["w4"] = PATTERN_W4
    out["d"] = PATTERN_D
    return out
