"""Simple graphs on vertices 1..n stored as per-vertex neighbour bitsets.

Bit ``v - 1`` of a mask stands for vertex ``v``.  All operations are pure;
a :class:`Graph` is never mutated after construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Sequence

__all__ = [
    "DEFAULT_MAX_VERTICES",
    "Graph",
    "GraphInputError",
    "VertexSet",
    "bits",
    "mask_of",
    "induced_subgraph",
    "complement",
    "components",
    "isolated_vertices",
    "degree",
    "degrees",
    "is_chordal",
    "elimination_ordering",
    "has_induced_c4",
    "has_induced_cycle_exhaustive",
]

DEFAULT_MAX_VERTICES = 64

VertexSet = frozenset  # frozenset[int] of 1-based labels


class GraphInputError(ValueError):
    """Malformed graph data: loops, out-of-range vertices, duplicates."""


def bits(mask: int):
    """Yield the 0-based positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int], n: int) -> int:
    m = 0
    for v in vertices:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise GraphInputError(f"vertex {v!r} out of range 1..{n}")
        m |= 1 << (v - 1)
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[Hashable, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency must have one mask per vertex")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphInputError(f"vertex {v + 1} has a neighbour outside 1..{self.n}")
            if nb >> v & 1:
                raise GraphInputError(f"loop at vertex {v + 1}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v + 1} and {u + 1}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise GraphInputError("label map must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        *,
        allow_large: bool = False,
        labels: Sequence[Hashable] = (),
    ) -> "Graph":
        """Build a graph on 1..n. Loops and repeated edges are rejected."""
        if n > DEFAULT_MAX_VERTICES and not allow_large:
            raise GraphInputError(
                f"graph has {n} vertices; more than {DEFAULT_MAX_VERTICES} needs allow_large=True"
            )
        adj = [0] * n
        for e in edges:
            u, v = e
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            for w in (u, v):
                if not isinstance(w, int) or not 1 <= w <= n:
                    raise GraphInputError(f"vertex {w!r} out of range 1..{n}")
            if adj[u - 1] >> (v - 1) & 1:
                raise GraphInputError(f"duplicate edge {{{u}, {v}}}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj), tuple(labels))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Decode the edge mask used by the exhaustive enumerators.

        Bit ``t`` corresponds to the ``t``-th pair of ``combinations(range(1, n + 1), 2)``.
        """
        pairs = combinations(range(1, n + 1), 2)
        return cls.from_edges(n, [p for t, p in enumerate(pairs) if mask >> t & 1])

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [
            (v + 1, u + 1)
            for v, nb in enumerate(self.adj)
            for u in bits(nb >> (v + 1) << (v + 1))
        ]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> VertexSet:
        return frozenset(u + 1 for u in bits(self.adj[v - 1]))

    def edge_mask(self) -> int:
        """Inverse of :meth:`from_edge_mask`."""
        m = 0
        for t, (u, v) in enumerate(combinations(range(self.n), 2)):
            if self.adj[u] >> v & 1:
                m |= 1 << t
        return m

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabelled 1..|s| in increasing order.

    The returned graph's ``labels`` map each new vertex to its label in ``g``.
    """
    members = sorted(set(s))
    m = mask_of(members, g.n)
    pos = {v - 1: t for t, v in enumerate(members)}
    adj = []
    for v in members:
        nb = 0
        for u in bits(g.adj[v - 1] & m):
            nb |= 1 << pos[u]
        adj.append(nb)
    return Graph(len(members), tuple(adj), tuple(g.labels[v - 1] for v in members))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(
        g.n,
        tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)),
        g.labels,
    )


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the graph ``adj`` restricted to ``within``, as bitmasks."""
    out = []
    left = within
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & within & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest member."""
    return [frozenset(v + 1 for v in bits(c)) for c in component_masks(g.adj, g.vertex_mask)]


def isolated_vertices(g: Graph) -> VertexSet:
    return frozenset(v + 1 for v, nb in enumerate(g.adj) if not nb)


def degree(g: Graph, v: int) -> int:
    if not isinstance(v, int) or not 1 <= v <= g.n:
        raise GraphInputError(f"vertex {v!r} out of range 1..{g.n}")
    return g.adj[v - 1].bit_count()


def degrees(g: Graph) -> list[int]:
    return [nb.bit_count() for nb in g.adj]


def elimination_ordering(g: Graph) -> list[int]:
    """Maximum cardinality search; returns the reverse of the visit order.

    For a chordal graph the result is a perfect elimination ordering.
    """
    weight = [0] * g.n
    unvisited = g.vertex_mask
    visit = []
    while unvisited:
        v = max(bits(unvisited), key=lambda u: (weight[u], -u))
        visit.append(v)
        unvisited &= ~(1 << v)
        for u in bits(g.adj[v] & unvisited):
            weight[u] += 1
    return [v + 1 for v in reversed(visit)]


def is_chordal(g: Graph) -> bool:
    order = [v - 1 for v in elimination_ordering(g)]
    rank = {u: t for t, u in enumerate(order)}
    later = g.vertex_mask
    for v in order:
        later &= ~(1 << v)
        nb = g.adj[v] & later
        if not nb:
            continue
        # earliest-eliminated later neighbour must see all the others
        parent = min(bits(nb), key=rank.__getitem__)
        rest = nb & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def _is_cycle(adj: Sequence[int], sub: int) -> bool:
    for v in bits(sub):
        if (adj[v] & sub).bit_count() != 2:
            return False
    return len(component_masks(adj, sub)) == 1


def has_induced_c4(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        sub = sum(1 << v for v in quad)
        if _is_cycle(g.adj, sub):
            return True
    return False


def has_induced_cycle_exhaustive(g: Graph, min_length: int = 4) -> bool:
    """Search every vertex subset of size >= ``min_length`` for a chordless cycle.

    Exponential; kept as an independent check on :func:`is_chordal`.
    """
    for size in range(min_length, g.n + 1):
        for sub_vs in combinations(range(g.n), size):
            if _is_cycle(g.adj, sum(1 << v for v in sub_vs)):
                return True
    return False
