"""Clique complexes and reduced homology over Q or GF(p).

Homology is computed from the augmented chain complex
``... -> C_1 -> C_0 -> k -> 0`` so ``H~_{-1}`` vanishes as soon as there is
a vertex.  Ranks are exact: fraction-free (Bareiss) elimination over the
integers for characteristic 0, modular elimination otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Union

from .graph import Graph, bits

__all__ = [
    "Field",
    "RATIONALS",
    "GF2",
    "as_field",
    "SimplicialComplex",
    "BoundaryMatrix",
    "HomologyDims",
    "clique_complex",
    "boundary_matrix",
    "reduced_homology_dims",
    "rank_exact",
    "clique_homology_dims",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class Field:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or (c != 0 and not _is_prime(c)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {c!r}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = Field(0)
GF2 = Field(2)


def as_field(f: Union[Field, int, None]) -> Field:
    if f is None:
        return RATIONALS
    if isinstance(f, Field):
        return f
    return Field(f)


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by dimension; each face a sorted vertex tuple, lex ordered.

    The empty face is implicit.
    """

    n_vertices: int
    faces_by_dim: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    def faces(self, d: int) -> tuple[tuple[int, ...], ...]:
        if 0 <= d < len(self.faces_by_dim):
            return self.faces_by_dim[d]
        return ()

    def f_vector(self) -> list[int]:
        return [len(fs) for fs in self.faces_by_dim]

    def reduced_euler_characteristic(self) -> int:
        return -1 + sum((-1) ** d * len(fs) for d, fs in enumerate(self.faces_by_dim))


def _clique_faces(adj: Sequence[int]) -> list[list[int]]:
    """Cliques of ``adj`` as bitmasks grouped by size - 1, in lex order of sorted tuples."""
    n = len(adj)
    layer = [(1 << v, v) for v in range(n)]
    out = []
    while layer:
        out.append([m for m, _ in layer])
        nxt = []
        for m, top in layer:
            common = adj[top]
            for u in bits(m):
                common &= adj[u]
            common >>= top + 1
            base = top + 1
            while common:
                low = common & -common
                u = base + low.bit_length() - 1
                common ^= low
                nxt.append((m | 1 << u, u))
        layer = nxt
    return out


def clique_complex(g: Graph) -> SimplicialComplex:
    """Every clique of ``g`` as a face (vertex labels 1..n)."""
    faces = tuple(
        tuple(tuple(v + 1 for v in bits(m)) for m in layer) for layer in _clique_faces(g.adj)
    )
    return SimplicialComplex(g.n, faces)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse integer matrix stored by columns as ``(row, entry)`` pairs."""

    n_rows: int
    n_cols: int
    columns: tuple[tuple[tuple[int, int], ...], ...]

    def to_dense(self) -> list[list[int]]:
        m = [[0] * self.n_cols for _ in range(self.n_rows)]
        for c, col in enumerate(self.columns):
            for r, x in col:
                m[r][c] = x
        return m

    def __matmul__(self, other: "BoundaryMatrix") -> list[list[int]]:
        a, b = self.to_dense(), other.to_dense()
        return [
            [sum(a[i][t] * b[t][j] for t in range(self.n_cols)) for j in range(other.n_cols)]
            for i in range(self.n_rows)
        ]


def boundary_matrix(c: SimplicialComplex, d: int) -> BoundaryMatrix:
    """Matrix of the boundary map from d-faces to (d-1)-faces.

    ``d == 0`` gives the augmentation row. Columns and rows follow the
    complex's face order; the sign of dropping the k-th vertex is (-1)**k.
    """
    if not 0 <= d <= c.dim:
        raise ValueError(f"boundary degree {d} outside 0..{c.dim}")
    cols = c.faces(d)
    if d == 0:
        return BoundaryMatrix(1, len(cols), tuple(((0, 1),) for _ in cols))
    index = {f: r for r, f in enumerate(c.faces(d - 1))}
    columns = []
    for face in cols:
        col = []
        for k in range(len(face)):
            col.append((index[face[:k] + face[k + 1:]], -1 if k % 2 else 1))
        col.sort()
        columns.append(tuple(col))
    return BoundaryMatrix(len(index), len(cols), tuple(columns))


MatrixLike = Union[BoundaryMatrix, Sequence[Sequence[int]]]


def _rank_gf2(columns: list[int]) -> int:
    basis: dict[int, int] = {}
    for v in columns:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    for c in range(n_cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        prow = [x * inv % p for x in m[rank]]
        m[rank] = prow
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            if f:
                row = m[i]
                for k in range(c, n_cols):
                    row[k] = (row[k] - f * prow[k]) % p
        rank += 1
    return rank


def _rank_bareiss(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        piv = next((i for i in range(rank, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for i in range(rank + 1, n_rows):
            row = m[i]
            f = row[c]
            for k in range(c + 1, n_cols):
                row[k] = (p * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def rank_exact(m: MatrixLike, f: Union[Field, int, None] = None) -> int:
    """Rank of an integer matrix over Q (Bareiss) or GF(p)."""
    field_ = as_field(f)
    p = field_.characteristic
    if isinstance(m, BoundaryMatrix):
        if m.n_rows == 0 or m.n_cols == 0:
            return 0
        if p == 2:
            cols = []
            for col in m.columns:
                v = 0
                for r, x in col:
                    if x % 2:
                        v ^= 1 << r
                cols.append(v)
            return _rank_gf2(cols)
        rows = m.to_dense()
    else:
        rows = [list(r) for r in m]
        if not rows or not rows[0]:
            return 0
        if p == 2:
            cols = []
            for c in range(len(rows[0])):
                v = 0
                for r, row in enumerate(rows):
                    if row[c] % 2:
                        v |= 1 << r
                cols.append(v)
            return _rank_gf2(cols)
    if p == 0:
        return _rank_bareiss(rows)
    return _rank_mod_p(rows, p)


@dataclass(frozen=True)
class HomologyDims:
    """Reduced Betti numbers, degree -1 through the complex's dimension.

    Indexing outside the stored range returns 0.
    """

    dims: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * x for d, x in self.dims.items())


def reduced_homology_dims(c: SimplicialComplex, f: Union[Field, int, None] = None) -> HomologyDims:
    field_ = as_field(f)
    ranks = [rank_exact(boundary_matrix(c, d), field_) for d in range(c.dim + 1)]
    ranks.append(0)
    dims = {-1: 1 - (ranks[0] if c.dim >= 0 else 0)}
    for d in range(c.dim + 1):
        dims[d] = len(c.faces(d)) - ranks[d] - ranks[d + 1]
    return HomologyDims(dims)


@lru_cache(maxsize=1 << 18)
def clique_homology_dims(adj: tuple[int, ...], characteristic: int = 0) -> tuple[int, ...]:
    """Reduced homology of the clique complex of ``adj``, degrees 0..dim.

    Memoised on the adjacency tuple; this is the inner kernel of the
    Hochster sum, where the same small graphs recur constantly.
    """
    g = Graph(len(adj), adj)
    h = reduced_homology_dims(clique_complex(g), Field(characteristic))
    return tuple(h[d] for d in range(len(adj)))
