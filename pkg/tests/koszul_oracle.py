"""Independent Betti-number oracle for the tests.

Uses upper Koszul simplicial complexes instead of clique complexes:
beta_{i,S}(I) = dim H~_{i-1}(K^S) with K^S = {F subset of S : S \\ F contains an edge}.
Ranks come from Fraction elimination; nothing from the package is imported.
"""
from fractions import Fraction
from itertools import combinations


def _rank(rows, p=0):
    m = [[Fraction(x) if p == 0 else x % p for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c] if p == 0 else pow(m[rank][c], -1, p)
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b if p == 0 else (a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _reduced_homology(faces, p):
    """faces: set of sorted tuples closed under subsets, including (). Returns {d: dim}."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    ranks = {}
    for d, fs in by_dim.items():
        if d < 0:
            continue
        lower = {f: t for t, f in enumerate(by_dim.get(d - 1, []))}
        mat = [[0] * len(fs) for _ in lower]
        for c, f in enumerate(fs):
            for k in range(len(f)):
                mat[lower[f[:k] + f[k + 1:]]][c] = (-1) ** k
        ranks[d] = _rank(mat, p) if lower else 0
    return {d: len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d, fs in by_dim.items()}


def koszul_betti(n, edges, p=0):
    """Sparse {(i, j): beta_{i,j}} for the edge ideal of a graph on 1..n."""
    es = [frozenset(e) for e in edges]
    out = {}
    for j in range(2, n + 1):
        for s in combinations(range(1, n + 1), j):
            faces = set()
            for k in range(j + 1):
                for f in combinations(s, k):
                    rest = set(s) - set(f)
                    if any(e <= rest for e in es):
                        faces.add(f)
            if not faces:
                continue
            for d, dim in _reduced_homology(faces, p).items():
                if dim:
                    key = (d + 1, j)
                    out[key] = out.get(key, 0) + dim
    return out
