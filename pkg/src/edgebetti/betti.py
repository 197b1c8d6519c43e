"""Graded Betti numbers of edge ideals.

Two independent routes to the same numbers:

* :func:`betti_table_hochster` sums reduced homology of the clique complexes
  of complements of induced subgraphs, for every subset of vertices.
* The linear-strand formulas below work from degrees, induced-subgraph
  counts, and component counts alone, with no homology at all.

The lex-segment upper bound and the triangle bound only depend on the
number of edges and vertices.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Union

from .census import count_cliques, count_complete_bipartite, count_pattern_d, count_wheels_w4
from .graph import Graph, bits, complement, component_masks, degrees, has_induced_c4, is_chordal
from .homology import Field, as_field, clique_homology_dims

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "OracleCapError",
    "InconsistencyError",
    "BettiTable",
    "LexSegment",
    "StrandRow",
    "StrandReport",
    "ResolutionCheck",
    "binom",
    "betti_table_hochster",
    "linear_strand_components",
    "degree_clique_term",
    "linear_strand_no_c4",
    "beta_2_4_exact",
    "beta_3_5_exact",
    "lower_bound",
    "lex_segment",
    "upper_bound",
    "upper_bound_from_counts",
    "triangle_lower_bound",
    "has_linear_resolution",
    "closed_form_complete",
    "closed_form_complete_bipartite",
    "strand_report",
]

DEFAULT_ORACLE_CAP = 14
# below this many vertices a process pool costs more than it saves
_PARALLEL_MIN_N = 11


class OracleCapError(RuntimeError):
    """The homology oracle was asked for a graph above its vertex cap."""


class InconsistencyError(AssertionError):
    """Two routes that must agree did not; always a bug, never a math fact."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever k < 0 or k > n (n >= 0)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass
class BettiTable:
    """Sparse graded Betti numbers beta_{i,j} of I(G); zero entries are not stored."""

    n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def linear_strand(self) -> list[int]:
        return [self[i, i + 2] for i in range(max(self.n - 1, 0))]

    def off_strand(self) -> dict[tuple[int, int], int]:
        return {(i, j): b for (i, j), b in self.entries.items() if j != i + 2}

    def is_linear(self) -> bool:
        return not self.off_strand()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        return cls(data["n"], {(e["i"], e["j"]): e["beta"] for e in data["entries"]})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        """Macaulay2-style diagram: column i, row j - i, plus a total row."""
        if not self.entries:
            return "(zero ideal)"
        cols = range(max(i for i, _ in self.entries) + 1)
        rows = range(min(j - i for i, j in self.entries), max(j - i for i, j in self.entries) + 1)
        cells = [[str(self[i, i + r]) if self[i, i + r] else "." for i in cols] for r in rows]
        totals = [str(sum(b for (i2, _), b in self.entries.items() if i2 == i)) for i in cols]
        header = [str(i) for i in cols]
        width = max(len(s) for s in header + totals + [c for row in cells for c in row])
        labels = ["", "total:"] + [f"{r}:" for r in rows]
        lw = max(len(s) for s in labels)
        lines = []
        for label, row in zip(labels, [header, totals] + cells):
            lines.append(label.rjust(lw) + " " + " ".join(s.rjust(width) for s in row))
        return "\n".join(lines)


def _hochster_partial(adj_c: tuple[int, ...], n: int, sizes: list[int], p: int) -> dict:
    """Hochster contributions of every vertex subset whose size is in ``sizes``."""
    acc: dict[tuple[int, int], int] = {}
    for j in sizes:
        for members in combinations(range(n), j):
            sub = 0
            for v in members:
                sub |= 1 << v
            pos = {v: t for t, v in enumerate(members)}
            local = []
            for v in members:
                nb = 0
                for u in bits(adj_c[v] & sub):
                    nb |= 1 << pos[u]
                local.append(nb)
            dims = clique_homology_dims(tuple(local), p)
            # H~_{j-i-2} feeds beta_{i,j}; i = j-1 would need H~_{-1}, which is 0
            for d in range(j - 1):
                if dims[d]:
                    key = (j - d - 2, j)
                    acc[key] = acc.get(key, 0) + dims[d]
    return acc


def betti_table_hochster(
    g: Graph,
    f: Union[Field, int, None] = None,
    *,
    cap: int = DEFAULT_ORACLE_CAP,
    threads: Optional[int] = 1,
) -> BettiTable:
    """Full Betti table of I(g) by Hochster's formula.

    ``threads=None`` uses every CPU; work is split by subset size and the
    partial tables are added, so the result does not depend on the split.
    """
    if g.n > cap:
        raise OracleCapError(
            f"homology oracle capped at {cap} vertices (graph has {g.n}); raise it with --cap"
        )
    p = as_field(f).characteristic
    adj_c = complement(g).adj
    sizes = list(range(2, g.n + 1))
    workers = (os.cpu_count() or 1) if threads is None else max(1, threads)
    if workers == 1 or g.n < _PARALLEL_MIN_N:
        return BettiTable(g.n, _hochster_partial(adj_c, g.n, sizes, p))
    # deal sizes round-robin so the heavy middle sizes are spread out
    chunks = [sizes[w::workers] for w in range(workers) if sizes[w::workers]]
    total: dict[tuple[int, int], int] = {}
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        for part in pool.map(_hochster_partial, *zip(*[(adj_c, g.n, c, p) for c in chunks])):
            for k, v in part.items():
                total[k] = total.get(k, 0) + v
    return BettiTable(g.n, total)


def linear_strand_components(g: Graph, i: int) -> int:
    """beta_{i,i+2}: sum over (i+2)-subsets S of (#components of complement of G_S) - 1."""
    if i < 0:
        raise ValueError("homological index must be >= 0")
    adj_c = complement(g).adj
    total = 0
    for members in combinations(range(g.n), i + 2):
        sub = 0
        for v in members:
            sub |= 1 << v
        total += len(component_masks(adj_c, sub)) - 1
    return total


def degree_clique_term(g: Graph, i: int) -> int:
    """sum_v C(deg v, i+1) - k_{i+2}(g)."""
    return sum(binom(d, i + 1) for d in degrees(g)) - count_cliques(g, i + 2)


def linear_strand_no_c4(g: Graph, i: int, *, c4_free: Optional[bool] = None) -> Optional[int]:
    """beta_{i,i+2} from degrees and clique counts.

    Exact for i in {0, 1} and for graphs without an induced 4-cycle; returns
    ``None`` otherwise (use :func:`degree_clique_term` for the raw value).
    ``c4_free`` skips the 4-cycle search when the caller already knows.
    """
    if i < 0:
        raise ValueError("homological index must be >= 0")
    if i >= 2:
        if c4_free is None:
            c4_free = not has_induced_c4(g)
        if not c4_free:
            return None
    return degree_clique_term(g, i)


def beta_2_4_exact(g: Graph) -> int:
    return degree_clique_term(g, 2) + count_complete_bipartite(g, 2, 2)


def beta_3_5_exact(g: Graph) -> int:
    return (
        degree_clique_term(g, 3)
        + count_complete_bipartite(g, 2, 3)
        + count_wheels_w4(g)
        + count_pattern_d(g)
    )


def lower_bound(g: Graph, i: int) -> int:
    """Degree/clique term plus induced K_{a, i+2-a} counts for 2 <= a <= (i+2)//2, floored at 0."""
    if i < 0:
        raise ValueError("homological index must be >= 0")
    bip = sum(count_complete_bipartite(g, a, i + 2 - a) for a in range(2, (i + 2) // 2 + 1))
    return max(0, degree_clique_term(g, i) + bip)


@dataclass(frozen=True)
class LexSegment:
    """The ``num_edges`` lex-largest degree-2 monomials in n variables.

    ``monomials[t] = (p, q)`` stands for x_p * x_q with p <= q, and
    ``u[t] = q``.  The first ``j`` variables contribute full blocks
    x_p x_p, ..., x_p x_n; block j+1 holds the remaining ``l`` monomials.
    """

    num_edges: int
    n: int
    j: int
    l: int
    monomials: tuple[tuple[int, int], ...]

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(q for _, q in self.monomials)


def lex_segment(num_edges: int, n: int) -> LexSegment:
    total = n * (n + 1) // 2
    if n < 0 or not 0 <= num_edges <= total:
        raise ValueError(f"need 0 <= num_edges <= {total} degree-2 monomials in {n} variables")
    j = 0
    before = 0  # n + (n-1) + ... + (n-(j-1))
    while before + (n - j) < num_edges:
        before += n - j
        j += 1
    l = num_edges - before
    mons = [(p, q) for p in range(1, j + 1) for q in range(p, n + 1)]
    mons += [(j + 1, q) for q in range(j + 1, j + l + 1)]
    return LexSegment(num_edges, n, j, l, tuple(mons))


def upper_bound_from_counts(num_edges: int, n: int, i: int) -> int:
    if i < 0:
        raise ValueError("homological index must be >= 0")
    return sum(binom(u - 1, i) for u in lex_segment(num_edges, n).u)


def upper_bound(g: Graph, i: int) -> int:
    """Linear-strand Betti number of the lex ideal with the same degree-2 Hilbert function."""
    return upper_bound_from_counts(g.num_edges, g.n, i)


def triangle_lower_bound(g: Graph) -> int:
    seg = lex_segment(g.num_edges, g.n)
    j, l = seg.j, seg.l
    # C(j, j-3) read as C(j, 3); tail is j + (j+1) + ... + (j+l-1)
    tail = l * j + l * (l - 1) // 2
    value = sum(binom(d, 2) for d in degrees(g)) - j * binom(g.n, 2) + binom(j, 3) - tail
    return max(0, value)


def closed_form_complete(n: int, i: int) -> int:
    if n < 2 or i < 0:
        raise ValueError("need n >= 2 and i >= 0")
    return (i + 1) * binom(n, i + 2)


def closed_form_complete_bipartite(a: int, b: int, i: int) -> int:
    if a < 1 or b < 1 or i < 0:
        raise ValueError("need a, b >= 1 and i >= 0")
    return binom(a + b, i + 2) - binom(a, i + 2) - binom(b, i + 2)


@dataclass
class ResolutionCheck:
    linear: bool
    certificate: Optional[bool] = None
    table: Optional[BettiTable] = None

    def __bool__(self):
        return self.linear


def has_linear_resolution(
    g: Graph,
    f: Union[Field, int, None] = None,
    *,
    certificate: bool = False,
    cap: int = DEFAULT_ORACLE_CAP,
) -> ResolutionCheck:
    """Linear resolution iff the complement is chordal.

    With ``certificate=True`` the Hochster table is computed too and the
    two answers are required to agree.
    """
    linear = is_chordal(complement(g))
    if not certificate:
        return ResolutionCheck(linear)
    table = betti_table_hochster(g, f, cap=cap)
    if table.is_linear() != linear:
        raise InconsistencyError(
            f"chordality says linear={linear} but oracle off-strand entries are {table.off_strand()}"
        )
    return ResolutionCheck(linear, table.is_linear(), table)


@dataclass
class StrandRow:
    i: int
    oracle: Optional[int]
    components: Optional[int]
    formula_no_c4: Optional[int]
    no_c4_applicable: bool
    beta24: Optional[int]
    beta35: Optional[int]
    lower: int
    upper: int

    def exact_values(self) -> dict[str, int]:
        """Every value that must equal beta_{i,i+2}."""
        out = {}
        if self.components is not None:
            out["components"] = self.components
        if self.no_c4_applicable:
            out["formula_no_c4"] = self.formula_no_c4
        if self.beta24 is not None:
            out["beta24"] = self.beta24
        if self.beta35 is not None:
            out["beta35"] = self.beta35
        if self.i <= 2:
            out["lower"] = self.lower
        return out


@dataclass
class StrandReport:
    n: int
    field: Field
    rows: list[StrandRow]

    def problems(self) -> list[str]:
        out = []
        for r in self.rows:
            exact = r.exact_values()
            ref = r.oracle if r.oracle is not None else exact.get("components")
            for name, v in exact.items():
                if ref is not None and v != ref:
                    out.append(f"i={r.i}: {name}={v} but beta={ref}")
            if ref is not None and not r.lower <= ref <= r.upper:
                out.append(f"i={r.i}: sandwich {r.lower} <= {ref} <= {r.upper} fails")
        return out

    def check(self) -> "StrandReport":
        bad = self.problems()
        if bad:
            raise InconsistencyError("; ".join(bad))
        return self

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.characteristic,
            "rows": [vars(r).copy() for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "StrandReport":
        return cls(data["n"], Field(data["field"]), [StrandRow(**r) for r in data["rows"]])

    CSV_HEADER = "i,oracle,formula_no_c4,beta24,beta35,lower,upper"

    def to_csv(self) -> str:
        def cell(x):
            return "" if x is None else str(x)

        lines = [self.CSV_HEADER]
        for r in self.rows:
            no_c4 = r.formula_no_c4 if r.no_c4_applicable else None
            lines.append(
                ",".join(cell(x) for x in (r.i, r.oracle, no_c4, r.beta24, r.beta35, r.lower, r.upper))
            )
        return "\n".join(lines)

    def render(self) -> str:
        head = ["i", "oracle", "components", "no_c4", "beta24", "beta35", "lower", "upper", "tight"]
        body = []
        for r in self.rows:
            ref = r.oracle if r.oracle is not None else r.components
            no_c4 = "-" if not r.no_c4_applicable else str(r.formula_no_c4)
            tight = "" if ref is None else ("lower" if r.lower == ref else "") + (
                "/upper" if r.upper == ref else ""
            )
            body.append(
                [str(r.i)]
                + ["-" if x is None else str(x) for x in (r.oracle, r.components)]
                + [no_c4]
                + ["-" if x is None else str(x) for x in (r.beta24, r.beta35)]
                + [str(r.lower), str(r.upper), tight.strip("/")]
            )
        widths = [max(len(row[c]) for row in [head] + body) for c in range(len(head))]
        return "\n".join("  ".join(s.rjust(w) for s, w in zip(row, widths)) for row in [head] + body)


def strand_report(
    g: Graph,
    f: Union[Field, int, None] = None,
    *,
    cap: int = DEFAULT_ORACLE_CAP,
    max_i: Optional[int] = None,
    threads: Optional[int] = 1,
) -> StrandReport:
    """One row per i in 0..n-2 (or 0..max_i).

    Above ``cap`` vertices the oracle and the component-count sum are left
    out; every other column is still computed.
    """
    field_ = as_field(f)
    top = g.n - 2 if max_i is None else min(max_i, g.n - 2)
    within = g.n <= cap
    table = betti_table_hochster(g, field_, cap=cap, threads=threads) if within else None
    c4_free = not has_induced_c4(g)
    rows = []
    for i in range(top + 1):
        no_c4 = degree_clique_term(g, i)
        rows.append(
            StrandRow(
                i=i,
                oracle=table[i, i + 2] if table is not None else None,
                components=linear_strand_components(g, i) if within else None,
                formula_no_c4=no_c4,
                no_c4_applicable=i <= 1 or c4_free,
                beta24=beta_2_4_exact(g) if i == 2 else None,
                beta35=beta_3_5_exact(g) if i == 3 else None,
                lower=lower_bound(g, i),
                upper=upper_bound(g, i),
            )
        )
    return StrandReport(g.n, field_, rows)
