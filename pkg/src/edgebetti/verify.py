"""Cross-check every strand identity and bound against the homology oracle."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator, Optional, Union

from .betti import (
    DEFAULT_ORACLE_CAP,
    beta_2_4_exact,
    beta_3_5_exact,
    betti_table_hochster,
    degree_clique_term,
    linear_strand_components,
    lower_bound,
    triangle_lower_bound,
    upper_bound,
)
from .census import count_cliques
from .graph import Graph, complement, has_induced_c4, has_induced_cycle_exhaustive, is_chordal
from .homology import GF2, RATIONALS, Field, as_field

__all__ = ["check_graph", "labeled_graphs", "sampled_graphs", "run_verify", "VerifySummary", "MAX_VERIFY_N"]

MAX_VERIFY_N = 7


def check_graph(g: Graph, f: Union[Field, int, None] = None, *, cap: int = DEFAULT_ORACLE_CAP) -> list[str]:
    """Return a description of every identity that fails on ``g`` (empty if all hold)."""
    field_ = as_field(f)
    other = GF2 if field_.characteristic == 0 else RATIONALS
    table = betti_table_hochster(g, field_, cap=cap)
    table_other = betti_table_hochster(g, other, cap=cap)
    bad = []

    for (i, j), b in table.entries.items():
        if j < i + 2 or j > g.n or b < 0:
            bad.append(f"entry beta[{i},{j}]={b} outside the allowed range")
    if table[0, 2] != g.num_edges:
        bad.append(f"beta[0,2]={table[0, 2]} != #E={g.num_edges}")
    if any(i == 0 and j != 2 for i, j in table.entries):
        bad.append("nonzero beta[0,j] with j != 2")

    if table.linear_strand() != table_other.linear_strand():
        bad.append(f"strand over {field_} {table.linear_strand()} != over {other} {table_other.linear_strand()}")

    c4_free = not has_induced_c4(g)
    for i in range(max(g.n - 1, 0)):
        beta = table[i, i + 2]
        comp = linear_strand_components(g, i)
        if comp != beta:
            bad.append(f"i={i}: component formula {comp} != oracle {beta}")
        if i <= 1 or c4_free:
            v = degree_clique_term(g, i)
            if v != beta:
                bad.append(f"i={i}: degree/clique formula {v} != oracle {beta}")
        if i == 2 and beta_2_4_exact(g) != beta:
            bad.append(f"beta24 formula {beta_2_4_exact(g)} != oracle {beta}")
        if i == 3 and beta_3_5_exact(g) != beta:
            bad.append(f"beta35 formula {beta_3_5_exact(g)} != oracle {beta}")
        lo, hi = lower_bound(g, i), upper_bound(g, i)
        if not lo <= beta <= hi:
            bad.append(f"i={i}: sandwich {lo} <= {beta} <= {hi} fails")
        if i <= 2 and lo != beta:
            bad.append(f"i={i}: lower bound {lo} not tight (oracle {beta})")

    chordal = is_chordal(complement(g))
    if chordal != table.is_linear():
        bad.append(f"complement chordal={chordal} but off-strand entries {table.off_strand()}")
    if chordal == has_induced_cycle_exhaustive(complement(g)):
        bad.append("chordality disagrees with exhaustive induced-cycle search")

    tri = triangle_lower_bound(g)
    if tri > count_cliques(g, 3):
        bad.append(f"triangle bound {tri} > k3={count_cliques(g, 3)}")
    return bad


def labeled_graphs(n: int) -> Iterator[tuple[int, Graph]]:
    """Every labelled graph on 1..n, keyed by its edge mask."""
    for mask in range(1 << comb(n, 2)):
        yield mask, Graph.from_edge_mask(n, mask)


def sampled_graphs(n: int, count: int, seed: int) -> Iterator[tuple[int, Graph]]:
    """``count`` uniformly random labelled graphs on 1..n (seeded)."""
    rng = random.Random(seed)
    for _ in range(count):
        mask = rng.getrandbits(comb(n, 2)) if n > 1 else 0
        yield mask, Graph.from_edge_mask(n, mask)


@dataclass
class VerifySummary:
    field: Field
    checked: dict[int, int] = field(default_factory=dict)
    failure: Optional[tuple[int, int, list[str]]] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def run_verify(
    max_n: int,
    f: Union[Field, int, None] = None,
    *,
    sample: Optional[int] = None,
    seed: int = 0,
    progress: Optional[Callable[[int, int], None]] = None,
) -> VerifySummary:
    """Check every labelled graph with 1..max_n vertices; stop at the first failure.

    With ``sample`` set, sizes n >= 6 use that many seeded random graphs
    instead of the full enumeration.
    """
    if not 1 <= max_n <= MAX_VERIFY_N:
        raise ValueError(f"max_n must lie in 1..{MAX_VERIFY_N}")
    summary = VerifySummary(as_field(f))
    for n in range(1, max_n + 1):
        graphs = sampled_graphs(n, sample, seed + n) if sample and n >= 6 else labeled_graphs(n)
        count = 0
        for mask, g in graphs:
            bad = check_graph(g, summary.field)
            count += 1
            if bad:
                summary.checked[n] = count
                summary.failure = (n, mask, bad)
                return summary
        summary.checked[n] = count
        if progress:
            progress(n, count)
    return summary
