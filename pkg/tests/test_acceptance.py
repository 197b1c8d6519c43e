"""Acceptance suite: one test per criterion, each with its own runtime limit.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed at the end of the session.
"""
import random
import time
from math import comb

import pytest

from edgebetti.betti import (
    beta_2_4_exact,
    beta_3_5_exact,
    betti_table_hochster,
    closed_form_complete,
    closed_form_complete_bipartite,
    degree_clique_term,
    linear_strand_components,
    lower_bound,
    triangle_lower_bound,
    upper_bound,
)
from edgebetti.census import count_cliques
from edgebetti.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    random_gnp,
    random_tree,
    wheel_graph,
)
from edgebetti.graph import complement, degrees, has_induced_c4, is_chordal
from edgebetti.homology import GF2, RATIONALS, clique_homology_dims
from edgebetti.verify import labeled_graphs, sampled_graphs

SAMPLE_SIZE = 2000
SAMPLE_SEEDS = {6: 20240606, 7: 20240707}
TREE_SEED = 1212
TRIANGLE_SEED = 1010


@pytest.fixture(autouse=True)
def cold_cache():
    # every timing starts without homology results memoised by earlier tests
    clique_homology_dims.cache_clear()


def exhaustive_corpus():
    for n in range(1, 6):
        for _, g in labeled_graphs(n):
            yield g


def sampled_corpus():
    for n, seed in SAMPLE_SEEDS.items():
        for _, g in sampled_graphs(n, SAMPLE_SIZE, seed):
            yield g


def identity_failures(g):
    t = betti_table_hochster(g, RATIONALS)
    bad = []
    c4_free = not has_induced_c4(g)
    for i in range(max(g.n - 1, 0)):
        beta = t[i, i + 2]
        if linear_strand_components(g, i) != beta:
            bad.append(("components", i))
        if (c4_free or i <= 1) and degree_clique_term(g, i) != beta:
            bad.append(("no_c4", i))
        lo, hi = lower_bound(g, i), upper_bound(g, i)
        if not lo <= beta <= hi:
            bad.append(("sandwich", i))
        if i <= 2 and lo != beta:
            bad.append(("lower_tight", i))
    if beta_2_4_exact(g) != t[2, 4]:
        bad.append(("beta24", 2))
    if beta_3_5_exact(g) != t[3, 5]:
        bad.append(("beta35", 3))
    return bad


def report(record_property, num, text):
    record_property("criterion", num)
    record_property("summary", text)


def test_criterion_1_complete_graphs(record_property):
    start = time.perf_counter()
    bad = []
    for n in range(2, 7):
        for f in (RATIONALS, GF2):
            t = betti_table_hochster(complete_graph(n), f)
            expect = {(i, i + 2): closed_form_complete(n, i) for i in range(n - 1)}
            if t.entries != {k: v for k, v in expect.items() if v}:
                bad.append((n, str(f)))
    elapsed = time.perf_counter() - start
    report(record_property, 1, f"K_n, n=2..6, QQ and GF(2): {len(bad)} mismatches, {elapsed:.2f}s (limit 10s)")
    assert not bad
    assert elapsed < 10


def test_criterion_2_complete_bipartite(record_property):
    start = time.perf_counter()
    bad = []
    for a in range(1, 4):
        for b in range(a, 4):
            t = betti_table_hochster(complete_bipartite_graph(a, b))
            expect = {(i, i + 2): closed_form_complete_bipartite(a, b, i) for i in range(a + b - 1)}
            if t.entries != {k: v for k, v in expect.items() if v}:
                bad.append((a, b))
    elapsed = time.perf_counter() - start
    report(record_property, 2, f"K_(a,b), 1<=a<=b<=3: {len(bad)} mismatches, {elapsed:.2f}s (limit 10s)")
    assert not bad
    assert elapsed < 10


def test_criterion_3_identity_suite(record_property):
    start = time.perf_counter()
    exhaustive = [(g.edges(), identity_failures(g)) for g in exhaustive_corpus()]
    t_exh = time.perf_counter() - start
    start = time.perf_counter()
    sampled = [(g.edges(), identity_failures(g)) for g in sampled_corpus()]
    t_smp = time.perf_counter() - start
    failures = [(e, bad) for e, bad in exhaustive + sampled if bad]
    report(
        record_property,
        3,
        f"identities on {len(exhaustive)} labelled graphs n<=5 ({t_exh:.1f}s, limit 120s) and "
        f"{len(sampled)} sampled at n=6,7 ({t_smp:.1f}s, limit 600s): {len(failures)} failures",
    )
    assert len(exhaustive) == 1 + 2 + 8 + 64 + 1024
    assert len(sampled) == 2 * SAMPLE_SIZE
    assert not failures, failures[:5]
    assert t_exh < 120
    assert t_smp < 600


def test_criterion_4_froberg(record_property):
    start = time.perf_counter()
    count, bad = 0, []
    for g in list(exhaustive_corpus()) + list(sampled_corpus()):
        count += 1
        if is_chordal(complement(g)) != betti_table_hochster(g).is_linear():
            bad.append(g.edges())
    elapsed = time.perf_counter() - start
    report(record_property, 4, f"chordal complement <=> linear table on {count} graphs: {len(bad)} failures, {elapsed:.1f}s")
    assert not bad


def test_criterion_5_characteristic_independence(record_property):
    start = time.perf_counter()
    count, bad = 0, []
    for g in list(exhaustive_corpus()) + list(sampled_corpus()):
        count += 1
        if betti_table_hochster(g, GF2).linear_strand() != betti_table_hochster(g, RATIONALS).linear_strand():
            bad.append(g.edges())
    elapsed = time.perf_counter() - start
    report(record_property, 5, f"GF(2) strand == QQ strand on {count} graphs: {len(bad)} failures, {elapsed:.1f}s")
    assert not bad


def test_criterion_6_forests(record_property):
    start = time.perf_counter()
    rng = random.Random(TREE_SEED)
    bad, with_oracle = [], 0
    for _ in range(200):
        n = rng.randint(2, 12)
        t = random_tree(n, rng.getrandbits(64))
        if t.num_edges != n - 1 or linear_strand_components(t, 0) != n - 1:
            bad.append((n, t.edges(), 0))
        for i in range(1, n - 1):
            if sum(comb(d, i + 1) for d in degrees(t)) != linear_strand_components(t, i):
                bad.append((n, t.edges(), i))
        if n <= 10:
            with_oracle += 1
            table = betti_table_hochster(t)
            strand = [sum(comb(d, i + 1) for d in degrees(t)) if i else n - 1 for i in range(n - 1)]
            if table.linear_strand() != strand or table[0, 2] != n - 1:
                bad.append((n, t.edges(), "oracle"))
    elapsed = time.perf_counter() - start
    report(
        record_property,
        6,
        f"forest formula on 200 random trees (n<=12, {with_oracle} also against the oracle): "
        f"{len(bad)} failures, {elapsed:.1f}s (limit 300s)",
    )
    assert not bad
    assert elapsed < 300


def test_criterion_7_triangle_bound(record_property):
    start = time.perf_counter()
    bad, count = [], 0
    for g in exhaustive_corpus():
        count += 1
        if triangle_lower_bound(g) > count_cliques(g, 3):
            bad.append(g.edges())
    rng = random.Random(TRIANGLE_SEED)
    ps = (0.2, 0.5, 0.8)
    for k in range(1000):
        g = random_gnp(10, ps[k % 3], rng.getrandbits(64))
        count += 1
        if triangle_lower_bound(g) > count_cliques(g, 3):
            bad.append(g.edges())
    k4 = (triangle_lower_bound(complete_graph(4)), count_cliques(complete_graph(4), 3))
    elapsed = time.perf_counter() - start
    report(
        record_property,
        7,
        f"triangle bound <= k3 on {count} graphs: {len(bad)} failures; K4 gives {k4[0]} <= {k4[1]}; "
        f"{elapsed:.1f}s (limit 60s)",
    )
    assert not bad
    assert k4 == (3, 4)
    assert elapsed < 60


def test_criterion_8_worked_values(record_property):
    got = {
        "beta24(C4)": betti_table_hochster(cycle_graph(4))[2, 4],
        "beta35(W4)": betti_table_hochster(wheel_graph(4))[3, 5],
        "beta13(K3)": betti_table_hochster(complete_graph(3))[1, 3],
        "beta13(K4)": betti_table_hochster(complete_graph(4))[1, 3],
        "upper(K4,1)": upper_bound(complete_graph(4), 1),
    }
    expect = {"beta24(C4)": 1, "beta35(W4)": 2, "beta13(K3)": 2, "beta13(K4)": 8, "upper(K4,1)": 9}
    report(record_property, 8, ", ".join(f"{k}={v}" for k, v in got.items()))
    assert got == expect
    # the formulas agree with those oracle values
    assert beta_2_4_exact(cycle_graph(4)) == 1
    assert beta_3_5_exact(wheel_graph(4)) == 2
    assert got["upper(K4,1)"] >= got["beta13(K4)"]
