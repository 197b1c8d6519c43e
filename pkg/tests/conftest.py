import networkx as nx
import pytest

from edgebetti.graph import Graph


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: t + 1 for t, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


@pytest.fixture(scope="session")
def atlas():
    """Every graph on at most 7 vertices, one per isomorphism class."""
    return [from_nx(h) for h in nx.graph_atlas_g()]


def pytest_terminal_summary(terminalreporter):
    reports = [
        r
        for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance" in r.nodeid
    ]
    if not reports:
        return
    rows = []
    for r in reports:
        props = dict(r.user_properties)
        if "criterion" in props:
            rows.append((props["criterion"], "PASS" if r.passed else "FAIL", props.get("summary", r.nodeid)))
    terminalreporter.section("acceptance criteria")
    for num, verdict, text in sorted(rows):
        terminalreporter.write_line(f"{verdict}  criterion {num}: {text}")
