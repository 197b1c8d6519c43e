"""Graph ingestion (edge-list text, JSON) and generator specs."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import families
from .graph import DEFAULT_MAX_VERTICES, Graph, GraphInputError

__all__ = [
    "GeneratorSpec",
    "parse_edge_list",
    "parse_json_graph",
    "read_graph",
    "graph_to_json",
    "graph_to_edge_list",
]


def parse_edge_list(text: str, *, allow_large: bool = False) -> Graph:
    """One ``u v`` pair per line; ``#`` comments; optional ``n <count>`` header first.

    Without a header the vertex count is the largest label seen.
    """
    n = None
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or edges:
                raise GraphInputError(f"line {lineno}: 'n' header must come before any edge")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphInputError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: vertices must be integers, got {raw!r}") from None
        if u < 1 or v < 1 or (n is not None and max(u, v) > n):
            hi = "n" if n is None else str(n)
            raise GraphInputError(f"line {lineno}: vertex out of range 1..{hi} in {raw!r}")
        if u == v:
            raise GraphInputError(f"line {lineno}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"line {lineno}: duplicate edge {u} {v} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=0)
    return Graph.from_edges(n, edges, allow_large=allow_large)


def parse_json_graph(text: str, *, allow_large: bool = False) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("n"), int) or data["n"] < 0:
        raise GraphInputError('JSON graph needs an integer field "n" >= 0')
    n = data["n"]
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphInputError('"edges" must be an array')
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for idx, e in enumerate(raw_edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphInputError(f"edges[{idx}]: expected a pair of integers, got {e!r}")
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"edges[{idx}]: vertex out of range 1..{n} in {e!r}")
        if u == v:
            raise GraphInputError(f"edges[{idx}]: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"edges[{idx}]: duplicate of edges[{seen[key]}] {e!r}")
        seen[key] = idx
        edges.append((u, v))
    return Graph.from_edges(n, edges, allow_large=allow_large)


def read_graph(path: str | Path, fmt: str = "edges", *, allow_large: bool = False) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "json":
        return parse_json_graph(text, allow_large=allow_large)
    return parse_edge_list(text, allow_large=allow_large)


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def graph_to_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


_ARITY = {
    "complete": 1,
    "complete-bipartite": 2,
    "cycle": 1,
    "path": 1,
    "wheel": 1,
    "random": 3,
    "random-tree": 2,
}


@dataclass(frozen=True)
class GeneratorSpec:
    """A named family plus its parameters, e.g. ``GeneratorSpec("random", (8, 0.4, 12345))``."""

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in _ARITY:
            raise GraphInputError(f"unknown generator family {self.family!r}")
        if len(self.params) != _ARITY[self.family]:
            raise GraphInputError(
                f"{self.family} takes {_ARITY[self.family]} parameter(s), got {len(self.params)}"
            )

    def build(self, *, allow_large: bool = False) -> Graph:
        f, a = self.family, self.params
        if f == "complete":
            g = families.complete_graph(*a)
        elif f == "complete-bipartite":
            g = families.complete_bipartite_graph(*a)
        elif f == "cycle":
            g = families.cycle_graph(*a)
        elif f == "path":
            g = families.path_graph(*a)
        elif f == "wheel":
            g = families.wheel_graph(*a)
        elif f == "random":
            g = families.random_gnp(*a)
        else:
            g = families.random_tree(*a)
        if g.n > DEFAULT_MAX_VERTICES and not allow_large:
            raise GraphInputError(
                f"{f} graph has {g.n} vertices; more than {DEFAULT_MAX_VERTICES} needs allow_large"
            )
        return g
