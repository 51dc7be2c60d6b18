"""JSON file formats for complexes and graphs.

Complex: {"facets": [[int, ...], ...]}
Graph:   {"vertices": [int, ...], "edges": [[int, int], ...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import Graph, SimplicialComplex, from_facets, whitney
from .errors import InvalidInputError


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list):
        raise InvalidInputError(f"{where}: expected a list, got {type(value).__name__}")
    out = []
    for i, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidInputError(f"{where}[{i}]: expected an integer, got {x!r}")
        if x < 0:
            raise InvalidInputError(f"{where}[{i}]: vertex labels must be non-negative")
        out.append(x)
    return out


def parse_document(data) -> SimplicialComplex | Graph:
    if not isinstance(data, dict):
        raise InvalidInputError("top level: expected a JSON object")
    if "facets" in data:
        facets = data["facets"]
        if not isinstance(facets, list):
            raise InvalidInputError("facets: expected a list of vertex lists")
        parsed = []
        for i, f in enumerate(facets):
            f = _int_list(f, f"facets[{i}]")
            if not f:
                raise InvalidInputError(f"facets[{i}]: facets must be non-empty")
            parsed.append(f)
        return from_facets(parsed)
    if "vertices" in data or "edges" in data:
        vertices = _int_list(data.get("vertices", []), "vertices")
        edges = data.get("edges", [])
        if not isinstance(edges, list):
            raise InvalidInputError("edges: expected a list of pairs")
        pairs = []
        known = set(vertices)
        for i, e in enumerate(edges):
            e = _int_list(e, f"edges[{i}]")
            if len(e) != 2:
                raise InvalidInputError(f"edges[{i}]: expected two endpoints, got {len(e)}")
            if e[0] == e[1]:
                raise InvalidInputError(f"edges[{i}]: loops are not allowed")
            for x in e:
                if x not in known:
                    raise InvalidInputError(f"edges[{i}]: endpoint {x} is not a listed vertex")
            pairs.append(e)
        return Graph(vertices, pairs)
    raise InvalidInputError("top level: expected a 'facets' key or 'vertices'/'edges' keys")


def loads(text: str) -> SimplicialComplex | Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(data)


def load(path: str | Path) -> SimplicialComplex | Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def as_complex(obj: SimplicialComplex | Graph) -> SimplicialComplex:
    return whitney(obj) if isinstance(obj, Graph) else obj


def complex_document(c: SimplicialComplex) -> dict:
    return {"facets": [list(f) for f in c.facets()]}


def graph_document(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges()]}


def document(obj: SimplicialComplex | Graph) -> dict:
    return graph_document(obj) if isinstance(obj, Graph) else complex_document(obj)


def dumps(obj: SimplicialComplex | Graph) -> str:
    return json.dumps(document(obj), sort_keys=True) + "\n"


def dump(obj: SimplicialComplex | Graph, path: str | Path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
