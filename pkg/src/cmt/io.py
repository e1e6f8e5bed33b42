"""JSON text format for complexes, graphs and monomial ideals.

A document is an object with ``"vertices": [name, ...]`` and exactly one of

* ``"facets": [[name, ...], ...]``           -> SimplicialComplex
* ``"edges": [[name, name], ...]``           -> SimpleGraph
* ``"generators": [{name: exponent}, ...]``  -> MonomialIdeal

Names are nonempty strings.  An expanded vertex is written ``base_copy``
(e.g. ``x1_2``); ``_`` may not otherwise appear in a name.  When
``"vertices"`` is omitted for a complex or graph, the table is the
naturally sorted set of names used.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .core import (
    CmtError,
    Monomial,
    MonomialIdeal,
    SimpleGraph,
    SimplicialComplex,
    VertexLabel,
    as_labels,
    natural_key,
)

Document = Union[SimplicialComplex, SimpleGraph, MonomialIdeal]
KINDS = ("facets", "edges", "generators")


class ParseError(CmtError, ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _load(text: str) -> dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    present = [k for k in KINDS if k in data]
    if len(present) != 1:
        raise ParseError(f"expected exactly one of {', '.join(KINDS)}")
    return data


def _names(items: Any, what: str) -> list[str]:
    if not isinstance(items, list) or not all(isinstance(x, str) and x for x in items):
        raise ParseError(f"{what} must be a list of nonempty strings")
    return items


def _vertex_table(data: dict[str, Any], used: list[str]):
    try:
        if "vertices" in data:
            return as_labels(_names(data["vertices"], "vertices"))
        return tuple(sorted({VertexLabel.parse(x) for x in used}, key=natural_key))
    except ValueError as exc:
        if isinstance(exc, CmtError):
            raise
        raise ParseError(str(exc)) from None


def parse_document(text: str) -> Document:
    data = _load(text)
    if "facets" in data:
        raw = data["facets"]
        if not isinstance(raw, list):
            raise ParseError("facets must be a list")
        facets = [_names(f, "each facet") if f else [] for f in raw]
        used = [v for f in facets for v in f]
        labels = _vertex_table(data, used)
        return SimplicialComplex.from_facets(facets, labels)
    if "edges" in data:
        raw = data["edges"]
        if not isinstance(raw, list) or not all(isinstance(e, list) and len(e) == 2 for e in raw):
            raise ParseError("edges must be a list of name pairs")
        edges = [_names(e, "each edge") for e in raw]
        labels = _vertex_table(data, [v for e in edges for v in e])
        return SimpleGraph.build(labels, [tuple(e) for e in edges])
    raw = data["generators"]
    if "vertices" not in data:
        raise ParseError("an ideal needs an explicit vertices list")
    labels = _vertex_table(data, [])
    if not isinstance(raw, list) or not all(isinstance(g, dict) for g in raw):
        raise ParseError("generators must be a list of {variable: exponent} objects")
    index = {lab: i for i, lab in enumerate(labels)}
    gens = []
    for g in raw:
        exps = {}
        for name, e in g.items():
            lab = VertexLabel.parse(name)
            if lab not in index:
                raise ParseError(f"unknown variable {name!r}")
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ParseError(f"exponent of {name!r} must be a nonnegative integer")
            exps[index[lab]] = e
        gens.append(Monomial.from_dict(exps))
    return MonomialIdeal.build(labels, gens)


def parse_complex(text: str) -> SimplicialComplex:
    doc = parse_document(text)
    if not isinstance(doc, SimplicialComplex):
        raise ParseError("expected a complex (facets)")
    return doc


def to_data(doc: Document) -> dict[str, Any]:
    if isinstance(doc, SimplicialComplex):
        return {"vertices": [str(v) for v in doc.vertices], "facets": [list(f) for f in doc.facet_names()]}
    if isinstance(doc, SimpleGraph):
        return {"vertices": [str(v) for v in doc.vertices], "edges": [list(e) for e in doc.edge_names()]}
    verts = [str(v) for v in doc.ring_vertices]
    return {
        "vertices": verts,
        "generators": [{verts[i]: e for i, e in g.exponents} for g in doc.generators],
    }


def serialize(doc: Document) -> str:
    return json.dumps(to_data(doc))
