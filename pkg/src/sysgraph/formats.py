"""Canonical file formats: ``pcg-1`` graphs, ``scx-1`` complexes, DOT, CSV edges.

The JSON writers are byte-stable: compact separators, fixed key order, edges
sorted by ``(u, v, c)``, one trailing newline.
"""

from __future__ import annotations

import json
from typing import IO, Union

import numpy as np

from .colored_graph import ColoredGraph, validate
from .errors import SysgraphError
from .simplicial import ChromaticComplex, validate_complex

GRAPH_FORMAT = "pcg-1"
COMPLEX_FORMAT = "scx-1"
PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "magenta",
           "cyan", "gold", "gray", "olivedrab", "navy")
_CHUNK = 1 << 16


class UnknownFormat(SysgraphError):
    pass


def _rows(arr: np.ndarray) -> str:
    parts = []
    for start in range(0, len(arr), _CHUNK):
        block = arr[start:start + _CHUNK].tolist()
        parts.append(",".join("[" + ",".join(map(str, r)) + "]" for r in block))
    return ",".join(p for p in parts if p)


def graph_to_json(g: ColoredGraph) -> str:
    return ('{"format":"%s","dimension":%d,"num_vertices":%d,"edges":[%s]}\n'
            % (GRAPH_FORMAT, g.dimension, g.num_vertices, _rows(g.edges())))


def complex_to_json(c: ChromaticComplex) -> str:
    verts = ",".join(f"[{v},{col}]" for v, col in c.vertices)
    facets = ",".join("[" + ",".join(map(str, f)) + "]" for f in c.facets)
    return ('{"format":"%s","num_colors":%d,"vertices":[%s],"facets":[%s]}\n'
            % (COMPLEX_FORMAT, c.num_colors, verts, facets))


def graph_from_dict(doc: dict) -> ColoredGraph:
    if doc.get("format") != GRAPH_FORMAT:
        raise UnknownFormat(f"expected format {GRAPH_FORMAT!r}, got {doc.get('format')!r}")
    edges = np.asarray(doc["edges"], dtype=np.int64).reshape(-1, 3)
    return validate(doc["dimension"], doc["num_vertices"], edges)


def complex_from_dict(doc: dict) -> ChromaticComplex:
    if doc.get("format") != COMPLEX_FORMAT:
        raise UnknownFormat(f"expected format {COMPLEX_FORMAT!r}, got {doc.get('format')!r}")
    return validate_complex(doc["num_colors"], doc["vertices"], doc["facets"])


def load(fp: Union[str, IO]) -> Union[ColoredGraph, ChromaticComplex]:
    """Read either format, dispatching on the ``format`` field."""
    if isinstance(fp, str):
        with open(fp, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.load(fp)
    if not isinstance(doc, dict):
        raise UnknownFormat("top-level JSON value must be an object")
    kind = doc.get("format")
    if kind == GRAPH_FORMAT:
        return graph_from_dict(doc)
    if kind == COMPLEX_FORMAT:
        return complex_from_dict(doc)
    raise UnknownFormat(f"unknown format {kind!r}")


def to_json(obj) -> str:
    if isinstance(obj, ColoredGraph):
        return graph_to_json(obj)
    if isinstance(obj, ChromaticComplex):
        return complex_to_json(obj)
    raise TypeError(type(obj))


def color_name(c: int) -> str:
    return PALETTE[(c - 1) % len(PALETTE)]


def graph_to_dot(g: ColoredGraph) -> str:
    lines = ["graph G {", "  node [shape=circle];"]
    lines += [f"  {v};" for v in range(g.num_vertices)]
    for u, v, c in g.edges().tolist():
        lines.append(f'  {u} -- {v} [color="{color_name(c)}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_to_dot(c: ChromaticComplex) -> str:
    """One-skeleton of the complex; vertices are filled by color."""
    lines = ["graph K {", "  node [shape=circle, style=filled];"]
    for v, col in c.vertices:
        lines.append(f'  {v} [fillcolor="{color_name(col)}"];')
    for a, b in c.one_skeleton():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_csv_edges(g: ColoredGraph) -> str:
    out = ["u,v,color"]
    out += [f"{u},{v},{c}" for u, v, c in g.edges().tolist()]
    return "\n".join(out) + "\n"


def complex_to_csv_edges(c: ChromaticComplex) -> str:
    out = ["u,v"]
    out += [f"{a},{b}" for a, b in c.one_skeleton()]
    return "\n".join(out) + "\n"


EXPORT_FORMATS = ("dot", "json", "csv-edges")


def export(obj, fmt: str) -> str:
    graph = isinstance(obj, ColoredGraph)
    if fmt == "json":
        return to_json(obj)
    if fmt == "dot":
        return graph_to_dot(obj) if graph else complex_to_dot(obj)
    if fmt == "csv-edges":
        return graph_to_csv_edges(obj) if graph else complex_to_csv_edges(obj)
    raise UnknownFormat(f"unknown export format {fmt!r}")
