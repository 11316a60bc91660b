"""Canonical JSON documents and DOT export.

Every document is a JSON object with ``schema_version`` and ``type`` keys.
Encoding sorts keys and uses fixed indentation, so equal values give
byte-identical output.  Decoding re-runs every constructor check and turns
failures into :class:`FormatError`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import FormatError, SLabelError
from .graph import PlaneGraph
from .labeled import Arc, SLabeledGraph, from_gain, from_group_zk, from_signed
from .perm import SIGNED_NK, GroupTable, Permutation, parse_cycles, print_cycles

SCHEMA_VERSION = "slabelcol/1"

PERMUTATION = "permutation"
PLANE_GRAPH = "plane_graph"
SLABELED_GRAPH = "slabeled_graph"
INSTANCE = "instance"
COLOURING = "colouring"
CERTIFICATE = "certificate"


@dataclass(frozen=True)
class Instance:
    """An S-labeled graph plus the construction metadata needed to certify it."""

    labeled: SLabeledGraph
    provenance: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Assignment:
    """A serialisable vertex -> colour map."""

    assignment: dict


@dataclass(frozen=True)
class Certificate:
    body: dict


def _perm_json(p: Permutation) -> list[int]:
    return list(p.images)


def _labeled_json(L: SLabeledGraph) -> dict:
    return {
        "k": L.k,
        "vertices": list(L.vertices),
        "arcs": [{"tail": a.tail, "head": a.head, "label": _perm_json(a.label)} for a in L.arcs],
    }


def to_json(x: Any) -> dict:
    if isinstance(x, Permutation):
        body = {"images": _perm_json(x)}
        kind = PERMUTATION
    elif isinstance(x, PlaneGraph):
        body = {"vertices": x.vertices, "edges": [list(e) for e in x.edges],
                "rotation": {str(v): list(n) for v, n in x.rotation}}
        kind = PLANE_GRAPH
    elif isinstance(x, Instance):
        body = dict(_labeled_json(x.labeled), provenance=x.provenance)
        kind = INSTANCE
    elif isinstance(x, SLabeledGraph):
        body = _labeled_json(x)
        kind = SLABELED_GRAPH
    elif isinstance(x, Assignment):
        body = {"assignment": {str(v): c for v, c in sorted(x.assignment.items())}}
        kind = COLOURING
    elif isinstance(x, Certificate):
        body = dict(x.body)
        kind = CERTIFICATE
    else:
        raise TypeError(f"cannot encode {type(x).__name__}")
    return dict(body, schema_version=SCHEMA_VERSION, type=kind)


def dumps(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode()


def encode(x: Any) -> bytes:
    return dumps(to_json(x))


def load_json(b: bytes | str) -> Any:
    text = b.decode() if isinstance(b, (bytes, bytearray)) else b
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[:exc.pos].encode())
        raise FormatError(f"invalid JSON: {exc.msg}", offset) from None


def decode(b: bytes | str) -> Any:
    doc = load_json(b)
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version {version!r}; expected {SCHEMA_VERSION!r}")
    try:
        return from_json(doc)
    except FormatError:
        raise
    except (SLabelError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid {doc.get('type')} document: {exc!r}") from None


def decode_label(value: Any, k: int) -> Permutation:
    """A label is a cycle string or an image array."""
    if isinstance(value, str):
        return parse_cycles(value, k)
    if isinstance(value, dict):
        if "images" in value:
            value = value["images"]
        elif "cycles" in value:
            return parse_cycles(value["cycles"], k)
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise FormatError(f"label must be a cycle string or an integer array, got {value!r}")
    p = Permutation(tuple(value))
    if p.k != k:
        raise FormatError(f"label {value} has size {p.k}, expected k={k}")
    return p


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer, got {x!r}")
    return x


def _labeled_from(doc: dict) -> SLabeledGraph:
    k = _int(doc["k"], "k")
    vertices = [_int(v, "vertex") for v in doc["vertices"]]
    arcs = []
    for a in doc["arcs"]:
        arcs.append(Arc(_int(a["tail"], "tail"), _int(a["head"], "head"), decode_label(a["label"], k)))
    return SLabeledGraph(k, tuple(vertices), tuple(arcs))


def from_json(doc: dict) -> Any:
    kind = doc.get("type")
    if kind == PERMUTATION:
        if "images" in doc:
            return Permutation(tuple(doc["images"]))
        return parse_cycles(doc["cycles"], _int(doc["k"], "k"))
    if kind == PLANE_GRAPH:
        g = PlaneGraph.from_rotation({int(v): n for v, n in doc["rotation"].items()})
        if sorted(list(e) for e in g.edges) != sorted(list(e) for e in doc.get("edges", g.edges)):
            raise FormatError("edge list disagrees with the rotation system")
        return g
    if kind == SLABELED_GRAPH:
        return _labeled_from(doc)
    if kind == INSTANCE:
        prov = doc.get("provenance", {})
        if not isinstance(prov, dict):
            raise FormatError("provenance must be an object")
        return Instance(_labeled_from(doc), prov)
    if kind == COLOURING:
        return Assignment({int(v): _int(c, "colour") for v, c in doc["assignment"].items()})
    if kind == CERTIFICATE:
        body = {k: v for k, v in doc.items() if k not in ("schema_version", "type")}
        for key in ("digest", "base_vertices", "base_colourings", "faces"):
            if key not in body:
                raise FormatError(f"certificate is missing {key!r}")
        return Certificate(body)
    raise FormatError(f"unknown document type {kind!r}")


def group_from_json(doc: dict) -> GroupTable:
    """``{"cyclic": n}`` or ``{"n", "product", "identity"}``."""
    if "cyclic" in doc:
        return GroupTable.cyclic(_int(doc["cyclic"], "cyclic"))
    return GroupTable(_int(doc["n"], "n"), doc["product"], _int(doc.get("identity", 0), "identity"))


def adapt(kind: str, doc: dict, k: int | None = None) -> SLabeledGraph:
    """Build an S-labeled graph from an adapter edge list.

    * ``signed``: ``{"edges": [{"u", "v", "sign"}], "mode"?}``
    * ``zk``: ``{"arcs": [{"tail", "head", "weight"}]}``
    * ``gain``: ``{"group": ..., "arcs": [{"tail", "head", "gain"}]}``

    ``k`` overrides a ``"k"`` field in the document.
    """
    try:
        k = k if k is not None else _int(doc["k"], "k")
        vertices = doc.get("vertices")
        if kind == "signed":
            edges = [(e["u"], e["v"], e["sign"]) for e in doc["edges"]]
            return from_signed(edges, k, doc.get("mode", SIGNED_NK), vertices)
        if kind == "zk":
            return from_group_zk([(a["tail"], a["head"], a["weight"]) for a in doc["arcs"]], k, vertices)
        if kind == "gain":
            group = group_from_json(doc["group"])
            return from_gain([(a["tail"], a["head"], a["gain"]) for a in doc["arcs"]], group, k, vertices)
    except FormatError:
        raise
    except (SLabelError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid {kind} adapter input: {exc!r}") from None
    raise FormatError(f"unknown adapter {kind!r}; expected signed, zk or gain")


def to_dot(L: SLabeledGraph, name: str = "G") -> str:
    """Non-identity arcs are drawn directed and labeled; identity arcs plain."""
    lines = [f"digraph {name} {{"]
    for v in L.vertices:
        lines.append(f"  {v};")
    for a in L.arcs:
        if a.label.is_identity():
            lines.append(f"  {a.tail} -> {a.head} [dir=none];")
        else:
            lines.append(f'  {a.tail} -> {a.head} [label="{print_cycles(a.label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
