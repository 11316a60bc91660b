import json

import pytest
from hypothesis import given, settings, strategies as st
from test_labeled import instances

from slabelcol.certify import make_certificate
from slabelcol.construct import C123, C1234, base_triangulation, construction
from slabelcol.errors import FormatError
from slabelcol.formats import (
    SCHEMA_VERSION,
    Assignment,
    Certificate,
    Instance,
    adapt,
    decode,
    decode_label,
    encode,
    to_dot,
    to_json,
)
from slabelcol.graph import triangle
from slabelcol.labeled import Arc, SLabeledGraph, from_graph
from slabelcol.perm import identity, parse_cycles


def P(text, k=4):
    return parse_cycles(text, k)


SMALL = SLabeledGraph(4, (0, 1, 2), (Arc(0, 1, P("(123)")), Arc(2, 1, identity(4))))


def test_round_trips():
    for x in (P("(1234)"), triangle(), base_triangulation(), SMALL,
              Assignment({0: 1, 3: 2}), Instance(SMALL, {"case": "x"})):
        b = encode(x)
        assert decode(b) == x
        assert encode(decode(b)) == b


def test_instance_keeps_provenance():
    c = construction(C123)
    inst = decode(encode(Instance(c.labeled, c.provenance())))
    assert inst.labeled == c.labeled
    assert inst.provenance == json.loads(json.dumps(c.provenance()))


def test_certificate_round_trip():
    c = construction(C1234)
    cert = Certificate(make_certificate(c.labeled, c))
    b = encode(cert)
    assert decode(b) == cert and encode(decode(b)) == b


@settings(max_examples=60, deadline=None)
@given(instances())
def test_labeled_round_trip(L):
    b = encode(L)
    assert decode(b) == L
    assert encode(decode(b)) == b


def test_equal_values_encode_identically():
    a = SLabeledGraph(4, (2, 1, 0), (Arc(2, 1, identity(4)), Arc(0, 1, P("(123)"))))
    assert a == SMALL
    assert encode(a) == encode(SMALL)


@pytest.mark.parametrize("case", [C123, C1234])
def test_construction_encoding_is_stable(case):
    c = construction(case)
    assert encode(Instance(c.labeled, c.provenance())) == encode(Instance(c.labeled, c.provenance()))


def test_encoding_is_canonical_json():
    b = encode(SMALL)
    doc = json.loads(b)
    assert doc["schema_version"] == SCHEMA_VERSION and doc["type"] == "slabeled_graph"
    assert b == (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode()


def test_truncated_input_reports_offset():
    b = encode(SMALL)
    with pytest.raises(FormatError) as info:
        decode(b[:57])
    assert info.value.offset is not None and 0 <= info.value.offset <= 57
    assert "byte offset" in str(info.value)


def test_offset_counts_bytes_not_characters():
    with pytest.raises(FormatError) as info:
        decode('{"x": "éé", }'.encode())
    assert info.value.offset == len('{"x": "éé", '.encode())


def test_non_bijective_label():
    doc = to_json(SMALL)
    doc["arcs"][0]["label"] = [1, 1, 3, 4]
    with pytest.raises(FormatError):
        decode(json.dumps(doc))


def test_unknown_version():
    doc = to_json(SMALL)
    doc["schema_version"] = "slabelcol/99"
    with pytest.raises(FormatError, match="schema_version"):
        decode(json.dumps(doc))
    with pytest.raises(FormatError):
        decode("[1, 2]")


def test_unknown_type():
    doc = dict(to_json(SMALL), type="poem")
    with pytest.raises(FormatError, match="poem"):
        decode(json.dumps(doc))


def test_labels_in_cycle_notation():
    doc = {"schema_version": SCHEMA_VERSION, "type": "slabeled_graph", "k": 4, "vertices": [0, 1],
           "arcs": [{"tail": 0, "head": 1, "label": "(123)"}]}
    assert decode(json.dumps(doc)) == SLabeledGraph(4, (0, 1), (Arc(0, 1, P("(123)")),))
    assert decode_label({"cycles": "(12)"}, 3) == P("(12)", 3)
    assert decode_label({"images": [2, 1]}, 2) == P("(12)", 2)
    with pytest.raises(FormatError):
        decode_label([2, 1], 3)
    with pytest.raises(FormatError):
        decode_label(7, 3)


# Each mutation breaks exactly one field of a valid document and must be refused.
MUTATIONS = {
    "label not a bijection": lambda d: d["arcs"][0].update(label=[2, 2, 3, 4]),
    "label wrong size": lambda d: d["arcs"][0].update(label=[2, 1, 3]),
    "label bad cycles": lambda d: d["arcs"][0].update(label="(125)"),
    "label wrong type": lambda d: d["arcs"][0].update(label=12),
    "loop": lambda d: d["arcs"][0].update(head=0),
    "unknown tail": lambda d: d["arcs"][0].update(tail=9),
    "tail not int": lambda d: d["arcs"][0].update(tail="0"),
    "tail bool": lambda d: d["arcs"][0].update(tail=True),
    "duplicate edge": lambda d: d["arcs"].append({"tail": 1, "head": 0, "label": [1, 2, 3, 4]}),
    "duplicate vertex": lambda d: d["vertices"].append(0),
    "k zero": lambda d: d.update(k=0),
    "k mismatch": lambda d: d.update(k=5),
    "k string": lambda d: d.update(k="4"),
    "missing arcs": lambda d: d.pop("arcs"),
    "missing k": lambda d: d.pop("k"),
    "vertices not list": lambda d: d.update(vertices=3),
    "missing head": lambda d: d["arcs"][0].pop("head"),
    "version": lambda d: d.update(schema_version="slabelcol/0"),
    "type": lambda d: d.update(type="colouring"),
}


@pytest.mark.parametrize("name", list(MUTATIONS))
def test_single_field_mutation_is_rejected(name):
    doc = to_json(SMALL)
    MUTATIONS[name](doc)
    with pytest.raises(FormatError):
        decode(json.dumps(doc))


def leaf_paths(doc, path=()):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from leaf_paths(v, path + (k,))
    elif isinstance(doc, list) and doc:
        for i, v in enumerate(doc):
            yield from leaf_paths(v, path + (i,))
    else:
        yield path


@settings(max_examples=300, deadline=None)
@given(st.data(), st.one_of(st.integers(-3, 12), st.text(max_size=3), st.none(),
                            st.booleans(), st.lists(st.integers(0, 5), max_size=5)))
def test_random_mutations_never_crash(data, value):
    doc = to_json(SMALL)
    path = data.draw(st.sampled_from(list(leaf_paths(doc))))
    target = doc
    for key in path[:-1]:
        target = target[key]
    target[path[-1]] = value
    try:
        out = decode(json.dumps(doc))
    except FormatError:
        return
    # anything accepted is a valid value that survives a round trip
    assert decode(encode(out)) == out


def test_certificate_requires_fields():
    with pytest.raises(FormatError, match="digest"):
        decode(json.dumps({"schema_version": SCHEMA_VERSION, "type": "certificate"}))


def test_plane_graph_rotation_checked():
    doc = to_json(triangle())
    doc["rotation"]["0"] = [1]
    with pytest.raises(FormatError):
        decode(json.dumps(doc))
    doc = to_json(triangle())
    doc["edges"] = [[0, 1]]
    with pytest.raises(FormatError):
        decode(json.dumps(doc))


def test_adapters():
    L = adapt("signed", {"k": 4, "mode": "signed-Zk", "edges": [{"u": 0, "v": 1, "sign": -1}]})
    assert L.arcs[0].label == P("(12)")
    L = adapt("signed", {"edges": [{"u": 0, "v": 1, "sign": -1}]}, k=4)
    assert L.arcs[0].label == P("(12)(34)")
    L = adapt("zk", {"k": 2, "arcs": [{"tail": 1, "head": 0, "weight": 1}]})
    assert (L.arcs[0].tail, L.arcs[0].label) == (1, P("(12)", 2))
    L = adapt("zk", {"k": 3, "arcs": [{"tail": 0, "head": 1, "weight": 0}]})
    assert L.arcs[0].label == identity(3)
    L = adapt("gain", {"k": 1, "group": {"cyclic": 2}, "arcs": [{"tail": 0, "head": 1, "gain": 1}]})
    assert L.k == 3 and L.arcs[0].label == P("(12)", 3)
    L = adapt("gain", {"k": 2, "group": {"cyclic": 1}, "arcs": [{"tail": 0, "head": 1, "gain": 0}]})
    assert L.k == 3 and L.arcs[0].label == identity(3)
    table = {"n": 2, "product": [[0, 1], [1, 0]], "identity": 0}
    L = adapt("gain", {"k": 1, "group": table, "arcs": [{"tail": 0, "head": 1, "gain": 1}]})
    assert L.arcs[0].label == P("(12)", 3)


@pytest.mark.parametrize("kind, doc", [
    ("signed", {"k": 4, "edges": [{"u": 0, "v": 1, "sign": 2}]}),
    ("signed", {"edges": []}),
    ("zk", {"k": 3, "arcs": [{"tail": 0, "head": 1, "weight": 3}]}),
    ("gain", {"k": 1, "group": {"n": 2, "product": [[0, 1], [1, 1]]}, "arcs": []}),
    ("dp", {"k": 1}),
])
def test_adapter_errors(kind, doc):
    with pytest.raises(FormatError):
        adapt(kind, doc)


def test_dot_export():
    one = SLabeledGraph(4, (0, 1), (Arc(0, 1, P("(123)")),))
    text = to_dot(one)
    assert '0 -> 1 [label="(123)"];' in text
    assert text.startswith("digraph G {") and text.endswith("}\n")
    tri = to_dot(from_graph([(0, 1), (1, 2), (0, 2)], 3))
    assert tri.count("[dir=none]") == 3 and "label=" not in tri
    c1234 = to_dot(construction(C1234).labeled)
    assert c1234.count('[label="(1234)"]') == 96
    assert c1234.count("[dir=none]") == construction(C1234).labeled.arcs.__len__() - 96


def test_cannot_encode_unknown_values():
    with pytest.raises(TypeError):
        encode(object())

