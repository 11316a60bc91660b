import pytest

from slabelcol.construct import (
    C123,
    C1234,
    Citation,
    bad_witness,
    base_triangulation,
    build_c123,
    build_c1234,
    check_gadget_adjacency,
    construction,
    four_colourings,
    insert_gadgets,
    lemma1_graph,
    witness_construction,
)
from slabelcol.errors import NoWitnessError
from slabelcol.graph import faces, is_triangulation
from slabelcol.labeled import labels_within
from slabelcol.perm import PermSet, conjugacy_class_rep, identity, parse_cycles, symmetric_group
from slabelcol.solver import UNSAT, is_uniquely_k_colourable, partition_signature, solve


def P(text):
    return parse_cycles(text, 4)


def test_base_triangulation():
    g = base_triangulation()
    assert (g.num_vertices(), g.num_edges(), len(faces(g))) == (14, 36, 24)
    assert is_triangulation(g)
    assert is_uniquely_k_colourable(g, 4)
    assert g.vertices == list(range(14))


def test_four_colourings_are_sorted():
    cols = four_colourings(base_triangulation())
    vectors = [tuple(f[v] for v in range(14)) for f in cols]
    assert vectors == sorted(vectors) and len(set(vectors)) == 24


def test_lemma1_graph():
    gp, fmap = lemma1_graph()
    assert is_triangulation(gp)
    assert len(fmap) == 24
    cols = four_colourings(gp)
    assert len(cols) == 24
    assert len({partition_signature(f) for f in cols}) == 1
    phis = [tuple(sorted(e.phi.items())) for e in fmap]
    assert len(set(phis)) == 24
    assert set(phis) == {tuple(sorted(f.items())) for f in cols}
    walks = {f.face: f for f in faces(gp)}
    assert len(set(fmap.designated_faces)) == 24
    for e in fmap:
        walk = walks[e.face]
        phi = e.phi
        assert {phi[v] for v in walk.boundary} == {1, 2, 3}
        assert (phi[e.v1], phi[e.v2], phi[e.v3]) == (1, 2, 3)


def test_fix_up_faces():
    gp, fmap = lemma1_graph()
    base = base_triangulation()
    base_faces = {f.face: f for f in faces(base)}
    adj = gp.adjacency()
    fixed = [e for e in fmap if e.z is not None]
    assert len(fixed) == 14
    assert gp.num_vertices() == 14 + len(fixed)
    for e in fmap:
        corners = base_faces[e.original].boundary
        colours = {e.phi[v] for v in corners}
        if e.z is None:
            assert colours == {1, 2, 3} and e.face == e.original
            continue
        assert colours != {1, 2, 3}
        assert adj[e.z] == set(corners)
        # exactly one of the three sub-faces around z is coloured {1, 2, 3}
        subs = [f for f in faces(gp) if e.z in f.boundary]
        assert len(subs) == 3
        good = [f for f in subs if {e.phi[v] for v in f.boundary} == {1, 2, 3}]
        assert [f.face for f in good] == [e.face]


def test_insert_gadgets():
    gp, fmap = lemma1_graph()
    g, gadgets = insert_gadgets(gp, fmap)
    assert g.num_vertices() == gp.num_vertices() + 72 == 100
    assert g.num_edges() == gp.num_edges() + 24 * 9
    assert len(faces(g)) == len(faces(gp)) + 24 * 6
    assert is_triangulation(g)
    for r in gadgets:
        assert check_gadget_adjacency(g, r)
        disk = {r.v1, r.v2, r.v3, r.a, r.b, r.c}
        inner = [f for f in faces(g) if set(f.boundary) <= disk and set(f.boundary) & {r.a, r.b, r.c}]
        edges = [(u, v) for u, v in g.edges if u in disk and v in disk]
        assert len(inner) == 7 and len(edges) == 12


@pytest.mark.parametrize("case, perm, count", [(C123, "(123)", 72), (C1234, "(1234)", 96)])
def test_labeled_constructions(case, perm, count):
    c = construction(case)
    L = c.labeled
    assert L.k == 4
    special = [a for a in L.arcs if not a.label.is_identity()]
    assert len(special) == count
    assert all(a.label == P(perm) for a in special)
    assert labels_within(L, PermSet.of(["id", perm], 4))
    assert not labels_within(L, PermSet.of(["id"], 4))
    assert is_triangulation(c.plane)
    for a in L.arcs:
        if a.label.is_identity():
            assert a.tail < a.head


def test_c123_orientation():
    c = construction(C123)
    for r in c.gadgets:
        for t, h in ((r.b, r.a), (r.c, r.b), (r.a, r.c)):
            arc = c.labeled.arc(t, h)
            assert (arc.tail, arc.head, arc.label) == (t, h, P("(123)"))


def test_c1234_orientation():
    c = construction(C1234)
    for r in c.gadgets:
        for t, h in ((r.c, r.a), (r.c, r.b), (r.v3, r.c), (r.v2, r.a)):
            arc = c.labeled.arc(t, h)
            assert (arc.tail, arc.head, arc.label) == (t, h, P("(1234)"))
        assert c.labeled.arc(r.a, r.b).label == identity(4)


@pytest.mark.parametrize("build", [build_c123, build_c1234])
def test_constructions_are_unsat(build):
    assert solve(build()).status == UNSAT


def test_constructions_are_deterministic():
    assert construction(C123).provenance() == construction(C123).provenance()
    assert build_c123() is build_c123()


THREE_CYCLES = [p for p in symmetric_group(4) if p.cycle_type() == (3,)]
FOUR_CYCLES = [p for p in symmetric_group(4) if p.cycle_type() == (4,)]


def test_cycle_classes_have_expected_sizes():
    assert len(THREE_CYCLES) == 8 and len(FOUR_CYCLES) == 6


@pytest.mark.parametrize("p", ["(132)", "(243)", "(1432)"])
def test_bad_witness_unsat(p):
    L = bad_witness(P(p))
    assert labels_within(L, PermSet.of(["id", p], 4))
    assert solve(L).status == UNSAT


def test_bad_witness_representatives():
    assert bad_witness(P("(123)")) == build_c123()
    assert bad_witness(P("(1234)")) == build_c1234()


@pytest.mark.parametrize("p, rep", [("(12)", "(12)"), ("(34)", "(12)"), ("(13)(24)", "(12)(34)")])
def test_bad_witness_citations(p, rep):
    out = bad_witness(P(p))
    assert isinstance(out, Citation)
    assert out.representative == P(rep)
    assert rep in out.message()
    with pytest.raises(NoWitnessError):
        witness_construction(P(p))


def test_bad_witness_identity():
    with pytest.raises(NoWitnessError):
        bad_witness(identity(4))
    with pytest.raises(NoWitnessError):
        witness_construction(identity(4))


def test_witness_construction_relabels():
    c, pi = witness_construction(P("(142)"))
    assert c.case == C123
    assert conjugacy_class_rep(P("(142)")) == P("(123)")
    from slabelcol.labeled import relabel_colours
    assert relabel_colours(c.labeled, pi) == bad_witness(P("(142)"))
