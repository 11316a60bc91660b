"""Non-4-colourable S-labeled plane triangulations for S = {id, (123)} and {id, (1234)}.

Pipeline:

1. ``base_triangulation``: stack 11 vertices into K3, always into the face
   with the least id, giving a uniquely 4-colourable triangulation with 24
   faces.
2. ``lemma1_graph``: pair the 24 faces with the 24 colourings (colourings in
   lexicographic order, faces in ascending id order).  A face whose corners
   are not coloured {1, 2, 3} by its colouring gets a stacked vertex ``z``; the
   sub-face avoiding colour 4 takes over as the designated face.
3. ``insert_gadgets``: put a triangle ``a b c`` inside every designated face,
   with ``a ~ v1, v2``, ``b ~ v1, v3``, ``c ~ v2, v3`` where ``v_i`` is the
   corner coloured i by that face's colouring.
4. ``build_c123`` / ``build_c1234``: orient and label the gadget edges.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NoWitnessError, ShapeError
from .graph import FaceId, PlaneGraph, faces, stack_vertex, subdivide_face, triangle
from .labeled import Arc, Colouring, SLabeledGraph, from_graph, relabel_colours
from .perm import Permutation, conjugacy_class_rep, conjugator, identity, parse_cycles
from .solver import iter_colourings

C123 = "c123"
C1234 = "c1234"
CASES = (C123, C1234)

BASE_STACKINGS = 11
NUM_FACES = 24


@dataclass(frozen=True)
class DesignatedFace:
    """One entry of the face/colouring correspondence.

    ``face`` is the designated face of G'; ``original`` the face of the base
    triangulation it came from; ``z`` the fix-up vertex, if one was stacked.
    """

    face: FaceId
    original: FaceId
    colouring: tuple[tuple[int, int], ...]
    v1: int
    v2: int
    v3: int
    z: int | None = None

    @property
    def phi(self) -> Colouring:
        return dict(self.colouring)


@dataclass(frozen=True)
class FaceColouringMap:
    entries: tuple[DesignatedFace, ...]

    @property
    def designated_faces(self) -> list[FaceId]:
        return [e.face for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class GadgetRecord:
    face: FaceId
    v1: int
    v2: int
    v3: int
    a: int
    b: int
    c: int
    z: int | None = None


@dataclass(frozen=True)
class Construction:
    """A built instance together with everything needed to certify it."""

    case: str
    labeled: SLabeledGraph
    plane: PlaneGraph
    base: PlaneGraph
    face_map: FaceColouringMap
    gadgets: tuple[GadgetRecord, ...]

    @property
    def label_perm(self) -> Permutation:
        return parse_cycles("(123)" if self.case == C123 else "(1234)", 4)

    def provenance(self) -> dict:
        return {
            "case": self.case,
            "base_vertices": list(self.base.vertices),
            "rotation": {str(v): list(n) for v, n in self.plane.rotation},
            "faces": [
                {
                    "face": list(g.face),
                    "original_face": list(e.original),
                    "v1": g.v1, "v2": g.v2, "v3": g.v3,
                    "a": g.a, "b": g.b, "c": g.c,
                    "z": g.z,
                    "phi": [c for _, c in e.colouring],
                }
                for g, e in zip(self.gadgets, self.face_map.entries)
            ],
        }


def _colour_key(f: Colouring) -> tuple[int, ...]:
    return tuple(f[v] for v in sorted(f))


def base_triangulation() -> PlaneGraph:
    g = triangle()
    for _ in range(BASE_STACKINGS):
        g, _ = stack_vertex(g, faces(g)[0].face)
    return g


def four_colourings(g: PlaneGraph) -> list[Colouring]:
    """All proper 4-colourings of g, in lexicographic order of colour vectors."""
    return sorted(iter_colourings(from_graph(g.edges, 4, g.vertices)), key=_colour_key)


def _corner(f: Colouring, walk: tuple[int, ...], colour: int) -> int:
    return next(v for v in walk if f[v] == colour)


@functools.lru_cache(maxsize=None)
def lemma1_graph() -> tuple[PlaneGraph, FaceColouringMap]:
    g = base_triangulation()
    base_faces = faces(g)
    cols = four_colourings(g)
    if len(base_faces) != NUM_FACES or len(cols) != NUM_FACES:
        raise ShapeError(f"expected {NUM_FACES} faces and colourings, got "
                         f"{len(base_faces)} and {len(cols)}")

    pairing = list(zip(base_faces, cols))
    to_fix = [(fw, f) for fw, f in pairing if {f[v] for v in fw.boundary} != {1, 2, 3}]

    # stack the fix-up vertices; every colouring extends uniquely to each z
    parents: dict[int, tuple[int, ...]] = {}
    zs: dict[FaceId, int] = {}
    gp = g
    for fw, _ in to_fix:
        gp, z = stack_vertex(gp, fw.face)
        parents[z] = fw.boundary
        zs[fw.face] = z

    def extend(f: Colouring) -> Colouring:
        out = dict(f)
        for z, walk in parents.items():
            (out[z],) = {1, 2, 3, 4} - {f[v] for v in walk}
        return out

    new_faces = {fw.face: fw for fw in faces(gp)}
    entries = []
    for fw, f in pairing:
        phi = extend(f)
        if fw.face in zs:
            z = zs[fw.face]
            p, q, r = fw.boundary
            subs = [(p, q, z), (q, r, z), (r, p, z)]
            good = [s for s in subs if {phi[v] for v in s} == {1, 2, 3}]
            if len(good) != 1:
                raise AssertionError(f"fix-up of face {fw.face} left {len(good)} {{1,2,3}} faces")
            walk = good[0]
            face_id = min(((walk[i], walk[(i + 1) % 3]) for i in range(3)))
            assert face_id in new_faces
        else:
            z = None
            walk = fw.boundary
            face_id = fw.face
        entries.append(DesignatedFace(
            face=face_id,
            original=fw.face,
            colouring=tuple(sorted(phi.items())),
            v1=_corner(phi, walk, 1),
            v2=_corner(phi, walk, 2),
            v3=_corner(phi, walk, 3),
            z=z,
        ))
    return gp, FaceColouringMap(tuple(entries))


def _gadget_pieces(walk: tuple[int, ...], v1: int, v2: int, v3: int,
                   a: int, b: int, c: int) -> list[tuple[int, ...]]:
    pattern = [(v1, v2, a), (v2, c, a), (v2, v3, c), (v3, b, c), (v3, v1, b), (v1, a, b), (a, c, b)]
    rotations = {walk, walk[1:] + walk[:1], walk[2:] + walk[:2]}
    if (v1, v2, v3) in rotations:
        return pattern
    # face runs v1 -> v3 -> v2: use the mirror image
    return [tuple(reversed(p)) for p in pattern]


def insert_gadgets(gp: PlaneGraph, fmap: FaceColouringMap) -> tuple[PlaneGraph, tuple[GadgetRecord, ...]]:
    g = gp
    nxt = max(gp.vertices) + 1
    records = []
    for e in fmap:
        walk = g.face(e.face).boundary
        if len(walk) != 3:
            raise ShapeError(f"designated face {e.face} is not a triangle")
        if set(walk) != {e.v1, e.v2, e.v3}:
            raise ShapeError(f"face {e.face} corners {walk} do not match v1, v2, v3")
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        g = subdivide_face(g, e.face, _gadget_pieces(walk, e.v1, e.v2, e.v3, a, b, c))
        records.append(GadgetRecord(e.face, e.v1, e.v2, e.v3, a, b, c, e.z))
    return g, tuple(records)


def _label(g: PlaneGraph, special: dict[tuple[int, int], Permutation]) -> SLabeledGraph:
    """id on every edge (tail = smaller id) except the given oriented arcs."""
    e = identity(4)
    oriented = {(min(u, v), max(u, v)): (u, v) for u, v in special}
    arcs = []
    for u, v in g.edges:
        if (u, v) in oriented:
            t, h = oriented[(u, v)]
            arcs.append(Arc(t, h, special[(t, h)]))
        else:
            arcs.append(Arc(u, v, e))
    return SLabeledGraph(4, tuple(g.vertices), tuple(arcs))


@functools.lru_cache(maxsize=None)
def construction(case: str) -> Construction:
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    gp, fmap = lemma1_graph()
    g, gadgets = insert_gadgets(gp, fmap)
    special: dict[tuple[int, int], Permutation] = {}
    if case == C123:
        s = parse_cycles("(123)", 4)
        for r in gadgets:
            for arc in ((r.b, r.a), (r.c, r.b), (r.a, r.c)):
                special[arc] = s
    else:
        s = parse_cycles("(1234)", 4)
        for r in gadgets:
            for arc in ((r.c, r.a), (r.c, r.b), (r.v3, r.c), (r.v2, r.a)):
                special[arc] = s
    return Construction(case, _label(g, special), g, gp, fmap, gadgets)


def build_c123() -> SLabeledGraph:
    return construction(C123).labeled


def build_c1234() -> SLabeledGraph:
    return construction(C1234).labeled


@dataclass(frozen=True)
class Citation:
    """Stand-in for the transposition and double-transposition classes, whose
    counterexamples come from other work and are not built here."""

    perm: Permutation
    representative: Permutation
    reference: str

    def message(self) -> str:
        head = f"{self.perm}:" if self.perm == self.representative else \
            f"{self.perm} is conjugate to {self.representative};"
        return (f"{head} no construction is built here. The set "
                f"{{id, {self.representative}}} is bad by {self.reference}.")


_CITATIONS = {
    "(12)": "Zhu's non-signed-Z_4-colourable planar graph",
    "(12)(34)": "Narboni and Tarkos's non-signed-4-colourable planar graph",
}


def bad_witness(p: Permutation) -> SLabeledGraph | Citation:
    """Planar S-labeled graph with labels in {id, p} and no proper 4-colouring,
    or a Citation when p is a transposition or a double transposition."""
    rep = conjugacy_class_rep(p)
    text = str(rep)
    if text in _CITATIONS:
        return Citation(p, rep, _CITATIONS[text])
    base = build_c123() if text == "(123)" else build_c1234()
    return relabel_colours(base, conjugator(rep, p))


def witness_construction(p: Permutation) -> tuple[Construction, Permutation]:
    """The underlying construction and the colour relabelling used by bad_witness."""
    if p.k == 4 and p.is_identity():
        raise NoWitnessError("no witness for the identity")
    rep = conjugacy_class_rep(p)
    if str(rep) in _CITATIONS:
        raise NoWitnessError(f"{p} is handled by citation, not construction")
    case = C123 if str(rep) == "(123)" else C1234
    return construction(case), conjugator(rep, p)


def check_gadget_adjacency(g: PlaneGraph, r: GadgetRecord) -> bool:
    adj = g.adjacency()
    return (adj[r.a] == {r.v1, r.v2, r.b, r.c}
            and adj[r.b] == {r.v1, r.v3, r.a, r.c}
            and adj[r.c] == {r.v2, r.v3, r.a, r.b})

