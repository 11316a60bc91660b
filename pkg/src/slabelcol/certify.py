"""Per-face refutation certificates for the gadget constructions.

A certificate lists the proper 4-colourings of the base triangulation G'
(each tied to the designated face whose gadget defeats it), and for each face
the candidate colours left to the gadget vertices a, b, c by their arcs to G',
plus one row per combination of candidates naming an arc whose constraint
fails.

The checker re-derives everything it relies on.  It enumerates G' with its
own small backtracking loop and never calls the solver.  It recomputes the
candidate colours from the arcs and re-evaluates every named violation.  A
certificate that passes proves the instance has no proper colouring.  Every
proper colouring restricts to some listed base colouring, and that
colouring's gadget has no consistent choice for a, b, c.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import logging
from typing import Mapping

from .construct import Construction
from .errors import CertificateError
from .labeled import SLabeledGraph, recolour
from .perm import Permutation

log = logging.getLogger(__name__)

ROLES = ("a", "b", "c")
MAX_BASE_NODES = 10 ** 6


def instance_digest(L: SLabeledGraph) -> str:
    """sha256 of the compact canonical JSON of the instance."""
    doc = {
        "k": L.k,
        "vertices": list(L.vertices),
        "arcs": [{"tail": a.tail, "head": a.head, "label": list(a.label.images)} for a in L.arcs],
    }
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _allowed(L: SLabeledGraph, v: int, fixed: Mapping[int, int]) -> list[int]:
    """Colours for v consistent with every arc between v and a fixed vertex."""
    out = []
    for c in range(1, L.k + 1):
        ok = True
        for a in L.arcs:
            if a.tail == v and a.head in fixed:
                ok = a.label(c) != fixed[a.head]
            elif a.head == v and a.tail in fixed:
                ok = a.label(fixed[a.tail]) != c
            if not ok:
                break
        if ok:
            out.append(c)
    return out


def _first_violation(L: SLabeledGraph, f: Mapping[int, int], among: set[int]) -> int | None:
    for i, a in enumerate(L.arcs):
        if a.tail in among and a.head in among and a.label(f[a.tail]) == f[a.head]:
            return i
    return None


def make_certificate(L: SLabeledGraph, provenance: Construction | Mapping | None,
                     relabel: Permutation | None = None) -> dict:
    """Build the refutation certificate for a constructed instance.

    ``provenance`` is a Construction or its ``provenance()`` dict.  ``L`` is
    the construction's labeled graph, or ``relabel_colours`` of it by
    ``relabel`` (also read from a ``"relabel"`` provenance entry); gadget F
    then refutes ``relabel o phi_F``.
    """
    if isinstance(provenance, Construction):
        provenance = provenance.provenance()
    if not provenance or "faces" not in provenance or "base_vertices" not in provenance:
        raise CertificateError("cannot certify without construction provenance")
    if relabel is None and provenance.get("relabel") is not None:
        relabel = Permutation(tuple(provenance["relabel"]))
    base_vertices = list(provenance["base_vertices"])
    base_cols = _enumerate_base(L, base_vertices)
    known = {tuple(f[v] for v in base_vertices) for f in base_cols}

    faces = []
    listed = []
    for entry in provenance["faces"]:
        face = list(entry["face"])
        phi = dict(zip(base_vertices, entry["phi"]))
        if relabel is not None:
            phi = recolour(phi, relabel)
        if tuple(phi[v] for v in base_vertices) not in known:
            raise CertificateError(f"face {face}: its colouring is not a colouring of the instance")
        listed.append({"face": face, "colouring": [phi[v] for v in base_vertices]})
        verts = {r: entry[r] for r in ROLES}
        domains = {r: _allowed(L, verts[r], phi) for r in ROLES}
        rows = []
        for combo in itertools.product(*(domains[r] for r in ROLES)):
            f = dict(phi)
            f.update({verts[r]: x for r, x in zip(ROLES, combo)})
            i = _first_violation(L, f, set(verts.values()))
            if i is None:
                raise CertificateError(f"face {face}: combination {combo} violates no arc")
            arc = L.arcs[i]
            rows.append({
                "a": combo[0], "b": combo[1], "c": combo[2],
                "violated_arc": [arc.tail, arc.head],
                "lhs": arc.label(f[arc.tail]),
                "rhs": f[arc.head],
            })
        faces.append({"face": face, "vertices": verts, "domains": domains, "rows": rows})
    if len({tuple(e["colouring"]) for e in listed}) != len(base_cols):
        raise CertificateError(f"{len(listed)} gadgets do not cover the {len(base_cols)} base colourings")
    return {
        "digest": instance_digest(L),
        "base_vertices": base_vertices,
        "base_colourings": listed,
        "faces": faces,
    }


def _enumerate_base(L: SLabeledGraph, base_vertices: list[int]) -> list[dict[int, int]]:
    """Proper colourings of the instance restricted to the base vertices.

    Vertices are taken in id order; in a stacked triangulation only the first
    triangle branches and every later vertex is forced.
    """
    keep = set(base_vertices)
    arcs = [a for a in L.arcs if a.tail in keep and a.head in keep]
    before: dict[int, list] = {v: [] for v in base_vertices}
    order = sorted(base_vertices)
    rank = {v: i for i, v in enumerate(order)}
    for a in arcs:
        later = a.tail if rank[a.tail] > rank[a.head] else a.head
        before[later].append(a)
    out: list[dict[int, int]] = []
    f: dict[int, int] = {}
    nodes = 0

    def extend(i: int) -> None:
        nonlocal nodes
        if i == len(order):
            out.append(dict(f))
            return
        v = order[i]
        for c in range(1, L.k + 1):
            nodes += 1
            if nodes > MAX_BASE_NODES:
                raise CertificateError("base enumeration exceeded its node budget")
            f[v] = c
            if all(a.label(f[a.tail]) != f[a.head] for a in before[v]):
                extend(i + 1)
            del f[v]

    extend(0)
    return out


def check_certificate(cert: Mapping, L: SLabeledGraph) -> None:
    """Raise CertificateError naming the first failed check; return None if valid."""
    if cert.get("digest") != instance_digest(L):
        raise CertificateError("digest does not match the instance")
    base_vertices = list(cert["base_vertices"])
    vset = set(L.vertices)
    if not set(base_vertices) <= vset or len(set(base_vertices)) != len(base_vertices):
        raise CertificateError("base vertices are not distinct vertices of the instance")

    truth = {tuple(f[v] for v in base_vertices) for f in _enumerate_base(L, base_vertices)}
    listed = [tuple(entry["colouring"]) for entry in cert["base_colourings"]]
    if len(set(listed)) != len(listed):
        raise CertificateError("a base colouring is listed twice")
    if set(listed) != truth:
        missing = len(truth - set(listed))
        extra = len(set(listed) - truth)
        raise CertificateError(f"base colourings differ from enumeration: {missing} missing, {extra} bogus")

    faces = {tuple(fc["face"]): fc for fc in cert["faces"]}
    if len(faces) != len(cert["faces"]):
        raise CertificateError("a face appears twice")
    base_set = set(base_vertices)
    for entry in cert["base_colourings"]:
        face = tuple(entry["face"])
        fc = faces.get(face)
        if fc is None:
            raise CertificateError(f"no refutation table for face {list(face)}")
        phi = dict(zip(base_vertices, entry["colouring"]))
        verts = {r: fc["vertices"][r] for r in ROLES}
        gadget = set(verts.values())
        if len(gadget) != 3 or gadget & base_set or not gadget <= vset:
            raise CertificateError(f"face {list(face)}: gadget vertices {verts} are invalid")

        for r in ROLES:
            expect = _allowed(L, verts[r], phi)
            if sorted(fc["domains"][r]) != expect:
                raise CertificateError(
                    f"face {list(face)}: domain of {r} is {fc['domains'][r]}, arcs allow {expect}")

        combos = set(itertools.product(*(fc["domains"][r] for r in ROLES)))
        seen = set()
        for n, row in enumerate(fc["rows"]):
            combo = (row["a"], row["b"], row["c"])
            where = f"face {list(face)} row {n} {combo}"
            if combo not in combos:
                raise CertificateError(f"{where}: outside the candidate domains")
            seen.add(combo)
            tail, head = row["violated_arc"]
            if not (tail in gadget and head in gadget):
                raise CertificateError(f"{where}: named arc {tail}->{head} is not inside the gadget")
            if not L.has_edge(tail, head):
                raise CertificateError(f"{where}: no arc {tail}->{head}")
            arc = L.arc(tail, head)
            if (arc.tail, arc.head) != (tail, head):
                raise CertificateError(f"{where}: arc is oriented {arc.tail}->{arc.head}")
            f = dict(zip((verts["a"], verts["b"], verts["c"]), combo))
            lhs, rhs = arc.label(f[tail]), f[head]
            if lhs != rhs or row["lhs"] != lhs or row["rhs"] != rhs:
                raise CertificateError(
                    f"{where}: label({f[tail]}) = {lhs} vs {rhs}, recorded {row['lhs']} vs {row['rhs']}")
        if seen != combos:
            raise CertificateError(f"face {list(face)}: {len(combos - seen)} combinations not refuted")


def verify_certificate(cert: Mapping, L: SLabeledGraph) -> bool:
    try:
        check_certificate(cert, L)
    except (CertificateError, KeyError, TypeError, ValueError) as exc:
        log.info("certificate rejected: %s", exc)
        return False
    return True
