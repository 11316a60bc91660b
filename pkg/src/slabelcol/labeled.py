"""S-labeled graphs: an orientation plus one permutation label per arc.

A colouring ``f`` is proper when ``label(f(tail)) != f(head)`` for every arc.
Colourings are plain ``dict[int, int]`` maps from vertex to colour in [k].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ColouringError, LabelingError, SizeError
from .perm import (
    SIGNED_NK,
    SIGNED_ZK,
    GroupTable,
    Permutation,
    PermSet,
    conjugate,
    cyclic_shift,
    gain_encode,
    identity,
    inverse,
    negation_permutation,
)

Colouring = dict[int, int]


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    label: Permutation

    @property
    def edge(self) -> tuple[int, int]:
        return (min(self.tail, self.head), max(self.tail, self.head))


@dataclass(frozen=True)
class SLabeledGraph:
    """Graph on integer vertices with exactly one labeled arc per edge.

    Arcs are kept sorted by their underlying edge ``(min, max)``; the index
    of an arc in ``arcs`` is its arc id.
    """

    k: int
    vertices: tuple[int, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if self.k < 1:
            raise SizeError(f"k must be positive, got {self.k}")
        verts = tuple(sorted(int(v) for v in self.vertices))
        if len(set(verts)) != len(verts):
            raise LabelingError("duplicate vertex ids")
        arcs = tuple(sorted(self.arcs, key=lambda a: a.edge))
        vset = set(verts)
        seen = set()
        for a in arcs:
            if a.tail not in vset or a.head not in vset:
                raise LabelingError(f"arc {a.tail}->{a.head} has an unknown endpoint")
            if a.tail == a.head:
                raise LabelingError(f"loop at vertex {a.tail}")
            if a.edge in seen:
                raise LabelingError(f"more than one arc on edge {a.edge}")
            if a.label.k != self.k:
                raise SizeError(f"arc {a.tail}->{a.head} label has size {a.label.k}, expected {self.k}")
            seen.add(a.edge)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arcs)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [a.edge for a in self.arcs]

    def arc_index(self, u: int, v: int) -> int:
        """Id of the arc on edge uv (either direction)."""
        key = (min(u, v), max(u, v))
        lo, hi = 0, len(self.arcs)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.arcs[mid].edge < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.arcs) and self.arcs[lo].edge == key:
            return lo
        raise LabelingError(f"no edge {u}-{v}")

    def arc(self, u: int, v: int) -> Arc:
        return self.arcs[self.arc_index(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.arc_index(u, v)
        except LabelingError:
            return False
        return True

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a in self.arcs:
            adj[a.tail].append(a.head)
            adj[a.head].append(a.tail)
        return adj

    def induced(self, vertices: Iterable[int]) -> "SLabeledGraph":
        keep = set(vertices)
        return SLabeledGraph(self.k, tuple(keep),
                             tuple(a for a in self.arcs if a.tail in keep and a.head in keep))

    def label_set(self) -> PermSet:
        return PermSet(self.k, frozenset(a.label for a in self.arcs))


def check_colouring(L: SLabeledGraph, f: Mapping[int, int]) -> bool:
    missing = [v for v in L.vertices if v not in f]
    if missing:
        raise ColouringError(f"colouring is undefined on vertices {missing[:5]}")
    bad = [v for v in L.vertices if not 1 <= f[v] <= L.k]
    if bad:
        raise ColouringError(f"colours outside [1..{L.k}] at vertices {bad[:5]}")
    return all(a.label(f[a.tail]) != f[a.head] for a in L.arcs)


def violated_arcs(L: SLabeledGraph, f: Mapping[int, int]) -> list[int]:
    """Ids of arcs whose constraint fails under a total colouring."""
    return [i for i, a in enumerate(L.arcs) if a.label(f[a.tail]) == f[a.head]]


def reverse_arc(L: SLabeledGraph, u: int, v: int) -> SLabeledGraph:
    """Flip the arc on edge uv and invert its label; proper colourings are unchanged."""
    i = L.arc_index(u, v)
    old = L.arcs[i]
    arcs = list(L.arcs)
    arcs[i] = Arc(old.head, old.tail, inverse(old.label))
    return SLabeledGraph(L.k, L.vertices, tuple(arcs))


def relabel_colours(L: SLabeledGraph, pi: Permutation) -> SLabeledGraph:
    """Conjugate every label by pi; f is proper for L iff pi o f is proper for the result."""
    if pi.k != L.k:
        raise SizeError(f"relabelling permutation has size {pi.k}, graph has k={L.k}")
    return SLabeledGraph(L.k, L.vertices,
                         tuple(Arc(a.tail, a.head, conjugate(a.label, pi)) for a in L.arcs))


def labels_within(L: SLabeledGraph, S: PermSet) -> bool:
    if S.k != L.k:
        raise SizeError(f"label set has k={S.k}, graph has k={L.k}")
    return all(a.label in S.members for a in L.arcs)


def _oriented(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _vertex_set(pairs: Iterable[tuple[int, int]], vertices: Iterable[int] | None) -> tuple[int, ...]:
    vs = set(vertices) if vertices is not None else set()
    for u, v in pairs:
        vs.update((u, v))
    return tuple(sorted(vs))


def from_graph(edges: Iterable[tuple[int, int]], k: int,
               vertices: Iterable[int] | None = None) -> SLabeledGraph:
    """All-identity labeling: proper colourings are ordinary proper k-colourings."""
    edges = [tuple(e) for e in edges]
    e = identity(k)
    return SLabeledGraph(k, _vertex_set(edges, vertices),
                         tuple(Arc(*_oriented(u, v), e) for u, v in edges))


def from_signed(edges: Iterable[tuple[int, int, int]], k: int, mode: str = SIGNED_NK,
                vertices: Iterable[int] | None = None) -> SLabeledGraph:
    """Signed graph -> S-labeled graph.

    ``edges`` holds ``(u, v, sign)`` with sign +1 or -1.  Negative edges get
    ``negation_permutation(k, mode)``.  Translate native signed colourings with
    :func:`signed_colour_map`.
    """
    edges = [tuple(e) for e in edges]
    neg = negation_permutation(k, mode)
    e = identity(k)
    arcs = []
    for u, v, sign in edges:
        if sign not in (1, -1):
            raise LabelingError(f"edge {u}-{v} has sign {sign}, expected +1 or -1")
        arcs.append(Arc(*_oriented(u, v), e if sign == 1 else neg))
    return SLabeledGraph(k, _vertex_set([(u, v) for u, v, _ in edges], vertices), tuple(arcs))


def signed_colour_map(k: int, mode: str) -> dict[int, int]:
    """Bijection from native signed colours to [k] under which negation becomes
    ``negation_permutation(k, mode)``.

    signed-Nk colours are N_k = {+-1, ..., +-q} (plus 0 for odd k):
    ``+i -> 2i-1``, ``-i -> 2i``, ``0 -> k``.  signed-Zk colours are
    0..k-1 with negation mod k: ``c -> 2c-1`` and ``k-c -> 2c`` for
    ``1 <= c <= q``, then ``0 -> 2q+1`` and, for even k, ``k/2 -> 2q+2``.
    """
    if mode == SIGNED_NK:
        q = k // 2
        out = {}
        for i in range(1, q + 1):
            out[i] = 2 * i - 1
            out[-i] = 2 * i
        if k % 2:
            out[0] = k
        return out
    if mode == SIGNED_ZK:
        q = (k + 1) // 2 - 1
        out = {}
        for c in range(1, q + 1):
            out[c] = 2 * c - 1
            out[k - c] = 2 * c
        out[0] = 2 * q + 1
        if k % 2 == 0:
            out[k // 2] = 2 * q + 2
        return out
    raise ValueError(f"unknown mode {mode!r}")


def from_group_zk(arcs: Iterable[tuple[int, int, int]], k: int,
                  vertices: Iterable[int] | None = None) -> SLabeledGraph:
    """Z_k group-colouring instance -> S-labeled graph.

    An arc ``(u, v, a)`` forbids ``f(v) - f(u) == a (mod k)``; with colours
    shifted by one (``c -> c + 1``) that is the cyclic-shift label by ``a``.
    """
    arcs = [tuple(a) for a in arcs]
    out = []
    for u, v, a in arcs:
        if not 0 <= a < k:
            raise LabelingError(f"weight {a} on arc {u}->{v} outside Z_{k}")
        out.append(Arc(u, v, cyclic_shift(k, a)))
    return SLabeledGraph(k, _vertex_set([(u, v) for u, v, _ in arcs], vertices), tuple(out))


def from_gain(arcs: Iterable[tuple[int, int, int]], group: GroupTable, k: int,
              vertices: Iterable[int] | None = None) -> SLabeledGraph:
    """Gain graph with gain group ``group`` -> S-labeled graph on k*n + 1 colours.

    ``arcs`` holds ``(u, v, g)`` with g an element index of ``group``.  The
    gain colour ``(i, x)`` corresponds to ``n*(i-1) + x + 1`` and the colour 0
    to ``k*n + 1``.
    """
    arcs = [tuple(a) for a in arcs]
    out = [Arc(u, v, gain_encode(group, k, g)) for u, v, g in arcs]
    return SLabeledGraph(k * group.n + 1, _vertex_set([(u, v) for u, v, _ in arcs], vertices),
                         tuple(out))


def gain_colour_index(group: GroupTable, k: int, colour: int | tuple[int, int]) -> int:
    """Position in [k*n + 1] of a gain colour ``0`` or ``(i, x)``."""
    if colour == 0:
        return k * group.n + 1
    i, x = colour
    return group.n * (i - 1) + x + 1


def recolour(f: Mapping[int, int], pi: Permutation) -> Colouring:
    """``pi o f``."""
    return {v: pi(c) for v, c in f.items()}
