"""Plane graphs as rotation systems, face tracing and triangle stacking.

Conventions.  ``rotation[v]`` is the cyclic order of v's neighbours.  Tracing
the face that follows dart ``u -> v`` continues with ``v -> w`` where ``w`` is
the neighbour *preceding* ``u`` in ``rotation[v]``.  A face is identified by
the lexicographically least dart on its walk, and its walk is stored starting
from that dart.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmbeddingError, ShapeError

FaceId = tuple[int, int]


@dataclass(frozen=True)
class FaceWalk:
    """One face: its id and the cyclic vertex sequence of its boundary."""

    face: FaceId
    boundary: tuple[int, ...]

    @property
    def darts(self) -> list[tuple[int, int]]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def __len__(self):
        return len(self.boundary)


@dataclass(frozen=True)
class PlaneGraph:
    """A connected simple graph with a combinatorial embedding.

    Vertices are integers; ``rotation`` maps each vertex to the tuple of its
    neighbours in cyclic order (stored starting from the least neighbour).
    """

    rotation: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        rot = tuple(sorted((int(v), _canonical_cycle(tuple(int(x) for x in nbrs)))
                           for v, nbrs in self.rotation))
        object.__setattr__(self, "rotation", rot)
        _validate(self)

    @classmethod
    def from_rotation(cls, rotation: dict[int, Sequence[int]]) -> "PlaneGraph":
        return cls(tuple((v, tuple(n)) for v, n in rotation.items()))

    @classmethod
    def from_faces(cls, walks: Iterable[Sequence[int]]) -> "PlaneGraph":
        """Rebuild the rotation system from a consistent set of face walks."""
        return cls.from_rotation(_rotation_from_faces(walks))

    @property
    def rot(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rotation)

    @property
    def vertices(self) -> list[int]:
        return [v for v, _ in self.rotation]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((v, w) for v, nbrs in self.rotation for w in nbrs if v < w)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.rot[v]

    def adjacency(self) -> dict[int, set[int]]:
        return {v: set(n) for v, n in self.rotation}

    def num_vertices(self) -> int:
        return len(self.rotation)

    def num_edges(self) -> int:
        return sum(len(n) for _, n in self.rotation) // 2

    def faces(self) -> list[FaceWalk]:
        return faces(self)

    def face(self, face_id: FaceId) -> FaceWalk:
        for f in faces(self):
            if f.face == face_id:
                return f
        raise KeyError(f"no face {face_id}")


def _canonical_cycle(cyc: tuple[int, ...]) -> tuple[int, ...]:
    if not cyc:
        return cyc
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


def _canonical_walk(walk: Sequence[int]) -> tuple[int, ...]:
    walk = tuple(walk)
    n = len(walk)
    best = min(range(n), key=lambda i: (walk[i], walk[(i + 1) % n]))
    return walk[best:] + walk[:best]


def _validate(g: PlaneGraph) -> None:
    rot = dict(g.rotation)
    for v, nbrs in rot.items():
        if len(set(nbrs)) != len(nbrs):
            raise EmbeddingError(f"multi-edge at vertex {v}")
        for w in nbrs:
            if w == v:
                raise EmbeddingError(f"loop at vertex {v}")
            if w not in rot or v not in rot[w]:
                raise EmbeddingError(f"edge {v}-{w} not listed at both ends")
    if not rot:
        raise EmbeddingError("empty graph")
    start = next(iter(rot))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in rot[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(rot):
        raise EmbeddingError("graph is not connected")
    n_faces = len(faces(g))
    euler = len(rot) - g.num_edges() + n_faces
    # an isolated vertex traces no face
    if len(rot) > 1 and euler != 2:
        raise EmbeddingError(f"rotation system is not planar: V - E + F = {euler}")


def _pred(rot: dict[int, tuple[int, ...]], v: int, u: int) -> int:
    nbrs = rot[v]
    return nbrs[nbrs.index(u) - 1]


def faces(g: PlaneGraph) -> list[FaceWalk]:
    """Trace all faces; every dart lies on exactly one walk.  Sorted by face id."""
    rot = dict(g.rotation)
    seen: set[tuple[int, int]] = set()
    out = []
    for v, nbrs in rot.items():
        for w in nbrs:
            if (v, w) in seen:
                continue
            walk = []
            u, x = v, w
            while (u, x) not in seen:
                seen.add((u, x))
                walk.append(u)
                u, x = x, _pred(rot, x, u)
            if (u, x) != (v, w):
                raise EmbeddingError(f"face walk from dart {(v, w)} does not close")
            walk = _canonical_walk(walk)
            out.append(FaceWalk((walk[0], walk[1]), walk))
    out.sort(key=lambda f: f.face)
    return out


def _rotation_from_faces(walks: Iterable[Sequence[int]]) -> dict[int, tuple[int, ...]]:
    # face (.., u, v, w, ..) means w precedes u around v, i.e. succ_v(w) = u
    succ: dict[int, dict[int, int]] = {}
    for walk in walks:
        n = len(walk)
        for i in range(n):
            u, v, w = walk[i - 1], walk[i], walk[(i + 1) % n]
            table = succ.setdefault(v, {})
            if w in table:
                raise EmbeddingError(f"dart {v}->{w} appears on two faces")
            table[w] = u
    rot = {}
    for v, table in succ.items():
        first = min(table)
        cyc = [first]
        nxt = table[first]
        while nxt != first:
            if nxt not in table or len(cyc) > len(table):
                raise EmbeddingError(f"faces around vertex {v} do not close up")
            cyc.append(nxt)
            nxt = table[nxt]
        if len(cyc) != len(table):
            raise EmbeddingError(f"vertex {v} is pinched (several face fans)")
        rot[v] = tuple(cyc)
    return rot


def triangle(vertices: tuple[int, int, int] = (0, 1, 2)) -> PlaneGraph:
    """K3 with its two faces."""
    u, v, w = vertices
    return PlaneGraph.from_faces([(u, v, w), (u, w, v)])


def subdivide_face(g: PlaneGraph, face_id: FaceId, pieces: Sequence[Sequence[int]]) -> PlaneGraph:
    """Replace one face by a disk of smaller faces.

    ``pieces`` are walks with the same orientation as the replaced face whose
    outer darts are exactly the darts of that face.
    """
    walks = [f.boundary for f in faces(g) if f.face != face_id]
    if len(walks) == len(faces(g)):
        raise KeyError(f"no face {face_id}")
    return PlaneGraph.from_faces(walks + [tuple(p) for p in pieces])


def stack_vertex(g: PlaneGraph, face_id: FaceId, new_vertex: int | None = None) -> tuple[PlaneGraph, int]:
    """Insert a vertex inside a triangular face and join it to the three corners."""
    walk = g.face(face_id).boundary
    if len(walk) != 3:
        raise ShapeError(f"face {face_id} has length {len(walk)}, expected a triangle")
    x = max(g.vertices) + 1 if new_vertex is None else new_vertex
    if x in g.rot:
        raise EmbeddingError(f"vertex {x} already exists")
    p, q, r = walk
    return subdivide_face(g, face_id, [(p, q, x), (q, r, x), (r, p, x)]), x


def is_triangulation(g: PlaneGraph) -> bool:
    return all(len(f) == 3 for f in faces(g))


def cycle_graph(n: int) -> PlaneGraph:
    """The n-cycle embedded with two n-gonal faces."""
    cyc = tuple(range(n))
    return PlaneGraph.from_faces([cyc, tuple(reversed(cyc))])
