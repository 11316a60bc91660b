"""Deciding, enumerating and counting proper colourings of S-labeled graphs.

The search is depth-first backtracking with bitmask candidate sets and
forward checking.  Every arc ``(x, y)`` with label ``s`` forbids exactly one
pair per direction: fixing ``f(x) = c`` removes ``s(c)`` from y's candidates,
and fixing ``f(y) = c`` removes ``s^-1(c)`` from x's.  The next vertex is the
one with fewest candidates (ties: smallest id); colours are tried ascending.

``solve`` additionally splits the still-uncoloured vertices into connected
components and decides each independently, which keeps independent gadgets
from multiplying each other's search trees.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import ResourceLimitError
from .graph import PlaneGraph
from .labeled import Colouring, SLabeledGraph, check_colouring, from_graph
from .perm import inverse

SAT = "SAT"
UNSAT = "UNSAT"

BRUTE_FORCE_LIMIT = 10 ** 7
ENUMERATION_LIMIT = 10 ** 6


@dataclass
class SolveStats:
    nodes: int = 0
    propagations: int = 0
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "propagations": self.propagations,
                "wall_time": round(self.wall_time, 6), "seed": None}


@dataclass
class SolveResult:
    status: str
    witness: Colouring | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def sat(self) -> bool:
        return self.status == SAT


@dataclass
class Enumeration:
    """Colourings found, in search order, and whether the limit cut them short."""

    colourings: list[Colouring]
    truncated: bool
    stats: SolveStats = field(default_factory=SolveStats)

    def __len__(self):
        return len(self.colourings)

    def __iter__(self):
        return iter(self.colourings)


class _Problem:
    """Flattened constraint tables for one S-labeled graph."""

    def __init__(self, L: SLabeledGraph):
        self.k = L.k
        self.vertices = list(L.vertices)
        self.full = (1 << L.k) - 1
        # per vertex: list of (neighbour, forbidden-colour table indexed by own colour - 1)
        self.nbrs: dict[int, list[tuple[int, tuple[int, ...]]]] = {v: [] for v in self.vertices}
        for a in L.arcs:
            s = a.label
            self.nbrs[a.tail].append((a.head, s.images))
            self.nbrs[a.head].append((a.tail, inverse(s).images))
        self.all_id = all(a.label.is_identity() for a in L.arcs)


def _colours(mask: int) -> Iterator[int]:
    c = 1
    while mask:
        if mask & 1:
            yield c
        mask >>= 1
        c += 1


def _pick(unassigned: Iterable[int], dom: Mapping[int, int]) -> int:
    return min(unassigned, key=lambda v: (bin(dom[v]).count("1"), v))


def _assign(prob: _Problem, dom: dict[int, int], free: set[int], v: int, c: int,
            stats: SolveStats) -> bool:
    """Fix v = c in dom and forward-check the free neighbours; False on a wipe-out."""
    dom[v] = 1 << (c - 1)
    for w, table in prob.nbrs[v]:
        if w in free:
            bit = 1 << (table[c - 1] - 1)
            if dom[w] & bit:
                dom[w] &= ~bit
                stats.propagations += 1
                if not dom[w]:
                    return False
    return True


def _components(prob: _Problem, free: set[int]) -> list[list[int]]:
    comps = []
    seen: set[int] = set()
    for s in sorted(free):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in prob.nbrs[v]:
                if w in free and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _decide(prob: _Problem, dom: dict[int, int], free: set[int], stats: SolveStats,
            symmetry: bool, used_max: int) -> Colouring | None:
    if not free:
        return {}
    if not symmetry:
        comps = _components(prob, free)
        if len(comps) > 1:
            # smallest components first: cheap refutations surface early
            out: Colouring = {}
            for comp in sorted(comps, key=lambda c: (len(c), c[0])):
                sub = _decide(prob, dom, set(comp), stats, symmetry, used_max)
                if sub is None:
                    return None
                out.update(sub)
            return out
    v = _pick(free, dom)
    rest = free - {v}
    for c in _colours(dom[v]):
        if symmetry and c > used_max + 1:
            break
        stats.nodes += 1
        child = dict(dom)
        if not _assign(prob, child, rest, v, c, stats):
            continue
        sub = _decide(prob, child, rest, stats, symmetry, max(used_max, c))
        if sub is not None:
            sub[v] = c
            return sub
    return None


def _enumerate(prob: _Problem, dom: dict[int, int], free: set[int], stats: SolveStats,
               partial: dict[int, int], symmetry: bool, used_max: int) -> Iterator[Colouring]:
    if not free:
        yield dict(partial)
        return
    v = _pick(free, dom)
    rest = free - {v}
    for c in _colours(dom[v]):
        if symmetry and c > used_max + 1:
            break
        stats.nodes += 1
        child = dict(dom)
        if not _assign(prob, child, rest, v, c, stats):
            continue
        partial[v] = c
        yield from _enumerate(prob, child, rest, stats, partial, symmetry, max(used_max, c))
        del partial[v]


def _recursion_room(n: int) -> None:
    need = 4 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _symmetry_ok(prob: _Problem, break_symmetry: bool) -> bool:
    # renaming colours conjugates labels, so it is a symmetry only when all labels are id
    return break_symmetry and prob.all_id


def solve(L: SLabeledGraph, *, break_symmetry: bool = False) -> SolveResult:
    """Decide whether L has a proper colouring; a SAT result carries a checked witness."""
    start = time.perf_counter()
    prob = _Problem(L)
    _recursion_room(len(prob.vertices))
    stats = SolveStats()
    dom = {v: prob.full for v in prob.vertices}
    witness = _decide(prob, dom, set(prob.vertices), stats, _symmetry_ok(prob, break_symmetry), 0)
    stats.wall_time = time.perf_counter() - start
    if witness is None:
        return SolveResult(UNSAT, None, stats)
    witness = {v: witness[v] for v in prob.vertices}
    if not check_colouring(L, witness):
        raise AssertionError("solver produced an improper witness")
    return SolveResult(SAT, witness, stats)


def iter_colourings(L: SLabeledGraph, *, break_symmetry: bool = False,
                    stats: SolveStats | None = None) -> Iterator[Colouring]:
    """Lazily yield every proper colouring (one per colour-class naming when
    ``break_symmetry`` applies)."""
    prob = _Problem(L)
    _recursion_room(len(prob.vertices))
    stats = stats if stats is not None else SolveStats()
    dom = {v: prob.full for v in prob.vertices}
    for f in _enumerate(prob, dom, set(prob.vertices), stats, {},
                        _symmetry_ok(prob, break_symmetry), 0):
        yield {v: f[v] for v in prob.vertices}


def enumerate_colourings(L: SLabeledGraph, limit: int = ENUMERATION_LIMIT, *,
                         break_symmetry: bool = False) -> Enumeration:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    start = time.perf_counter()
    stats = SolveStats()
    found = list(itertools.islice(iter_colourings(L, break_symmetry=break_symmetry, stats=stats),
                                  limit + 1))
    truncated = len(found) > limit
    stats.wall_time = time.perf_counter() - start
    return Enumeration(found[:limit], truncated, stats)


def count_colourings(L: SLabeledGraph) -> int:
    return sum(1 for _ in iter_colourings(L))


def brute_force_colourings(L: SLabeledGraph) -> list[Colouring]:
    """Every proper colouring by exhaustive assignment, in lexicographic order."""
    n = len(L.vertices)
    if L.k ** n > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(f"{L.k}^{n} assignments exceed the brute-force limit")
    pos = {v: i for i, v in enumerate(L.vertices)}
    arcs = [(pos[a.tail], pos[a.head], a.label.images) for a in L.arcs]
    out = []
    for colours in itertools.product(range(1, L.k + 1), repeat=n):
        if all(img[colours[x] - 1] != colours[y] for x, y, img in arcs):
            out.append(dict(zip(L.vertices, colours)))
    return out


def partition_signature(f: Mapping[int, int]) -> tuple[tuple[int, ...], ...]:
    """Colour classes as a sorted tuple of sorted vertex tuples (names forgotten)."""
    classes: dict[int, list[int]] = {}
    for v, c in f.items():
        classes.setdefault(c, []).append(v)
    return tuple(sorted(tuple(sorted(vs)) for vs in classes.values()))


def _ordinary(G, k: int) -> SLabeledGraph:
    if isinstance(G, SLabeledGraph):
        return from_graph(G.edges, k, G.vertices)
    if isinstance(G, PlaneGraph):
        return from_graph(G.edges, k, G.vertices)
    edges = list(G)
    return from_graph(edges, k)


def is_uniquely_k_colourable(G, k: int, limit: int = ENUMERATION_LIMIT) -> bool:
    """True iff the proper k-colourings of G induce exactly one vertex partition.

    ``G`` may be a PlaneGraph, an SLabeledGraph (labels ignored) or an edge list.
    """
    L = _ordinary(G, k)
    signatures = set()
    for n, f in enumerate(iter_colourings(L)):
        if n >= limit:
            raise ResourceLimitError(f"more than {limit} colourings; enumeration abandoned")
        signatures.add(partition_signature(f))
        if len(signatures) > 1:
            return False
    return len(signatures) == 1

