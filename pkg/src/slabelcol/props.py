"""Randomised invariant suites over small S-labeled graphs.

Each suite draws instances with at most 4 vertices and k <= 3 and compares
the library against exhaustive enumeration.  They back the ``props`` CLI
subcommand and the test-suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .labeled import (
    Arc,
    SLabeledGraph,
    check_colouring,
    from_graph,
    from_signed,
    labels_within,
    recolour,
    relabel_colours,
    reverse_arc,
)
from .perm import PermSet, symmetric_group
from .solver import SAT, brute_force_colourings, solve


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} instances, {len(self.failures)} failures"


def random_instance(rng: random.Random, max_vertices: int = 4, ks=(1, 2, 3),
                    labels: list | None = None) -> SLabeledGraph:
    """Random simple graph with random orientation and labels from S_k (or ``labels``)."""
    n = rng.randint(1, max_vertices)
    k = rng.choice(list(ks))
    pool = labels if labels is not None else sorted(symmetric_group(k))
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.6:
            t, h = (u, v) if rng.random() < 0.5 else (v, u)
            arcs.append(Arc(t, h, rng.choice(pool)))
    return SLabeledGraph(k, tuple(range(n)), tuple(arcs))


def _key(f) -> tuple:
    return tuple(sorted(f.items()))


def reversal(trials: int = 200, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("reversal")
    while rep.checked < trials:
        L = random_instance(rng)
        if not L.arcs:
            continue
        a = rng.choice(L.arcs)
        R = reverse_arc(L, a.tail, a.head)
        rep.checked += 1
        if {_key(f) for f in brute_force_colourings(L)} != {_key(f) for f in brute_force_colourings(R)}:
            rep.failures.append(f"reversing {a.tail}->{a.head} changed the colourings of {L}")
        if reverse_arc(R, a.tail, a.head) != L:
            rep.failures.append(f"double reversal of {a.tail}->{a.head} is not the identity")
    return rep


def conjugation(trials: int = 200, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("conjugation")
    for _ in range(trials):
        L = random_instance(rng)
        pi = rng.choice(sorted(symmetric_group(L.k)))
        M = relabel_colours(L, pi)
        rep.checked += 1
        lhs = {_key(recolour(f, pi)) for f in brute_force_colourings(L)}
        rhs = {_key(f) for f in brute_force_colourings(M)}
        if lhs != rhs:
            rep.failures.append(f"relabelling by {pi} does not biject colourings of {L}")
    return rep


def monotonicity(trials: int = 200, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("monotonicity")
    for _ in range(trials):
        k = rng.choice((2, 3))
        group = sorted(symmetric_group(k))
        small = [p for p in group if rng.random() < 0.5] or [group[0]]
        big = sorted(set(small) | {p for p in group if rng.random() < 0.5})
        S, T = PermSet.of(small, k), PermSet.of(big, k)
        L = random_instance(rng, ks=(k,), labels=small)
        rep.checked += 1
        if not labels_within(L, S) or not labels_within(L, T):
            rep.failures.append(f"labeling over {S} not recognised as within {T}")
    return rep


def oracle(trials: int = 200, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("oracle")
    for _ in range(trials):
        L = random_instance(rng)
        res = solve(L)
        brute = brute_force_colourings(L)
        rep.checked += 1
        if (res.status == SAT) != bool(brute):
            rep.failures.append(f"solve says {res.status}, brute force finds {len(brute)} on {L}")
        elif res.witness is not None and not check_colouring(L, res.witness):
            rep.failures.append(f"invalid witness on {L}")
    return rep


def signed(trials: int = 200, seed: int = 0) -> SuiteReport:
    """All-positive signed graphs have exactly the ordinary proper colourings."""
    rng = random.Random(seed)
    rep = SuiteReport("signed")
    for _ in range(trials):
        L = random_instance(rng)
        edges = L.edges
        S = from_signed([(u, v, 1) for u, v in edges], L.k, vertices=L.vertices)
        O = from_graph(edges, L.k, L.vertices)
        rep.checked += 1
        ordinary = [f for f in itertools.product(range(1, L.k + 1), repeat=len(L.vertices))
                    if all(f[u] != f[v] for u, v in edges)]
        got = sorted(tuple(f[v] for v in L.vertices) for f in brute_force_colourings(S))
        if got != ordinary or brute_force_colourings(O) != brute_force_colourings(S):
            rep.failures.append(f"all-positive signed graph on {edges} differs from ordinary colouring")
    return rep


SUITES = {
    "reversal": reversal,
    "conjugation": conjugation,
    "monotonicity": monotonicity,
    "oracle": oracle,
    "signed": signed,
}


def run_suite(name: str, trials: int = 200, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](trials, seed)
