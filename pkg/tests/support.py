"""Shared oracles and fixtures-by-import for the test-suite."""

import itertools

from slabelcol.perm import GroupTable, symmetric_group


def small_groups():
    """All groups of order <= 6 up to isomorphism."""
    z2 = GroupTable.cyclic(2)
    return {
        "Z1": GroupTable.cyclic(1),
        "Z2": z2,
        "Z3": GroupTable.cyclic(3),
        "Z4": GroupTable.cyclic(4),
        "Z2xZ2": GroupTable.direct_product(z2, z2),
        "Z5": GroupTable.cyclic(5),
        "Z6": GroupTable.cyclic(6),
        "S3": GroupTable.from_permutations(sorted(symmetric_group(3))),
    }


def all_assignments(vertices, k):
    for colours in itertools.product(range(1, k + 1), repeat=len(vertices)):
        yield dict(zip(vertices, colours))


def proper_by_definition(L, f):
    """Oracle: evaluate label(f(tail)) != f(head) straight from the images."""
    return all(a.label.images[f[a.tail] - 1] != f[a.head] for a in L.arcs)


def colouring_set(L):
    """Oracle: every proper colouring as a frozenset-able tuple, by exhaustion."""
    return {tuple(sorted(f.items())) for f in all_assignments(L.vertices, L.k) if proper_by_definition(L, f)}
