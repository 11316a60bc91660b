"""Colouring of S-labeled graphs.

An S-labeled graph is an oriented graph whose arcs carry permutations of
[k]; a proper k-colouring f satisfies ``label(f(x)) != f(y)`` on every arc
``(x, y)``.  The package provides the permutation toolkit, plane graphs,
a backtracking solver, the gadget constructions showing that
{id, (123)} and {id, (1234)} admit non-4-colourable planar labelings, and
checkable certificates for them.
"""

from .certify import check_certificate, make_certificate, verify_certificate
from .construct import (
    Citation,
    Construction,
    bad_witness,
    base_triangulation,
    build_c123,
    build_c1234,
    construction,
    insert_gadgets,
    lemma1_graph,
)
from .graph import PlaneGraph, faces, is_triangulation, stack_vertex, triangle
from .labeled import (
    Arc,
    SLabeledGraph,
    check_colouring,
    from_gain,
    from_graph,
    from_group_zk,
    from_signed,
    labels_within,
    relabel_colours,
    reverse_arc,
)
from .perm import (
    GroupTable,
    Permutation,
    PermSet,
    compose,
    conjugacy_class_rep,
    conjugate_set,
    cyclic_shift_set,
    gain_encode,
    identity,
    inverse,
    negation_permutation,
    parse_cycles,
    print_cycles,
    symmetric_group,
)
from .solver import (
    brute_force_colourings,
    count_colourings,
    enumerate_colourings,
    is_uniquely_k_colourable,
    partition_signature,
    solve,
)

__version__ = "0.1.0"
