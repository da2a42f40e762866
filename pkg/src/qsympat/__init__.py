"""Exact engine for pattern-avoidance classes and their quasisymmetric functions.

The package computes S_n(patterns) by prefix-pruned enumeration, forms the
generating function Q_n as an integer combination of fundamental
quasisymmetric functions, converts to the Schur basis exactly, and ships a
verification harness of named checks over the whole theory.
"""

from .perm import (
    Perm,
    avoids_all,
    complement,
    contains,
    delta,
    descent_composition,
    descent_set,
    increasing_runs,
    inverse,
    iota,
    parse_pattern_set,
    parse_permutation,
    format_pattern_set,
    format_permutation,
    partial_shuffle,
    reverse,
    rot180,
    shuffle,
    shuffle_sets,
    standardize,
)
from .tableau import (
    Partition,
    Tableau,
    enumerate_partitions,
    enumerate_syt,
    f_lambda,
    fattened_hooks,
    hooks,
    knuth_aggregate,
    knuth_class,
    knuth_neighbors,
    nontrivial_hooks,
    rsk,
    rsk_inverse,
    superstandard,
    t_shapes,
    tableau_descents,
    transpose,
)
from .qsym import (
    NotInSpan,
    QSymElement,
    SymElement,
    f_of_permutation_set,
    fine_character,
    is_schur_nonnegative,
    is_symmetric,
    mn_character,
    pieri_difference,
    pieri_s1,
    schur_to_fundamental,
    to_schur,
)
from .avoid import (
    AvoiderClass,
    count_avoiders,
    d_class,
    descent_tally,
    enumerate_avoiders,
    is_pattern_knuth_closed,
    is_union_of_knuth_classes,
    iter_avoiders,
    partition_into_knuth_classes,
    q_n,
)
from .checks import CheckResult, default_suite, run_check, run_suite

__version__ = "0.1.0"
