"""Principal ideal graphs of finite semigroups, skeletal quotients, and
exact spectral verification."""

from .families import (
    PartialBijection,
    all_partial_bijections,
    brandt,
    cyclic_group,
    left_zero,
    partial_bijection_count,
    subset_meet_semilattice,
    symmetric_inverse,
)
from .graphs import (
    Graph,
    are_isomorphic,
    components,
    degree_of_subset_vertex,
    graph_stats,
    intersection_graph,
    verify_isomorphism,
)
from .green import Partition, l_classes, principal_left_ideal, \
    principal_right_ideal, r_classes
from .pig import (
    involution_pig_isomorphism,
    isn_left_pig,
    left_pig,
    left_pig_inverse_fast,
    right_pig,
    s_left_pig,
    s_right_pig,
)
from .semigroups import (
    Semigroup,
    adjoin_zero,
    check_involution,
    find_zero,
    from_cayley_table,
    idempotents,
    inverses,
)
from .skeletal import (
    SkeletalReport,
    VertexMap,
    brute_force_has_proper_skeletal,
    compose_skeletal,
    embedded_copy,
    fibre_subgraph_is_complete,
    is_skeleton,
    max_skeletal,
    twin_partition,
    verify_skeletal,
)
from .spectral import (
    adjacency_matrix,
    eigen_multiplicity,
    integer_rank,
    laplacian_matrix,
    signless_laplacian_matrix,
    twin_spectral_report,
)

__version__ = "0.1.0"
