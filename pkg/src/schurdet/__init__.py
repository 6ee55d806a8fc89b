"""Exact rational machinery for isotypic tensor components and their degeneracy.

The package keeps everything over the rationals: partitions and their
dominance order, the group algebra of slot permutations with its Young
symmetrizers and isotypic projectors, dense tensors with the slot action,
positive-equation and kernel-witness degeneracy checks, and the two small
classical invariants (Pfaffian, 2x2x2 hyperdeterminant) used as independent
cross-checks.
"""

from .degeneracy import (
    CheckFailure,
    DegeneracyReport,
    KernelWitness,
    antisymmetrize,
    critical_equation_failures,
    critical_equations_hold,
    degeneracy_sweep,
    diagonal_kernel_failure,
    is_in_kernel,
    kernel_failure,
    positive_equation_residual,
    slot_system_det,
    slot_system_eigencheck,
    slot_system_matrix,
    substitution_values,
)
from .errors import InternalConsistencyError, InvalidWitnessError, SizeGuardError
from .hyperdet import (
    degeneracy_crosscheck_222,
    det2,
    hyperdet_222,
    pencil_slices,
    pfaffian,
    random_skew_matrix,
    schlafli_coefficients,
)
from .linalg import det_exact, rank_exact
from .partitions import (
    Partition,
    SetPartition,
    all_partitions,
    all_set_partitions,
    critical_set,
    dominance_leq,
    is_exceptional,
    refines,
    shape_of,
    standard_tableau_count,
)
from .perm_algebra import (
    AlgebraElement,
    Permutation,
    all_permutations,
    column_antisymmetrizer,
    column_group,
    compose,
    cycle_partition,
    isotypic_projector,
    positive_element,
    row_group,
    row_symmetrizer,
    young_symmetrizer,
)
from .rational import Rational, as_fraction
from .rng import SplitMix64, derived_seed
from .tensor_space import (
    Tensor,
    algebra_action,
    evaluate,
    isotypic_rank,
    permute_factors,
    project_isotypic,
    random_tensor,
    random_vector,
    rank_one,
    slot_slice,
)

__all__ = [
    "AlgebraElement",
    "CheckFailure",
    "DegeneracyReport",
    "InternalConsistencyError",
    "InvalidWitnessError",
    "KernelWitness",
    "Partition",
    "Permutation",
    "Rational",
    "SetPartition",
    "SizeGuardError",
    "SplitMix64",
    "Tensor",
    "algebra_action",
    "all_partitions",
    "all_permutations",
    "all_set_partitions",
    "antisymmetrize",
    "as_fraction",
    "column_antisymmetrizer",
    "column_group",
    "compose",
    "critical_equation_failures",
    "critical_equations_hold",
    "critical_set",
    "cycle_partition",
    "degeneracy_crosscheck_222",
    "degeneracy_sweep",
    "derived_seed",
    "det2",
    "det_exact",
    "diagonal_kernel_failure",
    "dominance_leq",
    "evaluate",
    "hyperdet_222",
    "is_exceptional",
    "is_in_kernel",
    "isotypic_projector",
    "isotypic_rank",
    "kernel_failure",
    "pencil_slices",
    "permute_factors",
    "pfaffian",
    "positive_element",
    "positive_equation_residual",
    "project_isotypic",
    "random_skew_matrix",
    "random_tensor",
    "random_vector",
    "rank_exact",
    "rank_one",
    "refines",
    "row_group",
    "row_symmetrizer",
    "schlafli_coefficients",
    "shape_of",
    "slot_slice",
    "slot_system_det",
    "slot_system_eigencheck",
    "slot_system_matrix",
    "standard_tableau_count",
    "substitution_values",
    "young_symmetrizer",
]
