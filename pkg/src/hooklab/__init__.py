"""Exact enumeration and verification of tree hook weight identities.

Everything is computed over the integers (rationals where a formula
divides), so every check is an exact polynomial or integer equality.
The polynomial kernel has a compiled twin; see hooklab._backend.
"""

from hooklab._backend import available_backends, backend_name, use_backend
from hooklab.hookformula import (
    binary_hook_sum,
    binary_reciprocal_hook_sum,
    cayley_degree_identity,
    cayley_fiber_sums,
    fiber_sum,
    hook_weight_closed_form,
    hook_weight_sum,
    increasing_hook_sum,
    linear_extension_check,
    top_weight,
    top_weight_sum,
    tree_weight,
    tree_weight_sum,
    uniform_chain_sides,
)
from hooklab.kerov import (
    IntPartition,
    Permutation,
    bedard_goupil,
    binomial_simplification_check,
    block_cycle_permutation,
    count_factorizations,
    factorization_count_closed_form,
    factorization_counts_by_type,
    partitions_of,
    signed_factorization_count,
    tree_bridge_check,
    tree_bridge_values,
)
from hooklab.multipoly import (
    MultiPoly,
    falling_factorial,
    specialize,
    top_homogeneous,
)
from hooklab.recurrences import (
    TruncatedSeries,
    closed_polynomial,
    constant_term_check,
    finite_difference_check,
    grafting_law_sides,
    grafting_recurrence_check,
    lagrange_identity_check,
    lagrange_series_oracle,
    oracle_closed_form,
    root_degree_recurrence_check,
    set_partitions,
    split_polynomial,
    subset_closed_form,
)
from hooklab.reports import VerdictReport, compare_sides
from hooklab.trees import (
    BinaryTree,
    CayleyTree,
    IncreasingTree,
    binary_count,
    cayley_count,
    degree_vector,
    enumerate_binary,
    enumerate_cayley,
    enumerate_increasing,
    graft,
    hooks,
    increasing_count,
    increasing_from_cayley,
    prufer_decode,
    prufer_encode,
    split_at_second_min,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # polynomials
    "MultiPoly",
    "falling_factorial",
    "specialize",
    "top_homogeneous",
    # trees
    "IncreasingTree",
    "CayleyTree",
    "BinaryTree",
    "enumerate_increasing",
    "enumerate_cayley",
    "enumerate_binary",
    "increasing_count",
    "cayley_count",
    "binary_count",
    "hooks",
    "graft",
    "split_at_second_min",
    "prufer_encode",
    "prufer_decode",
    "increasing_from_cayley",
    "degree_vector",
    # hook weights and summation identities
    "tree_weight",
    "top_weight",
    "tree_weight_sum",
    "hook_weight_sum",
    "hook_weight_closed_form",
    "increasing_hook_sum",
    "uniform_chain_sides",
    "binary_hook_sum",
    "binary_reciprocal_hook_sum",
    "linear_extension_check",
    "cayley_degree_identity",
    "cayley_fiber_sums",
    "fiber_sum",
    "top_weight_sum",
    # recurrences
    "split_polynomial",
    "closed_polynomial",
    "constant_term_check",
    "finite_difference_check",
    "grafting_law_sides",
    "grafting_recurrence_check",
    "root_degree_recurrence_check",
    "lagrange_identity_check",
    "lagrange_series_oracle",
    "oracle_closed_form",
    "set_partitions",
    "subset_closed_form",
    "TruncatedSeries",
    # factorization counts
    "Permutation",
    "IntPartition",
    "partitions_of",
    "block_cycle_permutation",
    "count_factorizations",
    "factorization_counts_by_type",
    "factorization_count_closed_form",
    "bedard_goupil",
    "binomial_simplification_check",
    "signed_factorization_count",
    "tree_bridge_check",
    "tree_bridge_values",
    # reporting
    "VerdictReport",
    "compare_sides",
    # kernel backend controls
    "use_backend",
    "backend_name",
    "available_backends",
]
