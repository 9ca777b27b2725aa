"""Group determinants, subgroup regular representations and factorization checks."""

from ._core import (
    Group,
    GroupdetError,
    all_subgroups,
    catalog,
    degree_bound,
    from_cayley_table,
    from_permutations,
    irrep_degrees,
    irreps,
    is_normal,
    left_transversal,
    run_cli,
    subgroup_generated,
    theta,
    theta_at,
    theta_terms,
    verify,
)

__all__ = [
    "Group",
    "GroupdetError",
    "all_subgroups",
    "catalog",
    "degree_bound",
    "from_cayley_table",
    "from_permutations",
    "irrep_degrees",
    "irreps",
    "is_normal",
    "left_transversal",
    "run_cli",
    "subgroup_generated",
    "theta",
    "theta_at",
    "theta_terms",
    "verify",
]
