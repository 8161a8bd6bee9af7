"""Exact tame local masses for permutation groups built from symmetric
groups by wreath and cross products."""

from ._massform import (
    Group,
    Counting,
    ambient_counts,
    bhargava_rhs,
    build_counting,
    build_group,
    catalog,
    check_mass_formula,
    frobenius_solution_count,
    mass_by_image,
    mass_by_product_type,
    mass_by_type,
    mass_by_wreath_type,
    partition_p,
    rational_character_table,
    total_mass,
)

__all__ = [
    "Group",
    "Counting",
    "ambient_counts",
    "bhargava_rhs",
    "build_counting",
    "build_group",
    "catalog",
    "check_mass_formula",
    "frobenius_solution_count",
    "mass_by_image",
    "mass_by_product_type",
    "mass_by_type",
    "mass_by_wreath_type",
    "partition_p",
    "rational_character_table",
    "total_mass",
]
