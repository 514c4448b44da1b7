from .permutation import (Permutation, ProductPermutation, compose,
                          parse_permutation)
from .groups import (SymmetricGroup, ProductGroup, Subgroup, YoungSubgroup,
                     DoubleCoset, enumerate_group, trivial_subgroup, cosets,
                     coset_table, double_cosets, intersection_shape)
from .stabilizer import (PartialStabilizer, stabilizer_of_partial_diagram,
                         brute_force_stabilizer, matching_to_permutation)


__all__ = [
    "Permutation",
    "ProductPermutation",
    "compose",
    "parse_permutation",
    "SymmetricGroup",
    "ProductGroup",
    "Subgroup",
    "YoungSubgroup",
    "DoubleCoset",
    "enumerate_group",
    "trivial_subgroup",
    "cosets",
    "coset_table",
    "double_cosets",
    "intersection_shape",
    "PartialStabilizer",
    "stabilizer_of_partial_diagram",
    "brute_force_stabilizer",
    "matching_to_permutation",
]
