from .module_rep import (ModuleRep, SubmoduleWitness, Bimodule,
                         submodule_generated, span_submodule, quotient,
                         quotient_map, zero_module, direct_sum, outer_tensor,
                         character_mismatches)
from .homs import (HomSpace, hom_space, end_algebra, is_isomorphic,
                   find_of_rank, ISOMORPHISM_TRIALS, EXHAUSTIVE_LIMIT)
from .radical import jacobson_radical, radical_matrices
from .decompose import (DecompositionReport, Summand, decompose,
                        minimal_polynomial, MAX_DECOMPOSE_DIM)
from .tensor import tensor_over_subalgebra
from .specht import (PermutationModule, perm_module_sym, perm_module_prod,
                     polytabloid, specht_module, dual_specht, specht_prod,
                     dual_specht_prod, gram_matrix, form_is_invariant,
                     simple_head, specht_operator, specht_vector_check)
from .young import (YoungCatalog, young_modules_sym, young_modules_prod,
                    product_multiplicities)
from .filtration import DualSpechtFiltration, dual_specht_filtration


__all__ = [
    "ModuleRep",
    "SubmoduleWitness",
    "Bimodule",
    "submodule_generated",
    "span_submodule",
    "quotient",
    "quotient_map",
    "zero_module",
    "direct_sum",
    "outer_tensor",
    "character_mismatches",
    "HomSpace",
    "hom_space",
    "end_algebra",
    "is_isomorphic",
    "find_of_rank",
    "ISOMORPHISM_TRIALS",
    "EXHAUSTIVE_LIMIT",
    "jacobson_radical",
    "radical_matrices",
    "DecompositionReport",
    "Summand",
    "decompose",
    "minimal_polynomial",
    "MAX_DECOMPOSE_DIM",
    "tensor_over_subalgebra",
    "PermutationModule",
    "perm_module_sym",
    "perm_module_prod",
    "polytabloid",
    "specht_module",
    "dual_specht",
    "specht_prod",
    "dual_specht_prod",
    "gram_matrix",
    "form_is_invariant",
    "simple_head",
    "specht_operator",
    "specht_vector_check",
    "YoungCatalog",
    "young_modules_sym",
    "young_modules_prod",
    "product_multiplicities",
    "DualSpechtFiltration",
    "dual_specht_filtration",
]
