from .labels import (LambdaLabel, parse_label, lambda_leq, label_order_key,
                     labels_of, require_layer)
from .layers import (ROW, IDEAL, LAYER, CORNER, KINDS, LayerSpace,
                     layer_space, layer_bimodule, layer_group_algebra,
                     cell_bimodule, induce, induce_free, restriction, res_l,
                     cell_module, perm_module_B, ideal_generator,
                     ideal_image)
from .reports import (YoungLabelReport, YoungDecompositionReport,
                      FiltrationReport, CheckReport, algebra_dict)
from .catalog import LayerCatalog
from .young import (young_decomposition, layer_multiplicity_failures,
                    young_equals_cell, summand_classes_distinct)
from .filtration import cell_filtration, filtration_matches, subquotient
from .lemmas import (verify_layer_lemmas, coset_bimodule_witness,
                     multiplication_witness, split_witness,
                     hook_corner_witness, corner_stabilizer,
                     orbit_decomposition, layer_subquotient_dims,
                     restricted_cell_identity, semisimple_check,
                     layer_dimension, corner_dimension)


__all__ = [
    "LambdaLabel",
    "parse_label",
    "lambda_leq",
    "label_order_key",
    "labels_of",
    "require_layer",
    "ROW",
    "IDEAL",
    "LAYER",
    "CORNER",
    "KINDS",
    "LayerSpace",
    "layer_space",
    "layer_bimodule",
    "layer_group_algebra",
    "cell_bimodule",
    "induce",
    "induce_free",
    "restriction",
    "res_l",
    "cell_module",
    "perm_module_B",
    "ideal_generator",
    "ideal_image",
    "YoungLabelReport",
    "YoungDecompositionReport",
    "FiltrationReport",
    "CheckReport",
    "algebra_dict",
    "LayerCatalog",
    "young_decomposition",
    "layer_multiplicity_failures",
    "young_equals_cell",
    "summand_classes_distinct",
    "cell_filtration",
    "filtration_matches",
    "subquotient",
    "verify_layer_lemmas",
    "coset_bimodule_witness",
    "multiplication_witness",
    "split_witness",
    "hook_corner_witness",
    "corner_stabilizer",
    "orbit_decomposition",
    "layer_subquotient_dims",
    "restricted_cell_identity",
    "semisimple_check",
    "layer_dimension",
    "corner_dimension",
]
