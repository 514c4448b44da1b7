from .base_algebra import PresentedAlgebra, AlgebraElement, MAX_REGULAR_DIM
from .group_algebra import GroupAlgebra
from .walled import (WalledDiagram, PartialDiagram, MAX_DIAGRAM_VERTICES,
                     identity_diagram, diagram_from_parts, permutation_diagram,
                     multiply_diagrams, generator, flip, nested_arcs,
                     idempotent_diagram, layer_count, partial_count,
                     enumerate_diagrams, partial_diagrams, act_on_partial,
                     parse_diagram)
from .walled_algebra import WalledBrauerAlgebra


__all__ = [
    "PresentedAlgebra",
    "AlgebraElement",
    "MAX_REGULAR_DIM",
    "GroupAlgebra",
    "WalledDiagram",
    "PartialDiagram",
    "MAX_DIAGRAM_VERTICES",
    "identity_diagram",
    "diagram_from_parts",
    "permutation_diagram",
    "multiply_diagrams",
    "generator",
    "flip",
    "nested_arcs",
    "idempotent_diagram",
    "layer_count",
    "partial_count",
    "enumerate_diagrams",
    "partial_diagrams",
    "act_on_partial",
    "parse_diagram",
    "WalledBrauerAlgebra",
]
