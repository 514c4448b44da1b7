from .partitions import (Composition, Partition, Bipartition, partitions_of,
                         bipartitions_of, dominance_leq, conjugate,
                         is_p_regular, parse_partition, parse_composition,
                         parse_bipartition, hook_composition)
from .tableaux import (Tabloid, Tableau, tabloids, initial_tableau,
                       standard_tableaux, standard_tableaux_count)


__all__ = [
    "Composition",
    "Partition",
    "Bipartition",
    "partitions_of",
    "bipartitions_of",
    "dominance_leq",
    "conjugate",
    "is_p_regular",
    "parse_partition",
    "parse_composition",
    "parse_bipartition",
    "hook_composition",
    "Tabloid",
    "Tableau",
    "tabloids",
    "initial_tableau",
    "standard_tableaux",
    "standard_tableaux_count",
]
