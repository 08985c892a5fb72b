"""Simultaneous-core partition toolkit.

Partitions, bead-set abaci, cores and quotients, exhaustive simultaneous-core
enumeration, the maximal cores of the (2k-1, 2k+1) and (2k-1, 2k, 2k+1)
families, and a machine-checked cell-level dissection realizing the factor-4
size identity between them.
"""

from .abacus import (
    BetaSet,
    QuotientDecomposition,
    TAbacus,
    decompose,
    partition_from_beta,
    reconstruct,
    remove_one_hook,
    t_core,
    t_quotient,
    to_t_abacus,
)
from .bijection import (
    CellMap,
    CellMapEntry,
    PartsSplit,
    QuotientHalf,
    RegionLabeling,
    SourceCell,
    build_bijection,
    label_rows,
    pack_staircase_triples,
    q_half,
    split_parts,
    square_split,
    verify_bijection,
)
from .catalan import (
    CatalanCorePair,
    append_step,
    catalan_core_pair,
    factor_four_check,
    kappa_pair,
    kappa_pair_size,
    kappa_triple,
    kappa_triple_abacus,
    kappa_triple_size,
    pair_quotient,
    staircase,
    triangular,
)
from .partitions import Cell, Partition, format_exponential, parse_exponential
from .simulcores import (
    CoreFamilySpec,
    EnumerationBoundError,
    InfiniteFamilyError,
    brute_force_cores,
    count_st_cores,
    enumerate_cores,
    enumeration_report,
    has_finitely_many,
    infinite_witness,
    is_simultaneous_core,
    is_t_core,
    maximal_core,
    maximal_core_size,
    semigroup_gaps,
)

__all__ = [
    "BetaSet",
    "CatalanCorePair",
    "Cell",
    "CellMap",
    "CellMapEntry",
    "CoreFamilySpec",
    "EnumerationBoundError",
    "InfiniteFamilyError",
    "Partition",
    "PartsSplit",
    "QuotientDecomposition",
    "QuotientHalf",
    "RegionLabeling",
    "SourceCell",
    "TAbacus",
    "append_step",
    "brute_force_cores",
    "build_bijection",
    "catalan_core_pair",
    "count_st_cores",
    "decompose",
    "enumerate_cores",
    "enumeration_report",
    "factor_four_check",
    "format_exponential",
    "has_finitely_many",
    "infinite_witness",
    "is_simultaneous_core",
    "is_t_core",
    "kappa_pair",
    "kappa_pair_size",
    "kappa_triple",
    "kappa_triple_abacus",
    "kappa_triple_size",
    "label_rows",
    "maximal_core",
    "maximal_core_size",
    "pack_staircase_triples",
    "pair_quotient",
    "parse_exponential",
    "partition_from_beta",
    "q_half",
    "reconstruct",
    "remove_one_hook",
    "semigroup_gaps",
    "split_parts",
    "square_split",
    "staircase",
    "t_core",
    "t_quotient",
    "to_t_abacus",
    "triangular",
    "verify_bijection",
]
