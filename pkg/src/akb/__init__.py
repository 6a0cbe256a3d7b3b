"""Blocks of Ariki-Koike algebras, charged ell-cores and the cyclic quiver lattice."""

from .abacus import Abacus, charged_core, find_r_cycle, reduce_to_core, render, uglov_tau
from .blocks import BlockSummary, classify_blocks, component_index_set, components, fayers_core_criterion
from .lattice import Context, Multicharge, RootVector, WeightVector, block_invariants, dominant_reduce
from .young import ChargedMultipartition, Multipartition, Partition, residue_vector

__all__ = [
    "Abacus",
    "BlockSummary",
    "ChargedMultipartition",
    "Context",
    "Multicharge",
    "Multipartition",
    "Partition",
    "RootVector",
    "WeightVector",
    "block_invariants",
    "charged_core",
    "classify_blocks",
    "component_index_set",
    "components",
    "dominant_reduce",
    "fayers_core_criterion",
    "find_r_cycle",
    "reduce_to_core",
    "render",
    "residue_vector",
    "uglov_tau",
]
