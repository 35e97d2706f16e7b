"""Constructive colorings of (P6, diamond, K4)-free graphs and subclasses."""

from .common import (Bipartition, ColorClass, ColoringOutcome, PartitionScheme, Trace,
                     color_by_components, split_matching_cell)
from .p2p3 import color_p2p3, color_thm1, color_thm2, partition_thm1, partition_thm2
from .p6 import color_p6, color_thm4, color_thm5, partition_thm4, partition_thm5

__all__ = [
    "Bipartition", "ColorClass", "ColoringOutcome", "PartitionScheme", "Trace",
    "color_by_components", "split_matching_cell",
    "color_p2p3", "color_thm1", "color_thm2", "partition_thm1", "partition_thm2",
    "color_p6", "color_thm4", "color_thm5", "partition_thm4", "partition_thm5",
]
