"""Heap-layout segment trees for stabbing counts, union measure and maximum clique."""
from .bottom_up import delete_iterative, insert_iterative, stab_iterative
from .heap_tree import HeapSegmentTree, InvariantError, NodePayload
from .interval_io import IndexInterval, Interval, normalize, parse
from .layout import NodeKind, lowest_y_node, node_kind, standard_region
from .reference_tree import LinkedSegmentTree

__all__ = [
    "HeapSegmentTree",
    "IndexInterval",
    "Interval",
    "InvariantError",
    "LinkedSegmentTree",
    "NodeKind",
    "NodePayload",
    "delete_iterative",
    "insert_iterative",
    "lowest_y_node",
    "node_kind",
    "normalize",
    "parse",
    "stab_iterative",
    "standard_region",
]
