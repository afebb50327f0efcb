"""Immutable domain values."""

from .diagram import AlgebraElement, BasisKind, Coefficient, Diagram
from .matrix import BasisMatrix, Entry, FeatureBasisMatrix, SparseBinaryMatrix
from .partition import Box, IntegerPartition
from .pattern import PatternMatrix
from .product import DiagramTuple, ProductBasisMatrix
from .quiver import BratteliLevel, McKayQuiver, MultiplicityVector
from .set_partition import SetPartition, ShapeSplit

__all__ = [
    "AlgebraElement",
    "BasisKind",
    "BasisMatrix",
    "Box",
    "BratteliLevel",
    "Coefficient",
    "Diagram",
    "DiagramTuple",
    "Entry",
    "FeatureBasisMatrix",
    "IntegerPartition",
    "McKayQuiver",
    "MultiplicityVector",
    "PatternMatrix",
    "ProductBasisMatrix",
    "SetPartition",
    "ShapeSplit",
    "SparseBinaryMatrix",
]
