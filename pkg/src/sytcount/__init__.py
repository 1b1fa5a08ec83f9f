"""Counting standard Young tableaux several independent ways."""

from .closedform import ExactCount, count_closed, count_two_row
from .dft_a2 import count_dft
from .errors import (
    BoxOverflow,
    DimensionMismatch,
    HeightExceedsR,
    HeightExceedsThree,
    NotAPartition,
    ShapeTooLarge,
    ToleranceExceeded,
)
from .laurent import LaurentPoly, count_via_genfun, genfun, vandermonde
from .oracle import Tableau, count_oracle, enumerate_tableaux
from .partitions import Partition, mu, partitions_of, validate
from .vertexdp import VertexFunction, count_paths

__all__ = [
    "BoxOverflow", "DimensionMismatch", "ExactCount", "HeightExceedsR",
    "HeightExceedsThree", "LaurentPoly", "NotAPartition", "Partition",
    "ShapeTooLarge", "Tableau", "ToleranceExceeded", "VertexFunction",
    "count_closed", "count_dft", "count_oracle", "count_paths",
    "count_two_row", "count_via_genfun", "enumerate_tableaux", "genfun",
    "mu", "partitions_of", "vandermonde", "validate",
]
