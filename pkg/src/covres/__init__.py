"""Equivariant resolutions of modules of covariants, with exact cross-checks."""

from .partitions import EMPTY, Partition, parse_partition

__version__ = "0.1.0"

__all__ = ["EMPTY", "Partition", "parse_partition", "__version__"]
