"""Exact BKP neutral-fermion calculus and diagonally strict plane partitions."""

from .exactring import DyadicSqrt2, QSqrt2, SQRT2, INV_SQRT2
from .partitions import StrictPartition
from .planepart import PlanePartition
from .series import PowerSeries, bkp_product_series, macmahon_series

__all__ = [
    "DyadicSqrt2",
    "QSqrt2",
    "SQRT2",
    "INV_SQRT2",
    "StrictPartition",
    "PlanePartition",
    "PowerSeries",
    "bkp_product_series",
    "macmahon_series",
]

__version__ = "0.1.0"
