"""Affine Jacobi-Trudi formulas, Hall-Littlewood polynomials and q,t-Rogers-Ramanujan series."""

from .exactalg import KERNEL, LaurentPoly, TruncSeries, VarSet
from .partitions import Partition

__all__ = ["KERNEL", "LaurentPoly", "TruncSeries", "VarSet", "Partition"]
__version__ = "0.1.0"
