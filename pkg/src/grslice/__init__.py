"""Exact computations for Schubert slices in the affine Grassmannian of SL_n."""

from .errors import GrsliceError
from .polynomial import Polynomial, VarTable

__version__ = "0.1.0"

__all__ = ["GrsliceError", "Polynomial", "VarTable", "__version__"]
