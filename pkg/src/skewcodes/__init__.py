"""Skew cyclic codes over F_q^l: construction, Gray images, duality and CSS
quantum parameters."""

from __future__ import annotations

from .gf import GF
from .skewpoly import SkewPoly, SkewRing

__version__ = "0.1.0"

__all__ = ["GF", "SkewRing", "SkewPoly", "__version__"]
