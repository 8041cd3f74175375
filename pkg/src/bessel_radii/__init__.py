"""Radii of starlikeness and convexity for normalized combinations
N(z) = a z^2 J''_nu(z) + b z J'_nu(z) + c J_nu(z) of Bessel functions."""

__version__ = "0.1.0"

from .bounds import audit_report, bound_brackets, coefficient_sums, rayleigh_S5_S6
from .errors import (BesselRadiiError, DegenerateCoefficient, InvalidParameters, PrecisionLoss,
                     ScanExhausted, TruncationFailure, UnverifiedOrder, ZeroDenominator)
from .model import CoefficientTriple, EvaluationContext, largest_root, make_context, validate_context
from .radii import RadiusQuery, RadiusResult, convex_radius, radius, starlike_radius
from .series import Family, SeriesFamily, family
from .sums import power_sums_det
from .zeros import ZeroCatalog, find_zeros, interlacing_check

__all__ = [
    "BesselRadiiError", "CoefficientTriple", "DegenerateCoefficient", "EvaluationContext", "Family",
    "InvalidParameters", "PrecisionLoss", "RadiusQuery", "RadiusResult", "ScanExhausted", "SeriesFamily",
    "TruncationFailure", "UnverifiedOrder", "ZeroCatalog", "ZeroDenominator", "audit_report",
    "bound_brackets", "coefficient_sums", "convex_radius", "family", "find_zeros", "interlacing_check",
    "largest_root", "make_context", "power_sums_det", "radius", "rayleigh_S5_S6", "starlike_radius",
    "validate_context",
]
