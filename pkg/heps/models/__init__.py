# Re-export models for convenience
from heps.models.ellipticity import Ellipticity, SymMatrix2
from heps.models.bounds import BoundReport, CriticalPoint, CurveRow, CurveTable, CURVE_HEADER
from heps.models.lab import ContactSet, DecayFit, LemmaCheckReport, Paraboloid

__all__ = [
    "Ellipticity",
    "SymMatrix2",
    "BoundReport",
    "CriticalPoint",
    "CurveRow",
    "CurveTable",
    "CURVE_HEADER",
    "ContactSet",
    "DecayFit",
    "LemmaCheckReport",
    "Paraboloid",
]
