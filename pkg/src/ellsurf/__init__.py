"""Exact certification of a Weierstrass elliptic surface over a hyperelliptic base."""
from .algebra import INFINITY, Polynomial, RationalFunction
from .certify import ConstructionSpec, build_construction, verify_construction
from .elliptic_ft import CurveFT, SectionFT
from .elliptic_q import CurveQ, PointQ
from .surface import HyperellipticBase, WeierstrassSurfaceData, fiber_analysis

__all__ = [
    "INFINITY",
    "ConstructionSpec",
    "CurveFT",
    "CurveQ",
    "HyperellipticBase",
    "PointQ",
    "Polynomial",
    "RationalFunction",
    "SectionFT",
    "WeierstrassSurfaceData",
    "build_construction",
    "fiber_analysis",
    "verify_construction",
]
