"""Exact verification of crossed-product extensions of Comod(H(n)) and their braidings."""

from .braiding import BraidingCandidate, Verdict, braidability_report
from .comodule import Comodule, regular_comodule, tensor_comodules
from .crossed import CrossedDatum, GradedObject, preset, verify_pentagon
from .hopf_core import HopfData
from .reports import Report
from .supergroup import build_supergroup

__all__ = [
    "BraidingCandidate",
    "Comodule",
    "CrossedDatum",
    "GradedObject",
    "HopfData",
    "Report",
    "Verdict",
    "braidability_report",
    "build_supergroup",
    "preset",
    "regular_comodule",
    "tensor_comodules",
    "verify_pentagon",
]
