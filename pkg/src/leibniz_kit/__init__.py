"""Exact tools for low-dimensional Leibniz algebras over Q and prime fields."""

from .algebra import Algebra, apply_basis_change, bracket, check_leibniz, is_lie
from .catalog import default_params, make, survey_params
from .classifier import ClassificationFailed, ClassificationResult, classify
from .field import GF, QQ, Field
from .invariants import invariant_report

__all__ = [
    "Algebra",
    "ClassificationFailed",
    "ClassificationResult",
    "Field",
    "GF",
    "QQ",
    "apply_basis_change",
    "bracket",
    "check_leibniz",
    "classify",
    "default_params",
    "invariant_report",
    "is_lie",
    "make",
    "survey_params",
]

__version__ = "0.1.0"
