"""Exact decision procedures for strongly asymptotically log del Pezzo pairs
on rational surfaces of Picard rank <= 2 and their boundary blow-ups."""

from .classifier import ClassificationTag, NotSALdP, classify, validate_config
from .errors import InvalidInputError, InvariantViolation
from .families import FAMILIES, family
from .flags import BlowupConfig, BlownPoint, IncidenceDecl, find_flag, is_saldp_blowup
from .lattice import P2, P1xP1, DivisorClass, SurfaceModel, hirzebruch
from .positivity import LogPair, is_log_del_pezzo, is_strongly_asymptotically_ample

__all__ = [
    "BlowupConfig",
    "BlownPoint",
    "ClassificationTag",
    "DivisorClass",
    "FAMILIES",
    "IncidenceDecl",
    "InvalidInputError",
    "InvariantViolation",
    "LogPair",
    "NotSALdP",
    "P1xP1",
    "P2",
    "SurfaceModel",
    "classify",
    "family",
    "find_flag",
    "hirzebruch",
    "is_log_del_pezzo",
    "is_saldp_blowup",
    "is_strongly_asymptotically_ample",
    "validate_config",
]
