"""
Certification of nonnegative trigonometric polynomials.
"""

from .cone import Classification, ConeVerdict, CriticalSet, classify, eval_T, factor, lift, minimize_T
from .elim import discriminant, dis2, mobius_discriminant, resultant, sylvester_matrix
from .errors import InputError, NumericError, TrigConeError, VerificationError
from .poly import ComplexPoly
from .quadmap import SpectralFactor, phi
from .roots import Root, RootSet, all_roots, reflect
from .scalar import GaussRational
from .starlike import StarlikeReport, boundary_trig, is_starlike
from .trigpoly import TrigPoly

__all__ = [
    "Classification",
    "ComplexPoly",
    "ConeVerdict",
    "CriticalSet",
    "GaussRational",
    "InputError",
    "NumericError",
    "Root",
    "RootSet",
    "SpectralFactor",
    "StarlikeReport",
    "TrigConeError",
    "TrigPoly",
    "VerificationError",
    "all_roots",
    "boundary_trig",
    "classify",
    "discriminant",
    "dis2",
    "eval_T",
    "factor",
    "is_starlike",
    "lift",
    "minimize_T",
    "mobius_discriminant",
    "phi",
    "reflect",
    "resultant",
    "sylvester_matrix",
]
