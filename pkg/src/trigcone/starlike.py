"""
Starlike Polynomials
Starlikeness of P with P(0) = 0 on the unit disk, reduced to membership of a boundary trigonometric polynomial in the cone
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .cone import ConeVerdict, classify
from .config import resolve
from .errors import DomainError
from .poly import ComplexPoly
from .roots import all_roots
from .scalar import GaussRational, Scalar, conj
from .trigpoly import TrigPoly

logger = logging.getLogger(__name__)

KERNEL = (
    "T(t) = Re(z P'(z) conj(P(z))) at z = e^{it}, folded from z^{1-n} P'(z) P*(z); "
    "equals |P|^2 Re(z P'/P) on the circle. The coefficient-conjugate kernel P'(z) conj-P(z)/z "
    "is not used: it is negative near t = 2pi/3 for the starlike P = z + z^2/2."
)


@dataclass(frozen=True)
class StarlikeReport:
    is_starlike: bool
    inner_roots: Tuple[complex, ...]
    trig: TrigPoly
    cone_verdict: ConeVerdict
    kernel: str = field(default=KERNEL)


def boundary_trig(P: ComplexPoly) -> TrigPoly:
    """
    Trigonometric polynomial of Re(z P'(z) conj(P(z))) on |z| = 1.

    L(z) = z^{1-n} P'(z) P*(z) is a Laurent polynomial with exponents 1-n..n-1 and
    coefficients c_k; the result has y_0 = Re c_0 and y_m = c_m + conj(c_{-m}).
    Degree n - 1, padded to 1 when n = 1.

    Raises:
        DomainError: P(0) != 0 or P is constant
    """
    if P.coeffs[0] != 0:
        raise DomainError(f"P(0) must vanish, got {P.coeffs[0]}")
    P = P.trimmed()
    n = P.effective_degree
    if n < 1:
        raise DomainError("P must have degree >= 1")

    L = P.derivative().mul(P.reciprocal())

    def c(exponent: int) -> Scalar:
        return L.coefficient(exponent + n - 1)

    c0 = c(0)
    y: List[Scalar] = [GaussRational(c0.real) if P.is_exact else complex(c0.real)]
    for m in range(1, n):
        y.append(c(m) + conj(c(-m)))
    return TrigPoly.from_values(y, exact=P.is_exact, n=max(n - 1, 1))


def inner_roots(P: ComplexPoly, circle_tol: Optional[float] = None) -> Tuple[complex, ...]:
    """Roots of P(z)/z in the open disk |z| < 1 - circle_tol"""
    circle_tol = resolve(circle_tol, "circle_tol")
    Q = ComplexPoly(P.trimmed().coeffs[1:])
    if Q.effective_degree < 1:
        return ()
    return tuple(z for z in all_roots(Q).locations() if abs(z) < 1.0 - circle_tol)


def is_starlike(
    P: ComplexPoly, tol: Optional[float] = None, circle_tol: Optional[float] = None
) -> StarlikeReport:
    """
    Decide whether P is starlike on the unit disk.

    Starlike iff P(z)/z has no roots in the open disk and boundary_trig(P) is
    nonnegative; Boundary verdicts count as starlike.

    Args:
        P: polynomial with P(0) = 0 and degree >= 1
        tol: cone classification tolerance
        circle_tol: distance from the unit circle at which roots of P/z stop counting as inner

    Returns:
        StarlikeReport
    """
    trig = boundary_trig(P)
    inside = inner_roots(P, circle_tol)
    verdict = classify(trig, tol)
    starlike = not inside and verdict.nonnegative
    logger.info(
        "starlike=%s (%s, %d inner roots) for %s", starlike, verdict.classification.value, len(inside), P
    )
    return StarlikeReport(
        is_starlike=starlike,
        inner_roots=inside,
        trig=trig,
        cone_verdict=verdict,
    )
