"""
Quadratic Map
The map Phi from spectral factors X to trigonometric coefficients y, its Jacobian rows,
and checks of the determinant, discriminant and shadow identities
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import numpy as np

from .config import resolve
from .elim import determinant, discriminant, dis2, mobius_discriminant
from .errors import DomainError, InputError, PreconditionError
from .poly import ComplexPoly
from .roots import all_roots, reflect
from .scalar import GaussRational, Scalar, abs2, is_exact, magnitude, rational_sqrt, to_float, zero_like
from .trigpoly import TrigPoly

logger = logging.getLogger(__name__)

__all__ = [
    "SpectralFactor",
    "TrigPoly",
    "Lemma1Check",
    "Lemma2Check",
    "phi",
    "gram_lift",
    "jacobian_rows",
    "jacobian_det",
    "jacobian_rank",
    "verify_lemma1",
    "verify_lemma2",
    "lemma3_shadow",
]


@dataclass(frozen=True)
class SpectralFactor:
    """
    Algebraic polynomial X with real positive x_0.

    Canonical (outer) factors produced by cone.factor also have no roots in the open unit disk.
    """

    X: ComplexPoly

    def __post_init__(self):
        x0 = self.X.coeffs[0]
        if self.X.is_exact:
            if x0.imag != 0 or x0.real <= 0:
                raise InputError(f"x_0 must be real and positive, got {x0}")
        else:
            x0 = complex(x0)
            if x0.real <= 0 or abs(x0.imag) > 1e-12 * abs(x0):
                raise InputError(f"x_0 must be real and positive, got {x0}")

    @property
    def n(self) -> int:
        return self.X.degree

    @property
    def x0(self):
        return self.X.coeffs[0]

    def is_outer(self, tol: float = 1e-9) -> bool:
        """No roots in the open unit disk, up to tol"""
        if self.X.effective_degree < 1:
            return True
        return all(abs(r.location) >= 1.0 - tol for r in all_roots(self.X).roots)


FactorLike = Union[SpectralFactor, ComplexPoly]


def _poly(X: FactorLike) -> ComplexPoly:
    return X.X if isinstance(X, SpectralFactor) else X


def phi(X: FactorLike) -> TrigPoly:
    """
    Trigonometric coefficients of X.

    y_0 = (1/2) sum |x_j|^2 and y_m = sum_{k} conj(x_k) x_{k+m}, the normalization under
    which X X* = Y* + z^n Y holds identically (so T(t) = |X(e^{it})|^2 / 2).
    """
    P = _poly(X)
    x = P.coeffs
    n = P.degree
    half = Fraction(1, 2) if P.is_exact else 0.5
    total = abs2(x[0])
    for c in x[1:]:
        total = total + abs2(c)
    y: List[Scalar] = [GaussRational(total * half) if P.is_exact else complex(total * half)]
    for m in range(1, n + 1):
        acc = zero_like(x[0])
        for k in range(n - m + 1):
            acc = acc + x[k].conjugate() * x[k + m]
        y.append(acc)
    return TrigPoly(tuple(y))


def gram_lift(X: FactorLike) -> ComplexPoly:
    """X X*, the degree-2n product; equals phi(X).lift()"""
    P = _poly(X)
    return P * P.reciprocal()


def jacobian_rows(X: FactorLike) -> List[List[Scalar]]:
    """
    Coefficient rows of the partial derivatives of R = X X*.

    Order: R_0 = X* + z^n X, then R_1, R_{-1}, ..., R_n, R_{-n} with
    R_j = z^j X* and R_{-j} = z^{n-j} X; each row has length 2n + 1 (basis 1, z, ..., z^{2n}).
    """
    P = _poly(X)
    n = P.degree
    star = P.reciprocal()

    def row(poly: ComplexPoly) -> List[Scalar]:
        return [poly.coefficient(k) for k in range(2 * n + 1)]

    rows = [row(star + P.shift(n))]
    for j in range(1, n + 1):
        rows.append(row(star.shift(j)))
        rows.append(row(P.shift(n - j)))
    return rows


def jacobian_det(X: FactorLike) -> Scalar:
    """Determinant of jacobian_rows(X); exact for exact X"""
    return determinant(jacobian_rows(X))


def jacobian_rank(X: FactorLike, rel_tol: Optional[float] = None) -> int:
    """Numerical rank of the Jacobian rows against rel_tol (default rank_tol); 2n + 1 exactly when x_0 V(X) != 0"""
    rel_tol = resolve(rel_tol, "rank_tol")
    rows = jacobian_rows(_poly(X).to_float())
    A = np.array([[to_float(v) for v in r] for r in rows], dtype=np.complex128)
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


@dataclass(frozen=True)
class Lemma1Check:
    det: Scalar
    closed_form: Scalar
    ratio: Optional[Scalar]  # None when closed_form vanishes

    @property
    def degenerate(self) -> bool:
        return self.ratio is None

    @property
    def holds(self) -> bool:
        if self.ratio is None:
            return self.det == 0
        return self.ratio == 1 or self.ratio == -1


@dataclass(frozen=True)
class Lemma2Check:
    lhs: Scalar
    rhs: Scalar

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify_lemma1(X: FactorLike) -> Lemma1Check:
    """
    Compare the Jacobian determinant with 2 x_0 V(X).

    Args:
        X: exact factor

    Returns:
        Lemma1Check with det, closed_form and det/closed_form (None when closed_form is 0)
    """
    P = _poly(X)
    if not P.is_exact:
        raise InputError("The Jacobian determinant identity is checked on exact coefficients only")
    det = jacobian_det(P)
    closed_form = 2 * P.coeffs[0] * mobius_discriminant(P)
    if closed_form == 0:
        logger.debug("Closed form vanishes (x0 V = 0); det = %s", det)
        return Lemma1Check(det=det, closed_form=closed_form, ratio=None)
    return Lemma1Check(det=det, closed_form=closed_form, ratio=det / closed_form)


def verify_lemma2(X: FactorLike) -> Lemma2Check:
    """
    Compare Dis2(phi(X)) with |Dis(X)|^2 V(X)^2.

    Raises:
        DegreeDropError: y_n = conj(x_0) x_n vanishes
    """
    P = _poly(X)
    if not P.is_exact:
        raise InputError("The Dis2 factorization identity is checked on exact coefficients only")
    lhs = dis2(phi(P))
    d = discriminant(P)
    v = mobius_discriminant(P)
    rhs = GaussRational(abs2(d)) * v * v
    return Lemma2Check(lhs=lhs, rhs=rhs)


def _shadow_exact(P: ComplexPoly, root: GaussRational) -> Optional[ComplexPoly]:
    lam = rational_sqrt(root.abs2())
    if lam is None:
        return None
    quotient, rem = P.deflate(root)
    if rem != 0 or quotient(root) != 0:
        raise PreconditionError(f"{root} is not a multiple root of X")
    mirror = root / root.abs2()  # 1/conj(root)
    linear = ComplexPoly((-mirror, GaussRational(1)))
    return GaussRational(lam) * (quotient * linear)


def lemma3_shadow(
    X: FactorLike,
    double_root: Union[complex, GaussRational],
    cluster_tol: Optional[float] = None,
) -> ComplexPoly:
    """
    Move one copy of a multiple root of X to its unit-circle reflection.

    Q = lambda x_n (z - z_n)(z - 1/conj z_n) prod (z - z_j) with lambda = |z_n| satisfies
    Q Q* = X X*, q_0 = x_0 / |z_n| > 0 and V(Q) = 0.

    Exact input with a rational double root of rational modulus gives an exact Q; otherwise
    Q is rebuilt from the full root multiset of X in floats.

    Raises:
        DomainError: double_root == 0
        PreconditionError: double_root is not a root of multiplicity >= 2
    """
    P = _poly(X)
    SpectralFactor(P)
    if double_root == 0:
        raise DomainError("The double root must be nonzero")

    if P.is_exact and is_exact(double_root):
        Q = _shadow_exact(P, GaussRational.coerce(double_root))
        if Q is not None:
            return Q

    cluster_tol = resolve(cluster_tol, "cluster_tol")
    target = to_float(double_root)
    Pf = P.to_float()
    root_set = all_roots(Pf)
    nearest = root_set.nearest(target)
    tol = 1e3 * cluster_tol * max(1.0, abs(target))
    if nearest.multiplicity < 2 or abs(nearest.location - target) > tol:
        raise PreconditionError(
            f"{target} is not detected as a root of multiplicity >= 2 "
            f"(nearest {nearest.location} with multiplicity {nearest.multiplicity})"
        )

    z_n = nearest.location
    locations = root_set.locations()
    locations.remove(z_n)
    locations.append(reflect(z_n))
    x_top = complex(Pf.coeffs[Pf.effective_degree])
    Q = ComplexPoly.from_roots(locations, leading=abs(z_n) * x_top, degree=P.degree)
    logger.debug("Shadow of %s: reflected %s to %s", P, z_n, reflect(z_n))
    return Q


def shadow_residual(X: FactorLike, Q: ComplexPoly) -> float:
    """max |coeff(Q Q* - X X*)| relative to the scale of X X*"""
    P = _poly(X)
    target = gram_lift(P.to_float())
    got = gram_lift(Q.to_float())
    scale = max(target.scale(), 1e-300)
    return max(magnitude(a - b) for a, b in zip(got.coeffs, target.coeffs)) / scale
