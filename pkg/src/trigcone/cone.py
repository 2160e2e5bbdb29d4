"""
Nonnegativity Cone
Membership, boundary certificates and Fejer-Riesz factorization for nonnegative trigonometric polynomials
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import resolve
from .elim import dis2, hadamard_bound, mobius_discriminant, sylvester_matrix
from .errors import (
    ConditioningError,
    ConsistencyError,
    DegenerateInputError,
    NotNonnegativeError,
    PreconditionError,
)
from .poly import ComplexPoly, norm2
from .quadmap import SpectralFactor, phi
from .roots import all_roots, reflect
from .scalar import Scalar, magnitude
from .trigpoly import TrigPoly

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class Classification(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class CriticalSet:
    """Angles where T'(t) = 0 (plus t = 0) and the values of T there"""
    angles: Tuple[float, ...]
    values: Tuple[float, ...]

    def minimum(self) -> Tuple[float, float]:
        """(min value, minimizing angle in [0, 2pi))"""
        k = int(np.argmin(self.values))
        return self.values[k], self.angles[k]


@dataclass(frozen=True)
class ConeVerdict:
    classification: Classification
    min_value: float
    minimizer_t: float
    dis2_value: Optional[Scalar]  # None when y_n = 0
    rank_certificate: bool
    factor: Optional[SpectralFactor] = None

    @property
    def degree_drop(self) -> bool:
        return self.dis2_value is None

    @property
    def nonnegative(self) -> bool:
        return self.classification is not Classification.OUTSIDE


def lift(Y: TrigPoly) -> ComplexPoly:
    """R = Y* + z^n Y, self-inversive of formal degree 2n"""
    return Y.lift()


def eval_T(Y: TrigPoly, t: Union[float, Sequence[float], np.ndarray]):
    """
    T(t) = y_0 + sum_m Re(y_m e^{imt}).

    Args:
        Y: trigonometric polynomial
        t: angle or array of angles

    Returns:
        float for scalar t, ndarray otherwise
    """
    y = Y.to_numpy()
    t_arr = np.asarray(t, dtype=float)
    m = np.arange(1, len(y))
    phases = np.exp(1j * np.multiply.outer(t_arr, m))
    values = y[0].real + np.real(phases @ y[1:])
    if np.ndim(t) == 0:
        return float(values)
    return values


def _derivatives(y: np.ndarray, t: float) -> Tuple[float, float]:
    m = np.arange(1, len(y))
    terms = y[1:] * np.exp(1j * m * t)
    first = float(-np.sum(m * terms.imag))
    second = float(-np.sum(m * m * terms.real))
    return first, second


def _refine(y: np.ndarray, t: float, steps: int = 8) -> float:
    """Newton iteration on T'(t); keeps the best angle seen"""
    best_t = t
    best_d, _ = _derivatives(y, t)
    for _ in range(steps):
        d1, d2 = _derivatives(y, t)
        if d2 == 0 or not math.isfinite(d1 / d2):
            break
        t = t - d1 / d2
        d_new, _ = _derivatives(y, t)
        if abs(d_new) < abs(best_d):
            best_t, best_d = t, d_new
        if abs(d_new) == 0:
            break
    return best_t % TWO_PI


def _critical_polynomial(Y: TrigPoly) -> ComplexPoly:
    """S(z) = z R'(z) - n R(z); dT/dt is proportional to e^{-int} S on the unit circle"""
    R = Y.to_float().lift()
    n = Y.n
    return ComplexPoly(tuple((k - n) * c for k, c in enumerate(R.coeffs)))


def minimize_T(
    Y: TrigPoly,
    critical_circle_tol: Optional[float] = None,
    grid_points: Optional[int] = None,
    consistency_tol: Optional[float] = None,
) -> CriticalSet:
    """
    Critical points of T from the unit-circle roots of S = z R' - n R.

    Every candidate angle is refined by Newton iteration on T'. The minimum over the
    critical set is cross-checked against a uniform grid, which can only overestimate it.

    Raises:
        DegenerateInputError: Y is identically zero
        ConsistencyError: the grid finds a value below the critical minimum
    """
    if Y.is_zero():
        raise DegenerateInputError("T is identically zero")
    critical_circle_tol = resolve(critical_circle_tol, "critical_circle_tol")
    grid_points = resolve(grid_points, "grid_points")
    consistency_tol = resolve(consistency_tol, "consistency_tol")

    y = Y.to_numpy()
    scale = Y.scale()
    S = _critical_polynomial(Y)

    candidates: List[float] = [0.0]
    if not S.is_zero():
        for root in all_roots(S).roots:
            z = root.location
            if z != 0 and abs(abs(z) - 1.0) <= critical_circle_tol:
                candidates.append(_refine(y, math.atan2(z.imag, z.real) % TWO_PI))
    logger.debug("minimize_T: %d candidate angles for n=%d", len(candidates), Y.n)

    angles = np.array(candidates)
    values = eval_T(Y, angles)
    crit = CriticalSet(angles=tuple(float(a) for a in angles), values=tuple(float(v) for v in values))

    grid = TWO_PI * np.arange(grid_points) / grid_points
    grid_min = float(np.min(eval_T(Y, grid)))
    crit_min, _ = crit.minimum()
    if crit_min - grid_min > consistency_tol * scale:
        raise ConsistencyError(
            f"Grid minimum {grid_min} lies below the critical-point minimum {crit_min}"
        )
    return crit


def rank_certificate(X: SpectralFactor, rank_tol: Optional[float] = None) -> bool:
    """x_0 V(X) != 0, judged relative to the Hadamard bound of the Sylvester matrix"""
    rank_tol = resolve(rank_tol, "rank_tol")
    P = X.X
    if P.is_exact:
        return P.coeffs[0] != 0 and mobius_discriminant(P) != 0
    v = magnitude(mobius_discriminant(P))
    bound = hadamard_bound(sylvester_matrix(P.reciprocal(), P).entries)
    return v > rank_tol * max(bound, 1e-300)


def _merge_circle_roots(roots: List[complex], merge_tol: float) -> Tuple[List[complex], List[complex]]:
    """
    Merge nearby simple unit-circle roots into double roots, closest first.

    A polynomial just below the cone has its double circle roots split into two simple
    ones about sqrt(|min T|) apart; each merged pair becomes one root of X.

    Returns:
        (merged representatives, roots left unmerged)
    """
    candidates = sorted(
        (abs(roots[i] - roots[j]), i, j)
        for i in range(len(roots))
        for j in range(i + 1, len(roots))
        if abs(roots[i] - roots[j]) <= merge_tol
    )
    used = [False] * len(roots)
    merged: List[complex] = []
    for gap, i, j in candidates:
        if used[i] or used[j]:
            continue
        used[i] = used[j] = True
        mid = 0.5 * (roots[i] + roots[j])
        merged.append(mid / abs(mid))
        logger.debug("factor: merged circle roots %s and %s (gap %.3e)", roots[i], roots[j], gap)
    return merged, [z for k, z in enumerate(roots) if not used[k]]


def _pair_roots(
    locations: List[complex],
    pair_tol: float,
    circle_tol: float,
    merge_tol: Optional[float] = None,
) -> List[complex]:
    """
    Match roots z, w with z conj(w) = 1 and keep the representative outside the open disk.

    Args:
        locations: nonzero roots of the lift, with multiplicity
        pair_tol: tolerance on |z conj(w) - 1|
        circle_tol: distance from the unit circle treated as on it
        merge_tol: when given, unpaired circle roots closer than this merge into double roots

    Returns:
        one representative per pair, pulled onto the circle when within circle_tol of it
    """
    count = len(locations)
    candidates = []
    for i in range(count):
        for j in range(i + 1, count):
            d = abs(locations[i] * locations[j].conjugate() - 1.0)
            if d <= pair_tol:
                candidates.append((d, i, j))
    candidates.sort()

    matched = [False] * count
    selected: List[complex] = []
    for _, i, j in candidates:
        if matched[i] or matched[j]:
            continue
        matched[i] = matched[j] = True
        a, b = locations[i], locations[j]
        outer, inner = (a, b) if abs(a) >= abs(b) else (b, a)
        rep = 0.5 * (outer + reflect(inner))
        if abs(abs(rep) - 1.0) <= circle_tol:
            rep = rep / abs(rep)
        selected.append(rep)

    leftovers = [locations[k] for k in range(count) if not matched[k]]
    on_circle = [z for z in leftovers if abs(abs(z) - 1.0) <= circle_tol]
    off_circle = [z for z in leftovers if abs(abs(z) - 1.0) > circle_tol]
    if on_circle and merge_tol:
        merged, on_circle = _merge_circle_roots(on_circle, merge_tol)
        selected.extend(merged)
    if on_circle or off_circle:
        if on_circle:
            raise NotNonnegativeError(
                f"Unit-circle root {on_circle[0]} has odd multiplicity; T changes sign there"
            )
        raise ConditioningError(f"Roots {off_circle} have no reflection partner within {pair_tol}")
    return selected


def factor(
    Y: TrigPoly,
    tol: Optional[float] = None,
    pair_tol: Optional[float] = None,
    circle_tol: Optional[float] = None,
    merge_tol: Optional[float] = None,
) -> SpectralFactor:
    """
    Outer Fejer-Riesz factor X of a nonnegative Y, with phi(X) = Y.

    Roots of the lift pair up under z -> 1/conj(z); each pair contributes its member
    with |z| >= 1 and unit-circle roots contribute half their multiplicity. The
    constant c of X = c prod(z - z_k) has |c| fixed by sum |x_j|^2 = 2 y_0 and its
    phase by x_0 > 0.

    Args:
        Y: trigonometric polynomial classified Inside or Boundary
        tol: relative reproduction tolerance for the final check (default factor_tol)
        pair_tol: reflection-pairing tolerance on |z conj(w) - 1|
        circle_tol: distance from the unit circle treated as on it
        merge_tol: distance below which unpaired circle roots merge into one double root;
            None leaves every unpaired circle root as a sign change

    Returns:
        SpectralFactor of formal degree n

    Raises:
        PreconditionError: y_0 <= 0, so Y cannot be nonnegative
        NotNonnegativeError: odd-multiplicity unit-circle root
        ConditioningError: pairing failed or the result does not reproduce Y
    """
    pair_tol = resolve(pair_tol, "pair_tol")
    circle_tol = resolve(circle_tol, "circle_tol")
    tol = resolve(tol, "factor_tol")
    if Y.is_zero():
        raise DegenerateInputError("Cannot factor the zero polynomial")
    Yf = Y.to_float()
    n = Yf.n
    y0 = Yf.y[0].real
    if y0 <= 0:
        raise PreconditionError(f"y_0 = {y0} <= 0: not a nonnegative trigonometric polynomial")

    root_set = all_roots(Yf.lift())
    zeros = sum(r.multiplicity for r in root_set.roots if r.location == 0)
    if zeros != root_set.at_infinity:
        raise ConditioningError(
            f"{zeros} roots at 0 against {root_set.at_infinity} at infinity in a self-inversive lift"
        )
    finite = [z for z in root_set.locations() if z != 0]
    selected = _pair_roots(finite, pair_tol, circle_tol, merge_tol)
    logger.debug("factor: %d pairs, %d (0, inf) pairs", len(selected), zeros)

    M = ComplexPoly.from_roots(selected, leading=1.0 + 0j, degree=n)
    m0 = complex(M.coeffs[0])
    modulus = math.sqrt(2.0 * y0 / float(norm2(M)))
    c = modulus * m0.conjugate() / abs(m0)
    coeffs = [c * complex(v) for v in M.coeffs]
    coeffs[0] = complex(abs(coeffs[0]), 0.0)
    X = SpectralFactor(ComplexPoly(tuple(coeffs)))

    if not phi(X).close_to(Yf, tol):
        raise ConditioningError("Recovered factor does not reproduce the coefficients of Y")
    return X


def _factor_boundary(Y: TrigPoly, min_value: float, tol: float, scale: float) -> SpectralFactor:
    """
    Factor a Y inside the boundary band.

    Below zero a double circle root of the lift splits into two simple roots about
    sqrt(|min T| / scale) apart. Those merge back into one root of X. phi(X) then differs
    from Y by about |min T| plus the second-order drift of the merged root.
    """
    band = max(abs(min_value), tol * scale) / scale
    merge_tol = 8.0 * math.sqrt(band)
    repro = resolve(None, "factor_tol")
    if min_value < 0:
        repro += 4.0 * abs(min_value) / scale + merge_tol ** 2
    return factor(Y, tol=repro, merge_tol=merge_tol)


def classify(
    Y: TrigPoly,
    tol: Optional[float] = None,
    dis2_tol: Optional[float] = None,
) -> ConeVerdict:
    """
    Classify Y as Inside, Boundary or Outside the cone of nonnegative polynomials.

    Inside when min T > tol * scale(Y), Outside when min T < -tol * scale(Y), Boundary
    otherwise. Dis2 is attached whenever y_n != 0; boundary points lie on Dis2 = 0, but
    a vanishing Dis2 alone never decides membership.

    Args:
        Y: trigonometric polynomial
        tol: relative boundary band (default classify_tol)
        dis2_tol: containment threshold for Dis2 on Boundary verdicts, relative to scale^{4n-2}

    Returns:
        ConeVerdict
    """
    tol = resolve(tol, "classify_tol")
    dis2_tol = resolve(dis2_tol, "dis2_tol")
    scale = Y.scale()

    min_value, minimizer = minimize_T(Y).minimum()
    if min_value > tol * scale:
        classification = Classification.INSIDE
    elif min_value < -tol * scale:
        classification = Classification.OUTSIDE
    else:
        classification = Classification.BOUNDARY

    dis2_value = None if Y.y[-1] == 0 else dis2(Y)

    X = None
    rank_full = False
    if classification is Classification.BOUNDARY:
        X = _factor_boundary(Y, min_value, tol, scale)
    elif classification is Classification.INSIDE:
        X = factor(Y)
    if X is not None:
        rank_full = rank_certificate(X)

    if classification is Classification.BOUNDARY and dis2_value is not None:
        relative = magnitude(dis2_value) / scale ** (4 * Y.n - 2)
        if relative > dis2_tol:
            logger.warning(
                "Boundary verdict with |Dis2| / scale^(4n-2) = %.3e above %.1e", relative, dis2_tol
            )
    if classification is Classification.INSIDE and not rank_full:
        logger.warning("Inside verdict without a full-rank certificate (min T = %.3e)", min_value)

    return ConeVerdict(
        classification=classification,
        min_value=float(min_value),
        minimizer_t=float(minimizer),
        dis2_value=dis2_value,
        rank_certificate=rank_full,
        factor=X,
    )
