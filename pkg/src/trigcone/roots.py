"""
Polynomial Root Finder
Aberth-Ehrlich simultaneous iteration with Newton polishing and multiplicity clustering
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .config import resolve
from .errors import ConvergenceError, DegenerateInputError, DomainError
from .poly import ComplexPoly
from .scalar import check_finite

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
# fixed angular offset of the starting circle; breaks the conjugate symmetry of real inputs
_START_PHASE = 0.4


@dataclass(frozen=True)
class Root:
    """A root location and the number of coincident approximations merged into it"""
    location: complex
    multiplicity: int = 1


@dataclass(frozen=True)
class RootSet:
    """Roots of one polynomial, clustered by multiplicity"""
    roots: Tuple[Root, ...]
    residual_bound: float = 0.0
    at_infinity: int = 0  # stripped vanishing top coefficients
    iterations: int = 0

    @property
    def degree(self) -> int:
        """Sum of multiplicities (the effective degree of the source polynomial)"""
        return sum(r.multiplicity for r in self.roots)

    def locations(self) -> List[complex]:
        """Every root repeated by its multiplicity"""
        out: List[complex] = []
        for r in self.roots:
            out.extend([r.location] * r.multiplicity)
        return out

    def nearest(self, z: complex) -> Root:
        return min(self.roots, key=lambda r: abs(r.location - z))


def reflect(z) -> complex:
    """
    Reflection in the unit circle, z -> 1/conj(z).

    Args:
        z: nonzero complex number

    Returns:
        The reflected point; unit-modulus inputs are fixed

    Raises:
        DomainError: z == 0
    """
    z = complex(z)
    if z == 0:
        raise DomainError("Cannot reflect 0 in the unit circle")
    return 1.0 / z.conjugate()


def _horner(coeffs_high: np.ndarray, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Value and derivative at every point of z; coefficients highest power first"""
    p = np.full(z.shape, coeffs_high[0], dtype=np.complex128)
    dp = np.zeros(z.shape, dtype=np.complex128)
    for c in coeffs_high[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _rounding_bound(abs_coeffs_high: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Horner rounding-error estimate: sum |c_k| |z|^k scaled by the unit roundoff"""
    r = np.abs(z)
    acc = np.full(z.shape, abs_coeffs_high[0])
    for c in abs_coeffs_high[1:]:
        acc = acc * r + c
    return 4.0 * len(abs_coeffs_high) * _EPS * acc


def _start_points(coeffs_high: np.ndarray) -> np.ndarray:
    """Points on a circle whose radius is the Fujiwara bound of the root moduli"""
    n = len(coeffs_high) - 1
    lead = abs(coeffs_high[0])
    ratios = [
        (abs(coeffs_high[k]) / lead) ** (1.0 / k) for k in range(1, n + 1) if coeffs_high[k] != 0
    ]
    radius = 2.0 * max(ratios) if ratios else 1.0
    angles = 2.0 * math.pi * np.arange(n) / n + _START_PHASE
    return radius * np.exp(1j * angles)


def _aberth(coeffs_high: np.ndarray, max_iters: int, tol: float) -> Tuple[np.ndarray, int]:
    n = len(coeffs_high) - 1
    z = _start_points(coeffs_high)
    abs_coeffs = np.abs(coeffs_high)
    active = np.ones(n, dtype=bool)

    for iteration in range(1, max_iters + 1):
        p, dp = _horner(coeffs_high, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)

        with np.errstate(divide="ignore", invalid="ignore"):
            w = p / (dp - p * s)
        w = np.where(np.isfinite(w), w, 0.0)
        w = np.where(p == 0, 0.0, w)
        w = np.where(active, w, 0.0)
        z = z - w

        scale = max(1.0, float(np.max(np.abs(z))))
        small_step = np.abs(w) < tol * scale
        p_new, _ = _horner(coeffs_high, z)
        at_noise = np.abs(p_new) <= _rounding_bound(abs_coeffs, z)
        active = active & ~(small_step | at_noise)
        if not active.any():
            return z, iteration

    raise ConvergenceError(
        f"Aberth iteration did not converge in {max_iters} iterations",
        best_iterate=z.copy(),
        iterations=max_iters,
    )


def _cluster(z: np.ndarray, cluster_tol: float, coeffs_high: np.ndarray) -> List[List[int]]:
    """
    Single-linkage clusters of root approximations.

    Two approximations merge when they are closer than cluster_tol * scale, or when they are
    within 1e3 times that distance and their midpoint is itself a root at rounding level.
    """
    abs_coeffs = np.abs(coeffs_high)
    n = len(z)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    scale = max(1.0, float(np.max(np.abs(z)))) if n else 1.0
    for i in range(n):
        for j in range(i + 1, n):
            radius = cluster_tol * max(scale, abs(z[i]), abs(z[j]))
            gap = abs(z[i] - z[j])
            if gap >= 1e3 * radius:
                continue
            if gap >= radius:
                mid = np.array([0.5 * (z[i] + z[j])])
                value, _ = _horner(coeffs_high, mid)
                if abs(value[0]) > _rounding_bound(abs_coeffs, mid)[0]:
                    continue
            parent[find(j)] = find(i)

    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [sorted(g) for g in sorted(groups.values(), key=lambda g: min(g))]


def _derivative_high(coeffs_high: np.ndarray) -> np.ndarray:
    n = len(coeffs_high) - 1
    return coeffs_high[:-1] * np.arange(n, 0, -1)


def _polish(coeffs_high: np.ndarray, z: complex, multiplicity: int, steps: int) -> complex:
    """Newton steps on the (m-1)-th derivative, which has z as a simple root"""
    c = coeffs_high
    for _ in range(multiplicity - 1):
        c = _derivative_high(c)
    if len(c) < 2:
        return z
    for _ in range(steps):
        p, dp = _horner(c, np.array([z]))
        if p[0] == 0 or dp[0] == 0:
            break
        candidate = z - p[0] / dp[0]
        p_next, _ = _horner(c, np.array([candidate]))
        if not np.isfinite(candidate) or abs(p_next[0]) >= abs(p[0]):
            break
        z = complex(candidate)
    return z


def all_roots(
    poly: ComplexPoly,
    cluster_tol: Optional[float] = None,
    max_iters: Optional[int] = None,
    tol: Optional[float] = None,
    polish_steps: Optional[int] = None,
) -> RootSet:
    """
    All roots of a polynomial, with multiplicities.

    Vanishing top coefficients are stripped and counted as roots at infinity;
    vanishing low coefficients become an exact root at 0. The rest go through
    Aberth-Ehrlich iteration from a fixed starting circle, so identical input
    gives identical output.

    Args:
        poly: polynomial (exact input is rounded to floats)
        cluster_tol: relative distance under which approximations merge into one multiple root
        max_iters: iteration cap
        tol: relative correction size that counts as converged
        polish_steps: Newton steps applied to each cluster representative

    Returns:
        RootSet

    Raises:
        DegenerateInputError: zero polynomial
        ConvergenceError: no convergence within max_iters
    """
    cluster_tol = resolve(cluster_tol, "cluster_tol")
    max_iters = resolve(max_iters, "max_iters")
    tol = resolve(tol, "convergence_tol")
    polish_steps = resolve(polish_steps, "polish_steps")

    coeffs = poly.to_numpy()
    if not np.all(np.isfinite(coeffs)):
        raise DegenerateInputError("Polynomial has non-finite coefficients")
    nonzero = np.nonzero(coeffs)[0]
    if len(nonzero) == 0:
        raise DegenerateInputError("The zero polynomial has no root set")

    top, low = int(nonzero[-1]), int(nonzero[0])
    at_infinity = poly.degree - top
    core = coeffs[low : top + 1]
    coeffs_high = core[::-1].copy()
    n = len(coeffs_high) - 1

    roots: List[Root] = []
    iterations = 0
    if low > 0:
        roots.append(Root(0j, low))

    if n == 1:
        roots.append(Root(check_finite(-coeffs_high[1] / coeffs_high[0]), 1))
    elif n > 1:
        z, iterations = _aberth(coeffs_high, max_iters, tol)
        logger.debug("Aberth converged in %d iterations for degree %d", iterations, n)
        for group in _cluster(z, cluster_tol, coeffs_high):
            m = len(group)
            center = complex(np.mean(z[group]))
            if m > 1:
                logger.debug("Merged %d approximations near %s", m, center)
            roots.append(Root(check_finite(_polish(coeffs_high, center, m, polish_steps)), m))

    residual = 0.0
    if roots:
        scale = float(np.max(np.abs(coeffs)))
        points = np.array([r.location for r in roots])
        values, _ = _horner(coeffs[::-1], points)
        residual = float(np.max(np.abs(values))) / scale

    return RootSet(
        roots=tuple(roots),
        residual_bound=residual,
        at_infinity=at_infinity,
        iterations=iterations,
    )
