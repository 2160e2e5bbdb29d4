"""
Elimination Theory
Sylvester matrices, resultants, discriminants, the Mobius discriminant V and the boundary form Dis2
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DegreeDropError, DomainError
from .poly import ComplexPoly
from .roots import all_roots
from .scalar import GaussRational, Scalar, check_finite, is_exact, one_like, to_float, zero_like
from .trigpoly import TrigPoly

logger = logging.getLogger(__name__)

Matrix = List[List[Scalar]]


@dataclass(frozen=True)
class SylvesterMatrix:
    """
    Sylvester matrix of P (formal degree n) and Q (formal degree m).

    The first m rows hold shifted copies of P's coefficients (highest power first),
    the last n rows shifted copies of Q's.
    """
    entries: Tuple[Tuple[Scalar, ...], ...]
    degrees: Tuple[int, int]

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> Scalar:
        return determinant([list(row) for row in self.entries])


def _common_field(*polys: ComplexPoly) -> Tuple[ComplexPoly, ...]:
    if all(p.is_exact for p in polys):
        return polys
    return tuple(p.to_float() for p in polys)


def sylvester_matrix(P: ComplexPoly, Q: ComplexPoly) -> SylvesterMatrix:
    """Sylvester matrix at the formal degrees of P and Q"""
    P, Q = _common_field(P, Q)
    n, m = P.degree, Q.degree
    size = n + m
    zero = zero_like(P.coeffs[0])
    p_high = list(reversed(P.coeffs))
    q_high = list(reversed(Q.coeffs))
    rows = []
    for i in range(m):
        row = [zero] * size
        row[i : i + n + 1] = p_high
        rows.append(tuple(row))
    for i in range(n):
        row = [zero] * size
        row[i : i + m + 1] = q_high
        rows.append(tuple(row))
    return SylvesterMatrix(entries=tuple(rows), degrees=(n, m))


def _bareiss(rows: Matrix) -> GaussRational:
    """Fraction-free elimination; every division is exact"""
    M = [list(r) for r in rows]
    n = len(M)
    sign = 1
    prev = GaussRational(1)
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return GaussRational(0)
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]) / prev
            M[i][k] = GaussRational(0)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """
    Determinant of a square matrix.

    Exact entries use Bareiss fraction-free elimination over Gaussian rationals;
    float entries use LU with partial pivoting (numpy).

    Args:
        rows: square matrix as a sequence of rows

    Returns:
        GaussRational for exact input, complex otherwise
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return GaussRational(1)
    if any(len(r) != n for r in rows):
        raise DomainError("Determinant needs a square matrix")
    if all(is_exact(x) for r in rows for x in r):
        coerced = [[GaussRational.coerce(x) for x in r] for r in rows]
        if n == 1:
            return coerced[0][0]
        return _bareiss(coerced)
    A = np.array([[to_float(x) for x in r] for r in rows], dtype=np.complex128)
    return check_finite(complex(np.linalg.det(A)))


def hadamard_bound(rows: Sequence[Sequence[Scalar]]) -> float:
    """Product of the row norms, an upper bound on |det|"""
    return float(np.prod([np.linalg.norm([to_float(v) for v in r]) for r in rows]))


def resultant(P: ComplexPoly, Q: ComplexPoly) -> Scalar:
    """
    Res(P, Q) as the Sylvester determinant at formal degrees.

    Degree-0 operands follow Res(P, c) = c^n and Res(c, Q) = c^m.
    """
    P, Q = _common_field(P, Q)
    if P.degree == 0 and Q.degree == 0:
        return one_like(P.coeffs[0])
    if Q.degree == 0:
        return Q.coeffs[0] ** P.degree
    if P.degree == 0:
        return P.coeffs[0] ** Q.degree
    return sylvester_matrix(P, Q).determinant()


def _require_full_degree(poly: ComplexPoly, name: str) -> None:
    if poly.effective_degree != poly.degree:
        raise DegreeDropError(
            f"{name} has effective degree {poly.effective_degree} below formal degree {poly.degree}",
            degree=poly.degree,
        )


def resultant_root_oracle(P: ComplexPoly, Q: ComplexPoly) -> complex:
    """
    Cayley formula p_n^m q_m^n prod (a_j - b_k) over numerically computed roots.

    Independent of the Sylvester route; used to cross-check resultant().
    """
    P, Q = P.to_float(), Q.to_float()
    _require_full_degree(P, "P")
    _require_full_degree(Q, "Q")
    n, m = P.degree, Q.degree
    value = complex(P.leading) ** m * complex(Q.leading) ** n
    if n == 0 or m == 0:
        return check_finite(value)
    a = np.array(all_roots(P).locations())
    b = np.array(all_roots(Q).locations())
    value *= complex(np.prod(a[:, None] - b[None, :]))
    return check_finite(value)


def discriminant(P: ComplexPoly) -> Scalar:
    """
    Dis(P) = p_m^{2m-2} prod_{i>j} (z_i - z_j)^2, computed as (-1)^{m(m-1)/2} Res(P, P') / p_m.

    Degree 1 gives 1 (empty product).

    Raises:
        DomainError: formal degree 0
        DegreeDropError: p_m == 0 at the formal degree
    """
    m = P.degree
    if m == 0:
        raise DomainError("The discriminant needs formal degree >= 1")
    if P.leading == 0:
        raise DegreeDropError(
            f"Leading coefficient vanishes at formal degree {m}", degree=m
        )
    if m == 1:
        return one_like(P.coeffs[0])
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    value = resultant(P, P.derivative()) / P.leading
    return value if sign > 0 else -value


def dropped_discriminant(P: ComplexPoly) -> Scalar:
    """
    Value of the generic degree-m discriminant form when p_m may vanish.

    Applies Dis(p_0, ..., p_{m-1}, 0) = p_{m-1}^2 Dis(p_0, ..., p_{m-1}) recursively.
    """
    m = P.degree
    if m <= 1:
        return one_like(P.coeffs[0])
    if P.leading != 0:
        return discriminant(P)
    lower = ComplexPoly(P.coeffs[:-1])
    if lower.leading == 0:
        return zero_like(P.coeffs[0])
    return lower.leading * lower.leading * dropped_discriminant(lower)


def discriminant_root_oracle(P: ComplexPoly) -> complex:
    """p_m^{2m-2} prod_{i<j} (z_i - z_j)^2 over numerically computed roots"""
    P = P.to_float()
    _require_full_degree(P, "P")
    m = P.degree
    if m == 0:
        raise DomainError("The discriminant needs formal degree >= 1")
    if m == 1:
        return 1 + 0j
    z = np.array(all_roots(P).locations())
    i, j = np.triu_indices(m, k=1)
    value = complex(P.leading) ** (2 * m - 2) * complex(np.prod((z[i] - z[j]) ** 2))
    return check_finite(value)


def mobius_discriminant(X: ComplexPoly) -> Scalar:
    """
    V(X) = Res(X*, X) at formal degrees (n, n).

    Equals |x_n|^{2n} prod_{j,k} (z_j conj(z_k) - 1) and is real when x_0 is real;
    V(tX) = t^{2n} V(X) and V(X*) = (-1)^n V(X).
    """
    if X.degree < 1:
        raise DomainError("The Mobius discriminant needs formal degree >= 1")
    return resultant(X.reciprocal(), X)


def dis2(Y: TrigPoly) -> Scalar:
    """
    Dis2(Y) = Dis(Y* + z^n Y), the discriminant of the lift at formal degree 2n.

    A form of degree 4n - 2 in the coordinates of Y.

    Raises:
        DegreeDropError: y_n == 0
    """
    if Y.y[-1] == 0:
        raise DegreeDropError(
            f"y_{Y.n} vanishes, so the lift drops below degree {2 * Y.n}", degree=2 * Y.n
        )
    return discriminant(Y.lift())
