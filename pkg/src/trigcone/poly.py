"""
Complex Polynomials
Univariate polynomials with a declared formal degree, plus the conjugate and reciprocal operators
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InputError
from .scalar import (
    GaussRational,
    Scalar,
    abs2,
    is_exact,
    lift_scalar,
    magnitude,
    to_float,
    zero_like,
)


@dataclass(frozen=True, eq=False)
class ComplexPoly:
    """
    Polynomial c_0 + c_1 z + ... + c_n z^n with formal degree n = len(coeffs) - 1.

    The top coefficient may be zero: the degree is declared, never inferred,
    because the reciprocal and the Sylvester dimensions depend on it.
    All coefficients belong to one field, exact (GaussRational) or float (complex).
    """

    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise InputError("A polynomial needs at least one coefficient")
        exact = is_exact(coeffs[0])
        normalized = tuple(lift_scalar(c, exact) for c in coeffs)
        object.__setattr__(self, "coeffs", normalized)

    # Construction

    @classmethod
    def from_coeffs(
        cls,
        values: Iterable,
        degree: Optional[int] = None,
        exact: Optional[bool] = None,
    ) -> "ComplexPoly":
        """
        Build a polynomial from low-index-first coefficients.

        Args:
            values: coefficients c_0..c_k
            degree: formal degree; pads with zeros when larger than k
            exact: force the coefficient field; inferred from the first value when None

        Returns:
            ComplexPoly
        """
        values = list(values)
        if not values:
            raise InputError("A polynomial needs at least one coefficient")
        if exact is None:
            exact = is_exact(values[0])
        coeffs = [lift_scalar(v, exact) for v in values]
        if degree is not None:
            if degree < len(coeffs) - 1:
                raise InputError(
                    f"Formal degree {degree} is below the {len(coeffs)} given coefficients"
                )
            coeffs.extend(zero_like(coeffs[0]) for _ in range(degree + 1 - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, degree: int = 0, exact: bool = True) -> "ComplexPoly":
        return cls.from_coeffs([0] * (degree + 1), exact=exact)

    @classmethod
    def constant(cls, value, degree: int = 0, exact: Optional[bool] = None) -> "ComplexPoly":
        return cls.from_coeffs([value], degree=degree, exact=exact)

    @classmethod
    def monomial(cls, k: int, exact: bool = True) -> "ComplexPoly":
        return cls.from_coeffs([0] * k + [1], exact=exact)

    @classmethod
    def from_roots(cls, roots: Sequence, leading=1, degree: Optional[int] = None) -> "ComplexPoly":
        """Expand leading * prod(z - r) at formal degree max(len(roots), degree)"""
        exact = is_exact(leading) and all(is_exact(r) for r in roots)
        poly = cls.constant(leading, exact=exact)
        for r in roots:
            poly = poly * cls.from_coeffs([-lift_scalar(r, exact), 1], exact=exact)
        if degree is not None:
            poly = poly.with_degree(degree)
        return poly

    # Shape

    @property
    def degree(self) -> int:
        """Formal (declared) degree"""
        return len(self.coeffs) - 1

    @property
    def effective_degree(self) -> int:
        """Largest index with a nonzero coefficient; -1 for the zero polynomial"""
        for k in range(self.degree, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return -1

    @property
    def is_exact(self) -> bool:
        return is_exact(self.coeffs[0])

    @property
    def leading(self) -> Scalar:
        """Coefficient at the formal degree (may be zero)"""
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.effective_degree < 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k]

    def coefficient(self, k: int) -> Scalar:
        """Coefficient at index k, zero outside 0..degree"""
        if 0 <= k <= self.degree:
            return self.coeffs[k]
        return zero_like(self.coeffs[0])

    def with_degree(self, degree: int) -> "ComplexPoly":
        """Re-declare the formal degree, padding or dropping zero top coefficients"""
        if degree < self.effective_degree:
            raise InputError(
                f"Cannot declare degree {degree} for a polynomial of effective degree "
                f"{self.effective_degree}"
            )
        if degree >= self.degree:
            return ComplexPoly.from_coeffs(self.coeffs, degree=degree)
        return ComplexPoly(self.coeffs[: degree + 1])

    def trimmed(self) -> "ComplexPoly":
        """Same polynomial declared at its effective degree (degree 0 for zero)"""
        return self.with_degree(max(self.effective_degree, 0))

    def to_float(self) -> "ComplexPoly":
        if not self.is_exact:
            return self
        return ComplexPoly(tuple(to_float(c) for c in self.coeffs))

    def to_numpy(self) -> np.ndarray:
        """Low-index-first complex128 array"""
        return np.array([to_float(c) for c in self.coeffs], dtype=np.complex128)

    def scale(self) -> float:
        """Largest coefficient modulus"""
        return max(magnitude(c) for c in self.coeffs)

    # Conjugation and reflection

    def conjugate(self) -> "ComplexPoly":
        """Entrywise conjugate coefficients, formal degree preserved"""
        return ComplexPoly(tuple(c.conjugate() for c in self.coeffs))

    def reciprocal(self) -> "ComplexPoly":
        """P*(z) = z^n conj(P)(1/z): reverse and conjugate at the formal degree"""
        return ComplexPoly(tuple(c.conjugate() for c in reversed(self.coeffs)))

    def is_self_inversive(self, tol: float = 0.0) -> bool:
        """True when P* equals P within tol componentwise (tol must be 0 for exact input)"""
        other = self.reciprocal()
        if self.is_exact:
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return all(magnitude(a - b) <= tol for a, b in zip(self.coeffs, other.coeffs))

    # Arithmetic

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        n = max(self.degree, other.degree)
        return ComplexPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n + 1)))

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        n = max(self.degree, other.degree)
        return ComplexPoly(tuple(self.coefficient(k) - other.coefficient(k) for k in range(n + 1)))

    def __neg__(self) -> "ComplexPoly":
        return ComplexPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "ComplexPoly":
        if isinstance(other, ComplexPoly):
            return self.mul(other)
        return ComplexPoly(tuple(c * other for c in self.coeffs))

    def __rmul__(self, other) -> "ComplexPoly":
        return ComplexPoly(tuple(other * c for c in self.coeffs))

    def mul(self, other: "ComplexPoly") -> "ComplexPoly":
        """Convolution; the formal degree is the sum of formal degrees"""
        zero = zero_like(self.coeffs[0])
        out: List[Scalar] = [zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ComplexPoly(tuple(out))

    def shift(self, k: int) -> "ComplexPoly":
        """Multiply by z^k"""
        zero = zero_like(self.coeffs[0])
        return ComplexPoly((zero,) * k + self.coeffs)

    def __call__(self, z) -> Scalar:
        return self.eval(z)

    def eval(self, z) -> Scalar:
        """Horner evaluation"""
        if not self.is_exact:
            z = to_float(z)
        elif not is_exact(z):
            return self.to_float().eval(z)
        acc = zero_like(self.coeffs[0])
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "ComplexPoly":
        """Formal derivative at formal degree n - 1 (zero of degree 0 for constants)"""
        if self.degree == 0:
            return ComplexPoly((zero_like(self.coeffs[0]),))
        return ComplexPoly(tuple(k * self.coeffs[k] for k in range(1, self.degree + 1)))

    def deflate(self, root) -> Tuple["ComplexPoly", Scalar]:
        """Synthetic division by (z - root): quotient at degree n - 1 and remainder"""
        if self.degree == 0:
            return ComplexPoly((zero_like(self.coeffs[0]),)), self.coeffs[0]
        quotient: List[Scalar] = []
        acc = zero_like(self.coeffs[0])
        for c in reversed(self.coeffs[1:]):
            acc = acc * root + c
            quotient.append(acc)
        remainder = acc * root + self.coeffs[0]
        return ComplexPoly(tuple(reversed(quotient))), remainder

    # Equality compares at a common formal degree, zero-extending the shorter one

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        n = max(self.degree, other.degree)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(n + 1))

    def __hash__(self) -> int:
        return hash(self.trimmed().coeffs)

    def close_to(self, other: "ComplexPoly", rel_tol: float = 1e-9) -> bool:
        """Coefficientwise closeness relative to the larger coefficient scale"""
        n = max(self.degree, other.degree)
        scale = max(self.scale(), other.scale(), 1e-300)
        return all(
            magnitude(to_float(self.coefficient(k)) - to_float(other.coefficient(k)))
            <= rel_tol * scale
            for k in range(n + 1)
        )

    def __repr__(self) -> str:
        return f"ComplexPoly(degree={self.degree}, coeffs=[{', '.join(str(c) for c in self.coeffs)}])"


def norm2(poly: ComplexPoly):
    """Sum of squared coefficient moduli"""
    total = abs2(poly.coeffs[0])
    for c in poly.coeffs[1:]:
        total = total + abs2(c)
    return total


def exact_poly(values: Iterable, degree: Optional[int] = None) -> ComplexPoly:
    """Shorthand for an exact polynomial; accepts ints, Fractions, strings, GaussRationals"""
    return ComplexPoly.from_coeffs(
        [v if isinstance(v, GaussRational) else GaussRational.coerce(v) for v in values],
        degree=degree,
        exact=True,
    )
