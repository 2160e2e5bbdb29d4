"""
Trigonometric Polynomials
Coefficient vectors y = (y_0, ..., y_n) of T(t) = Re sum y_k e^{ikt}, and their self-inversive lift
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InputError
from .poly import ComplexPoly
from .scalar import GaussRational, Scalar, is_exact, lift_scalar, magnitude, to_float


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """
    A point y of R+ x C^n: y_0 real, y_1..y_n complex.

    Real cosine/sine coefficients are a_k = Re y_k and b_k = -Im y_k.
    """

    y: Tuple[Scalar, ...]

    def __post_init__(self):
        y = tuple(self.y)
        if len(y) < 2:
            raise InputError("A trigonometric polynomial needs y_0 and at least y_1 (n >= 1)")
        exact = is_exact(y[0])
        y = tuple(lift_scalar(v, exact) for v in y)
        if y[0].imag != 0:
            raise InputError(f"y_0 must be real, got {y[0]}")
        object.__setattr__(self, "y", y)

    @classmethod
    def from_values(cls, values: Iterable, exact: Optional[bool] = None, n: Optional[int] = None) -> "TrigPoly":
        """Build from y_0..y_k, padding with zeros up to degree n"""
        values = list(values)
        if not values:
            raise InputError("Empty coefficient vector")
        if exact is None:
            exact = is_exact(values[0])
        y = [lift_scalar(v, exact) for v in values]
        if n is not None:
            if n < len(y) - 1:
                raise InputError(f"Declared degree {n} is below the {len(y)} given coefficients")
            y.extend(lift_scalar(0, exact) for _ in range(n + 1 - len(y)))
        return cls(tuple(y))

    @classmethod
    def from_real(cls, a: Sequence, b: Sequence, exact: Optional[bool] = None) -> "TrigPoly":
        """
        Build from the real form sum a_k cos kt + b_k sin kt.

        Args:
            a: cosine coefficients a_0..a_n
            b: sine coefficients b_1..b_n, or b_0..b_n with b_0 = 0

        Returns:
            TrigPoly with y_k = a_k - i b_k
        """
        a, b = list(a), list(b)
        if len(b) == len(a):
            if b[0] != 0:
                raise InputError("b_0 must vanish")
            b = b[1:]
        if len(b) != len(a) - 1:
            raise InputError("Need n+1 cosine and n sine coefficients")
        if exact is None:
            exact = is_exact(a[0])
        y = [lift_scalar(a[0], exact)]
        for ak, bk in zip(a[1:], b):
            if exact:
                y.append(GaussRational(GaussRational.coerce(ak).re, -GaussRational.coerce(bk).re))
            else:
                y.append(complex(float(ak), -float(bk)))
        return cls(tuple(y))

    @property
    def n(self) -> int:
        return len(self.y) - 1

    @property
    def is_exact(self) -> bool:
        return is_exact(self.y[0])

    def __getitem__(self, k: int) -> Scalar:
        return self.y[k]

    def __len__(self) -> int:
        return len(self.y)

    def real_coefficients(self) -> Tuple[List, List]:
        """(a_0..a_n, b_1..b_n) of the cosine/sine form"""
        a = [v.real for v in self.y]
        b = [-v.imag for v in self.y[1:]]
        return a, b

    def scale(self) -> float:
        """Largest coefficient modulus"""
        return max(magnitude(v) for v in self.y)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.y)

    def to_float(self) -> "TrigPoly":
        if not self.is_exact:
            return self
        return TrigPoly(tuple(to_float(v) for v in self.y))

    def to_numpy(self) -> np.ndarray:
        return np.array([to_float(v) for v in self.y], dtype=np.complex128)

    def lift(self) -> ComplexPoly:
        """
        R = Y* + z^n Y at formal degree 2n.

        Index k < n carries conj(y_{n-k}), index n carries 2 y_0, index n+m carries y_m.
        """
        n = self.n
        two = 2 if self.is_exact else 2.0
        coeffs = [self.y[n - k].conjugate() for k in range(n)]
        coeffs.append(two * self.y[0])
        coeffs.extend(self.y[1:])
        return ComplexPoly(tuple(coeffs))

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return NotImplemented
        n = max(self.n, other.n)
        a = TrigPoly.from_values(self.y, n=n)
        b = TrigPoly.from_values(other.y, n=n, exact=self.is_exact)
        return TrigPoly(tuple(u + v for u, v in zip(a.y, b.y)))

    def __mul__(self, t) -> "TrigPoly":
        if getattr(t, "imag", 0) != 0:
            raise InputError("TrigPoly scales by real factors only")
        t = GaussRational.coerce(t) if self.is_exact else to_float(t).real
        return TrigPoly(tuple(v * t for v in self.y))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        n = max(self.n, other.n)
        a = self.y + (0,) * (n - self.n)
        b = other.y + (0,) * (n - other.n)
        return all(u == v for u, v in zip(a, b))

    def __hash__(self) -> int:
        y = list(self.y)
        while len(y) > 2 and y[-1] == 0:
            y.pop()
        return hash(tuple(y))

    def close_to(self, other: "TrigPoly", rel_tol: float = 1e-9) -> bool:
        n = max(self.n, other.n)
        a = TrigPoly.from_values(self.y, n=n).to_numpy()
        b = TrigPoly.from_values(other.y, n=n).to_numpy()
        scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), 1e-300)
        return bool(np.max(np.abs(a - b)) <= rel_tol * scale)

    def __repr__(self) -> str:
        return f"TrigPoly(n={self.n}, y=[{', '.join(str(v) for v in self.y)}])"
