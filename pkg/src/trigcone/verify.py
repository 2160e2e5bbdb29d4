"""
Identity Verification Suites
Randomized exact checks of the Jacobian, Dis2 and shadow identities, oracle agreement, form degrees and the worked examples
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .elim import (
    discriminant,
    discriminant_root_oracle,
    dis2,
    hadamard_bound,
    mobius_discriminant,
    resultant,
    resultant_root_oracle,
    sylvester_matrix,
)
from .errors import InputError
from .poly import ComplexPoly
from .quadmap import gram_lift, lemma3_shadow, shadow_residual, verify_lemma1, verify_lemma2
from .scalar import GaussRational, Scalar, magnitude
from .schemas import FailureDocument, Mode, PolyDocument, SuiteDocument, TrigPolyDocument, dump_scalar
from .trigpoly import TrigPoly

logger = logging.getLogger(__name__)

FLOAT_ORACLE_TOL = 1e-8
SHADOW_TOL = 1e-9

# modulus-rational roots, so the planted double root can take the exact shadow path
_PYTHAGOREAN = [
    GaussRational(2),
    GaussRational(-3, 0),
    GaussRational(Fraction(3, 2), 2),
    GaussRational(Fraction(-6, 5), Fraction(8, 5)),
    GaussRational(0, Fraction(5, 4)),
]


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator; the same seed replays the same points"""
    return np.random.Generator(np.random.Philox(seed))


def random_rational(rng: np.random.Generator, bound: int = 9, max_den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, max_den + 1)))
        if value != 0 or not nonzero:
            return value


def random_gauss(rng: np.random.Generator, nonzero: bool = False, **kwargs) -> GaussRational:
    while True:
        z = GaussRational(random_rational(rng, **kwargs), random_rational(rng, **kwargs))
        if z != 0 or not nonzero:
            return z


def random_factor(rng: np.random.Generator, n: int) -> ComplexPoly:
    """Exact X of degree n with x_0 > 0 real and x_n != 0"""
    x0 = abs(random_rational(rng, nonzero=True))
    middle = [random_gauss(rng) for _ in range(n - 1)]
    xn = random_gauss(rng, nonzero=True)
    return ComplexPoly((GaussRational(x0), *middle, xn))


def random_trig(rng: np.random.Generator, n: int) -> TrigPoly:
    """Exact Y of degree n with y_n != 0 (no cone membership implied)"""
    y = [GaussRational(random_rational(rng))]
    y.extend(random_gauss(rng) for _ in range(n - 1))
    y.append(random_gauss(rng, nonzero=True))
    return TrigPoly(tuple(y))


def random_float_poly(rng: np.random.Generator, degree: int) -> ComplexPoly:
    coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    return ComplexPoly(tuple(complex(c) for c in coeffs))


def _poly_witness(P: ComplexPoly) -> Dict:
    return PolyDocument.from_poly(P).model_dump(mode="json")


def _suite(name: str, n: int, samples: int, seed: int, mode: Mode) -> SuiteDocument:
    return SuiteDocument(suite=name, n=n, samples=samples, seed=seed, mode=mode, passed=0)


def _record(result: SuiteDocument, index: int, ok: bool, detail: str, witness=None) -> None:
    if ok:
        result.passed += 1
    else:
        logger.warning("%s: sample %d failed: %s", result.suite, index, detail)
        result.failures.append(FailureDocument(index=index, detail=detail, witness=witness))


def _require_exact(mode: Mode, suite: str) -> None:
    if mode != "exact":
        raise InputError(f"The {suite} suite checks exact identities; run it with --mode exact")


def lemma1_suite(n: int, samples: int, seed: int, mode: Mode = "exact") -> SuiteDocument:
    """|det J(X)| = |2 x_0 V(X)| with a sign ratio that stays fixed for the given n"""
    _require_exact(mode, "lemma1")
    rng = make_rng(seed)
    result = _suite("lemma1", n, samples, seed, mode)
    ratios = set()
    for k in range(samples):
        X = random_factor(rng, n)
        check = verify_lemma1(X)
        if check.degenerate:
            _record(result, k, check.det == 0, f"closed form 0 but det = {check.det}", _poly_witness(X))
            continue
        ratios.add(check.ratio)
        ok = check.holds and len(ratios) == 1
        _record(result, k, ok, f"det / closed form = {check.ratio}", _poly_witness(X))
    result.notes["ratios"] = sorted(str(r) for r in ratios)
    return result


def lemma2_suite(n: int, samples: int, seed: int, mode: Mode = "exact") -> SuiteDocument:
    """Dis2(phi(X)) = |Dis(X)|^2 V(X)^2"""
    _require_exact(mode, "lemma2")
    rng = make_rng(seed)
    result = _suite("lemma2", n, samples, seed, mode)
    for k in range(samples):
        X = random_factor(rng, n)
        check = verify_lemma2(X)
        _record(result, k, check.holds, f"lhs {check.lhs} != rhs {check.rhs}", _poly_witness(X))
    return result


def _planted(rng: np.random.Generator, n: int):
    """X = c (z - r)^2 prod (z - z_j) with x_0 > 0; r drawn from modulus-rational points half the time"""
    if rng.integers(2):
        r = _PYTHAGOREAN[int(rng.integers(len(_PYTHAGOREAN)))]
    else:
        r = random_gauss(rng, nonzero=True, bound=6, max_den=2)
    others = [random_gauss(rng, nonzero=True, bound=6, max_den=2) for _ in range(n - 2)]
    M = ComplexPoly.from_roots([r, r, *others], leading=GaussRational(1))
    X = M.conjugate().coeffs[0] * M  # x_0 = |m_0|^2
    return X, r


def lemma3_suite(n: int, samples: int, seed: int, mode: Mode = "exact") -> SuiteDocument:
    """Q Q* = X X*, q_0 > 0 and V(Q) = 0 for the shadow of a planted double root"""
    if n < 2:
        raise InputError("A planted double root needs n >= 2")
    rng = make_rng(seed)
    result = _suite("lemma3", n, samples, seed, mode)
    exact_paths = 0
    for k in range(samples):
        X, r = _planted(rng, n)
        if mode == "float":
            X, r = X.to_float(), complex(float(r.re), float(r.im))
        Q = lemma3_shadow(X, r)
        if Q.is_exact:
            exact_paths += 1
            ok = gram_lift(Q) == gram_lift(X) and Q.coeffs[0].im == 0 and Q.coeffs[0].re > 0
            ok = ok and mobius_discriminant(Q) == 0
            detail = "exact shadow identity failed"
        else:
            residual = shadow_residual(X, Q)
            q0 = complex(Q.coeffs[0])
            v = magnitude(mobius_discriminant(Q))
            bound = hadamard_bound(sylvester_matrix(Q.reciprocal(), Q).entries)
            ok = residual <= SHADOW_TOL and q0.real > 0 and abs(q0.imag) <= SHADOW_TOL * abs(q0)
            ok = ok and v <= SHADOW_TOL * bound
            detail = f"residual {residual:.3e}, q0 {q0}, |V(Q)| {v:.3e}"
        witness = {"x": _poly_witness(X), "double_root": dump_scalar(r)}
        _record(result, k, ok, detail, witness)
    result.notes["exact_paths"] = exact_paths
    return result


def _relative_gap(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _cayley_exact(p: GaussRational, a: Sequence[GaussRational], q: GaussRational, b: Sequence[GaussRational]) -> GaussRational:
    value = p ** len(b) * q ** len(a)
    for u in a:
        for v in b:
            value = value * (u - v)
    return value


def _discriminant_exact(p: GaussRational, z: Sequence[GaussRational]) -> GaussRational:
    value = p ** (2 * len(z) - 2)
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            value = value * (z[i] - z[j]) * (z[i] - z[j])
    return value


def oracle_suite(n: int, samples: int, seed: int, mode: Mode = "exact") -> SuiteDocument:
    """
    Sylvester determinants against root products.

    Float mode draws Gaussian coefficients of degree 1..n and compares with the numerically
    computed root products; exact mode builds polynomials from chosen rational roots and
    compares with the exact products.
    """
    rng = make_rng(seed)
    result = _suite("oracle", n, samples, seed, mode)
    for k in range(samples):
        dp, dq = int(rng.integers(1, n + 1)), int(rng.integers(1, n + 1))
        if mode == "float":
            P, Q = random_float_poly(rng, dp), random_float_poly(rng, dq)
            res_gap = _relative_gap(resultant(P, Q), resultant_root_oracle(P, Q))
            dis_gap = _relative_gap(discriminant(P), discriminant_root_oracle(P))
            ok = res_gap <= FLOAT_ORACLE_TOL and dis_gap <= FLOAT_ORACLE_TOL
            detail = f"resultant gap {res_gap:.3e}, discriminant gap {dis_gap:.3e}"
            witness = {"p": _poly_witness(P), "q": _poly_witness(Q)}
        else:
            a = [random_gauss(rng) for _ in range(dp)]
            b = [random_gauss(rng) for _ in range(dq)]
            p, q = random_gauss(rng, nonzero=True), random_gauss(rng, nonzero=True)
            P = ComplexPoly.from_roots(a, leading=p)
            Q = ComplexPoly.from_roots(b, leading=q)
            ok = resultant(P, Q) == _cayley_exact(p, a, q, b)
            ok = ok and discriminant(P) == _discriminant_exact(p, a)
            detail = "exact resultant or discriminant differs from the root product"
            witness = {"p": _poly_witness(P), "q": _poly_witness(Q)}
        _record(result, k, ok, detail, witness)
    return result


def forms_suite(n: int, samples: int, seed: int, mode: Mode = "exact") -> SuiteDocument:
    """V(tX) = t^{2n} V(X), Dis2(tY) = t^{4n-2} Dis2(Y) and V(X*) = (-1)^n V(X)"""
    _require_exact(mode, "forms")
    rng = make_rng(seed)
    result = _suite("forms", n, samples, seed, mode)
    sign = -1 if n % 2 else 1
    for k in range(samples):
        X = random_factor(rng, n)
        Y = random_trig(rng, n)
        t = GaussRational(random_rational(rng, nonzero=True))
        v = mobius_discriminant(X)
        d = dis2(Y)
        checks = {
            "V(tX)": mobius_discriminant(t * X) == t ** (2 * n) * v,
            "Dis2(tY)": dis2(Y * t) == t ** (4 * n - 2) * d,
            "V(X*)": mobius_discriminant(X.reciprocal()) == sign * v,
        }
        failed = [name for name, ok in checks.items() if not ok]
        witness = {"x": _poly_witness(X), "y": TrigPolyDocument.from_trig(Y).model_dump(mode="json"), "t": str(t)}
        _record(result, k, not failed, f"failed: {', '.join(failed)}", witness)
    return result


def example1_dis2(y0: Scalar, y1: Scalar) -> Scalar:
    return 4 * (y0 * y0 - y1 * y1.conjugate())


def example1_v(x0: Scalar, x1: Scalar) -> Scalar:
    return x0 * x0 - x1 * x1.conjugate()


def example2_v(x0: Scalar, x1: Scalar, x2: Scalar) -> Scalar:
    c1, c2 = x1.conjugate(), x2.conjugate()
    first = x0 * x0 - x2 * c2
    return first * first - (x0 * x1 - c1 * x2) * (x0 * c1 - c2 * x1)


def example2_dis2(y0: Scalar, y1: Scalar, y2: Scalar) -> Scalar:
    """Term-by-term expansion of Dis2 for n = 2"""
    c1, c2 = y1.conjugate(), y2.conjugate()
    terms = [
        36 * y1 ** 3 * c1 * y0 * c2,
        -320 * y2 * y1 * c1 * y0 ** 2 * c2,
        -4 * y1 ** 3 * c1 ** 3,
        256 * y2 * y0 ** 4 * c2,
        -32 * y2 * y0 ** 3 * c1 ** 2,
        -27 * y1 ** 4 * c2 ** 2,
        -512 * y2 ** 2 * c2 ** 2 * y0 ** 2,
        288 * y2 ** 2 * c2 * y0 * c1 ** 2,
        36 * y2 * y1 * c1 ** 3 * y0,
        4 * y0 ** 2 * y1 ** 2 * c1 ** 2,
        -32 * y0 ** 3 * y1 ** 2 * c2,
        -192 * y2 ** 2 * c2 ** 2 * y1 * c1,
        -6 * y2 * c2 * y1 ** 2 * c1 ** 2,
        288 * y2 * c2 ** 2 * y0 * y1 ** 2,
        256 * y2 ** 3 * c2 ** 3,
        -27 * y2 ** 2 * c1 ** 4,
    ]
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def examples_suite(n: int, samples: int, seed: int, mode: Mode = "exact") -> SuiteDocument:
    """
    Closed forms of Dis2 and V for n = 1 and n = 2 against the generic routines.

    n is ignored; every sample checks all four identities and the largest residual is reported.
    """
    _require_exact(mode, "examples")
    rng = make_rng(seed)
    result = _suite("examples", 2, samples, seed, mode)
    worst = GaussRational(0)
    for k in range(samples):
        Y1 = random_trig(rng, 1)
        Y2 = random_trig(rng, 2)
        X1 = random_factor(rng, 1)
        X2 = ComplexPoly((random_factor(rng, 2).coeffs[0], random_gauss(rng), random_gauss(rng)))
        residuals = {
            "Dis2 n=1": dis2(Y1) - example1_dis2(*Y1.y),
            "V n=1": mobius_discriminant(X1) - example1_v(*X1.coeffs),
            "Dis2 n=2": dis2(Y2) - example2_dis2(*Y2.y),
            "V n=2": mobius_discriminant(X2) - example2_v(*X2.coeffs),
        }
        for value in residuals.values():
            if value.abs2() > worst.abs2():
                worst = value
        failed = {name: str(value) for name, value in residuals.items() if value != 0}
        witness = {
            "y1": TrigPolyDocument.from_trig(Y1).model_dump(mode="json"),
            "y2": TrigPolyDocument.from_trig(Y2).model_dump(mode="json"),
            "x1": _poly_witness(X1),
            "x2": _poly_witness(X2),
            "residuals": failed,
        }
        _record(result, k, not failed, f"nonzero residuals: {sorted(failed)}", witness)
    result.notes["max_residual"] = str(worst)
    return result


SUITES: Dict[str, Callable[..., SuiteDocument]] = {
    "lemma1": lemma1_suite,
    "lemma2": lemma2_suite,
    "lemma3": lemma3_suite,
    "oracle": oracle_suite,
    "forms": forms_suite,
    "examples": examples_suite,
}

DEFAULT_SUITES = ("lemma1", "lemma2", "lemma3", "oracle", "forms")


def run_suites(
    names: Optional[Sequence[str]], n: int, samples: int, seed: int, mode: Mode = "exact"
) -> List[SuiteDocument]:
    """
    Run the named suites in order.

    A mismatch is recorded in the suite document. Errors raised while computing a
    sample propagate with their own category, so a numerical failure is never reported
    as a mismatch.

    Args:
        names: suite names (None for the default set)
        n: degree
        samples: random points per suite
        seed: generator seed
        mode: exact or float

    Returns:
        one SuiteDocument per suite

    Raises:
        InputError: unknown suite name, or a suite that cannot run in this mode or degree
        NumericError: a sample could not be computed
    """
    names = list(names or DEFAULT_SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise InputError(f"Unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    results = []
    for name in names:
        logger.info("Running %s suite: n=%d samples=%d seed=%d mode=%s", name, n, samples, seed, mode)
        results.append(SUITES[name](n, samples, seed, mode))
    return results
