"""
JSON Documents
Pydantic models for polynomial, trigonometric polynomial, verdict and report documents
"""

from typing import Any, Dict, List, Literal, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .errors import InputError
from .poly import ComplexPoly
from .scalar import GaussRational, Scalar, is_exact, lift_scalar, to_float
from .trigpoly import TrigPoly

Mode = Literal["exact", "float"]
ScalarJSON = Union[str, int, float, Dict[str, Union[str, int, float]]]

M = TypeVar("M", bound=BaseModel)


def parse_scalar(value: Any, exact: bool) -> Scalar:
    """
    Read one JSON scalar into the coefficient field of the run.

    Accepts integers, rational or decimal strings ("3/4", "0.6"), JSON numbers (float mode
    only) and {"re": ..., "im": ...} objects whose parts follow the same rules.

    Raises:
        InputError: malformed value, or a JSON float in exact mode
    """
    if isinstance(value, dict):
        unknown = set(value) - {"re", "im"}
        if unknown:
            raise InputError(f"Unexpected keys {sorted(unknown)} in complex scalar")
        re = parse_scalar(value.get("re", 0), exact)
        im = parse_scalar(value.get("im", 0), exact)
        if exact:
            return GaussRational(re.re, im.re)
        return complex(re.real, im.real)
    if isinstance(value, bool):
        raise InputError(f"Booleans are not scalars: {value!r}")
    if isinstance(value, float):
        if exact:
            raise InputError(f"JSON float {value!r} rejected in exact mode; quote it as a string")
        return to_float(value)
    if isinstance(value, int):
        return lift_scalar(value, exact)
    if isinstance(value, str):
        parsed = GaussRational.parse(value)
        return parsed if exact else to_float(parsed)
    raise InputError(f"Cannot read {type(value).__name__} value {value!r} as a scalar")


def dump_scalar(value: Scalar) -> ScalarJSON:
    """Exact values as strings, floats as numbers; complex values as {"re", "im"}"""
    if is_exact(value):
        value = GaussRational.coerce(value)
        if value.im == 0:
            return str(value.re)
        return value.to_json()
    z = complex(value)
    if z.imag == 0:
        return z.real
    return {"re": z.real, "im": z.imag}


def load(model: Type[M], data: Any) -> M:
    """model.model_validate, with validation failures raised as InputError"""
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise InputError(f"Invalid {model.__name__}: {exc}") from exc


class PolyDocument(BaseModel):
    """{"degree": n, "coeffs": [c_0, ..., c_k]}; coefficients low-order first"""

    degree: Optional[int] = Field(None, ge=0)
    coeffs: List[Any] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_degree(self) -> "PolyDocument":
        if self.degree is not None and self.degree < len(self.coeffs) - 1:
            raise ValueError(f"degree {self.degree} is below the {len(self.coeffs)} given coefficients")
        return self

    def to_poly(self, exact: bool) -> ComplexPoly:
        values = [parse_scalar(c, exact) for c in self.coeffs]
        return ComplexPoly.from_coeffs(values, degree=self.degree, exact=exact)

    @classmethod
    def from_poly(cls, poly: ComplexPoly) -> "PolyDocument":
        return cls(degree=poly.degree, coeffs=[dump_scalar(c) for c in poly.coeffs])


class TrigPolyDocument(BaseModel):
    """{"y": [y_0, ..., y_n], "n": n} or the real form {"a": [a_0..a_n], "b": [b_1..b_n]}"""

    y: Optional[List[Any]] = None
    n: Optional[int] = Field(None, ge=1)
    a: Optional[List[Any]] = None
    b: Optional[List[Any]] = None

    @model_validator(mode="after")
    def _one_form(self) -> "TrigPolyDocument":
        complex_form = self.y is not None
        real_form = self.a is not None or self.b is not None
        if complex_form == real_form:
            raise ValueError("give either y or both a and b")
        if real_form and (self.a is None or self.b is None):
            raise ValueError("the real form needs both a and b")
        return self

    def to_trig(self, exact: bool) -> TrigPoly:
        if self.y is not None:
            return TrigPoly.from_values([parse_scalar(v, exact) for v in self.y], exact=exact, n=self.n)
        a = [parse_scalar(v, exact).real for v in self.a]
        b = [parse_scalar(v, exact).real for v in self.b]
        Y = TrigPoly.from_real(a, b, exact=exact)
        if self.n is not None:
            Y = TrigPoly.from_values(Y.y, exact=exact, n=self.n)
        return Y

    @classmethod
    def from_trig(cls, Y: TrigPoly) -> "TrigPolyDocument":
        return cls(y=[dump_scalar(v) for v in Y.y], n=Y.n)


class ResultantDocument(BaseModel):
    p: PolyDocument
    q: PolyDocument


class ScalarDocument(BaseModel):
    quantity: str
    mode: Mode
    value: Any


class VerdictDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    classification: Literal["inside", "boundary", "outside"] = Field(alias="class")
    min: float
    argmin: float
    dis2: Any  # scalar, or "degree_drop"
    rank_full: bool
    factor: Optional[PolyDocument] = None

    @classmethod
    def fields_from(cls, verdict) -> Dict[str, Any]:
        return {
            "class": verdict.classification.value,
            "min": verdict.min_value,
            "argmin": verdict.minimizer_t,
            "dis2": "degree_drop" if verdict.degree_drop else dump_scalar(verdict.dis2_value),
            "rank_full": verdict.rank_certificate,
            "factor": PolyDocument.from_poly(verdict.factor.X) if verdict.factor is not None else None,
        }

    @classmethod
    def from_verdict(cls, verdict) -> "VerdictDocument":
        return cls.model_validate(cls.fields_from(verdict))


class StarlikeDocument(VerdictDocument):
    starlike: bool
    inner_roots: List[Any]
    trig: TrigPolyDocument
    kernel: str

    @classmethod
    def from_report(cls, report) -> "StarlikeDocument":
        data = cls.fields_from(report.cone_verdict)
        data.update(
            starlike=report.is_starlike,
            inner_roots=[dump_scalar(z) for z in report.inner_roots],
            trig=TrigPolyDocument.from_trig(report.trig),
            kernel=report.kernel,
        )
        return cls.model_validate(data)


class FailureDocument(BaseModel):
    index: int
    detail: str
    witness: Any = None


class SuiteDocument(BaseModel):
    suite: str
    n: int
    samples: int
    seed: int
    mode: Mode
    passed: int
    failures: List[FailureDocument] = Field(default_factory=list)
    notes: Dict[str, Any] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


class VerifyDocument(BaseModel):
    ok: bool
    suites: List[SuiteDocument]


def dump(document: BaseModel) -> Dict[str, Any]:
    """JSON-ready dict using field aliases ("class" rather than "classification")"""
    return document.model_dump(mode="json", by_alias=True)
