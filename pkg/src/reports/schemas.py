"""Pydantic report models written by the CLI and the verification suites."""

from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

Scalar = Union[int, float, str, bool, None]


# --- Convergence ---

class ConvergenceReport(BaseModel):
    """Empirical-vs-limit errors over increasing horizons."""
    regime: str
    observable: Literal["cdf_sup_error", "pairing_error", "histogram_l1_error"]
    horizons: List[int]
    errors: List[float]
    fitted_rate: Optional[float] = Field(default=None, description="log-log slope of error vs N")
    fitted_constant: Optional[float] = Field(default=None, description="exp(intercept) of the log-log fit")
    test_functions: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.horizons) != len(self.errors):
            raise ValueError("one error per horizon is required")
        if any(e < 0 for e in self.errors):
            raise ValueError("errors must be nonnegative")
        if any(b <= a for a, b in zip(self.horizons, self.horizons[1:])):
            raise ValueError("horizons must be strictly increasing")
        return self


# --- Masses ---

class MassRow(BaseModel):
    N: int
    exact_mass: int
    normalized: float = Field(description="exact mass divided by N² (trivial) or N⁴ (Euler)")
    limit: float
    relative_error: Optional[float] = None


class MassReport(BaseModel):
    a: int
    b: int
    weights: Literal["trivial", "euler"]
    rows: List[MassRow] = Field(default_factory=list)


# --- Scalar command outputs ---

class ConstantsReport(BaseModel):
    a: int
    b: int
    k: int
    cutoff: int
    value: float
    tail_bound: float
    c_ab: float
    c_ab_exact: str
    lambda_abk: str
    lower_bound: float
    upper_bound: float
    series_cutoff: Optional[int] = None
    series_value: Optional[float] = None


class SumReport(BaseModel):
    kind: Literal["mertens", "mirsky"]
    x: float
    a: int
    b: int
    k: Optional[int] = None
    exact: int
    main_term: float
    residual: float
    envelope: float
    normalized_residual: float


# --- Suites ---

class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    values: Dict[str, Scalar] = Field(default_factory=dict)


class SuiteResult(BaseModel):
    name: str
    description: str
    quick: bool = False
    passed: bool
    checks: List[CheckResult] = Field(default_factory=list)


class SuiteReport(BaseModel):
    passed: bool
    suites: List[SuiteResult] = Field(default_factory=list)

    @property
    def failed_suites(self) -> List[str]:
        return [s.name for s in self.suites if not s.passed]
