# -----------------------------------------------------------------------------
# Run Configuration
#
# Validated parameters of one CLI invocation. Everything numeric is
# checked here, before any sieve is built or any atom is enumerated.
# -----------------------------------------------------------------------------
from argparse import Namespace
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from config.settings import DEFAULT_BINS, DEFAULT_SUPPORT
from family.scaling import parse_scaling
from measures.histogram import parse_support

Command = Literal["empirical", "limit", "constants", "mirsky", "mertens", "perp", "verify"]


class RunConfig(BaseModel):
    command: Command
    n: Optional[int] = Field(default=None, ge=1, description="Horizon N")
    a: int = Field(default=1, ge=1, description="Residue a of the congruence class")
    b: int = Field(default=1, ge=1, description="Modulus b of the congruence class")
    k: int = Field(default=0, ge=0, description="Shift k of the Mirsky sum / c_{a,b,k}")
    x: Optional[float] = Field(default=None, gt=0, description="Upper summation bound")
    weights: Literal["trivial", "euler"] = Field(default="trivial", description="Multiplicity function")
    scaling: str = Field(default="trivial", description="trivial | power:ALPHA | linear | invavg")
    normalizer: Literal["auto", "probability", "quadratic", "scale", "cubic"] = "auto"
    bins: int = Field(default=DEFAULT_BINS, ge=1, description="Histogram bins")
    support: Tuple[float, float] = Field(default=DEFAULT_SUPPORT, description="Histogram support lo:hi")
    prime_cutoff: Optional[int] = Field(default=None, ge=2, description="Euler product cutoff P")
    series_cutoff: Optional[int] = Field(default=None, ge=1, description="Möbius series cutoff D")
    output_format: Literal["csv", "json"] = "csv"
    output: Optional[str] = Field(default=None, description="Output path (stdout when omitted)")
    suites: List[str] = Field(default_factory=lambda: ["all"])
    quick: bool = False
    check: bool = False
    debug: bool = False

    @field_validator("support", mode="before")
    @classmethod
    def _parse_support(cls, value):
        if isinstance(value, str):
            return parse_support(value)
        return value

    @field_validator("support")
    @classmethod
    def _check_support(cls, value):
        lo, hi = value
        if not lo < hi:
            raise ValueError(f"Support needs lo < hi, got {lo}:{hi}")
        return value

    @field_validator("scaling")
    @classmethod
    def _check_scaling(cls, value):
        parse_scaling(value)
        return value.strip().lower()

    @model_validator(mode="after")
    def _check_command(self):
        if self.command in ("empirical", "limit", "perp") and self.n is None:
            raise ValueError(f"{self.command} needs --n")
        if self.command in ("mirsky", "mertens") and self.x is None:
            raise ValueError(f"{self.command} needs --x")
        return self

    @classmethod
    def from_args(cls, args: Namespace) -> "RunConfig":
        values = {k: v for k, v in vars(args).items() if v is not None}
        if "format" in values:
            values["output_format"] = values.pop("format")
        if "suite" in values:
            values["suites"] = [s.strip() for s in values.pop("suite").split(",") if s.strip()]
        return cls(**values)
