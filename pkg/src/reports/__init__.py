from .schemas import (
    ConvergenceReport,
    MassRow,
    MassReport,
    ConstantsReport,
    SumReport,
    CheckResult,
    SuiteResult,
    SuiteReport,
)

__all__ = [
    "ConvergenceReport",
    "MassRow",
    "MassReport",
    "ConstantsReport",
    "SumReport",
    "CheckResult",
    "SuiteResult",
    "SuiteReport",
]
