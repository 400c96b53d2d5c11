from .errors import (
    LogCorrError,
    InvalidParameterError,
    ConfigurationError,
    CapacityError,
    EmptyMeasureError,
)
from .settings import (
    DEFAULT_PRIME_CUTOFF,
    DEFAULT_SERIES_CUTOFF,
    DEFAULT_BINS,
    DEFAULT_SUPPORT,
    MIRSKY_MAX_X,
    FLOAT_DIGITS,
    get_prime_cutoff,
    get_series_cutoff,
    get_atom_budget,
    get_block_atoms,
    get_sieve_max,
    get_log_level,
)
from .logging import setup_logger, get_module_logger
from .suite_config import SuiteConfig, ALL_SUITES, get_suite

__all__ = [
    # Errors
    "LogCorrError",
    "InvalidParameterError",
    "ConfigurationError",
    "CapacityError",
    "EmptyMeasureError",
    # Settings
    "DEFAULT_PRIME_CUTOFF",
    "DEFAULT_SERIES_CUTOFF",
    "DEFAULT_BINS",
    "DEFAULT_SUPPORT",
    "MIRSKY_MAX_X",
    "FLOAT_DIGITS",
    "get_prime_cutoff",
    "get_series_cutoff",
    "get_atom_budget",
    "get_block_atoms",
    "get_sieve_max",
    "get_log_level",
    # Logging
    "setup_logger",
    "get_module_logger",
    # Suite presets
    "SuiteConfig",
    "ALL_SUITES",
    "get_suite",
]
