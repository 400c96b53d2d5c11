# -----------------------------------------------------------------------------
# Numeric Settings
#
# Default cutoffs, budgets and output conventions.
# Every value can be overridden from the environment (or a .env file loaded
# by the entry points). Getters read the environment at call time.
# -----------------------------------------------------------------------------
import os
from typing import Tuple


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    # accept "1e6" style values as well as plain integers
    return int(float(raw))


# Euler products are truncated at this prime cutoff P
DEFAULT_PRIME_CUTOFF = 1_000_000

# Truncation D of the double Möbius series (oracle only)
DEFAULT_SERIES_CUTOFF = 10_000

# Maximum number of atoms a single measure may stream
DEFAULT_ATOM_BUDGET = 100_000_000

# Atoms evaluated per vectorised block
DEFAULT_BLOCK_ATOMS = 1 << 20

# Largest sieve we are willing to allocate
DEFAULT_SIEVE_MAX = 500_000_000

# Hard cap for the exact Mirsky / Mertens sums
MIRSKY_MAX_X = 10_000_000

# Histogram defaults
DEFAULT_BINS = 400
DEFAULT_SUPPORT: Tuple[float, float] = (-10.0, 10.0)

# Absolute / relative tolerance for limit-side quadrature
QUAD_TOLERANCE = 1e-9

# Significant digits for CSV output
FLOAT_DIGITS = 17

LOG_LEVEL = os.environ.get("LOGCORR_LOG_LEVEL", "INFO")


def get_prime_cutoff() -> int:
    """Prime cutoff P for truncated Euler products."""
    return _env_int("LOGCORR_PRIME_CUTOFF", DEFAULT_PRIME_CUTOFF)


def get_series_cutoff() -> int:
    """Cutoff D for the double Möbius series."""
    return _env_int("LOGCORR_SERIES_CUTOFF", DEFAULT_SERIES_CUTOFF)


def get_atom_budget() -> int:
    """Maximum atom count per measure."""
    return _env_int("LOGCORR_ATOM_BUDGET", DEFAULT_ATOM_BUDGET)


def get_block_atoms() -> int:
    """Atoms per vectorised evaluation block."""
    return max(1, _env_int("LOGCORR_BLOCK_ATOMS", DEFAULT_BLOCK_ATOMS))


def get_sieve_max() -> int:
    """Largest admissible sieve limit."""
    return _env_int("LOGCORR_SIEVE_MAX", DEFAULT_SIEVE_MAX)


def get_log_level() -> str:
    return os.environ.get("LOGCORR_LOG_LEVEL", LOG_LEVEL).upper()
