# -----------------------------------------------------------------------------
# LOGCORR CLI
#
# Command-line frontend for empirical pair correlation histograms, limit
# densities, arithmetic constants and sums, ortholength spectra and the
# acceptance suites. Data goes to stdout or --output; everything for
# humans (banner, progress, errors) goes to stderr.
# -----------------------------------------------------------------------------

import argparse
import csv
import io
import json
import math
import sys
from typing import Iterable, List, Optional, Sequence

import numpy as np
from rich.console import Console
from rich.panel import Panel
from rich.text import Text

from arith.constants import (
    c_ab,
    c_abk_lower_bound,
    c_abk_product,
    lambda_abk,
    mertens_main_term,
    mirsky_asymptotic,
)
from arith.series import c_abk_series
from arith.sums import mertens_congruence_sum, mirsky_sum, normalize_residue
from config.run_config import RunConfig
from config.settings import FLOAT_DIGITS, get_prime_cutoff
from config.suite_config import ALL_SUITES
from family.scaling import SCALING_SYNTAX, natural_normalizer, normalizer_value, parse_scaling
from family.schema import WeightMode, WeightedLogFamily
from limits.densities import limit_for
from limits.integrals import bin_averages
from measures.builders import build_pair_correlation
from measures.histogram import bin_measure
from modular.perpendiculars import doubling_identity_check, ortholength_spectrum
from reports.schemas import ConstantsReport, SumReport
from verify.console import get_suite_logger
from verify.suites import run_suites


# =============================================================================
# BANNER
# =============================================================================

LOGCORR_BANNER = """
  _     ___   ____  ____ ___  ____  ____
 | |   / _ \\ / ___|/ ___/ _ \\|  _ \\|  _ \\
 | |  | | | | |  _| |  | | | | |_) | |_) |
 | |__| |_| | |_| | |__| |_| |  _ <|  _ <
 |_____\\___/ \\____|\\____\\___/|_| \\_\\_| \\_\\

    Pair correlations of logarithms
"""

_console = Console(stderr=True)


def show_banner():
    """Display the LOGCORR ASCII banner."""
    _console.print(Panel(
        Text(LOGCORR_BANNER, style="green"),
        border_style="green",
        padding=(0, 2)
    ))


def show_progress(phase: str, detail: str = ""):
    """Show progress indicator."""
    phase_emoji = {
        "sieve": "🧮",
        "build": "🔧",
        "bin": "📊",
        "limit": "📈",
        "constants": "🔢",
        "sums": "➕",
        "spectrum": "🌀",
        "verify": "🔬",
    }
    emoji = phase_emoji.get(phase.lower(), "⏳")
    _console.print(f"{emoji} [bold]{phase}[/bold] {detail}")


def show_error(message: str):
    """Show error message."""
    _console.print(f"[red]❌ Error: {message}[/red]")


# =============================================================================
# ARGUMENTS
# =============================================================================

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--debug", action="store_true", default=None, help="Enable verbose debug logging")
    common.add_argument("--format", choices=["csv", "json"], default=None, help="Output format (default: csv)")
    common.add_argument("--output", type=str, default=None, help="Output path (default: stdout)")
    common.add_argument("--prime-cutoff", dest="prime_cutoff", type=int, default=None,
                        help="Euler product cutoff P (default: LOGCORR_PRIME_CUTOFF or 10^6)")
    return common


def _family_arguments(parser: argparse.ArgumentParser, with_scaling: bool = True):
    parser.add_argument("--n", type=int, default=None, help="Horizon N")
    parser.add_argument("--a", type=int, default=None, help="Residue a (default: 1)")
    parser.add_argument("--b", type=int, default=None, help="Modulus b (default: 1)")
    parser.add_argument("--weights", choices=["trivial", "euler"], default=None, help="Multiplicities (default: trivial)")
    if with_scaling:
        parser.add_argument("--scaling", type=str, default=None, help=f"Scaling: {SCALING_SYNTAX}")
        parser.add_argument("--normalizer", choices=["auto", "probability", "quadratic", "scale", "cubic"],
                            default=None, help="Normalizer ψ′ (default: natural for the regime)")


def _grid_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--bins", type=int, default=None, help="Number of bins (default: 400)")
    parser.add_argument("--support", type=str, default=None, help="Support lo:hi (default: -10:10)")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="logcorr",
        description="LOGCORR - pair correlations of logarithms of integers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  uv run python src/main.py empirical --n 2000 --scaling linear --support -4:4 --format csv
  uv run python src/main.py limit --n 2000 --weights euler --scaling linear --support 1:4 --bins 100
  uv run python src/main.py constants --a 1 --b 1 --k 3 --prime-cutoff 1000000 --format json
  uv run python src/main.py mirsky --x 100000 --a 1 --b 2 --k 2
  uv run python src/main.py perp --b 3 --n 200 --check
  uv run python src/main.py verify --suite all --quick
"""
    )
    commands = parser.add_subparsers(dest="command", required=True)

    empirical = commands.add_parser("empirical", parents=[common], help="Histogram of an empirical pair correlation measure")
    _family_arguments(empirical)
    _grid_arguments(empirical)

    limit = commands.add_parser("limit", parents=[common], help="Bin averages of the limit density on the empirical grid")
    _family_arguments(limit)
    _grid_arguments(limit)

    constants = commands.add_parser("constants", parents=[common], help="c_{a,b}, c_{a,b,k}, Λ and the lower bound")
    constants.add_argument("--a", type=int, default=None)
    constants.add_argument("--b", type=int, default=None)
    constants.add_argument("--k", type=int, default=None)
    constants.add_argument("--series-cutoff", dest="series_cutoff", type=int, default=None,
                           help="Also evaluate the Möbius series truncated at D")

    for name, text in (("mirsky", "Σ φ(n)φ(n+k) over a congruence class"), ("mertens", "Σ φ(n) over a congruence class")):
        sums = commands.add_parser(name, parents=[common], help=text)
        sums.add_argument("--x", type=float, default=None, help="Upper summation bound")
        sums.add_argument("--a", type=int, default=None)
        sums.add_argument("--b", type=int, default=None)
        if name == "mirsky":
            sums.add_argument("--k", type=int, default=None)

    perp = commands.add_parser("perp", parents=[common], help="Ortholength spectrum of Γ₀[b]")
    perp.add_argument("--b", type=int, default=None)
    perp.add_argument("--n", type=int, default=None)
    perp.add_argument("--scaling", type=str, default=None, help=f"Scaling for --check: {SCALING_SYNTAX}")
    perp.add_argument("--check", action="store_true", default=None,
                      help="Compare the perpendicular measure with the doubled log measure atom by atom")

    verify = commands.add_parser("verify", parents=[common], help="Run acceptance suites")
    verify.add_argument("--suite", type=str, default=None,
                        help=f"Comma-separated suites or 'all'. Available: {', '.join(ALL_SUITES)}")
    verify.add_argument("--quick", action="store_true", default=None, help="Reduced-scale variants of the suites")

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    return build_parser().parse_args(argv)


# =============================================================================
# WRITERS
# =============================================================================

def format_float(value: float) -> str:
    return f"{value:.{FLOAT_DIGITS}g}"


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def emit(text: str, output: Optional[str]):
    """Write to the output path, or stdout."""
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


# =============================================================================
# COMMANDS
# =============================================================================

def _family(config: RunConfig) -> WeightedLogFamily:
    return WeightedLogFamily(a=config.a, b=config.b, weight_mode=WeightMode(config.weights))


def _grid_output(config: RunConfig, edges, density, extra: dict) -> str:
    if config.output_format == "csv":
        rows = [(float(lo), float(hi), float(d)) for lo, hi, d in zip(edges[:-1], edges[1:], density)]
        return render_csv(["bin_lo", "bin_hi", "density"], rows)
    payload = {
        "bin_lo": [float(v) for v in edges[:-1]],
        "bin_hi": [float(v) for v in edges[1:]],
        "density": [float(v) for v in density],
        **extra,
    }
    return render_json(payload)


def run_empirical(config: RunConfig) -> int:
    family = _family(config)
    scaling = parse_scaling(config.scaling, config.normalizer)
    show_progress("build", f"R_N for N = {config.n}, {family.weight_mode.value} weights, {scaling.label()}")
    measure = build_pair_correlation(family, config.n, scaling)
    normalizer = normalizer_value(natural_normalizer(family, scaling), scaling, config.n, measure.total_mass)
    show_progress("bin", f"{measure.atom_count} atoms into {config.bins} bins")
    histogram = bin_measure(measure, config.support, config.bins, normalizer)
    extra = {
        "n": config.n, "a": family.a, "b": family.b, "weights": family.weight_mode.value,
        "scaling": scaling.label(), "normalizer": normalizer,
        "total_mass": measure.total_mass, "overflow": histogram.overflow,
    }
    emit(_grid_output(config, histogram.bin_edges, histogram.density(), extra), config.output)
    return 0


def run_limit(config: RunConfig) -> int:
    family = _family(config)
    scaling = parse_scaling(config.scaling, config.normalizer)
    density = limit_for(family, scaling, config.prime_cutoff)
    show_progress("limit", density.label())
    # same edges as Histogram.bin_edges, so the two outputs subtract column-wise
    lo, hi = config.support
    edges = np.linspace(lo, hi, config.bins + 1)
    extra = {"n": config.n, "a": family.a, "b": family.b, "regime": density.regime.value, "label": density.label()}
    emit(_grid_output(config, edges, bin_averages(density, edges), extra), config.output)
    return 0


def run_constants(config: RunConfig) -> int:
    a, b, k = normalize_residue(config.a, config.b), config.b, config.k
    P = config.prime_cutoff or get_prime_cutoff()
    show_progress("constants", f"a = {a}, b = {b}, k = {k}, P = {P}")
    product = c_abk_product(a, b, k, P)
    pair_constant = c_ab(a, b, P)
    report = ConstantsReport(
        a=a, b=b, k=k, cutoff=P,
        value=product.value,
        tail_bound=product.tail_bound,
        c_ab=pair_constant.value,
        c_ab_exact=str(pair_constant.exact),
        lambda_abk=str(lambda_abk(a, b, k)),
        lower_bound=c_abk_lower_bound(a, b, k, P).value,
        upper_bound=1.0 / b,
    )
    if config.series_cutoff:
        report.series_cutoff = config.series_cutoff
        report.series_value = c_abk_series(a, b, k, config.series_cutoff)
    emit(_scalar_output(config, report.model_dump()), config.output)
    return 0


def _scalar_output(config: RunConfig, payload: dict) -> str:
    if config.output_format == "json":
        return render_json(payload)
    header = sorted(payload)
    return render_csv(header, [[payload[key] for key in header]])


def run_sums(config: RunConfig) -> int:
    a, b, x = normalize_residue(config.a, config.b), config.b, config.x
    show_progress("sums", f"{config.command} up to x = {x:g}")
    if config.command == "mertens":
        exact = mertens_congruence_sum(x, a, b)
        main_term = mertens_main_term(x, a, b)
        envelope = x * math.log(2 * x)
        k = None
    else:
        k = config.k
        exact = mirsky_sum(x, a, b, k)
        main_term = mirsky_asymptotic(x, a, b, k, config.prime_cutoff)
        envelope = x * (x + k) * math.log(2 * x) * math.log(2 * x + k)
    residual = exact - main_term
    report = SumReport(
        kind=config.command, x=x, a=a, b=b, k=k, exact=exact,
        main_term=main_term, residual=residual, envelope=envelope,
        normalized_residual=abs(residual) / envelope,
    )
    emit(_scalar_output(config, report.model_dump()), config.output)
    return 0


def run_perp(config: RunConfig) -> int:
    if config.check:
        scaling = parse_scaling(config.scaling)
        show_progress("spectrum", f"doubling identity for b = {config.b}, N = {config.n}, {scaling.label()}")
        report = doubling_identity_check(config.b, config.n, scaling)
        emit(_scalar_output(config, report.as_dict()), config.output)
        if not report.equal:
            show_error(f"Perpendicular and doubled log measures differ: {report.first_mismatch}")
            return 1
        return 0

    spectrum = ortholength_spectrum(config.b, config.n)
    show_progress("spectrum", f"{len(spectrum)} lengths, total multiplicity {spectrum.total_multiplicity}")
    rows = [(float(e.length), e.q, e.multiplicity) for e in spectrum.entries]
    if config.output_format == "json":
        text = render_json({
            "b": spectrum.b, "n": spectrum.horizon,
            "entries": [{"length": length, "q": q, "multiplicity": m} for length, q, m in rows],
        })
    else:
        text = render_csv(["length", "q", "multiplicity"], rows)
    emit(text, config.output)
    return 0


def run_verify(config: RunConfig) -> int:
    names: List[str] = [] if config.suites == ["all"] else config.suites
    show_banner()
    show_progress("verify", f"{'quick' if config.quick else 'full'} scale, suites: {', '.join(names) or 'all'}")
    report = run_suites(names or None, quick=config.quick, debug=config.debug)
    get_suite_logger().show_summary(report)
    emit(render_json(report.model_dump()), config.output)
    return 0 if report.passed else 1


COMMANDS = {
    "empirical": run_empirical,
    "limit": run_limit,
    "constants": run_constants,
    "mirsky": run_sums,
    "mertens": run_sums,
    "perp": run_perp,
    "verify": run_verify,
}


def run(config: RunConfig) -> int:
    """Execute one validated command; returns the exit status."""
    return COMMANDS[config.command](config)
