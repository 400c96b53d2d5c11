# -----------------------------------------------------------------------------
# Suite Console
#
# Progress display while verification suites run. Writes to stderr so
# JSON reports on stdout stay clean. Check-level lines only appear with
# --debug.
# -----------------------------------------------------------------------------

from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from reports.schemas import CheckResult, SuiteReport, SuiteResult


class SuiteLogger:
    """
    Status display for acceptance suite runs.

    Usage:
        console = SuiteLogger(debug=True)
        console.set_phase("mirsky_bracket")
        console.check_complete(check)
        console.show_summary(report)
    """

    def __init__(self, debug: bool = False, console: Optional[Console] = None):
        self.debug = debug
        self.console = console or Console(stderr=True)
        self.current_phase = ""
        self.progress = (0, 0)  # (done, total)

    def set_phase(self, phase: str):
        """Set the suite currently running."""
        self.current_phase = phase
        self.console.print(f"📍 Suite: [bold cyan]{phase}[/bold cyan]")

    def suite_status(self, status: str):
        if self.debug:
            self.console.print(f"   🔧 {status}")

    def check_complete(self, check: CheckResult):
        """Report one finished check."""
        if check.passed:
            if self.debug:
                self.console.print(f"   ✅ {check.name}: {check.detail}")
        else:
            self.console.print(f"   [red]❌ {check.name}: {check.detail}[/red]")

    def update_progress(self, done: int, total: int):
        self.progress = (done, total)
        if self.debug:
            self.console.print(f"📊 Progress: {done}/{total} suites")

    def replay(self, result: SuiteResult):
        """Print a finished suite as if it had just run."""
        self.set_phase(result.name)
        self.suite_status(result.description)
        for check in result.checks:
            self.check_complete(check)

    def log_error(self, message: str):
        """Log an error."""
        self.console.print(f"   [red]❌ Error: {message}[/red]")

    def show_summary(self, report: SuiteReport):
        """Table of suite outcomes."""
        table = Table(title="Acceptance Suites")
        table.add_column("Suite", style="cyan")
        table.add_column("Checks", justify="right")
        table.add_column("Result")
        for suite in report.suites:
            passed = sum(1 for c in suite.checks if c.passed)
            result = "[green]PASS[/green]" if suite.passed else "[red]FAIL[/red]"
            table.add_row(suite.name, f"{passed}/{len(suite.checks)}", result)
        self.console.print(table)

        border = "green" if report.passed else "red"
        verdict = "all suites passed" if report.passed else f"failed: {', '.join(report.failed_suites)}"
        self.console.print(Panel(verdict, title="LOGCORR", border_style=border))


# Global console instance
_logger: Optional[SuiteLogger] = None


def get_suite_logger(debug: bool = False) -> SuiteLogger:
    """Get or create the global suite console."""
    global _logger
    if _logger is None:
        _logger = SuiteLogger(debug=debug)
    return _logger


def set_debug(enabled: bool):
    """Enable or disable debug mode."""
    get_suite_logger().debug = enabled
