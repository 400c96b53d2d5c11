#!/usr/bin/env python3
"""
Acceptance Runner

Runs the verification suites at full scale and writes the merged
SuiteReport as JSON.

Usage:
    uv run python scripts/run_acceptance.py

Options:
    --parallel    Run suites in parallel threads (results are merged in preset order)
    --quick       Reduced-scale variants of the suites
    --dry-run     Show what would be run without executing
"""

import asyncio
import json
import sys
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn, TaskProgressColumn
from rich.panel import Panel

from config.suite_config import ALL_SUITES, get_suite
from reports.schemas import SuiteReport, SuiteResult
from verify.console import SuiteLogger
from verify.suites import run_suite

console = Console(stderr=True)

DEFAULT_REPORT_PATH = Path(__file__).parent.parent / "acceptance-report.json"


def run_single_suite(name: str, quick: bool, suite_console: SuiteLogger, progress=None, task_id=None) -> SuiteResult:
    if progress is not None and task_id is not None:
        progress.update(task_id, description=f"[cyan]Running: {name}[/cyan]")
    try:
        return run_suite(name, quick, suite_console)
    finally:
        if progress is not None and task_id is not None:
            progress.advance(task_id)


def run_all_sequential(names: list, quick: bool, suite_console: SuiteLogger) -> list:
    """Run suites one after another."""
    results = []
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console
    ) as progress:
        task = progress.add_task("[cyan]Running suites...", total=len(names))
        for name in names:
            results.append(run_single_suite(name, quick, suite_console, progress, task))
    return results


async def run_all_parallel(names: list, quick: bool, suite_console: SuiteLogger, max_concurrent: int = 4) -> list:
    """Run suites in worker threads; gather keeps preset order.

    Each worker reports to its own silent logger. Output is replayed on the
    shared console once every suite has finished, so check lines never land
    under another suite's phase.
    """
    semaphore = asyncio.Semaphore(max_concurrent)

    async def run_with_semaphore(name):
        async with semaphore:
            worker_console = SuiteLogger(debug=False, console=Console(quiet=True))
            return await asyncio.to_thread(run_single_suite, name, quick, worker_console)

    console.print(f"[bold]Running {len(names)} suites in parallel (max {max_concurrent} concurrent)[/bold]")
    results = await asyncio.gather(*(run_with_semaphore(n) for n in names))
    for result in results:
        suite_console.replay(result)
    return results


def main():
    import argparse

    parser = argparse.ArgumentParser(description="Run the acceptance suites")
    parser.add_argument("--parallel", action="store_true", help="Run suites in parallel")
    parser.add_argument("--quick", action="store_true", help="Reduced-scale variants")
    parser.add_argument("--dry-run", action="store_true", help="Show what would be run")
    parser.add_argument("--max-concurrent", type=int, default=4, help="Max concurrent suites (for parallel mode)")
    parser.add_argument("--suites", type=str, help="Comma-separated list of specific suites to run")
    parser.add_argument("--output", type=str, default=str(DEFAULT_REPORT_PATH), help="Report path")
    parser.add_argument("--debug", action="store_true", help="Show every check as it completes")

    args = parser.parse_args()

    names = [get_suite(s.strip()).name for s in args.suites.split(",")] if args.suites else list(ALL_SUITES)

    console.print(Panel(
        "[bold green]LOGCORR Acceptance Runner[/bold green]\n\n"
        f"Suites to run: {len(names)}\n"
        f"Scale: {'quick' if args.quick else 'full'}\n"
        f"Mode: {'Parallel' if args.parallel else 'Sequential'}\n"
        f"Output: {args.output}",
        title="Acceptance"
    ))

    if args.dry_run:
        console.print("\n[yellow]DRY RUN - Would execute:[/yellow]")
        for i, name in enumerate(names, 1):
            console.print(f"  {i}. {name}: {ALL_SUITES[name].description}")
        return

    suite_console = SuiteLogger(debug=args.debug, console=console)
    if args.parallel:
        results = asyncio.run(run_all_parallel(names, args.quick, suite_console, args.max_concurrent))
    else:
        results = run_all_sequential(names, args.quick, suite_console)

    report = SuiteReport(passed=all(r.passed for r in results), suites=list(results))
    with open(args.output, "w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(report.model_dump(), indent=2, sort_keys=True) + "\n")
    console.print(f"[green]Saved report to {args.output}[/green]")

    suite_console.show_summary(report)
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
