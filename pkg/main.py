import sys
from dotenv import load_dotenv

load_dotenv()

sys.path.insert(0, "src")

from verify import run_suites, get_suite_logger


def main():
    # full acceptance run at default scale; quick variants live behind `verify --quick`
    report = run_suites(quick=False, debug=False)
    get_suite_logger().show_summary(report)
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
