import io
import logging
from argparse import Namespace

import pytest
from pydantic import ValidationError

from config.logging import get_module_logger, setup_logger
from config.run_config import RunConfig
from config.settings import DEFAULT_PRIME_CUTOFF, get_atom_budget, get_prime_cutoff


def test_settings_read_environment(monkeypatch):
    monkeypatch.delenv("LOGCORR_PRIME_CUTOFF", raising=False)
    assert get_prime_cutoff() == DEFAULT_PRIME_CUTOFF
    monkeypatch.setenv("LOGCORR_PRIME_CUTOFF", "1e5")
    assert get_prime_cutoff() == 100_000
    monkeypatch.setenv("LOGCORR_ATOM_BUDGET", "")
    assert get_atom_budget() == 100_000_000


def test_run_config_from_args():
    args = Namespace(command="verify", suite="mass, sublinear", quick=True, format="json", debug=None)
    config = RunConfig.from_args(args)
    assert config.suites == ["mass", "sublinear"]
    assert config.output_format == "json"
    assert config.quick


def test_run_config_parses_support_and_scaling():
    config = RunConfig(command="empirical", n=10, support="-2:3", scaling=" Linear ")
    assert config.support == (-2.0, 3.0)
    assert config.scaling == "linear"


@pytest.mark.parametrize("values", [
    {"command": "empirical"},
    {"command": "mertens"},
    {"command": "empirical", "n": 10, "support": "3:-2"},
    {"command": "empirical", "n": 10, "scaling": "cubic"},
    {"command": "constants", "b": 0},
])
def test_run_config_rejects(values):
    with pytest.raises(ValidationError):
        RunConfig(**values)


def test_module_loggers_share_the_handler():
    stream = io.StringIO()
    root = logging.getLogger("logcorr-test")
    setup_logger("logcorr-test", level=logging.DEBUG, stream=stream)
    logging.getLogger("logcorr-test.child").debug("hello")
    assert "[DEBUG] [logcorr-test.child] hello" in stream.getvalue()
    assert root.propagate is False
    assert get_module_logger("arith.sieve").name == "logcorr.arith.sieve"
