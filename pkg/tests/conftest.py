import os
import subprocess
import sys

import numpy as np
import pytest

from riskset.prob_core import ProbSpace

# Filled by tests/test_acceptance.py, printed at the end of the session.
ACCEPTANCE_LINES: list = []


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running audit sweeps (opt in with RISKSET_FULL=1)")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RISKSET_FULL") == "1":
        return
    skip = pytest.mark.skip(reason="set RISKSET_FULL=1 to run the 10^4-trial sweeps")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def u2():
    return ProbSpace.uniform(2)


@pytest.fixture
def u4():
    return ProbSpace.uniform(4)


def run_cli(*args, env=None, stdin=None, cwd=None):
    full_env = dict(os.environ)
    full_env.pop("RISKSET_SEED", None)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "riskset", *args],
        capture_output=True,
        text=True,
        env=full_env,
        input=stdin,
        cwd=cwd,
    )


@pytest.fixture
def cli():
    return run_cli
