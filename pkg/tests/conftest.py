"""Shared fixtures: the worked examples as families, plus an acceptance
summary printed at the end of the run."""

from __future__ import annotations

from pathlib import Path

import pytest

from pftopo import Universe, load_family

DATA = Path(__file__).parent / "data"

#: (fixture file, needs lenient load) - lenient files carry published
#: triples whose grade sum exceeds 1.
FIXTURE_FILES = {
    "overlap": False,
    "incomparable": False,
    "nested": True,
    "balanced": False,
    "mixed": True,
    "doublechain": False,
    "doublechain_printed": False,
}


def load_fixture(name: str):
    strict = not FIXTURE_FILES[name]
    return load_family(DATA.joinpath(f"{name}.json").read_bytes(), strict=strict)


@pytest.fixture(scope="session")
def abc() -> Universe:
    return Universe.of("a", "b", "c")


@pytest.fixture(scope="session")
def overlap_pair():
    return load_fixture("overlap")


@pytest.fixture(scope="session")
def incomparable_pair():
    return load_fixture("incomparable")


@pytest.fixture(scope="session")
def nested_pair():
    return load_fixture("nested")


@pytest.fixture(scope="session")
def balanced_pair():
    return load_fixture("balanced")


@pytest.fixture(scope="session")
def mixed_pair():
    return load_fixture("mixed")


@pytest.fixture(scope="session")
def double_chain():
    return load_fixture("doublechain")


@pytest.fixture(scope="session")
def double_chain_printed():
    return load_fixture("doublechain_printed")


# ------------------------------------------------- acceptance summary hook

_ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


def record_acceptance(criterion: str, note: str) -> None:
    """Called by passing acceptance tests; failures are recorded by the
    reporting hook below."""
    _ACCEPTANCE_RESULTS[criterion] = ("PASS", note)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in str(item.fspath):
        return
    criterion = item.name.replace("test_", "")
    if report.failed:
        _ACCEPTANCE_RESULTS[criterion] = ("FAIL", "see failure output above")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE_RESULTS):
        state, note = _ACCEPTANCE_RESULTS[criterion]
        line = f"{criterion}: {state}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)
