"""Shared fixtures and the acceptance summary printed after the run."""

from __future__ import annotations

import re
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

from perimod import corpus  # noqa: E402

CRITERIA = {
    1: "classical sum of longitudes is zero, with certificates, < 10 s",
    2: "virtual Hopf: sum m1 - m2 nonzero, exactly one nonzero longitude",
    3: "knot longitudes vanish (classical and virtual)",
    4: "every longitude is annihilated by t - 1",
    5: "Lemma vector on multi-component corpus and 50 random virtual diagrams",
    6: "checkerboard-colorable entries: sum zero mod t + 1",
    7: "membership engine agrees with bounded oracle on 200 random systems",
    8: "Seifert matrix Alexander polynomials match the diagram pipeline",
    9: "longitudes generate the (t - 1)-torsion over rational coefficients",
}
_outcomes: dict[int, list[str]] = {}
_NODE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    m = _NODE.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(int(m.group(1)), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        got = _outcomes.get(n)
        if got is None:
            status = "NOT RUN"
        elif all(o == "passed" for o in got):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status:7} {title}")


@pytest.fixture(scope="session")
def bundled():
    return corpus.by_name(corpus.load_bundled())


@pytest.fixture(scope="session")
def classical_entries():
    return corpus.load_bundled("classical")


@pytest.fixture(scope="session")
def virtual_entries():
    return corpus.load_bundled("virtual")
