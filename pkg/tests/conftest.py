import random
from pathlib import Path

import pytest

from alphacut import catalog
from alphacut.enumeration import enumerate_lattices
from alphacut.fuzzyset import FuzzySet, PointMap

DATA = Path(__file__).parent / "data"


def small_frames(max_size=7, min_size=2):
    return [L for n in range(min_size, max_size + 1) for L in enumerate_lattices(n, distributive_only=True)]


def small_lattices(max_size=6):
    return [L for n in range(2, max_size + 1) for L in enumerate_lattices(n)]


FRAMES_7 = small_frames(7)
FRAMES_6 = small_frames(6)


def random_fuzzy_set(L, rng, max_points=5, min_points=1, prefix="x"):
    base = tuple(f"{prefix}{i}" for i in range(rng.randint(min_points, max_points)))
    return FuzzySet(base, L, tuple(rng.choice(L.elements) for _ in base))


def random_map(source, rng, max_target=4, prefix="y"):
    target = tuple(f"{prefix}{i}" for i in range(rng.randint(1, max_target)))
    return PointMap(tuple(source), target, {x: rng.choice(target) for x in source})


@pytest.fixture
def m5():
    return catalog.m5()


@pytest.fixture
def n6():
    return catalog.n6()


@pytest.fixture
def b3():
    return catalog.b3()


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def a_m5(m5):
    return FuzzySet.from_mapping(["p", "q", "r"], m5, {"p": "a", "q": "b", "r": "bot"})


# acceptance summary: one PASS/FAIL line per criterion at the end of the run

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            outcome = "XFAIL" if report.skipped else "XPASS"
        else:
            outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        summary = dict(report.user_properties).get("summary", "")
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = (outcome, summary)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        outcome, summary = _ACCEPTANCE[name]
        label = name.removeprefix("test_criterion_").replace("_", " ")
        terminalreporter.write_line(f"{outcome:5}  criterion {label}: {summary}".rstrip(": "))
