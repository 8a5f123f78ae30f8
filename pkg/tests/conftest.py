import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bcjq.bicomplex import Bicomplex
from bcjq.scalars import Cyclo

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
cyclos = st.builds(Cyclo, small_fractions, small_fractions)
bicomplexes = st.builds(Bicomplex, small_fractions, small_fractions,
                        small_fractions, small_fractions)
cyclo_bicomplexes = st.builds(Bicomplex, cyclos, cyclos, cyclos, cyclos)


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-30, 30), rng.randint(1, 9))


def random_bicomplex(rng: random.Random) -> Bicomplex:
    return Bicomplex(*(random_fraction(rng) for _ in range(4)))


@pytest.fixture
def rng():
    return random.Random(20261019)


# Acceptance reporting: tests marked ``criterion(k, label)`` get a one-line
# PASS/FAIL summary at the end of the run.
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, label = marker.args
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        prev = _CRITERIA.get(number, (label, True))[1]
        _CRITERIA[number] = (label, prev and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        label, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {label}")
