import warnings
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from biosp.realization import Params

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rationals(lo=-3, hi=3, max_den=9):
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_den)


# mu1, mu2 strictly positive keeps every recurrence denominator nonzero
positive = st.fractions(min_value=Fraction(1, 9), max_value=3, max_denominator=9)
nonneg = st.fractions(min_value=0, max_value=3, max_denominator=9)


@st.composite
def params(draw):
    return Params(draw(rationals()), draw(rationals()), draw(rationals()), draw(rationals()))


@st.composite
def truncated_params(draw, N=st.integers(1, 6)):
    return Params.truncated(draw(positive), draw(positive), draw(nonneg), draw(N))


# fixed parameter sets used across modules; (mu1, mu2, mu3)
PARAM_SETS = [
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 3), Fraction(2, 7), Fraction(5, 4)),
    (Fraction(0), Fraction(1), Fraction(3, 2)),
    (Fraction(7, 5), Fraction(1, 6), Fraction(0)),
    (Fraction(2), Fraction(5, 3), Fraction(1, 9)),
]


@pytest.fixture(autouse=True)
def _quiet_extension_warnings():
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message="N=0 truncation")
        yield


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
