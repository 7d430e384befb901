import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cas_workbench import Ideal, Polynomial, Ring

ELLIPSE_SOLUTIONS = [  # (y, x) in ring order
    (Fraction(0), Fraction(1)),
    (Fraction(0), Fraction(-1)),
    (Fraction(1), Fraction(1, 2)),
    (Fraction(-1), Fraction(-1, 2)),
]


@pytest.fixture
def ring_yx():
    return Ring(("y", "x"))


@pytest.fixture
def ellipses(ring_yx):
    y, x = ring_yx.gens()
    return 2 * x**2 - x * y + 2 * y**2 - 2, 2 * x**2 - 3 * x * y + 3 * y**2 - 2


@pytest.fixture
def ellipse_ideal(ring_yx, ellipses):
    return Ideal(ring_yx, ellipses)


def cmaps(arity, max_terms=5, max_exp=3, coeff=5):
    """Strategy for coefficient maps with small integer coefficients."""
    mono = st.tuples(*[st.integers(0, max_exp)] * arity)
    return st.dictionaries(mono, st.integers(-coeff, coeff).filter(bool), max_size=max_terms)


def polys(ring, **kw):
    return cmaps(ring.arity, **kw).map(lambda d: Polynomial.from_dict(ring, d))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
