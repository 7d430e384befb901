from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cas_workbench.poly import (
    Polynomial,
    PolynomialError,
    Ring,
    add_poly,
    compare_monomials,
    derivative,
    evaluate,
    format_poly,
    integer_normalize,
    lead_term,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
    mul_poly,
    squarefree_part,
    univariate_coefficients,
    univariate_divmod,
    univariate_gcd,
)

from conftest import cmaps, polys
from oracles import cmap_add, cmap_eval, cmap_mul, dense_gcd

R2 = Ring(("y", "x"))
R3 = Ring(("z", "y", "x"))
RX = Ring(("x",))


def test_ring_validation():
    with pytest.raises(PolynomialError):
        Ring(())
    with pytest.raises(PolynomialError):
        Ring(("x", "x"))
    with pytest.raises(PolynomialError, match="characteristic"):
        Ring(("x",), characteristic=7)
    with pytest.raises(PolynomialError, match="order"):
        Ring(("x",), order="dp")


class TestCompareMonomials:
    def test_y_beats_x_squared(self):
        assert compare_monomials((1, 0), (0, 2), R2) == 1

    def test_reflexive(self):
        assert compare_monomials((2, 3), (2, 3), R2) == 0

    def test_left_to_right(self):
        # y^2 vs y*x^3: first exponent decides
        assert compare_monomials((2, 0), (1, 3), R2) == 1

    def test_arity_mismatch(self):
        with pytest.raises(PolynomialError):
            compare_monomials((1,), (1, 0))
        with pytest.raises(PolynomialError):
            compare_monomials((1, 0, 0), (1, 0, 0), R2)

    @given(st.tuples(st.integers(0, 4), st.integers(0, 4)),
           st.tuples(st.integers(0, 4), st.integers(0, 4)),
           st.tuples(st.integers(0, 4), st.integers(0, 4)))
    def test_order_laws(self, a, b, t):
        c = compare_monomials(a, b)
        assert c == -compare_monomials(b, a)
        assert (c == 0) == (a == b)
        at = tuple(i + j for i, j in zip(a, t))
        bt = tuple(i + j for i, j in zip(b, t))
        assert compare_monomials(at, bt) == c
        assert compare_monomials(a, (0, 0)) >= 0


def test_add_examples():
    y, x = R2.gens()
    f = 2 * x**2 - x * y
    assert f + R2.zero == f
    assert (f + (-f)).is_zero()
    # (2x^2 - xy) + (xy - 2) against the coefficient-map oracle
    g = x * y - 2
    expected = cmap_add(f.to_dict(), g.to_dict())
    assert (f + g).to_dict() == expected
    assert f + g == 2 * x**2 - 2
    with pytest.raises(PolynomialError):
        add_poly(f, RX.var("x"))


def test_mul_examples():
    (x,) = RX.gens()
    f = 2 * x - 1
    assert f * RX.one == f
    assert (f * RX.zero).is_zero()
    factors = [2 * x - 1, 2 * x + 1, x - 1, x + 1]
    oracle = {(0,): F(1)}
    prod = RX.one
    for p in factors:
        oracle = cmap_mul(oracle, p.to_dict())
        prod = mul_poly(prod, p)
    assert prod.to_dict() == oracle
    assert prod == 4 * x**4 - 5 * x**2 + 1
    assert format_poly(prod) == "4x4-5x2+1"


def test_lead_term():
    y, x = R2.gens()
    t = lead_term(3 * y + 8 * x**3 - 8 * x)
    assert t.coefficient == 3 and t.monomial == (1, 0)
    assert lead_term(R2.constant(7)) == (F(7), (0, 0))
    f = 2 * x**2 - x * y + 2 * y**2 - 2
    best = max(f.to_dict(), key=lambda m: m)
    assert lead_term(f).monomial == best == (2, 0)
    assert lead_term(f).coefficient == 2
    with pytest.raises(PolynomialError):
        lead_term(R2.zero)


def test_monomial_helpers():
    assert monomial_lcm((2, 0), (1, 1)) == (2, 1)
    assert monomial_divides((0, 0), (3, 5))
    assert monomial_quotient((2, 3), (1, 1)) == (1, 2)
    with pytest.raises(PolynomialError):
        monomial_quotient((1, 0), (0, 1))


def test_evaluate():
    y, x = R2.gens()
    e1 = 2 * x**2 - x * y + 2 * y**2 - 2
    e2 = 2 * x**2 - 3 * x * y + 3 * y**2 - 2
    assert evaluate(e1, (0, 1)) == 0
    assert evaluate(R2.zero, (5, 7)) == 0
    assert evaluate(e2, (1, F(1, 2))) == 0
    with pytest.raises(PolynomialError):
        evaluate(e1, (1,))


def test_integer_normalize():
    y, x = R2.gens()
    f = y + F(8, 3) * x**3 - F(8, 3) * x
    assert format_poly(integer_normalize(f)) == "3y+8x3-8x"
    (xx,) = RX.gens()
    assert integer_normalize(-xx) == xx
    assert integer_normalize(6 * xx**2 - 4) == 3 * xx**2 - 2
    with pytest.raises(PolynomialError):
        integer_normalize(RX.zero)


@given(polys(R2).filter(bool), st.fractions(max_denominator=50).filter(bool))
def test_integer_normalize_scale_invariant(f, c):
    assert integer_normalize(f.scale(c)) == integer_normalize(f)


def test_univariate_gcd_examples():
    (x,) = RX.gens()
    f = 4 * x**4 - 5 * x**2 + 1
    assert univariate_gcd(f, RX.zero) == f.monic()
    assert univariate_gcd((x - 1) * (x + 1), x - 1) == x - 1
    df = 16 * x**3 - 10 * x
    oracle = dense_gcd(univariate_coefficients(f, 0), univariate_coefficients(df, 0))
    assert oracle == [1]
    assert univariate_gcd(f, df) == RX.one
    y, x2 = R2.gens()
    with pytest.raises(PolynomialError):
        univariate_gcd(y + x2, x2)


def test_squarefree_and_derivative():
    (x,) = RX.gens()
    assert squarefree_part((x - 1) ** 2) == x - 1
    f = 4 * x**4 - 5 * x**2 + 1
    assert derivative(f, "x") == 16 * x**3 - 10 * x
    assert squarefree_part(f) == x**4 - F(5, 4) * x**2 + F(1, 4)
    with pytest.raises(PolynomialError):
        squarefree_part(RX.zero)
    with pytest.raises(PolynomialError):
        derivative(f, 3)


def test_format_poly():
    y, x = R2.gens()
    assert format_poly(R2.zero) == "0"
    assert format_poly(-y + 1) == "-y+1"
    assert format_poly(F(1, 3) * x**2 - 1) == "1/3x2-1"
    long = Ring(("x1", "x2"))
    a, b = long.gens()
    assert format_poly(2 * a**2 * b - b) == "2*x1^2*x2-x2"


# -- properties against the coefficient-map oracle ---------------------------


@settings(max_examples=150)
@given(st.data())
def test_ring_axioms(data):
    ring = data.draw(st.sampled_from([RX, R2, R3]))
    f, g, h = (data.draw(polys(ring)) for _ in range(3))
    assert (f + g).to_dict() == cmap_add(f.to_dict(), g.to_dict())
    assert (f * g).to_dict() == cmap_mul(f.to_dict(), g.to_dict())
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys(R2).filter(bool), polys(R2).filter(bool))
def test_lead_term_multiplicative(f, g):
    lf, lg = f.lead_term(), g.lead_term()
    lfg = (f * g).lead_term()
    assert lfg.coefficient == lf.coefficient * lg.coefficient
    assert lfg.monomial == tuple(a + b for a, b in zip(lf.monomial, lg.monomial))


@given(polys(R2), polys(R2), st.tuples(st.fractions(max_denominator=9), st.fractions(max_denominator=9)))
def test_evaluate_homomorphism(f, g, p):
    assert evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p)
    assert evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p)
    assert evaluate(f, p) == cmap_eval(f.to_dict(), p)


@given(polys(R2))
def test_terms_canonical(f):
    monos = [m for _, m in f.terms]
    assert monos == sorted(monos, reverse=True)
    assert len(set(monos)) == len(monos)
    assert all(c for c, _ in f.terms)


linear_factor = st.tuples(st.integers(-4, 4), st.integers(1, 3))


@settings(max_examples=100)
@given(st.lists(linear_factor, min_size=1, max_size=3),
       st.lists(linear_factor, max_size=2), st.lists(linear_factor, max_size=2))
def test_gcd_divides_and_is_greatest(common, left, right):
    (x,) = RX.gens()

    def build(fs):
        p = RX.one
        for a, b in fs:
            p = p * (b * x - a)
        return p

    c = build(common)
    f, g = c * build(left), c * build(right)
    d = univariate_gcd(f, g)
    for p in (f, g):
        assert univariate_divmod(p, d)[1].is_zero()
    assert univariate_divmod(d, c)[1].is_zero()
    assert d == d.monic()
    oracle = dense_gcd(univariate_coefficients(f, 0), univariate_coefficients(g, 0))
    assert univariate_coefficients(d, 0) == oracle


@given(cmaps(1, max_terms=4, max_exp=5))
def test_univariate_divmod_identity(d):
    (x,) = RX.gens()
    f = Polynomial.from_dict(RX, d)
    g = 2 * x**2 - 3
    q, r = univariate_divmod(f, g)
    assert q * g + r == f
    assert r.degree(0) < 2
