import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cas_workbench.groebner import (
    GroebnerBasis,
    GroebnerError,
    Ideal,
    buchberger,
    eliminate,
    format_basis,
    groebner,
    ideal_contains,
    is_groebner_basis,
    normal_form,
    reduce_basis,
    spoly,
)
from cas_workbench.poly import Polynomial, Ring, format_poly, integer_normalize, monomial_divides

from conftest import polys
from oracles import cmap_add, cmap_mul

R = Ring(("y", "x"))
y, x = R.gens()


def random_ideal(rng, ring=R, max_deg=3, coeff=5):
    monos = [(i, j) for i in range(max_deg + 1) for j in range(max_deg + 1) if i + j <= max_deg]
    gens = []
    while len(gens) < rng.randint(2, 3):
        d = {m: rng.randint(-coeff, coeff) for m in rng.sample(monos, rng.randint(1, 6))}
        p = Polynomial.from_dict(ring, d)
        if p:
            gens.append(p)
    return gens


def assert_division_identity(f, divisors):
    r, qs = normal_form(f, divisors)
    total = r
    for q, g in zip(qs, divisors):
        total = total + q * g
    assert total == f
    leads = [g.lead_monomial() for g in divisors]
    for _, m in r.terms:
        assert not any(monomial_divides(lm, m) for lm in leads)
    return r, qs


class TestSpoly:
    def test_self(self, ellipses):
        assert spoly(ellipses[0], ellipses[0]).is_zero()

    def test_monomials_cancel(self):
        assert spoly(x**2, x * y).is_zero()

    def test_ellipses(self, ellipses):
        f, g = ellipses
        # lead terms 2y^2 and 3y^2, lcm y^2: s = f/2 - g/3 on coefficient maps
        oracle = cmap_add(cmap_mul(f.to_dict(), {(0, 0): F(1, 2)}), cmap_mul(g.to_dict(), {(0, 0): F(-1, 3)}))
        assert spoly(f, g).to_dict() == oracle
        assert spoly(f, g) == F(1, 3) * x**2 + F(1, 2) * x * y - F(1, 3)

    def test_zero_input(self):
        with pytest.raises(GroebnerError):
            spoly(R.zero, x)


class TestNormalForm:
    def test_self(self, ellipses):
        r, qs = normal_form(ellipses[0], [ellipses[0]])
        assert r.is_zero() and qs == [R.one]

    def test_substitution(self):
        r, qs = assert_division_identity(y**2, [y - x])
        assert r == x**2
        assert qs == [y + x]

    def test_no_divisor(self):
        r, qs = normal_form(x, [y])
        assert r == x and qs[0].is_zero()

    def test_empty(self):
        with pytest.raises(GroebnerError):
            normal_form(x, [])

    def test_first_divisor_wins(self):
        _, qs = normal_form(x * y, [y, x])
        assert qs == [x, R.zero]

    @settings(max_examples=150)
    @given(polys(R), st.lists(polys(R).filter(bool), min_size=1, max_size=3))
    def test_division_identity(self, f, divisors):
        assert_division_identity(f, divisors)


class TestBuchberger:
    def test_single(self, ellipses):
        basis = buchberger(Ideal(R, [ellipses[0]]))
        assert list(basis) == [ellipses[0].monic()]

    def test_linear(self):
        basis = reduce_basis(buchberger(Ideal(R, [y - x, x - 1])))
        other = groebner(Ideal(R, [x - 1, y - 1]))
        assert list(basis) == list(other) == [x - 1, y - 1]
        for g in basis:
            assert normal_form(g, list(other))[0].is_zero()

    def test_ellipse_golden(self, ellipse_ideal):
        basis = reduce_basis(buchberger(ellipse_ideal))
        assert [format_poly(integer_normalize(g)) for g in basis] == ["4x4-5x2+1", "3y+8x3-8x"]
        assert format_basis(basis) == "_[1]=4x4-5x2+1\n_[2]=3y+8x3-8x"

    def test_zero_generators_dropped(self):
        ideal = Ideal(R, [R.zero, x - 1])
        assert ideal.generators == (x - 1,)
        with pytest.raises(GroebnerError):
            Ideal(R, [R.zero])

    def test_trace_is_deterministic(self, ellipse_ideal):
        t1, t2 = [], []
        buchberger(ellipse_ideal, trace=t1)
        buchberger(Ideal(R, ellipse_ideal.generators), trace=t2)
        assert t1 == t2 and t1


class TestReduceBasis:
    def test_drop_redundant(self):
        basis = reduce_basis(GroebnerBasis(R, [x, x**2]))
        assert list(basis) == [x]

    def test_two_elements(self, ellipse_ideal):
        assert len(reduce_basis(buchberger(ellipse_ideal))) == 2

    def test_idempotent(self, ellipse_ideal):
        once = reduce_basis(buchberger(ellipse_ideal))
        assert reduce_basis(once) == once
        assert reduce_basis(GroebnerBasis(R, once.elements)) == once

    def test_rejects_non_basis(self, ellipses):
        with pytest.raises(GroebnerError):
            reduce_basis(GroebnerBasis(R, ellipses))


class TestEliminate:
    def test_ellipse(self, ellipse_ideal):
        assert eliminate(groebner(ellipse_ideal), ["x"]) == [x**4 - F(5, 4) * x**2 + F(1, 4)]

    def test_keep_all(self, ellipse_ideal):
        basis = groebner(ellipse_ideal)
        assert eliminate(basis, ["y", "x"]) == list(basis)

    def test_linear(self):
        basis = groebner(Ideal(R, [x - 1, y - 1]))
        # variable-support scan
        expected = [g for g in basis if all(m[0] == 0 for _, m in g.terms)]
        assert eliminate(basis, [1]) == expected == [x - 1]

    def test_not_suffix(self, ellipse_ideal):
        with pytest.raises(GroebnerError):
            eliminate(groebner(ellipse_ideal), ["y"])


class TestIdealContains:
    def test_generator(self, ellipse_ideal, ellipses):
        assert ideal_contains(ellipses[0], ellipse_ideal)

    def test_one(self, ellipse_ideal):
        assert not ideal_contains(R.one, ellipse_ideal)

    def test_eliminant(self, ellipse_ideal):
        assert ideal_contains(4 * x**4 - 5 * x**2 + 1, ellipse_ideal)
        assert (3 * y + 8 * x**3 - 8 * x) in ellipse_ideal

    def test_ring_mismatch(self, ellipse_ideal):
        with pytest.raises(GroebnerError):
            ideal_contains(Ring(("x",)).one, ellipse_ideal)


def test_three_variables_elimination():
    ring = Ring(("z", "y", "x"))
    z, yy, xx = ring.gens()
    ideal = Ideal(ring, [z - yy - xx, yy - xx**2, xx**2 - 2])
    basis = groebner(ideal)
    assert eliminate(basis, ["x"]) == [xx**2 - 2]
    assert len(eliminate(basis, ["y", "x"])) == 2


@pytest.mark.parametrize("seed", range(25))
def test_random_ideals(seed):
    rng = random.Random(seed)
    gens = random_ideal(rng)
    basis = buchberger(Ideal(R, gens))
    assert is_groebner_basis(basis.elements)
    for g in gens:
        assert_division_identity(g, list(basis))
        assert normal_form(g, list(basis))[0].is_zero()
    reversed_basis = list(buchberger(Ideal(R, gens[::-1])))
    for g in basis:
        assert normal_form(g, reversed_basis)[0].is_zero()
    reduced = reduce_basis(basis)
    assert reduce_basis(buchberger(Ideal(R, gens[::-1]))) == reduced
    for g in reduced:
        assert g.lead_coefficient() == 1
        others = [h.lead_monomial() for h in reduced if h is not g]
        assert not any(monomial_divides(lm, m) for lm in others for _, m in g.terms)
