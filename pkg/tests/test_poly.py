import random
from fractions import Fraction as F

import pytest

from cdmac.poly import Mon, SparsePoly, poly_gcd, _dict_exact_div


def rnd_poly(rng, nterms=4, deg=5):
    terms = {}
    for _ in range(nterms):
        e = (rng.randrange(deg), rng.randrange(deg), rng.randrange(3))
        terms[e] = F(rng.randrange(-6, 7) or 1, rng.randrange(1, 5))
    return SparsePoly.from_terms(terms)


def test_zero_and_one():
    assert SparsePoly.zero().is_zero()
    assert not SparsePoly.one().is_zero()
    assert str(SparsePoly.zero()) == "0"
    assert str(SparsePoly.one()) == "1"


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(40):
        a, b, c = (rnd_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == SparsePoly.zero()


def test_no_zero_coefficients_stored():
    p = SparsePoly.from_terms({(1, 0, 0): F(1)}) - SparsePoly.from_terms({(1, 0, 0): F(1)})
    assert p.prim == {}


def test_leading_term_graded_lex():
    # u > v > w, graded first: v^4 beats u^2
    p = SparsePoly.from_terms({(2, 0, 0): F(1), (0, 4, 0): F(-1)})
    assert p.leading_coeff() == F(-1)
    assert str(p) == "-t^{1/2}^4 + q^{1/2}^2"
    # same degree: u^2 beats v^2
    p = SparsePoly.from_terms({(0, 2, 0): F(3), (2, 0, 0): F(2)})
    assert p.leading_coeff() == F(2)


def test_serialization_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        p = rnd_poly(rng)
        assert SparsePoly.parse(str(p)) == p
    assert SparsePoly.parse("0") == SparsePoly.zero()
    assert SparsePoly.parse("-2/3*q^{1/2}^3*T^{1/2} + 5") == SparsePoly.from_terms(
        {(3, 0, 1): F(-2, 3), (0, 0, 0): F(5)})


def test_eval_matches_termwise():
    rng = random.Random(3)
    u, v, w = F(2, 3), F(3, 5), F(5, 7)
    for _ in range(20):
        p = rnd_poly(rng)
        expect = sum(c * u ** a * v ** b * w ** e for (a, b, e), c in p.terms().items())
        assert p.eval(u, v, w) == expect


def test_mon_arithmetic():
    m = Mon.q(2) * Mon.t(-1)
    assert m.exp == (4, -2, 0)
    assert (m / m).is_one()
    assert (Mon.T() ** 2).exp == (0, 0, 4)
    assert Mon.half(qh=1, th=-1).exp == (1, -1, 0)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        SparsePoly.from_mon(Mon(1, (-1, 0, 0)))


def test_gcd_divides_both():
    rng = random.Random(11)
    for _ in range(30):
        g = rnd_poly(rng, 2, 3)
        a = rnd_poly(rng, 3, 3) * g
        b = rnd_poly(rng, 3, 3) * g
        if a.is_zero() or b.is_zero():
            continue
        d = poly_gcd(a, b)
        _dict_exact_div(a.prim, d.prim, 0)
        _dict_exact_div(b.prim, d.prim, 0)
        # the common factor g divides the gcd
        _dict_exact_div(d.prim, g.prim, 0)
