import numpy as np
import pytest
from hypothesis import given, strategies as st

from regpair.errors import ParseError
from regpair.loops import Loop
from regpair.parser import parse_fourier, parse_loop, parse_rational
from regpair.rational import RationalFunction, divisor, order_at, poly_gcd, tame_symbol


# -- parser ------------------------------------------------------------------


@pytest.mark.parametrize("text, x, expected", [
    ("z", 2.0, 2.0),
    ("1-z", 0.25, 0.75),
    ("(z-2)*(z-3)", 0.0, 6.0),
    ("z^-2", 2.0, 0.25),
    ("(z+1)/(z-1)", 3.0, 2.0),
    ("2.5i*z", 1.0, 2.5j),
    ("-z^2 + 3", 1j, 4.0),
    ("i", 0.0, 1j),
    ("(z - 0.5)^3 / z", 1.0, 0.125),
])
def test_parse_and_evaluate(text, x, expected):
    assert parse_rational(text)(x) == pytest.approx(expected)


@pytest.mark.parametrize("text, offset", [("z+", 2), ("(z-1", 4), ("z $ 1", 2), ("2*0", 2)])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_rational(text)
    assert info.value.offset == offset


def test_parse_fourier_literal():
    assert parse_fourier("fourier(0:1,0; 1:0.5,-0.25; -2:0,1)") == {0: 1, 1: 0.5 - 0.25j, -2: 1j}


def test_parse_loop_literals():
    c = parse_loop("circle(1,-0.5,0.25)")
    assert c.basepoint == pytest.approx(1.25 - 0.5j)
    f = parse_loop("fourier(0:0.1,0; 1:1,0)")
    assert f.basepoint == pytest.approx(1.1)


# -- rational functions ----------------------------------------------------


def test_reduction_by_gcd():
    f = parse_rational("(z-1)*(z-2)/((z-1)*(z+3))")
    assert f == parse_rational("(z-2)/(z+3)")
    assert f.denominator[-1] == 1


def test_poly_gcd_monic():
    a = np.array([2.0, -3.0, 1.0])   # (z-1)(z-2)
    b = np.array([-3.0, 2.0, 1.0])   # (z-1)(z+3)
    np.testing.assert_allclose(poly_gcd(a, b), [-1.0, 1.0], atol=1e-12)


def test_field_operations():
    f = parse_rational("(z+1)/(z-2)")
    g = parse_rational("z^2")
    x = 0.3 + 0.7j
    assert (f * g)(x) == pytest.approx(f(x) * g(x))
    assert (f / g)(x) == pytest.approx(f(x) / g(x))
    assert (f + g)(x) == pytest.approx(f(x) + g(x))
    assert (f - g)(x) == pytest.approx(f(x) - g(x))
    assert (f ** -2)(x) == pytest.approx(f(x) ** -2)


def test_divisor_of_simple_function():
    d = divisor(parse_rational("(z-0.5)^2*(z+3)/(z-2)"))
    pts = dict((round(x.real, 8), k) for x, k in d.points)
    assert pts == {-3.0: 1, 0.5: 2, 2.0: -1}
    assert d.order_at_infinity == -2
    assert d.degree == 0


@pytest.mark.parametrize("f, x, k", [
    ("z", 0, 1), ("z", "inf", -1), ("1/z", 0, -1), ("3", 0, 0), ("(z-1)^3", 1, 3), ("1/(z-1)^2", "inf", 2),
])
def test_order_at(f, x, k):
    assert order_at(parse_rational(f), x) == k


@pytest.mark.parametrize("f, g, x, expected", [
    ("z", "z", 0, -1),
    ("z", "1-z", 0, 1),
    ("z-2", "z", 0, -2),
    ("z", "2", 0, 1 / 2),
    ("2", "z", 0, 2),
    ("z", "z", "inf", -1),
    ("z", "1-z", 1, 1),
])
def test_tame_symbol_values(f, g, x, expected):
    assert tame_symbol(parse_rational(f), parse_rational(g), x) == pytest.approx(expected)


def _rational(seed):
    rng = np.random.default_rng(seed)

    def poly(k):
        roots = [complex(*rng.integers(-3, 4, 2)) / 2 for _ in range(k)]
        return np.atleast_1d(np.poly(roots))[::-1]

    num = poly(int(rng.integers(0, 3))) * complex(*rng.uniform(0.5, 2, 2))
    return RationalFunction(tuple(num), tuple(poly(int(rng.integers(0, 3)))))


@given(st.integers(0, 2**31))
def test_divisor_has_degree_zero(seed):
    assert divisor(_rational(seed)).degree == 0


@given(st.integers(0, 2**31), st.integers(0, 2**31), st.integers(0, 2**31))
def test_tame_bimultiplicative_and_skew(s1, s2, s3):
    f1, f2, g = _rational(s1), _rational(s2), _rational(s3)
    for x in divisor(f1 * f2).support + divisor(g).support + (0j, "inf"):
        lhs = tame_symbol(f1 * f2, g, x)
        assert lhs == pytest.approx(tame_symbol(f1, g, x) * tame_symbol(f2, g, x), rel=1e-9)
        assert tame_symbol(f1, g, x) * tame_symbol(g, f1, x) == pytest.approx(1, rel=1e-9)


@given(st.integers(0, 2**31))
def test_weil_reciprocity(seed):
    # product of tame symbols over all points of the sphere is 1
    rng = np.random.default_rng(seed)
    f, g = _rational(seed), _rational(int(rng.integers(2**31)))
    points = []
    for x in divisor(f).support + divisor(g).support:
        if all(abs(x - y) > 1e-8 for y in points):
            points.append(x)
    total = tame_symbol(f, g, "inf")
    for x in points:
        total *= tame_symbol(f, g, x)
    assert total == pytest.approx(1, rel=1e-8)
