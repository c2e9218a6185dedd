import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mopw.poly import ExactDivisionError, Poly
from mopw.rationals import rat

QUINTIC = Poly.from_strings(["-10", "185/3", "-7495/72", "647/9", "-119/6", "2"])


def test_constructor_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (rat(1), rat(2))
    assert Poly([0, 0]).is_zero
    assert Poly().degree == -1


def test_immutability():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()


def test_derivative_anchors():
    assert (Poly([rat(-1, 2), 0, 1])).derivative() == Poly([0, 2])
    assert Poly.constant(5).derivative().is_zero
    head = Poly.monomial(5, 2) + Poly.monomial(4, rat(-119, 6))
    assert head.derivative() == Poly.monomial(4, 10) + Poly.monomial(3, rat(-238, 3))


def test_evaluation_anchors():
    p = Poly([rat(-1, 2), 0, 1])
    assert p(0) == rat(-1, 2)
    assert p(1) == rat(1, 2)
    assert QUINTIC(1) == rat(13, 8)


def test_eval_complex():
    v, scale = Poly([1, 0, 1]).eval_complex(1j)
    assert abs(v) < 1e-15 and scale == 1.0
    v, scale = Poly([rat(-1, 2), 0, 1]).eval_complex(0j)
    assert v == -0.5


def test_eval_complex_scaling():
    big = Poly([rat(10**400), rat(0), rat(10**400)])
    v, scale = big.eval_complex(1j)
    assert abs(v) < 1e-15


def test_divmod_and_exact_div():
    p = Poly([-1, 0, 1])  # (x-1)(x+1)
    q, r = divmod(p, Poly([-1, 1]))
    assert q == Poly([1, 1]) and r.is_zero
    assert p.exact_div(Poly([1, 1])) == Poly([-1, 1])
    with pytest.raises(ExactDivisionError):
        Poly([1, 1]).exact_div(Poly([0, 1]))
    with pytest.raises(ZeroDivisionError):
        divmod(p, Poly.zero())


def test_gcd_and_squarefree():
    p = Poly([-1, 1]) * Poly([-1, 1]) * Poly([2, 1])
    assert p.gcd(p.derivative()) == Poly([-1, 1])
    assert p.squarefree_part() == (Poly([-1, 1]) * Poly([2, 1])).monic()
    assert Poly([0, 2]).gcd(Poly([0, 0, 3])) == Poly([0, 1])


def test_monic_and_leading():
    p = Poly([1, 0, 2])
    assert p.monic() == Poly([rat(1, 2), 0, 1])
    assert p.leading == rat(2)
    assert p.sign_at_pos_infinity() == 1
    assert p.sign_at_neg_infinity() == 1
    assert Poly([0, 1]).sign_at_neg_infinity() == -1


def test_antiderivative_inverts_derivative():
    p = Poly([rat(1, 3), 2, rat(-5, 7)])
    assert p.antiderivative().derivative() == p


def test_serialization_round_trip():
    assert Poly.from_strings(QUINTIC.to_strings()) == QUINTIC


coeffs_st = st.lists(
    st.fractions(max_denominator=50), min_size=0, max_size=6
).map(Poly)


@settings(max_examples=60, deadline=None)
@given(coeffs_st, coeffs_st, coeffs_st)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@settings(max_examples=60, deadline=None)
@given(coeffs_st, coeffs_st)
def test_divmod_reconstructs(a, b):
    if b.is_zero:
        return
    q, r = divmod(a, b)
    assert a == q * b + r
    assert r.degree < b.degree


@settings(max_examples=40, deadline=None)
@given(coeffs_st, coeffs_st)
def test_gcd_divides_both(a, b):
    if a.is_zero or b.is_zero:
        return
    g = a.gcd(b)
    assert divmod(a, g)[1].is_zero
    assert divmod(b, g)[1].is_zero
