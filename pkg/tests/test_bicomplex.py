from fractions import Fraction

import pytest
from hypothesis import given, settings

from bcjq.bicomplex import (
    IJ,
    Bicomplex,
    ComplexS,
    I,
    IdempotentPair,
    J,
    NotInvertibleError,
    ProjectionError,
    bc_add,
    bc_conj,
    bc_inv,
    bc_mul,
    bc_norm_sq,
    bc_recompose,
    bc_split,
    parse,
    real_magnitude,
    render,
)
from bcjq.scalars import OMEGA, Cyclo

from .conftest import bicomplexes, cyclo_bicomplexes

W = Bicomplex(0, 1, 1, 2)  # i + j + 2ij


def test_add_examples():
    assert bc_add(1 + I, J + IJ) == Bicomplex(1, 1, 1, 1)
    assert bc_add(W, Bicomplex()) == W
    assert bc_add(W, Bicomplex(1, 1, 2, 5)) == Bicomplex(1, 2, 3, 7)


def test_basis_rules():
    assert bc_mul(I, J) == IJ
    assert I * I == -1
    assert J * J == -1
    assert bc_mul(IJ, IJ) == 1
    assert I * J == J * I


def test_square_of_initial_term():
    # expanded by hand from the four-component product formula
    assert W * W == Bicomplex(2, -4, -4, 2)


def test_zero_divisors_exist():
    assert (1 + IJ) * (1 - IJ) == 0


def test_conjugation_examples():
    assert bc_conj(W, "i") == Bicomplex(0, -1, 1, -2)
    assert bc_conj(Bicomplex(1), "ij") == 1
    assert bc_conj(bc_conj(W, "j"), "j") == W
    with pytest.raises(ValueError):
        bc_conj(W, "k")


def test_norm_examples():
    assert bc_norm_sq(W, "i") == Bicomplex(-4, 0, 4, 0)
    assert bc_norm_sq(W, "ij") == Bicomplex(6, 0, 0, -2)
    for kind in ("i", "j", "ij"):
        assert bc_norm_sq(Bicomplex(), kind) == 0


def test_norm_matches_component_formulas():
    # x1^2 + y1^2 - x2^2 - y2^2 + 2j(x1 x2 + y1 y2), etc.
    x1, y1, x2, y2 = (Fraction(v) for v in (3, -2, 5, 7))
    w = Bicomplex(x1, y1, x2, y2)
    assert w.norm_sq("i") == Bicomplex(x1**2 + y1**2 - x2**2 - y2**2, 0,
                                       2 * (x1 * x2 + y1 * y2), 0)
    assert w.norm_sq("j") == Bicomplex(x1**2 + x2**2 - y1**2 - y2**2,
                                       2 * (x1 * y1 + x2 * y2), 0, 0)
    assert w.norm_sq("ij") == Bicomplex(x1**2 + y1**2 + x2**2 + y2**2, 0, 0,
                                        2 * (x1 * y2 - x2 * y1))


def test_split_examples():
    assert bc_split(W) == IdempotentPair(ComplexS(2, 0), ComplexS(-2, 2))
    assert bc_split(Bicomplex(1)) == IdempotentPair(ComplexS(1), ComplexS(1))
    assert bc_split(1 + IJ) == IdempotentPair(ComplexS(2), ComplexS(0))


def test_inverse_examples():
    assert bc_inv(Bicomplex(1)) == 1
    assert bc_inv(IJ) == IJ
    assert bc_mul(W, bc_inv(W)) == 1


def test_inverse_of_zero_divisor_names_component():
    with pytest.raises(NotInvertibleError, match="e2"):
        bc_inv(1 + IJ)
    with pytest.raises(NotInvertibleError, match="e1"):
        bc_inv(1 - IJ)
    with pytest.raises(NotInvertibleError):
        bc_inv(Bicomplex())


def test_cyclo_coefficients():
    w = Bicomplex(1, OMEGA, OMEGA * OMEGA, 1)
    assert w * w.inverse() == 1
    assert not w.is_rational()
    with pytest.raises(ProjectionError):
        w.project()
    assert Bicomplex(Cyclo(3), 0, Cyclo(Fraction(1, 2)), 0).project() == Bicomplex(3, 0, Fraction(1, 2), 0)


def test_render_and_parse():
    assert render(W) == "0 + 1*i + 1*j + 2*ij"
    assert render(Bicomplex(2, -3, 1, Fraction(-1, 7))) == "2 - 3*i + 1*j - 1/7*ij"
    assert parse("1 + i - 2*ij") == Bicomplex(1, 1, 0, -2)
    assert parse("-1/2*j + 3") == Bicomplex(3, 0, Fraction(-1, 2), 0)
    for bad in ("", "1 +", "2 3", "i*i", "1 + k"):
        with pytest.raises(ValueError):
            parse(bad)


def test_real_magnitude_is_display_only():
    assert real_magnitude(Bicomplex(1, 2, 2, 4)) == pytest.approx(5.0)


@settings(max_examples=150, derandomize=True)
@given(bicomplexes)
def test_render_parse_round_trip(w):
    assert parse(render(w)) == w


@settings(max_examples=150, derandomize=True)
@given(bicomplexes, bicomplexes, bicomplexes)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=150, derandomize=True)
@given(bicomplexes, bicomplexes)
def test_split_is_homomorphism(a, b):
    assert bc_recompose(bc_split(a)) == a
    assert bc_split(a * b) == bc_split(a) * bc_split(b)


@settings(max_examples=150, derandomize=True)
@given(bicomplexes, bicomplexes)
def test_conjugations_are_multiplicative_involutions(a, b):
    for kind in ("i", "j", "ij"):
        assert (a * b).conj(kind) == a.conj(kind) * b.conj(kind)
        assert a.conj(kind).conj(kind) == a


@settings(max_examples=150, derandomize=True)
@given(bicomplexes)
def test_norm_shapes(a):
    assert a.norm_sq("i").w1 == 0 and a.norm_sq("i").w3 == 0
    assert a.norm_sq("j").w2 == 0 and a.norm_sq("j").w3 == 0
    assert a.norm_sq("ij").w1 == 0 and a.norm_sq("ij").w2 == 0


@settings(max_examples=200, derandomize=True)
@given(cyclo_bicomplexes)
def test_inverse_round_trip_over_cyclo(a):
    if a.is_invertible():
        assert a * a.inverse() == 1
    else:
        with pytest.raises(NotInvertibleError):
            a.inverse()
