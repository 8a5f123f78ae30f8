import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcjq.bicomplex import Bicomplex, I
from bcjq.exppoly import ExpPoly
from bcjq.scalars import OMEGA

from .conftest import bicomplexes

small = st.integers(min_value=-3, max_value=3)


def test_basic_evaluation():
    x = ExpPoly.pow2(1)
    assert [x(n) for n in range(4)] == [1, 2, 4, 8]
    assert ExpPoly.periodic([2, -3, 1])(4) == -3
    assert (x * x)(5) == 1024
    assert ExpPoly.const(5)(7) == 5


def test_shift_rotates_residues():
    p = ExpPoly.periodic([1, 2, 3], degree=1)
    for k in range(4):
        shifted = p.shift(k)
        for n in range(12):
            assert shifted(n) == p(n + k)
    with pytest.raises(ValueError):
        p.shift(-1)


def test_products_respect_residues():
    a = ExpPoly.periodic([1, 0, 0])
    b = ExpPoly.periodic([0, 1, 0])
    assert (a * b).is_structurally_zero()


def test_cyclo_coefficients_must_be_rational():
    assert ExpPoly.const(Bicomplex(OMEGA + 1 - OMEGA))(0) == 1
    with pytest.raises(Exception):
        ExpPoly.const(Bicomplex(OMEGA))


def test_bad_keys():
    with pytest.raises(ValueError):
        ExpPoly({(0, 3): 1})
    with pytest.raises(ValueError):
        ExpPoly.periodic([1, 2])


tables = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 2)),
    st.builds(Bicomplex, small, small, small, small),
    max_size=6,
)


@settings(max_examples=300, derandomize=True)
@given(tables)
def test_zero_decision_is_sound(table):
    p = ExpPoly(table)
    bound = p.sample_bound()
    on_samples = all(not p(n) for n in range(bound))
    on_long_range = all(not p(n) for n in range(61))
    assert on_samples == on_long_range


@settings(max_examples=200, derandomize=True)
@given(tables, st.integers(0, 2))
def test_cancellation_probes(table, residue):
    # build p - q where q agrees with p except on one residue
    p = ExpPoly(table)
    tweaked = dict(p.coeff)
    tweaked[(0, residue)] = tweaked.get((0, residue), Bicomplex()) + I
    diff = p - ExpPoly(tweaked)
    assert any(diff(n) for n in range(diff.sample_bound()))


@settings(max_examples=150, derandomize=True)
@given(tables, tables, st.integers(0, 20))
def test_arithmetic_is_pointwise(t1, t2, n):
    a, b = ExpPoly(t1), ExpPoly(t2)
    assert (a + b)(n) == a(n) + b(n)
    assert (a * b)(n) == a(n) * b(n)
    assert (a - b)(n) == a(n) - b(n)
    assert a.conj("j")(n) == a(n).conj("j")


@settings(max_examples=100, derandomize=True)
@given(bicomplexes, st.integers(0, 30))
def test_scalar_lift(c, n):
    p = ExpPoly.pow2(2, c)
    assert p(n) == c * 4 ** n
    assert (p / 3)(n) == c * 4 ** n / 3
