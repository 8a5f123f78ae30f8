import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcjq.scalars import OMEGA1, OMEGA2, Cyclo
from bcjq.sequences import (
    DEFAULT_PARAMS,
    SeqParams,
    companion_power,
    exact_div,
    j3,
    j3_binet,
    j3_iter,
    j3_matpow,
    j3_sum,
    j3_sum_cases,
    quadratic_approx_check,
    u3,
    v3,
    v3_binet,
)


def test_initial_terms_and_unrolling():
    assert [j3(n) for n in range(8)] == [0, 1, 1, 2, 5, 9, 18, 37]
    assert j3(11) == 585 == (2 ** 12 - 1) // 7


def test_v_and_u_tables():
    assert [v3(n) for n in range(3)] == [2, -3, 1]
    assert v3(9) == 2
    assert [u3(n) for n in range(3)] == [1, -1, 0]
    for n in range(11):
        assert v3(n) + v3(n + 1) + v3(n + 2) == 0
        assert u3(n + 3) == u3(n)


def test_closed_form_relation():
    for n in range(201):
        assert 7 * j3(n) + v3(n) == 2 ** (n + 1)


def test_binet_examples():
    assert j3_binet(0) == 0
    assert j3_binet(4) == 5
    for n in range(40):
        assert v3_binet(n) == v3(n)


def test_matpow_examples():
    assert j3_matpow(2) == 1
    assert j3_matpow(7) == 37
    assert companion_power(0) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_three_paths_agree():
    for n in range(201):
        assert j3(n) == j3_iter(n) == j3_binet(n) == j3_matpow(n)


def test_sum_examples():
    assert j3_sum(0) == 0
    assert j3_sum(4) == 9
    running = 0
    for n in range(101):
        running += j3(n)
        assert j3_sum(n) == running == j3_sum_cases(n)


def test_params():
    p = DEFAULT_PARAMS
    assert p.P == 2
    assert p.Q == OMEGA1
    assert p.R == OMEGA2
    assert p.A == -3 - 2 * OMEGA2


def test_quadratic_examples():
    first = quadratic_approx_check(0)
    assert first.lhs[0] == 8 and first.rhs[0] == 8
    assert first.lhs[1] == 1 == first.rhs[1]
    assert quadratic_approx_check(1).lhs[1] == OMEGA1
    assert all(quadratic_approx_check(n) for n in range(51))


def test_quadratic_fails_for_other_alpha():
    check = quadratic_approx_check(0, SeqParams(alpha=Cyclo(3)))
    assert check.holds == (True, False, False)
    assert not check


def test_exact_div_refuses_remainder():
    assert exact_div(21, 7) == 3
    with pytest.raises(ArithmeticError):
        exact_div(22, 7)


@pytest.mark.parametrize("fn", [j3, v3, u3, j3_binet, j3_matpow, j3_sum])
def test_negative_index_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)


def test_cache_is_consistent_under_threads():
    results = {}

    def work(k):
        results[k] = [j3(n) for n in range(300 + k, 200, -1)]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for k, values in results.items():
        assert values == [j3_iter(n) for n in range(300 + k, 200, -1)]


@settings(max_examples=100, derandomize=True)
@given(st.integers(min_value=1, max_value=400))
def test_sum_telescopes(n):
    assert j3_sum(n) - j3_sum(n - 1) == j3(n)
