from fractions import Fraction

import pytest

from bcjq.bcq import (
    BCJ_EP,
    BCU_EP,
    BCV_EP,
    HAT2,
    HAT_W1,
    J_EP,
    NORM_AXES,
    PHI,
    bcj,
    bcj_binet,
    bcj_binet_exact,
    bcj_conj,
    bcj_matpow,
    bcj_norm,
    bcj_recurrence,
    bcj_recurrence_iter,
    bcj_sum,
    bcj_sum_cases,
    bcj_sum_direct,
    bcu,
    bcv,
    hat_w1_w2,
    norm_candidates_eval,
    norm_shape_ok,
    quaternion_ep,
)
from bcjq.bicomplex import Bicomplex
from bcjq.scalars import OMEGA1, OMEGA2
from bcjq.sequences import j3


def test_initial_terms():
    assert bcj(0) == Bicomplex(0, 1, 1, 2)
    assert bcj(2) == Bicomplex(1, 2, 5, 9)
    assert bcj(3) == Bicomplex(2, 5, 9, 18)


def test_companions():
    assert bcv(0) == Bicomplex(2, -3, 1, 2)
    assert bcv(1) == Bicomplex(-3, 1, 2, -3)
    assert bcv(2) == Bicomplex(1, 2, -3, 1)
    assert bcu(0) == Bicomplex(1, -1, 0, 1)
    for n in range(20):
        assert bcv(n + 3) == bcv(n)
        assert bcv(n) + bcv(n + 1) + bcv(n + 2) == 0


def test_constants():
    assert HAT2 == Bicomplex(1, 2, 4, 8)
    assert HAT_W1.w3 == 1
    assert (2 - OMEGA1) * (2 - OMEGA2) == 7
    assert PHI == 7 * (OMEGA1 - OMEGA2)
    assert hat_w1_w2() == Bicomplex(0, 0, 0, 1)


def test_binet_examples():
    assert bcj_binet(0) == bcj(0)
    assert bcj_binet(7) == Bicomplex(37, 73, 146, 293)
    assert bcj_binet_exact(7).is_rational()


def test_compact_closed_form():
    for n in range(51):
        assert 7 * bcj(n) == HAT2 * 2 ** (n + 1) - bcv(n)


def test_paths_agree():
    for n in range(201):
        ref = Bicomplex(j3(n), j3(n + 1), j3(n + 2), j3(n + 3))
        assert bcj(n) == ref
        assert bcj_recurrence(n) == ref
        assert bcj_recurrence_iter(n) == ref
        assert bcj_matpow(n) == ref
        assert bcj_binet(n) == ref


def test_conj_and_norm_examples():
    assert bcj_conj(0, "i") == Bicomplex(0, -1, 1, -2)
    assert bcj_norm(0, "i") == Bicomplex(-4, 0, 4, 0)
    assert bcj_norm(0, "ij") == Bicomplex(6, 0, 0, -2)
    assert bcj_norm(0, "j") == bcj(0) * bcj(0).conj("j")


def test_norm_shapes():
    for kind in NORM_AXES:
        for n in range(51):
            assert norm_shape_ok(bcj_norm(n, kind), kind)
    assert not norm_shape_ok(Bicomplex(0, 1, 0, 0), "i")


def test_norm_candidates():
    cand, definitional = norm_candidates_eval(0, "ij")
    assert definitional == Bicomplex(6, 0, 0, -2)
    assert cand == definitional
    cand_i, def_i = norm_candidates_eval(0, "i")
    assert def_i == Bicomplex(-4, 0, 4, 0)
    assert cand_i.w0 == Fraction(-148, 49)
    with pytest.raises(ValueError):
        norm_candidates_eval(0, "k")


def test_sum_examples():
    assert bcj_sum(0) == bcj(0)
    assert bcj_sum(2) == Bicomplex(2, 4, 8, 16)
    assert bcj_sum_cases(2) == Bicomplex(j3(3), j3(4) - 1, j3(5) - 1, j3(6) - 2)
    for n in range(40):
        assert bcj_sum(n) == bcj_sum_direct(n) == bcj_sum_cases(n)


def test_normal_forms_are_faithful():
    lifted = quaternion_ep(J_EP)
    assert lifted == BCJ_EP
    for n in range(61):
        assert BCJ_EP(n) == bcj(n)
        assert BCV_EP(n) == bcv(n)
        assert BCU_EP(n) == bcu(n)
