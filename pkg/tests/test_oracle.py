from fractions import Fraction as F

import pytest

from binperiod import DiscreteSignal, HorizonError, pt
from binperiod.oracle import (WindowSignal, agree, brute_limit, brute_point_check,
                              brute_signal_check, discrete_window, growing_blocks_window,
                              growing_ones_window, real_window)
from binperiod.textio import parse_window, write_window

import corpus as C


def window_points(w):
    return set(w.values)


def test_odd_support_window():
    w = discrete_window(C.odd_support_from_one(), 30)
    assert brute_point_check(w, pt("11"), 2, 0)
    assert not brute_point_check(w, pt("11"), 2, -1)
    assert brute_limit(w, lambda v: v == pt("11"), 2) == 0


@pytest.mark.parametrize("make", [growing_blocks_window, growing_ones_window])
def test_non_periodic_windows_fail_everything(make):
    w = make(8)
    assert w.end >= 40
    for p in range(1, 7):
        for k in range(-1, 11):
            assert not brute_signal_check(w, p, k)
            for mu in window_points(w):
                assert not brute_point_check(w, mu, p, k)


def test_growing_blocks_prefix():
    w = growing_blocks_window(3)
    bits = "".join(str(w.at(k)) for k in range(w.start, w.end))
    assert bits == "010011000111"


def test_alternating_window():
    w = discrete_window(C.alternating(), 30)
    assert brute_signal_check(w, 2, -1)
    assert not any(brute_signal_check(w, 3, k) for k in range(-1, 10))


def test_heaviside_window():
    # [-2, 10) does not reach 0 + 3 * 7/2, so the coverage precondition rejects it
    with pytest.raises(HorizonError):
        brute_signal_check(real_window(C.heaviside(), -2, 10), F(7, 2), 0)
    w = real_window(C.heaviside(), -2, 11)
    assert brute_signal_check(w, F(7, 2), 0)
    assert brute_point_check(w, pt("1"), F(7, 2), 0)


def test_agree_five_train():
    rep = agree(C.five_train(), T_candidates=[1, 2, F(5, 2), 5, 10])
    assert rep.ok and rep.checks > 0
    assert set(rep.true_periods) & {1, 2, F(5, 2), 5, 10} == {5, 10}


def test_agree_constant_accepts_every_period():
    rep = agree(DiscreteSignal.constant(pt("1")))
    assert rep.ok and rep.true_periods == list(range(1, 13))


def test_agree_alternating():
    rep = agree(C.alternating())
    assert rep.ok and rep.true_periods == [2, 4, 6, 8, 10, 12]


def test_window_text_round_trip():
    for w in (growing_blocks_window(3), real_window(C.five_train(), -3, 12)):
        assert parse_window(write_window(w)) == w
