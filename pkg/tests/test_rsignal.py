import random
from fractions import Fraction as F

import pytest

from binperiod import (DomainError, RealSignal, WidthError, pt, r_canonicalize, r_forget,
                       r_limits, r_summarize, r_support_set, r_value_at)
from binperiod.core import TimeSet

from corpus import five_train, heaviside, ones_from_zero, real_corpus, three_value


def sample_times(sig, count=40, seed=0):
    rng = random.Random(seed)
    lo = sig.lowest_time() - 2
    hi = (sig.tail.anchor + 3 * sig.tail.period) if sig.tail else lo + 20
    pts = set(sig.candidate_breaks(lo, hi))
    pts |= {lo + (hi - lo) * F(rng.randint(0, 997), 997) for _ in range(count)}
    return sorted(pts)


def test_heaviside_values():
    h = heaviside()
    assert r_value_at(h, 0) == pt("1")
    assert r_value_at(h, F(-1, 1000)) == pt("0")
    assert r_limits(h, 0) == (pt("0"), pt("1"))


def test_square_train_values():
    x = ones_from_zero()
    assert r_value_at(x, F(5, 2)) == pt("1")
    assert r_value_at(x, F(7, 2)) == pt("0")
    assert r_value_at(x, 2) == pt("1")
    assert r_limits(x, 1) == (pt("1"), pt("0"))


def test_far_left_is_initial():
    for sig in real_corpus(30):
        assert r_value_at(sig, sig.lowest_time() - 1000) == sig.initial


def test_constant_limits():
    c = RealSignal.constant(pt("01"))
    assert r_limits(c, F(7, 3)) == (pt("01"), pt("01"))


def test_right_continuity():
    for sig in real_corpus(40):
        for t in sample_times(sig):
            assert r_limits(sig, t)[1] == r_value_at(sig, t)
            # left limit equals the value slightly before t
            eps = F(1, 10 ** 6)
            assert r_limits(sig, t)[0] == r_value_at(sig, t - eps)


def test_canonical_preserves_values_and_is_idempotent():
    for sig in real_corpus(60):
        c = r_canonicalize(sig)
        assert r_canonicalize(c) == c
        for t in sample_times(sig):
            assert r_value_at(c, t) == r_value_at(sig, t)


def test_equal_signals_have_equal_canonical_forms():
    a = RealSignal.build("1", [(0, "0")], (1, 5, [(0, "1"), (1, "0"), (2, "1"), (4, "0")]))
    b = RealSignal.build("1", [(0, "0"), (1, "1"), (2, "0")],
                         (3, 10, [(0, "1"), (2, "0"), (3, "1"), (4, "0"), (5, "1"),
                                  (7, "0"), (8, "1"), (9, "0")]))
    assert r_canonicalize(a) == r_canonicalize(b)
    assert r_canonicalize(a).tail.period == 5


def test_uniform_tail_becomes_constant_tail():
    s = RealSignal.build("0", [(0, "1")], (3, 2, [(0, "1"), (1, "1")]))
    c = r_canonicalize(s)
    assert c.tail is None and c.transient == ((F(0), pt("1")),)


def test_tail_anchor_before_transient_rejected():
    with pytest.raises(DomainError):
        RealSignal.build("0", [(5, "1")], (3, 2, [(0, "1"), (1, "0")]))


def test_forget_initial_time_is_identity():
    for sig in real_corpus(40):
        t0 = sig.first_change()
        if t0 is None:
            continue
        for tp in (t0, t0 - 1, t0 - F(7, 2)):
            assert r_forget(sig, tp) == r_canonicalize(sig)


def test_forget_composes_to_max():
    rng = random.Random(5)
    for sig in real_corpus(50):
        a = F(rng.randint(-12, 24), 2)
        b = F(rng.randint(-12, 24), 3)
        left = r_forget(r_forget(sig, a), b)
        assert left == r_forget(sig, max(a, b))


def test_forget_square_train():
    f = r_forget(ones_from_zero(), F(3, 2))
    # x(3/2 - 0) = 0 since the train is 0 on [1, 2)
    assert f.initial == pt("0")
    assert f.first_change() == 2
    x = ones_from_zero()
    for t in sample_times(x, seed=1):
        want = r_value_at(x, t) if t >= F(3, 2) else r_limits(x, F(3, 2))[0]
        assert r_value_at(f, t) == want


def test_summary_heaviside():
    s = r_summarize(heaviside())
    assert s.initial_time_set == TimeSet.upto(0)
    assert s.final_time_set == TimeSet.since(0)
    assert s.final_value == pt("1")


def test_summary_constant():
    s = r_summarize(RealSignal.constant(pt("1")))
    assert s.initial_time_set == TimeSet.all()
    assert s.final_time_set == TimeSet.all()


def test_summary_periodic_has_no_final_value():
    s = r_summarize(ones_from_zero())
    assert s.final_time_set == TimeSet.empty() and s.final_value is None


def test_omega_horizon_window():
    for sig in real_corpus(60):
        s = r_summarize(sig)
        if s.omega_horizon is None:
            continue
        for t in sample_times(sig, seed=2):
            if t >= s.omega_horizon:
                assert r_value_at(sig, t) in s.omega
        assert r_limits(sig, s.omega_horizon)[0] not in s.omega


def test_support_of_three_value_signal():
    s = r_support_set(three_value(2), pt("11"))
    assert s.initial_ray is None and s.transient_intervals == ()
    assert (s.tail.anchor, s.tail.period, s.tail.pattern) == (3, 3, ((3, 4),))


def test_support_constant_is_everything():
    s = r_support_set(RealSignal.constant(pt("1")), pt("1"))
    assert s.everything
    with pytest.raises(WidthError):
        r_support_set(RealSignal.constant(pt("1")), pt("11"))


def test_support_of_initial_value():
    s = r_support_set(five_train(), pt("1"))
    assert s.initial_ray == 0
    assert s.tail.pattern == ((1, 2), (3, 5))


def test_support_matches_values():
    for sig in real_corpus(50):
        vals = {sig.initial} | {v for _, v in sig.transient}
        if sig.tail:
            vals |= {v for _, v in sig.tail.pattern}
        sets = {v: r_support_set(sig, v) for v in vals}
        for t in sample_times(sig, seed=3):
            hits = [v for v, s in sets.items() if t in s]
            # the support sets partition the time axis
            assert hits == [r_value_at(sig, t)]


def test_forget_keeps_omega():
    rng = random.Random(9)
    for sig in real_corpus(40):
        s = r_summarize(sig)
        for _ in range(3):
            f = r_summarize(r_forget(sig, F(rng.randint(-8, 30), 2)))
            assert f.omega == s.omega
            assert f.orbit <= s.orbit
