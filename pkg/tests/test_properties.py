from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from binperiod import (DiscreteSignal, Point, RealSignal, Tail, analyze_point, analyze_signal,
                       d_canonicalize, d_forget, r_canonicalize, r_value_at)
from binperiod.oracle import brute_point_check, discrete_window

import criteria


@pytest.mark.parametrize("name", list(criteria.PROPERTIES))
def test_property(name):
    failures = criteria.property_result(name)
    assert not failures, "\n".join(failures[:10])


# generated signals --------------------------------------------------------------

def points(n):
    return st.integers(0, 2 ** n - 1).map(lambda i: Point.from_int(i, n))


@st.composite
def lassos(draw):
    n = draw(st.integers(1, 2))
    prefix = draw(st.lists(points(n), max_size=5))
    cycle = draw(st.lists(points(n), min_size=1, max_size=8))
    return DiscreteSignal(n, tuple(prefix), tuple(cycle))


@st.composite
def reals(draw):
    n = draw(st.integers(1, 2))
    halves = st.integers(1, 6).map(lambda k: F(k, 2))
    t = F(draw(st.integers(-3, 3)))
    transient = []
    for _ in range(draw(st.integers(0, 4))):
        transient.append((t, draw(points(n))))
        t += draw(halves)
    offs = [F(0)]
    for _ in range(draw(st.integers(0, 3))):
        offs.append(offs[-1] + draw(halves))
    period = offs[-1] + draw(halves)
    tail = Tail(t, period, tuple((o, draw(points(n))) for o in offs))
    return RealSignal(n, draw(points(n)), tuple(transient), tail)


FAST = settings(max_examples=60, deadline=None)


@FAST
@given(lassos())
def test_canonical_lasso_is_fixed_point(sig):
    c = d_canonicalize(sig)
    assert d_canonicalize(c) == c
    assert [c(k) for k in range(-1, 40)] == [sig(k) for k in range(-1, 40)]


@FAST
@given(lassos(), st.integers(0, 6), st.integers(0, 6))
def test_forget_adds(sig, a, b):
    assert d_forget(d_forget(sig, a), b) == d_forget(sig, a + b)


@FAST
@given(lassos())
def test_point_prime_is_least_brute_period(sig):
    w = discrete_window(sig, len(sig.prefix) + 40)
    for mu, pa in analyze_signal(sig).per_point.items():
        if pa.periods.is_empty():
            continue
        k = pa.prime_limit
        brute = [p for p in range(1, 9) if brute_point_check(w, mu, p, k)]
        assert brute and brute[0] == pa.prime_period
        assert all(p % pa.prime_period == 0 for p in brute)


@FAST
@given(reals())
def test_real_canonical_keeps_values(sig):
    c = r_canonicalize(sig)
    assert r_canonicalize(c) == c
    lo = sig.lowest_time() - 1
    for j in range(60):
        t = lo + F(j, 3)
        assert r_value_at(c, t) == r_value_at(sig, t)


@FAST
@given(reals())
def test_real_periods_shift_support(sig):
    for mu, pa in analyze_signal(sig).per_point.items():
        if pa.periods.kind != "rat":
            continue
        T, lim = pa.periods.prime, pa.prime_limit
        lim = sig.lowest_time() - 1 if lim is None else lim
        for j in range(40):
            t = lim + F(j, 4)
            assert (t in pa.support) == (t + T in pa.support)
