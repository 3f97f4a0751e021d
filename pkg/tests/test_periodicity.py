from fractions import Fraction as F

import pytest

from binperiod import (ConstantSignal, DiscreteSignal, DomainError, LimitSet, NotEventuallyPeriodic,
                       NotInOrbit, PeriodSet, RealSignal, WidthError, WindowError,
                       accessibility_check, analyze_point, analyze_signal, classify_constancy,
                       decompose_support, hypothesis_p_report, periodicity_window_point, pt,
                       recompose_support)
from binperiod.periodicity import window_meets

import corpus as C


# discrete points -----------------------------------------------------------

def test_odd_support_point():
    pa = analyze_point(C.odd_support_from_one(), pt("11"))
    assert pa.periods == PeriodSet.multiples(2)
    assert pa.limits == LimitSet.since(0)
    assert not pa.is_periodic_point


def test_alternating_points_periodic():
    sa = analyze_signal(C.alternating())
    for mu in (pt("0"), pt("1")):
        pa = sa.per_point[mu]
        assert pa.is_periodic_point and pa.prime_period == 2


def test_sparse_ones_prime_three():
    # 0,0,0,0,1,0,0,1,0,0,1,... : 1 first appears at k = 3
    sig = DiscreteSignal.lasso(["0", "0", "0", "0"], ["1", "0", "0"])
    pa = analyze_point(sig, pt("1"))
    assert pa.prime_period == 3
    # 0 at k = 1 and 0 at k = 4 agree, so the limit reaches back to 1
    assert pa.prime_limit == 1
    assert analyze_point(sig, pt("0")).prime_limit == 1
    # with the free instants set to 1 the prime period drops to 1
    ones = DiscreteSignal.lasso(["0", "0", "0", "0"], ["1"])
    assert analyze_point(ones, pt("1")).prime_period == 1


def test_point_not_in_orbit():
    with pytest.raises(NotInOrbit):
        analyze_point(DiscreteSignal.constant(pt("0")), pt("1"))
    with pytest.raises(NotInOrbit):
        analyze_point(RealSignal.constant(pt("1")), pt("0"))
    with pytest.raises(WidthError):
        analyze_point(C.alternating(), pt("11"))


def test_non_omega_point_has_no_periods():
    pa = analyze_point(C.zero_then_ones(), pt("0"))
    assert pa.periods.is_empty() and pa.limits.is_empty()


# real points ----------------------------------------------------------------

def test_late_train_points():
    sa = analyze_signal(C.late_train())
    for mu in (pt("0"), pt("1")):
        pa = sa.per_point[mu]
        assert pa.periods == PeriodSet.multiples(F(2))
        assert pa.limits == LimitSet.since(2)


def test_three_value_with_late_change():
    pa = analyze_point(C.three_value(0), pt("11"))
    assert pa.periods == PeriodSet.multiples(F(3))
    assert pa.limits == LimitSet.since(1)
    assert not pa.is_periodic_point


def test_three_value_with_early_change():
    x = C.three_value(2)
    pa = analyze_point(x, pt("11"))
    assert pa.limits == LimitSet.since(1) and pa.is_periodic_point
    assert periodicity_window_point(x, pt("11")) == (1, 2)
    assert periodicity_window_point(C.three_value(0), pt("11")) is None


def test_gap_train_prime_limit_independent_of_period():
    sig = C.gap_train()
    pa = analyze_point(sig, pt("1"))
    assert pa.prime_period == 2 and pa.prime_limit == 3
    assert 4 in pa.periods
    # the limit set does not depend on which period is used
    assert decompose_support(pa, 2, 3).limit == decompose_support(pa, 4, 3).limit == 3
    with pytest.raises(DomainError):
        decompose_support(pa, 4, F(5, 2))


def test_five_train_window_and_decomposition():
    x = C.five_train()
    sa = analyze_signal(x)
    assert sa.classification == "periodic" and sa.prime_period == 5
    assert sa.window == (-2, 0)
    assert periodicity_window_point(x, pt("1")) == (-2, 0)
    d1 = decompose_support(sa.per_point[pt("1")], 5, 0)
    d0 = decompose_support(sa.per_point[pt("0")], 5, 0)
    assert d1.members == ((1, 2), (3, 5))
    assert d0.members == ((0, 1), (2, 3))


def test_late_five_train():
    x = C.late_five_train()
    sa = analyze_signal(x)
    assert sa.classification == "eventually_periodic"
    assert sa.prime_period == 5 and sa.limits == LimitSet.since(3)
    assert decompose_support(sa.per_point[pt("1")], 5, 3).members == ((3, 5), (6, 7))
    assert decompose_support(sa.per_point[pt("0")], 5, 3).members == ((5, 6), (7, 8))


def test_single_and_double_gap():
    for sig, lim in ((C.single_gap(), 2), (C.double_gap(), 1)):
        pa = analyze_point(sig, pt("1"))
        assert pa.periods == PeriodSet.multiples(F(5))
        assert pa.limits == LimitSet.since(lim)


def test_constant_window_undefined():
    with pytest.raises(ConstantSignal):
        periodicity_window_point(RealSignal.constant(pt("1")), pt("1"))


# signals --------------------------------------------------------------------

def test_alternating_signal():
    sa = analyze_signal(C.alternating())
    assert sa.classification == "periodic"
    assert sa.periods == PeriodSet.multiples(2) and sa.limits == LimitSet.all_times()


def test_zero_then_ones_signal():
    sa = analyze_signal(C.zero_then_ones())
    assert sa.classification == "eventually_constant"
    assert sa.periods == PeriodSet.multiples(1) and sa.limits == LimitSet.since(0)


def test_prime_six_lasso():
    sa = analyze_signal(DiscreteSignal.lasso(["0"], ["1", "0", "1", "0", "1", "1"]))
    assert sa.prime_period == 6


def test_heaviside_signal():
    sa = analyze_signal(C.heaviside())
    assert sa.classification == "eventually_constant"
    assert sa.periods == PeriodSet.all_positive() and sa.limits == LimitSet.since(0)


def test_constant_real_signal():
    sa = analyze_signal(RealSignal.constant(pt("01")))
    assert sa.classification == "constant"
    assert sa.limits == LimitSet.all_times() and sa.periods.kind == "all"


def test_classify_constancy():
    assert classify_constancy(DiscreteSignal.constant(pt("1"))) == "constant"
    assert classify_constancy(C.heaviside()) == "eventually_constant"
    assert classify_constancy(C.alternating()) == "neither"


def test_periodic_means_orbit_is_omega(lassos, reals):
    for sig in lassos + reals:
        sa = analyze_signal(sig)
        if sa.classification in ("periodic", "constant"):
            pts = set(sa.per_point)
            assert all(not sa.per_point[m].periods.is_empty() for m in pts)


def test_period_and_limit_sets_nonempty_together(lassos, reals):
    for sig in lassos + reals:
        for pa in analyze_signal(sig).per_point.values():
            assert pa.periods.is_empty() == pa.limits.is_empty()


# decompositions --------------------------------------------------------------

def test_recompose_singleton_residue():
    sig = DiscreteSignal.lasso(["0", "0"], ["1", "0", "0", "0"])
    dec = decompose_support(analyze_point(sig, pt("1")))
    assert dec.members == (1,)
    s = recompose_support(dec)
    rebuilt = DiscreteSignal(1, (pt("0"),) * 2, tuple(pt("1") if r in s.residues else pt("0")
                                                     for r in range(4)))
    assert analyze_point(rebuilt, pt("1")).prime_period == 4


def test_decompose_requires_periods():
    with pytest.raises(NotEventuallyPeriodic):
        decompose_support(analyze_point(C.zero_then_ones(), pt("0")))


def test_round_trip_discrete(lassos):
    for sig in lassos[:100]:
        for pa in analyze_signal(sig).per_point.values():
            if pa.periods.is_empty():
                continue
            s = recompose_support(decompose_support(pa))
            k = pa.prime_limit
            for j in range(k, k + 4 * pa.prime_period):
                assert (j in s) == (j in pa.support)


# hypothesis P and accessibility -------------------------------------------------

def test_hypothesis_p_lcm_of_point_primes():
    # 1 at residues {0, 2} (prime 2), 01 at {1} and 10 at {3} (prime 4)
    sig = DiscreteSignal.lasso([], ["11", "01", "11", "10"])
    rep = hypothesis_p_report(sig)
    primes = {str(m): p for m, p in rep.point_primes.items()}
    assert primes == {"11": 2, "01": 4, "10": 4}
    assert rep.signal_prime == 4 and rep.lcm_relation_holds
    assert {str(m): k for m, k in rep.multipliers.items()} == {"11": 2, "01": 1, "10": 1}


def test_hypothesis_p_lcm_twelve():
    # 1 at residues {0, 4, 8} (prime 4), 01 at {1, 7} (prime 6), 00 elsewhere
    cyc = ["00"] * 12
    for r in (0, 4, 8):
        cyc[r] = "11"
    for r in (1, 7):
        cyc[r] = "01"
    rep = hypothesis_p_report(DiscreteSignal.lasso([], cyc))
    primes = {str(m): p for m, p in rep.point_primes.items()}
    assert primes["11"] == 4 and primes["01"] == 6
    assert rep.signal_prime == 12 and rep.lcm_relation_holds


def test_coprime_point_primes_never_coexist():
    # exhaustive over width-2 cycles of length 6: no two omega points have primes 2 and 3
    import itertools
    vals = ["00", "01", "10", "11"]
    for cyc in itertools.product(vals, repeat=6):
        primes = set(hypothesis_p_report(DiscreteSignal.lasso([], cyc)).point_primes.values())
        assert not {2, 3} <= primes


def test_hypothesis_p_eventually_constant():
    rep = hypothesis_p_report(C.heaviside())
    assert rep.signal_prime is None and rep.lcm_relation_holds
    assert set(rep.point_primes.values()) == {"all"}


def test_hypothesis_p_five_train():
    rep = hypothesis_p_report(C.five_train())
    assert rep.signal_prime == 5
    assert set(rep.multipliers.values()) == {1}


def test_accessibility_three_value():
    pa = analyze_point(C.three_value(2), pt("11"))
    for start in (1, F(5, 2), 7):
        assert accessibility_check(pa, start)
    with pytest.raises(WindowError):
        accessibility_check(pa, 0)


def test_accessibility_alternating_orbit():
    sa = analyze_signal(C.alternating())
    for k in range(-1, 10):
        assert accessibility_check(sa, k)


def test_window_straddling_limit():
    pa = analyze_point(C.late_train(), pt("1"))
    assert not window_meets(pa, 0, 2)
