"""Periodicity analysis of points and signals.

Point analyses reduce to the canonical form of the point's indicator signal:
the canonical cycle (or tail) length is the prime period and the canonical
anchor is the prime limit of periodicity, which does not depend on the period
chosen.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple, Union

from .core import Point, format_rat, parse_rat
from .dsignal import (DiscreteSignal, EvPeriodicIntSet, d_canonicalize, d_summarize,
                      d_support_set)
from .errors import (ConstantSignal, DomainError, NotEventuallyPeriodic, NotInOrbit,
                     WidthError, WindowError)
from .rsignal import (ONE, ZERO, EvPeriodicIntervalSet, IntervalTail, RealSignal,
                      indicator, r_canonicalize, r_summarize, r_support_set,
                      support_intervals)

Signal = Union[DiscreteSignal, RealSignal]
Number = Union[int, Fraction]


# period and limit sets -------------------------------------------------

@dataclass(frozen=True)
class PeriodSet:
    """empty, all positive reals, or the multiples of ``base``."""

    kind: str  # "empty" | "all" | "int" | "rat"
    base: Optional[Number] = None

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def all_positive(cls):
        return cls("all")

    @classmethod
    def multiples(cls, base: Number):
        if isinstance(base, int):
            return cls("int", base)
        return cls("rat", Fraction(base))

    @property
    def prime(self) -> Optional[Number]:
        return self.base if self.kind in ("int", "rat") else None

    def is_empty(self) -> bool:
        return self.kind == "empty"

    def __contains__(self, p) -> bool:
        if self.kind == "empty":
            return False
        p = Fraction(p)
        if p <= 0:
            return False
        if self.kind == "all":
            return True
        q = p / Fraction(self.base)
        return q.denominator == 1

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "all":
            return "all positive"
        return f"multiples of {format_rat(Fraction(self.base))}"


@dataclass(frozen=True)
class LimitSet:
    """empty, {k', k'+1, ...} / [t', inf), or every time."""

    kind: str  # "empty" | "from" | "all"
    start: Optional[Number] = None

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def all_times(cls):
        return cls("all")

    @classmethod
    def since(cls, t: Number):
        return cls("from", t)

    def is_empty(self) -> bool:
        return self.kind == "empty"

    def __contains__(self, t) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "from":
            return t >= self.start
        return False

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "all":
            return "all"
        return f"[{format_rat(Fraction(self.start))}, inf)"


def _dlimit(k: int) -> LimitSet:
    return LimitSet.all_times() if k == -1 else LimitSet.since(k)


# analyses --------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """Support of a point restricted to one period window [limit, limit+period).

    ``members`` holds integers (discrete) or half-open intervals (real).
    """

    discrete: bool
    period: Number
    limit: Number
    members: Tuple


@dataclass
class PointAnalysis:
    signal: Signal
    point: Point
    support: Union[EvPeriodicIntSet, EvPeriodicIntervalSet]
    periods: PeriodSet
    limits: LimitSet
    is_periodic_point: bool
    decomposition: Optional[Decomposition] = None

    @property
    def prime_period(self):
        return self.periods.prime

    @property
    def prime_limit(self):
        if self.limits.kind == "from":
            return self.limits.start
        if self.limits.kind == "all":
            return -1 if isinstance(self.signal, DiscreteSignal) else None
        return None

    @property
    def discrete(self) -> bool:
        return isinstance(self.signal, DiscreteSignal)


@dataclass
class SignalAnalysis:
    signal: Signal
    classification: str
    periods: PeriodSet
    limits: LimitSet
    window: Optional[Tuple[Fraction, Fraction]]
    per_point: Dict[Point, PointAnalysis] = field(default_factory=dict)

    @property
    def prime_period(self):
        return self.periods.prime

    @property
    def prime_limit(self):
        if self.limits.kind == "from":
            return self.limits.start
        if self.limits.kind == "all" and isinstance(self.signal, DiscreteSignal):
            return -1
        return None

    @property
    def discrete(self) -> bool:
        return isinstance(self.signal, DiscreteSignal)


def d_indicator(sig: DiscreteSignal, mu: Point) -> DiscreteSignal:
    if mu.width != sig.width:
        raise WidthError(f"point width {mu.width} != signal width {sig.width}")
    f = lambda v: ONE if v == mu else ZERO
    return d_canonicalize(DiscreteSignal(1, tuple(map(f, sig.prefix)), tuple(map(f, sig.cycle))))


def _d_members(support: EvPeriodicIntSet, lo: int, hi: int) -> tuple:
    return tuple(k for k in range(lo, hi) if k in support)


def analyze_point_d(sig: DiscreteSignal, mu: Point) -> PointAnalysis:
    ind = d_indicator(sig, mu)
    if ONE not in ind.prefix and ONE not in ind.cycle:
        raise NotInOrbit(f"{mu} is not a value of the signal")
    support = d_support_set(sig, mu)
    if ind.cycle == (ZERO,):
        return PointAnalysis(sig, mu, support, PeriodSet.empty(), LimitSet.empty(), False)
    p, k = len(ind.cycle), ind.anchor
    dec = Decomposition(True, p, k, _d_members(support, k, k + p))
    return PointAnalysis(sig, mu, support, PeriodSet.multiples(p), _dlimit(k), k == -1, dec)


def analyze_point_r(sig: RealSignal, mu: Point) -> PointAnalysis:
    ind = indicator(sig, mu)
    if ind.initial != ONE and all(v != ONE for _, v in ind.transient) and ind.tail is None:
        raise NotInOrbit(f"{mu} is not a value of the signal")
    support = r_support_set(sig, mu)
    t0 = sig.first_change()
    if ind.tail is None:
        last = ind.transient[-1][1] if ind.transient else ind.initial
        if last == ZERO:
            return PointAnalysis(sig, mu, support, PeriodSet.empty(), LimitSet.empty(), False)
        if not ind.transient:
            return PointAnalysis(sig, mu, support, PeriodSet.all_positive(),
                                 LimitSet.all_times(), True, None)
        F = ind.transient[-1][0]
        dec = Decomposition(False, Fraction(1), F, ((F, F + 1),))
        periodic = t0 is None or F < t0
        return PointAnalysis(sig, mu, support, PeriodSet.all_positive(),
                             LimitSet.since(F), periodic, dec)
    T, L = ind.tail.period, ind.tail.anchor
    dec = Decomposition(False, T, L, tuple(support_intervals(ind, L, L + T)))
    return PointAnalysis(sig, mu, support, PeriodSet.multiples(T), LimitSet.since(L),
                         t0 is not None and L < t0, dec)


def analyze_point(sig: Signal, mu: Point) -> PointAnalysis:
    if isinstance(sig, DiscreteSignal):
        return analyze_point_d(sig, mu)
    return analyze_point_r(sig, mu)


def orbit_of(sig: Signal):
    if isinstance(sig, DiscreteSignal):
        return d_summarize(sig).orbit
    return r_summarize(sig).orbit


def omega_of(sig: Signal):
    if isinstance(sig, DiscreteSignal):
        return d_summarize(sig).omega
    return r_summarize(sig).omega


def analyze_signal_d(sig: DiscreteSignal) -> SignalAnalysis:
    c = d_canonicalize(sig)
    summ = d_summarize(c)
    p, k = len(c.cycle), c.anchor
    if len(summ.orbit) == 1:
        cls = "constant"
    elif p == 1:
        cls = "eventually_constant"
    elif k == -1:
        cls = "periodic"
    else:
        cls = "eventually_periodic"
    per_point = {mu: analyze_point_d(c, mu) for mu in sorted(summ.orbit)}
    return SignalAnalysis(c, cls, PeriodSet.multiples(p), _dlimit(k), None, per_point)


def analyze_signal_r(sig: RealSignal) -> SignalAnalysis:
    c = r_canonicalize(sig)
    summ = r_summarize(c)
    t0 = c.first_change()
    per_point = {mu: analyze_point_r(c, mu) for mu in sorted(summ.orbit)}
    if t0 is None:
        return SignalAnalysis(c, "constant", PeriodSet.all_positive(), LimitSet.all_times(),
                              None, per_point)
    if c.tail is None:
        F = c.transient[-1][0]
        return SignalAnalysis(c, "eventually_constant", PeriodSet.all_positive(),
                              LimitSet.since(F), None, per_point)
    T, L = c.tail.period, c.tail.anchor
    window = (L, t0) if L < t0 else None
    cls = "periodic" if window else "eventually_periodic"
    return SignalAnalysis(c, cls, PeriodSet.multiples(T), LimitSet.since(L), window, per_point)


def analyze_signal(sig: Signal) -> SignalAnalysis:
    if isinstance(sig, DiscreteSignal):
        return analyze_signal_d(sig)
    return analyze_signal_r(sig)


def periodicity_window_point(sig: RealSignal, mu: Point) -> Optional[Tuple[Fraction, Fraction]]:
    """I^x intersected with the limit set of mu, when nonempty."""
    t0 = sig.first_change()
    if t0 is None:
        raise ConstantSignal("the initial time set of a constant signal is all of R")
    pa = analyze_point_r(sig, mu)
    if pa.limits.kind != "from" or pa.limits.start >= t0:
        return None
    return (pa.limits.start, t0)


# decompositions --------------------------------------------------------

def decompose_support(analysis: PointAnalysis, period=None, limit=None) -> Decomposition:
    """Support restricted to [limit, limit + period); defaults to prime values."""
    if analysis.periods.is_empty():
        raise NotEventuallyPeriodic(f"{analysis.point} is not eventually periodic")
    if period is None:
        period = analysis.periods.prime if analysis.periods.prime is not None else 1
    if limit is None:
        limit = analysis.prime_limit
        if limit is None:  # constant signal, real time: pick 0
            limit = Fraction(0)
    if period not in analysis.periods:
        raise DomainError(f"{period} is not a period of {analysis.point}")
    if limit not in analysis.limits:
        raise DomainError(f"{limit} is not a limit of periodicity of {analysis.point}")
    if analysis.discrete:
        members = _d_members(analysis.support, limit, limit + period)
        return Decomposition(True, period, limit, members)
    period, limit = Fraction(period), Fraction(limit)
    ind = indicator(analysis.signal, analysis.point)
    return Decomposition(False, period, limit,
                         tuple(support_intervals(ind, limit, limit + period)))


def recompose_support(dec: Decomposition):
    """The eventually periodic set generated by one period window."""
    if dec.discrete:
        res = frozenset(n - dec.limit for n in dec.members)
        if any(not 0 <= r < dec.period for r in res):
            raise DomainError("members must lie in the window [limit, limit+period)")
        return EvPeriodicIntSet(frozenset(), dec.limit, dec.period, res)
    for a, b in dec.members:
        if not (dec.limit <= a < b <= dec.limit + dec.period):
            raise DomainError("intervals must lie in the window [limit, limit+period)")
    if not dec.members:
        return EvPeriodicIntervalSet()
    return EvPeriodicIntervalSet(None, (), IntervalTail(dec.members[0][0], dec.period,
                                                        tuple(dec.members)))


# constancy, hypothesis P, accessibility -------------------------------

def classify_constancy(sig: Signal) -> str:
    if len(orbit_of(sig)) == 1:
        return "constant"
    if len(omega_of(sig)) == 1:
        return "eventually_constant"
    return "neither"


def _rat_lcm(values: List[Fraction]) -> Fraction:
    num, den = 1, 0
    for v in values:
        v = Fraction(v)
        num = num * v.numerator // gcd(num, v.numerator)
        den = gcd(den, v.denominator)
    return Fraction(num, den)


@dataclass
class HypothesisPReport:
    point_primes: Dict[Point, object]
    signal_prime: Optional[Number]
    multipliers: Dict[Point, int]
    lcm_relation_holds: bool


def hypothesis_p_report(sig: Signal) -> HypothesisPReport:
    sa = analyze_signal(sig)
    omega = sorted(omega_of(sa.signal))
    primes = {mu: sa.per_point[mu].periods.prime for mu in omega}
    if sa.periods.kind == "all":
        return HypothesisPReport({mu: "all" for mu in omega}, None, {}, True)
    sp = sa.periods.prime
    lcm = _rat_lcm(list(primes.values()))
    mult = {mu: int(Fraction(sp) / Fraction(p)) for mu, p in primes.items()}
    ok = lcm == Fraction(sp) and all(Fraction(sp) / Fraction(p) == m for (mu, p), m
                                     in zip(primes.items(), mult.values()))
    g = 0
    for m in mult.values():
        g = gcd(g, m)
    return HypothesisPReport(primes, sp, mult, ok and g == 1)


def accessibility_check(analysis: Union[PointAnalysis, SignalAnalysis], window_start,
                        period=None) -> bool:
    """Support meets every period-length window from window_start on.

    For a signal analysis the check is that the values seen on the window
    equal the omega limit set (the orbit when the signal is periodic).
    """
    if analysis.periods.is_empty():
        raise NotEventuallyPeriodic("analysis has no periods")
    if period is None:
        period = analysis.periods.prime if analysis.periods.prime is not None else 1
    if window_start not in analysis.limits:
        raise WindowError(f"window start {window_start} precedes the limit of periodicity")
    return window_meets(analysis, window_start, period)


def window_meets(analysis, start, period) -> bool:
    """Same test without the limit precondition (used on straddling windows)."""
    sig = analysis.signal
    if isinstance(analysis, PointAnalysis):
        if isinstance(sig, DiscreteSignal):
            return any(k in analysis.support for k in range(start, start + period))
        ind = indicator(sig, analysis.point)
        return bool(support_intervals(ind, Fraction(start), Fraction(start) + period))
    target = omega_of(sig)
    if isinstance(sig, DiscreteSignal):
        seen = {sig(k) for k in range(start, start + period)}
    else:
        seen = {v for _, _, v in sig.segments(Fraction(start), Fraction(start) + period)}
    return seen == set(target)
