"""Edits of signals at chosen instants and intervals.

Discrete edits set single instants or arithmetic progressions of instants.
Real edits set intervals, interval trains, flat intervals, or move one
breakpoint by a small amount.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .core import Point, check_width, parse_rat
from .dsignal import DiscreteSignal, d_canonicalize, d_value_at
from .errors import DomainError, EditConflict, RepresentationError
from .rsignal import RealSignal, Tail, r_canonicalize, r_limits, r_value_at

MAX_TAIL_CELLS = 100_000


# discrete ---------------------------------------------------------------

@dataclass(frozen=True)
class SetInstant:
    k: int
    value: Point


@dataclass(frozen=True)
class SetProgression:
    """value at k0, k0 + d, k0 + 2d, ..."""

    k0: int
    d: int
    value: Point


DEdit = Union[SetInstant, SetProgression]


def _edit_value(edits: Sequence[DEdit], k: int) -> Optional[Point]:
    found = None
    for e in edits:
        if isinstance(e, SetInstant):
            hit = e.k == k
        else:
            hit = k >= e.k0 and (k - e.k0) % e.d == 0
        if hit:
            if found is not None and found != e.value:
                raise EditConflict(f"instant {k} receives both {found} and {e.value}")
            found = e.value
    return found


def d_edit(sig: DiscreteSignal, edits: Iterable[DEdit]) -> DiscreteSignal:
    edits = list(edits)
    check_width(sig.width, [e.value for e in edits])
    singles = [e.k for e in edits if isinstance(e, SetInstant)]
    if len(singles) != len(set(singles)):
        dup = sorted(k for k in set(singles) if singles.count(k) > 1)
        raise EditConflict(f"instant(s) {dup} edited more than once")
    for e in edits:
        k = e.k if isinstance(e, SetInstant) else e.k0
        if k < -1:
            raise DomainError(f"edit time {k} < -1")
        if isinstance(e, SetProgression) and e.d < 1:
            raise DomainError("progression step must be >= 1")
    m = len(sig.cycle)
    for e in edits:
        if isinstance(e, SetProgression):
            m = lcm(m, e.d)
    start = max([sig.anchor] + [e.k + 1 for e in edits if isinstance(e, SetInstant)]
                + [e.k0 for e in edits if isinstance(e, SetProgression)])

    def value(k):
        v = _edit_value(edits, k)
        return d_value_at(sig, k) if v is None else v

    prefix = tuple(value(k) for k in range(-1, start))
    cycle = tuple(value(k) for k in range(start, start + m))
    # the remaining instants repeat those already checked for conflicts
    return d_canonicalize(DiscreteSignal(sig.width, prefix, cycle))


# real -------------------------------------------------------------------

def flat_interval(sig: RealSignal, t) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """Largest interval containing t on which sig is constant.

    None stands for -inf (left) or +inf (right).
    """
    t = parse_rat(t)
    c = r_canonicalize(sig)
    lo = min(c.lowest_time(), t - 1)
    span = c.tail.period if c.tail else Fraction(1)
    hi = max(t, c.tail.anchor if c.tail else c.lowest_time() + 1) + 2 * span + 1
    if c.tail is None and c.transient:
        hi = max(hi, c.transient[-1][0] + 1)
    changes = c.change_times(lo, hi)
    left = [s for s in changes if s <= t]
    right = [s for s in changes if s > t]
    return (left[-1] if left else None, right[0] if right else None)


@dataclass(frozen=True)
class SetInterval:
    """value on [a, b); b None means up to +inf."""

    a: Fraction
    b: Optional[Fraction]
    value: Point


@dataclass(frozen=True)
class SetTrain:
    """value on [a + kT, b + kT) for every k >= 0."""

    a: Fraction
    b: Fraction
    period: Fraction
    value: Point


@dataclass(frozen=True)
class SetFlat:
    """value on the flat interval containing t (must be bounded on the left)."""

    t: Fraction
    value: Point


@dataclass(frozen=True)
class ShiftBreak:
    """Move the value change at time t to t + delta."""

    t: Fraction
    delta: Fraction


@dataclass(frozen=True)
class ShiftInitial:
    """Move sup I^x, the first value change, by delta."""

    delta: Fraction


REdit = Union[SetInterval, SetTrain, SetFlat, ShiftBreak, ShiftInitial]


def _rat_lcm(a: Fraction, b: Fraction) -> Fraction:
    num = lcm(a.numerator, b.numerator)
    return Fraction(num, gcd(a.denominator, b.denominator))


def _rebuild(sig: RealSignal, over, points: List[Fraction], tail_from: Fraction,
             period: Optional[Fraction]) -> RealSignal:
    """Sample ``value(t)`` = over(t) or sig(t) at candidate points into a signal."""

    def value(t):
        v = over(t)
        return r_value_at(sig, t) if v is None else v

    lo = min([sig.lowest_time()] + points) - 1
    init = value(lo)
    if period is None:
        pts = sorted(set(p for p in points + sig.candidate_breaks(lo, tail_from + 1) if p > lo))
        entries = [(p, value(p)) for p in pts]
        return r_canonicalize(RealSignal(sig.width, init, tuple(entries), None))
    if period / min(period, sig.tail.period if sig.tail else period) > MAX_TAIL_CELLS:
        raise RepresentationError("edit family makes the periodic tail too long")
    hi = tail_from + period
    cands = set(points) | set(sig.candidate_breaks(lo, hi)) | {tail_from}
    pts = sorted(p for p in cands if lo < p < hi)
    entries = [(p, value(p)) for p in pts if p < tail_from]
    pattern = [(p - tail_from, value(p)) for p in pts if p >= tail_from]
    return r_canonicalize(RealSignal(sig.width, init, tuple(entries),
                                     Tail(tail_from, period, tuple(pattern))))


def _apply_one(sig: RealSignal, e: REdit) -> RealSignal:
    c = r_canonicalize(sig)
    if isinstance(e, SetFlat):
        a, b = flat_interval(c, e.t)
        if a is None:
            raise DomainError("the flat interval through t is the initial ray")
        e = SetInterval(a, b, e.value)
    if isinstance(e, ShiftInitial):
        t0 = c.first_change()
        if t0 is None:
            raise DomainError("a constant signal has no first value change")
        e = ShiftBreak(t0, e.delta)
    if isinstance(e, ShiftBreak):
        t = parse_rat(e.t)
        left, right = r_limits(c, t)
        if left == right:
            raise DomainError(f"no value change at {t}")
        d = parse_rat(e.delta)
        if d == 0:
            return c
        if d > 0:
            nxt = flat_interval(c, t)[1]
            if nxt is not None and t + d >= nxt:
                raise DomainError(f"shift {d} reaches the next change at {nxt}")
            e = SetInterval(t, t + d, left)
        else:
            prv = flat_interval_left(c, t)
            if prv is not None and t + d <= prv:
                raise DomainError(f"shift {d} reaches the previous change at {prv}")
            e = SetInterval(t + d, t, right)
    if isinstance(e, SetInterval):
        a = parse_rat(e.a)
        b = None if e.b is None else parse_rat(e.b)
        check_width(c.width, [e.value])
        if b is not None and b <= a:
            raise DomainError("empty edit interval")
        over = lambda t: e.value if (t >= a and (b is None or t < b)) else None
        if b is None:
            pts = [a]
            return _rebuild(c, over, pts, a, None) if c.tail is None else _rebuild(
                _truncate(c, a), over, pts, a, None)
        pts = [a, b]
        if c.tail is None:
            return _rebuild(c, over, pts, max([b] + [t for t, _ in c.transient]), None)
        return _rebuild(c, over, pts, max(c.tail.anchor, b), c.tail.period)
    if isinstance(e, SetTrain):
        a, b, T = parse_rat(e.a), parse_rat(e.b), parse_rat(e.period)
        check_width(c.width, [e.value])
        if T <= 0 or b <= a:
            raise DomainError("train needs a < b and a positive period")
        if b - a >= T:
            return _apply_one(c, SetInterval(a, None, e.value))

        def over(t):
            if t < a:
                return None
            return e.value if (t - a) % T < b - a else None

        P = T if c.tail is None else _rat_lcm(T, c.tail.period)
        start = a if c.tail is None else max(a, c.tail.anchor)
        if c.tail is None and c.transient:
            start = max(start, c.transient[-1][0])
        hi = start + P
        pts = [a]
        k = 0
        while a + k * T < hi:
            pts += [a + k * T, b + k * T]
            k += 1
        return _rebuild(c, over, pts, start, P)
    raise TypeError(f"unknown edit {e!r}")


def flat_interval_left(sig: RealSignal, t: Fraction) -> Optional[Fraction]:
    """Last value change strictly before t."""
    lo = min(sig.lowest_time(), t - 1)
    ch = [s for s in sig.change_times(lo, t)]
    return ch[-1] if ch else None


def _truncate(sig: RealSignal, a: Fraction) -> RealSignal:
    """Drop the tail; only values before a matter after an edit covering [a, inf)."""
    entries = [(t, v) for t, v in sig.transient if t < a]
    pts = sig.candidate_breaks(sig.lowest_time(), a)
    entries = sorted(set(entries) | {(p, r_value_at(sig, p)) for p in pts})
    return r_canonicalize(RealSignal(sig.width, sig.initial, tuple(entries), None))


def r_edit(sig: RealSignal, edits: Iterable[REdit]) -> RealSignal:
    """Apply edits left to right; later edits override earlier ones."""
    out = r_canonicalize(sig)
    for e in edits:
        out = _apply_one(out, e)
    return out
