"""Real-time signals R -> B^n as right-continuous step functions.

A signal holds its value at -inf (``initial``), a finite list of
(time, value) changes and an optional periodic tail starting at ``anchor``.
All times are exact Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple

from .core import Point, TimeSet, check_width, parse_rat
from .errors import DomainError, WidthError

Segment = Tuple[Fraction, Optional[Fraction], Point]  # [start, end) with end None = +inf


@dataclass(frozen=True)
class Tail:
    anchor: Fraction
    period: Fraction
    pattern: Tuple[Tuple[Fraction, Point], ...]

    def __post_init__(self):
        object.__setattr__(self, "anchor", parse_rat(self.anchor))
        object.__setattr__(self, "period", parse_rat(self.period))
        pat = tuple((parse_rat(o), v) for o, v in self.pattern)
        object.__setattr__(self, "pattern", pat)
        if self.period <= 0:
            raise DomainError("tail period must be positive")
        if not pat or pat[0][0] != 0:
            raise DomainError("tail pattern must start at offset 0")
        offs = [o for o, _ in pat]
        if any(a >= b for a, b in zip(offs, offs[1:])) or offs[-1] >= self.period:
            raise DomainError("pattern offsets must increase within [0, period)")

    def value(self, t: Fraction) -> Point:
        """Value of the tail extended periodically to all of R."""
        off = (t - self.anchor) % self.period
        cur = self.pattern[0][1]
        for o, v in self.pattern:
            if o <= off:
                cur = v
            else:
                break
        return cur

    def left_value(self, t: Fraction) -> Point:
        off = (t - self.anchor) % self.period
        if off == 0:
            return self.pattern[-1][1]
        cur = self.pattern[0][1]
        for o, v in self.pattern:
            if o < off:
                cur = v
            else:
                break
        return cur

    def breaks(self, lo: Fraction, hi: Fraction) -> List[Fraction]:
        """Pattern start times of the periodic extension in [lo, hi)."""
        out = []
        k = (lo - self.anchor) // self.period - 1
        while True:
            base = self.anchor + k * self.period
            if base >= hi:
                break
            for o, _ in self.pattern:
                t = base + o
                if lo <= t < hi:
                    out.append(t)
            k += 1
        return out


@dataclass(frozen=True)
class RealSignal:
    width: int
    initial: Point
    transient: Tuple[Tuple[Fraction, Point], ...] = ()
    tail: Optional[Tail] = None

    def __post_init__(self):
        tr = tuple((parse_rat(t), v) for t, v in self.transient)
        object.__setattr__(self, "transient", tr)
        check_width(self.width, [self.initial] + [v for _, v in tr])
        if any(a[0] >= b[0] for a, b in zip(tr, tr[1:])):
            raise DomainError("transient times must be strictly increasing")
        if self.tail is not None:
            check_width(self.width, [v for _, v in self.tail.pattern])
            if tr and tr[-1][0] > self.tail.anchor:
                raise DomainError("tail anchor precedes a transient change")

    @classmethod
    def constant(cls, mu: Point) -> "RealSignal":
        return cls(mu.width, mu)

    @classmethod
    def build(cls, initial, transient=(), tail=None) -> "RealSignal":
        """Convenience constructor accepting bit strings and rational literals."""
        conv = lambda v: v if isinstance(v, Point) else Point.parse(v)
        init = conv(initial)
        tr = tuple((parse_rat(t), conv(v)) for t, v in transient)
        tl = None
        if tail is not None:
            anchor, period, pattern = tail
            tl = Tail(parse_rat(anchor), parse_rat(period),
                      tuple((parse_rat(o), conv(v)) for o, v in pattern))
        return cls(init.width, init, tr, tl)

    def __call__(self, t) -> Point:
        return r_value_at(self, parse_rat(t))

    def left(self, t) -> Point:
        return r_limits(self, parse_rat(t))[0]

    def canonical(self) -> "RealSignal":
        return r_canonicalize(self)

    def same_as(self, other: "RealSignal") -> bool:
        return r_canonicalize(self) == r_canonicalize(other)

    # breakpoint helpers -------------------------------------------------
    def candidate_breaks(self, lo: Fraction, hi: Fraction) -> List[Fraction]:
        """Times in [lo, hi) where the value may change (superset)."""
        pts = {t for t, _ in self.transient if lo <= t < hi}
        if self.tail is not None:
            a = self.tail.anchor
            pts.update(t for t in self.tail.breaks(max(lo, a), hi))
        return sorted(pts)

    def lowest_time(self) -> Fraction:
        """A time strictly below every breakpoint."""
        cands = [t for t, _ in self.transient]
        if self.tail is not None:
            cands.append(self.tail.anchor)
        return (min(cands) if cands else Fraction(0)) - 1

    def segments(self, lo, hi) -> List[Segment]:
        """Maximal constant pieces [a, b) covering [lo, hi), clipped to the range."""
        lo, hi = parse_rat(lo), parse_rat(hi)
        if hi <= lo:
            return []
        starts = [lo] + [t for t in self.candidate_breaks(lo, hi) if t > lo]
        out: List[list] = []
        for s in starts:
            v = r_value_at(self, s)
            if out and out[-1][2] == v:
                continue
            out.append([s, None, v])
        for cur, nxt in zip(out, out[1:]):
            cur[1] = nxt[0]
        out[-1][1] = hi
        return [tuple(s) for s in out]

    def change_times(self, lo, hi) -> List[Fraction]:
        """Exact discontinuities in (lo, hi)."""
        lo, hi = parse_rat(lo), parse_rat(hi)
        return [t for t in self.candidate_breaks(lo, hi)
                if t > lo and r_limits(self, t)[0] != r_value_at(self, t)]

    def first_change(self) -> Optional[Fraction]:
        """sup I^x, or None for a constant signal."""
        c = r_canonicalize(self)
        if c.transient:
            return c.transient[0][0]
        if c.tail is None:
            return None
        a = c.tail.anchor
        ch = c.change_times(a - 1, a + c.tail.period + 1)
        return ch[0]


def r_value_at(sig: RealSignal, t) -> Point:
    t = parse_rat(t)
    if sig.tail is not None and t >= sig.tail.anchor:
        return sig.tail.value(t)
    cur = sig.initial
    for s, v in sig.transient:
        if s <= t:
            cur = v
        else:
            break
    return cur


def r_limits(sig: RealSignal, t) -> Tuple[Point, Point]:
    """(x(t-0), x(t+0)); the right limit equals x(t)."""
    t = parse_rat(t)
    right = r_value_at(sig, t)
    if sig.tail is not None and t > sig.tail.anchor:
        return sig.tail.left_value(t), right
    cur = sig.initial
    for s, v in sig.transient:
        if s < t:
            cur = v
        else:
            break
    return cur, right


def _merge_entries(initial: Point, entries) -> list:
    out = []
    prev = initial
    for t, v in entries:
        if v != prev:
            out.append((t, v))
            prev = v
    return out


def _merge_pattern(pattern) -> list:
    out = []
    for o, v in pattern:
        if out and out[-1][1] == v:
            continue
        out.append((o, v))
    return out


def _tail_shift_invariant(tail: Tail, shift: Fraction) -> bool:
    a, P = tail.anchor, tail.period
    base = [a + o for o, _ in tail.pattern]
    pts = set(base) | {a + ((b - shift - a) % P) for b in base}
    return all(tail.value(t) == tail.value(t + shift) for t in pts)


def minimal_tail_period(tail: Tail) -> Fraction:
    """Least T with the periodic extension T-invariant; divides tail.period."""
    for m in range(len(tail.pattern), 1, -1):
        cand = tail.period / m
        if _tail_shift_invariant(tail, cand):
            return cand
    return tail.period


def _rephase(tail: Tail, anchor: Fraction, period: Fraction) -> Tail:
    """The same periodic extension described from a new anchor and period."""
    offs = {Fraction(0)}
    for o, _ in tail.pattern:
        offs.add((tail.anchor + o - anchor) % period)
    pattern = [(o, tail.value(anchor + o)) for o in sorted(offs)]
    return Tail(anchor, period, tuple(_merge_pattern(pattern)))


def r_canonicalize(sig: RealSignal) -> RealSignal:
    tail = sig.tail
    raw = [(t, v) for t, v in sig.transient if tail is None or t < tail.anchor]
    entries = _merge_entries(sig.initial, raw)
    if tail is not None:
        pat = _merge_pattern(tail.pattern)
        if len(pat) == 1:
            entries = _merge_entries(sig.initial, entries + [(tail.anchor, pat[0][1])])
            tail = None
        else:
            tail = Tail(tail.anchor, tail.period, tuple(pat))
    if tail is None:
        return RealSignal(sig.width, sig.initial, tuple(entries), None)

    period = minimal_tail_period(tail)
    base = RealSignal(sig.width, sig.initial, tuple(entries), tail)
    # slide the anchor back to the last time where x and the periodic
    # extension of the tail disagree
    A = tail.anchor
    low = min([t for t, _ in entries] + [A]) - period
    pts = {low} | {t for t, _ in entries if t < A}
    ext = Tail(A, period, tuple((o, v) for o, v in tail.pattern if o < period))
    pts.update(ext.breaks(low, A))
    new_anchor = None
    desc = sorted(pts, reverse=True)
    right = A
    for p in desc:
        if p >= A:
            continue
        if r_value_at(base, p) != ext.value(p):
            new_anchor = right
            break
        right = p
    if new_anchor is None:  # pragma: no cover - a nonconstant tail always disagrees below
        raise AssertionError("tail periodicity extends to -inf")
    new_tail = _rephase(ext, new_anchor, period)
    kept = [(t, v) for t, v in entries if t < new_anchor]
    return RealSignal(sig.width, sig.initial, tuple(kept), new_tail)


def r_forget(sig: RealSignal, tp) -> RealSignal:
    """sigma^{t'}: keep x on [t', inf), hold x(t'-0) before t'."""
    tp = parse_rat(tp)
    left = r_limits(sig, tp)[0]
    tail = sig.tail
    if tail is not None and tp > tail.anchor:
        new_tail = _rephase(tail, tp, tail.period)
        return r_canonicalize(RealSignal(sig.width, left, (), new_tail))
    entries = [(tp, r_value_at(sig, tp))] + [(t, v) for t, v in sig.transient if t > tp]
    return r_canonicalize(RealSignal(sig.width, left, tuple(entries), tail))


def r_map(sig: RealSignal, fn: Callable[[Point], Point], width: int) -> RealSignal:
    """Apply fn to every value (e.g. the indicator of a point)."""
    tail = sig.tail
    if tail is not None:
        tail = Tail(tail.anchor, tail.period, tuple((o, fn(v)) for o, v in tail.pattern))
    return RealSignal(width, fn(sig.initial),
                      tuple((t, fn(v)) for t, v in sig.transient), tail)


ONE = Point((1,))
ZERO = Point((0,))


def indicator(sig: RealSignal, mu: Point) -> RealSignal:
    """Canonical width-1 signal equal to 1 exactly on the support of mu."""
    if mu.width != sig.width:
        raise WidthError(f"point width {mu.width} != signal width {sig.width}")
    return r_canonicalize(r_map(sig, lambda v: ONE if v == mu else ZERO, 1))


@dataclass(frozen=True)
class RSummary:
    orbit: FrozenSet[Point]
    omega: FrozenSet[Point]
    omega_horizon: Optional[Fraction]  # None: omega values occur at all times
    initial_value: Point
    initial_time_set: TimeSet
    final_value: Optional[Point]
    final_time_set: TimeSet


def r_summarize(sig: RealSignal) -> RSummary:
    c = r_canonicalize(sig)
    values = {c.initial} | {v for _, v in c.transient}
    if c.tail is not None:
        omega = frozenset(v for _, v in c.tail.pattern)
    else:
        omega = frozenset({c.transient[-1][1] if c.transient else c.initial})
    orbit = frozenset(values) | omega
    t0 = c.first_change()
    its = TimeSet.all() if t0 is None else TimeSet.upto(t0)
    # last instant at which a non-omega value ends
    horizon = None
    if c.initial not in omega:
        horizon = c.transient[0][0] if c.transient else c.tail.anchor
    for i, (t, v) in enumerate(c.transient):
        if v not in omega:
            nxt = c.transient[i + 1][0] if i + 1 < len(c.transient) else c.tail.anchor
            horizon = nxt
    if c.tail is None:
        final = next(iter(omega))
        fts = TimeSet.since(c.transient[-1][0]) if c.transient else TimeSet.all()
    else:
        final, fts = None, TimeSet.empty()
    return RSummary(orbit, omega, horizon, c.initial, its, final, fts)


# support sets ----------------------------------------------------------

Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class IntervalTail:
    anchor: Fraction
    period: Fraction
    pattern: Tuple[Interval, ...]


@dataclass(frozen=True)
class EvPeriodicIntervalSet:
    """(-inf, initial_ray) u transient u periodic tail u [final_ray, inf).

    ``everything`` marks all of R.
    """

    initial_ray: Optional[Fraction] = None
    transient_intervals: Tuple[Interval, ...] = ()
    tail: Optional[IntervalTail] = None
    final_ray: Optional[Fraction] = None
    everything: bool = False

    def __contains__(self, t) -> bool:
        t = parse_rat(t)
        if self.everything:
            return True
        if self.initial_ray is not None and t < self.initial_ray:
            return True
        if any(a <= t < b for a, b in self.transient_intervals):
            return True
        if self.final_ray is not None and t >= self.final_ray:
            return True
        if self.tail is not None and t >= self.tail.anchor:
            off = self.tail.anchor + (t - self.tail.anchor) % self.tail.period
            return any(a <= off < b for a, b in self.tail.pattern)
        return False

    def is_empty(self) -> bool:
        return (not self.everything and self.initial_ray is None and not self.transient_intervals
                and self.tail is None and self.final_ray is None)


def support_intervals(ind: RealSignal, lo, hi) -> List[Interval]:
    """Maximal pieces of [lo, hi) where a width-1 signal equals 1."""
    return [(a, b) for a, b, v in ind.segments(lo, hi) if v == ONE]


def r_support_set(sig: RealSignal, mu: Point) -> EvPeriodicIntervalSet:
    ind = indicator(sig, mu)
    if ind.tail is None and not ind.transient:
        return EvPeriodicIntervalSet(everything=True) if ind.initial == ONE else EvPeriodicIntervalSet()
    ray = None
    lo = ind.lowest_time()
    if ind.initial == ONE:
        ray = ind.first_change()
        lo = ray
    if ind.tail is None:
        last_t, last_v = ind.transient[-1]
        final = last_t if last_v == ONE else None
        trans = support_intervals(ind, lo, last_t)
        return EvPeriodicIntervalSet(ray, tuple(trans), None, final)
    T = ind.tail.period
    start = ind.tail.anchor if ray is None else max(ind.tail.anchor, ray)
    pieces = support_intervals(ind, start, start + T)
    a1 = pieces[0][0]
    trans = support_intervals(ind, lo, a1) if a1 > lo else []
    return EvPeriodicIntervalSet(ray, tuple(trans), IntervalTail(a1, T, tuple(pieces)))
