"""Brute-force checks of the periodicity definitions on finite windows.

Nothing here uses canonical forms or the analysis engine: signals are
unrolled into explicit windows first and every verdict comes from direct
evaluation of the defining conditions on the window.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .core import Point, format_rat, parse_rat
from .dsignal import DiscreteSignal, d_value_at
from .errors import HorizonError
from .rsignal import RealSignal, r_value_at


@dataclass(frozen=True)
class WindowSignal:
    """Values on [start, end).

    Discrete windows list one value per instant. Real windows list
    (time, value) changes whose first time is ``start``.
    """

    width: int
    start: Union[int, Fraction]
    end: Union[int, Fraction]
    values: Tuple
    discrete: bool

    def __post_init__(self):
        if self.discrete:
            if self.end != self.start + len(self.values):
                raise ValueError("discrete window length mismatch")
        else:
            times = [t for t, _ in self.values]
            if not times or times[0] != self.start:
                raise ValueError("real window must begin with a value at start")
            if any(a >= b for a, b in zip(times, times[1:])) or times[-1] >= self.end:
                raise ValueError("real window times must increase inside [start, end)")
            object.__setattr__(self, "_times", tuple(times))

    def at(self, t) -> Point:
        if not self.start <= t < self.end:
            raise HorizonError(f"time {t} outside the window [{self.start}, {self.end})")
        if self.discrete:
            return self.values[t - self.start]
        return self.values[bisect.bisect_right(self._times, t) - 1][1]

    @property
    def breaks(self) -> List:
        if self.discrete:
            return list(range(self.start, self.end))
        return list(self._times)

    def first_change(self):
        """First time the value differs from the value at start, if any."""
        if self.discrete:
            for k, v in enumerate(self.values):
                if v != self.values[0]:
                    return self.start + k
            return None
        return self.values[1][0] if len(self.values) > 1 else None


def discrete_window(sig: DiscreteSignal, end: int) -> WindowSignal:
    vals = tuple(d_value_at(sig, k) for k in range(-1, end))
    return WindowSignal(sig.width, -1, end, vals, True)


def real_window(sig: RealSignal, start, end) -> WindowSignal:
    start, end = parse_rat(start), parse_rat(end)
    pts = [start] + [t for t in sig.candidate_breaks(start, end) if t > start]
    vals = []
    for t in pts:
        v = r_value_at(sig, t)
        if not vals or vals[-1][1] != v:
            vals.append((t, v))
    return WindowSignal(sig.width, start, end, tuple(vals), False)


def block_window(blocks: Sequence[Tuple[int, int]]) -> WindowSignal:
    """Discrete width-1 window from (bit, run length) blocks, starting at -1."""
    vals = []
    for bit, n in blocks:
        vals += [Point((bit,))] * n
    return WindowSignal(1, -1, -1 + len(vals), tuple(vals), True)


def growing_blocks_window(rounds: int) -> WindowSignal:
    """0, 1, 00, 11, 000, 111, ... (neither value is eventually periodic)."""
    blocks = []
    for r in range(1, rounds + 1):
        blocks += [(0, r), (1, r)]
    return block_window(blocks)


def growing_ones_window(rounds: int) -> WindowSignal:
    """0, 1, 0, 11, 0, 111, ... (neither value is eventually periodic)."""
    blocks = []
    for r in range(1, rounds + 1):
        blocks += [(0, 1), (1, r)]
    return block_window(blocks)


def _cover(w: WindowSignal, lim, period) -> None:
    if lim < w.start or lim + 3 * period > w.end:
        raise HorizonError(
            f"window [{w.start}, {w.end}) does not cover [{lim}, {lim} + 3*{period}]")


# literal definitions -------------------------------------------------------

def brute_point_check(w: WindowSignal, mu: Point, period, lim) -> bool:
    """Support of mu met after lim, and closed under +-period shifts within [lim, end)."""
    _cover(w, lim, period)
    if w.discrete:
        support = {k for k in range(lim, w.end) if w.at(k) == mu}
        if not support:
            return False
        for k in support:
            j = k - ((k - lim) // period) * period
            while j < w.end:
                if j not in support:
                    return False
                j += period
        return True
    period, lim = parse_rat(period), parse_rat(lim)
    if not _support_after(w, lambda v: v == mu, lim):
        return False
    return _last_mismatch(w, lambda v: v == mu, period, lim) is None


def brute_signal_check(w: WindowSignal, period, lim) -> bool:
    """x(t) = x(t + period) for every t >= lim with t + period inside the window."""
    _cover(w, lim, period)
    if w.discrete:
        return all(w.at(k) == w.at(k + period) for k in range(lim, w.end - period))
    return _last_mismatch(w, lambda v: v, parse_rat(period), parse_rat(lim)) is None


def brute_constant(w: WindowSignal) -> bool:
    return w.first_change() is None


# shift-mismatch scans -----------------------------------------------------
#
# On a window, "closed under +-T shifts" is equivalent to "membership equals
# membership one period later" because any two shifted copies inside the
# window are linked by a chain of single shifts that stays inside it.

def _support_after(w: WindowSignal, pred, lim) -> bool:
    if w.discrete:
        return any(pred(w.at(k)) for k in range(lim, w.end))
    vals = w.values
    for i, (t, v) in enumerate(vals):
        nxt = vals[i + 1][0] if i + 1 < len(vals) else w.end
        if nxt > lim and pred(v):
            return True
    return False


def _last_mismatch(w: WindowSignal, pred, period, lim):
    """Right end of the last cell of [lim, end - period) where pred(x(t)) != pred(x(t+T))."""
    hi = w.end - period
    if w.discrete:
        bad = [k for k in range(lim, hi) if pred(w.at(k)) != pred(w.at(k + period))]
        return bad[-1] + 1 if bad else None
    crit = {lim}
    for b in w.breaks:
        crit.add(b)
        crit.add(b - period)
    pts = sorted(c for c in crit if lim <= c < hi)
    last = None
    for i, c in enumerate(pts):
        if pred(w.at(c)) != pred(w.at(c + period)):
            last = pts[i + 1] if i + 1 < len(pts) else hi
    return last


def brute_limit(w: WindowSignal, pred, period):
    """Least window limit from which the one-shift condition holds."""
    m = _last_mismatch(w, pred, period, w.start)
    return w.start if m is None else m


# engine vs oracle -----------------------------------------------------------

@dataclass
class Disagreement:
    level: str  # "point" | "signal" | "periodic-point" | "periodic-signal"
    point: Optional[str]
    period: str
    limit: Optional[str]
    brute: bool
    engine: bool

    def __str__(self):
        who = f" mu={self.point}" if self.point else ""
        at = f" limit={self.limit}" if self.limit is not None else ""
        return (f"{self.level}{who} period={self.period}{at}: "
                f"oracle={self.brute} engine={self.engine}")


@dataclass
class AgreeReport:
    period_candidates: List
    limit_candidates: List
    window: Tuple
    checks: int = 0
    disagreements: List[Disagreement] = field(default_factory=list)
    true_periods: List = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _fmt(x):
    return format_rat(Fraction(x)) if x is not None else None


def agree(sig, window_len: Optional[int] = None, p_bound: int = 12,
          T_candidates: Iterable = ()) -> AgreeReport:
    """Compare engine verdicts with brute-force window verdicts."""
    from .periodicity import analyze_signal  # local: keep the oracle importable alone

    sa = analyze_signal(sig)
    if isinstance(sig, DiscreteSignal):
        return _agree_discrete(sa, window_len, p_bound)
    return _agree_real(sa, [parse_rat(t) for t in T_candidates])


def _agree_discrete(sa, window_len, p_bound) -> AgreeReport:
    c = sa.signal
    a, m = c.anchor, len(c.cycle)
    kmax = a + 3
    end = kmax + 3 * p_bound + 2 * m + 4
    if window_len is not None:
        end = max(end, window_len - 1)
    w = discrete_window(c, end)
    periods = list(range(1, p_bound + 1))
    lims = list(range(-1, kmax + 1))
    rep = AgreeReport(periods, lims, (w.start, w.end))
    for p in periods:
        bl = brute_limit(w, lambda v: v, p)
        if bl <= kmax and p in sa.periods:
            rep.true_periods.append(p)
        for k in lims:
            _record(rep, "signal", None, p, k, k >= bl, p in sa.periods and k in sa.limits)
        _record(rep, "periodic-signal", None, p, None, bl == -1,
                p in sa.periods and -1 in sa.limits)
    for mu, pa in sa.per_point.items():
        pred = lambda v, mu=mu: v == mu
        for p in periods:
            bl = brute_limit(w, pred, p)
            for k in lims:
                brute = k >= bl and _support_after(w, pred, k)
                _record(rep, "point", mu, p, k, brute, p in pa.periods and k in pa.limits)
            brute_per = bl == -1 and _support_after(w, pred, kmax)
            _record(rep, "periodic-point", mu, p, None, brute_per,
                    p in pa.periods and pa.is_periodic_point)
    return rep


def _real_candidates(sa, extra: List[Fraction]):
    c = sa.signal
    lowest = c.lowest_time() + 1
    if c.tail is not None:
        A, P = c.tail.anchor, c.tail.period
        top = A + 2 * P
        divisors = [P / k for k in range(1, 2 * len(c.tail.pattern) + 1)] + [2 * P]
    else:
        A = c.transient[-1][0] if c.transient else Fraction(0)
        P = max(A - lowest, Fraction(1))
        top = A + 1
        divisors = [P, Fraction(1), Fraction(1, 2)]
    changes = c.change_times(lowest - 1, top)
    diffs = {b - a for i, a in enumerate(changes) for b in changes[i + 1:]}
    Tmax = 2 * P
    Ts = sorted({t for t in list(diffs) + divisors + extra if 0 < t <= max([Tmax] + extra)})
    lims = set(changes) | {lowest - 1}
    for pa in sa.per_point.values():
        if pa.limits.kind == "from":
            lims.add(pa.limits.start)
    if sa.limits.kind == "from":
        lims.add(sa.limits.start)
    lims = sorted(l for l in lims if l <= top)
    mids = [(x + y) / 2 for x, y in zip(lims, lims[1:])]
    lims = sorted(set(lims) | set(mids))
    return Ts, lims, P


def _agree_real(sa, extra: List[Fraction]) -> AgreeReport:
    c = sa.signal
    Ts, lims, P = _real_candidates(sa, extra)
    Tbig = max(Ts)
    start = min(lims) - 2 * Tbig - P - 2
    end = max(lims) + 3 * Tbig + 2 * P + 2
    w = real_window(c, start, end)
    t0 = w.first_change()
    rep = AgreeReport(Ts, lims, (w.start, w.end))

    def periodic(bl):
        return t0 is None or bl < t0

    for T in Ts:
        bl = brute_limit(w, lambda v: v, T)
        if T in sa.periods:
            rep.true_periods.append(T)
        for t in lims:
            _record(rep, "signal", None, T, t, t >= bl, T in sa.periods and t in sa.limits)
        engine_per = T in sa.periods and (sa.limits.kind == "all" or sa.window is not None)
        _record(rep, "periodic-signal", None, T, None, periodic(bl), engine_per)
    for mu, pa in sa.per_point.items():
        pred = lambda v, mu=mu: v == mu
        for T in Ts:
            bl = brute_limit(w, pred, T)
            for t in lims:
                brute = t >= bl and _support_after(w, pred, t)
                _record(rep, "point", mu, T, t, brute, T in pa.periods and t in pa.limits)
            brute_per = periodic(bl) and _support_after(w, pred, max(lims))
            _record(rep, "periodic-point", mu, T, None, brute_per,
                    T in pa.periods and pa.is_periodic_point)
    return rep


def _record(rep: AgreeReport, level, mu, period, lim, brute, engine):
    rep.checks += 1
    if brute != engine:
        rep.disagreements.append(Disagreement(level, str(mu) if mu is not None else None,
                                              _fmt(period), _fmt(lim), brute, engine))
