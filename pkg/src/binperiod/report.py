"""Constancy and periodicity characterizations, checked statement by statement.

Every statement of each equivalence group is evaluated by bounded
quantifier enumeration over unrolled windows of the signal (and of its
forgotten versions), independently of the analysis engine. The results are
then compared with what the engine's classification and period sets predict.

Universal quantifiers over p / T only range over the candidate list given;
the report header says so, and aggregate verdicts are phrased accordingly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .core import Point, format_rat, parse_rat
from .dsignal import DiscreteSignal, d_forget
from .errors import HorizonError
from .oracle import WindowSignal, brute_limit, discrete_window, real_window
from .periodicity import analyze_signal, hypothesis_p_report
from .rsignal import r_forget

GROUPS = (
    ("eventual_constancy", "all_orbit_points"),
    ("eventual_constancy", "some_orbit_point"),
    ("eventual_constancy", "some_omega_point"),
    ("eventual_constancy", "signal"),
    ("constancy", "all_orbit_points"),
    ("constancy", "some_orbit_point"),
    ("constancy", "signal"),
    ("eventual_periodicity", "omega_points"),
    ("eventual_periodicity", "signal"),
    ("periodicity", "orbit_points"),
    ("periodicity", "signal"),
)


@dataclass
class Statement:
    group: str
    subgroup: str
    key: str
    text: str
    values: Dict[str, bool] = field(default_factory=dict)


@dataclass
class CharacterizationReport:
    classification: str
    discrete: bool
    candidates: List
    horizon: object
    statements: List[Statement]
    expected: Dict[str, Dict[str, bool]]
    aggregates: Dict[str, Dict[str, object]]
    quantifier_swap: Dict[str, object]
    inconsistencies: List[str]

    @property
    def header(self) -> str:
        cands = ", ".join(_fmt(c) for c in self.candidates)
        return (f"universal quantifiers over the period are bounded to the candidates "
                f"{{{cands}}}; time quantifiers range over a horizon of {_fmt(self.horizon)}")

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    def table(self) -> Dict[str, Dict[str, bool]]:
        return {s.key: dict(s.values) for s in self.statements}


def _fmt(x) -> str:
    return format_rat(Fraction(x))


class _Evaluator:
    """Bounded quantifier evaluation on windows of one signal."""

    def __init__(self, sig, candidates: Sequence, horizon):
        self.sig = sig
        self.discrete = isinstance(sig, DiscreteSignal)
        tmax = max(candidates)
        if self.discrete:
            self.lo = -1
            rep_anchor, rep_period = sig.anchor, len(sig.cycle)
        else:
            self.lo = sig.lowest_time() - 1
            if sig.tail is not None:
                rep_anchor, rep_period = sig.tail.anchor, sig.tail.period
            else:
                rep_anchor = sig.transient[-1][0] if sig.transient else self.lo
                rep_period = Fraction(1)
        need = (rep_anchor - self.lo) + rep_period + tmax + 1
        if horizon < need:
            raise HorizonError(
                f"horizon {_fmt(horizon)} does not cover the periodic anchor plus two periods "
                f"(needs at least {_fmt(need)})")
        self.hi = self.lo + horizon
        self.end = self.hi + horizon + tmax + rep_period + 1
        self.w = self._window(sig)
        self._forgotten: Dict = {}
        self._limits: Dict = {}
        self._cands: Dict = {}
        self.orbit = sorted({v for v in self._values(self.w)})
        # omega: values still taken on the last representation period of the window
        tail_from = self.end - 2 * rep_period
        self.omega = sorted({v for v in self._values(self.w, tail_from)})

    # windows --------------------------------------------------------------

    def _window(self, sig) -> WindowSignal:
        if self.discrete:
            return discrete_window(sig, self.end)
        return real_window(sig, self.lo, self.end)

    def _values(self, w: WindowSignal, after=None):
        if w.discrete:
            return [v for k, v in zip(range(w.start, w.end), w.values)
                    if after is None or k >= after]
        out = []
        for i, (t, v) in enumerate(w.values):
            nxt = w.values[i + 1][0] if i + 1 < len(w.values) else w.end
            if after is None or nxt > after:
                out.append(v)
        return out

    def forgotten(self, tf) -> WindowSignal:
        if tf not in self._forgotten:
            f = d_forget(self.sig, tf) if self.discrete else r_forget(self.sig, tf)
            self._forgotten[tf] = self._window(f)
        return self._forgotten[tf]

    def limit_candidates(self, period) -> List:
        """Every time in [lo, hi) at which a one-shift verdict can change, plus midpoints."""
        if period in self._cands:
            return self._cands[period]
        if self.discrete:
            out = list(range(self.lo, self.hi))
            self._cands[period] = out
            return out
        crit = {self.lo}
        for b in self.w.breaks:
            crit.add(b)
            crit.add(b - period)
        pts = sorted(c for c in crit if self.lo <= c < self.hi)
        mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])] + [(pts[-1] + self.hi) / 2]
        self._cands[period] = sorted(set(pts) | set(mids))
        return self._cands[period]

    def forget_candidates(self) -> List:
        if self.discrete:
            return list(range(0, self.hi))
        pts = sorted({b for b in self.w.breaks if self.lo <= b < self.hi} | {self.lo})
        mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])] + [(pts[-1] + self.hi) / 2]
        return sorted(set(pts) | set(mids))

    # primitive conditions -------------------------------------------------

    def _limit(self, w: WindowSignal, mu: Optional[Point], period):
        key = (id(w), mu, period)
        if key not in self._limits:
            pred = (lambda v: v) if mu is None else (lambda v: v == mu)
            self._limits[key] = brute_limit(w, pred, period)
        return self._limits[key]

    def closure(self, w, mu, period, lim) -> bool:
        """Shifts by the period of support points after lim stay in the support."""
        return lim >= self._limit(w, mu, period)

    def signal_shift(self, w, period, lim) -> bool:
        """w(t) = w(t + period) for all t >= lim."""
        return lim >= self._limit(w, None, period)

    def meets(self, w, mu, lim) -> bool:
        return any(v == mu for v in self._values(w, lim))

    def initial_times(self, w: WindowSignal, cands) -> List:
        t0 = w.first_change()
        return [c for c in cands if t0 is None or c < t0]


def _discrete_statements(ev: _Evaluator) -> List[tuple]:
    """(group, subgroup, key, text, fn(p) -> bool) for discrete time."""
    w = ev.w
    lims = lambda p: ev.limit_candidates(p)
    fks = ev.forget_candidates()

    def cl(mu, p, k):
        return ev.closure(w, mu, p, k)

    def fcl(mu, p, kf):
        return ev.closure(ev.forgotten(kf), mu, p, -1)

    def impl(mu, p, k):
        # x(k)=mu implies x(k+p)=mu and (k-p >= k' implies x(k-p)=mu), literally
        for j in range(k, w.end - p):
            if w.at(j) == mu:
                if w.at(j + p) != mu or (j - p >= k and w.at(j - p) != mu):
                    return False
        return True

    def sig_from(p, k):
        return ev.signal_shift(w, p, k)

    def fsig(p, kf):
        return ev.signal_shift(ev.forgotten(kf), p, -1)

    orb, om = ev.orbit, ev.omega
    return [
        ("eventual_constancy", "all_orbit_points", "ec.all_orbit.limit",
         "every orbit point: some limit k' after which its support is closed under p-shifts",
         lambda p: all(any(cl(mu, p, k) for k in lims(p)) for mu in orb)),
        ("eventual_constancy", "all_orbit_points", "ec.all_orbit.forgotten",
         "every orbit point: some forgetting offset k'' making its support p-closed",
         lambda p: all(any(fcl(mu, p, kf) for kf in fks) for mu in orb)),
        ("eventual_constancy", "all_orbit_points", "ec.all_orbit.implication",
         "every orbit point: some k' with x(k)=mu implying x(k+p)=mu and x(k-p)=mu",
         lambda p: all(any(impl(mu, p, k) for k in lims(p)) for mu in orb)),
        ("eventual_constancy", "some_orbit_point", "ec.some_orbit.limit",
         "some orbit point met after k' with support closed under p-shifts after k'",
         lambda p: any(ev.meets(w, mu, k) and cl(mu, p, k) for mu in orb for k in lims(p))),
        ("eventual_constancy", "some_orbit_point", "ec.some_orbit.forgotten",
         "some orbit point present in a forgotten signal whose support is p-closed",
         lambda p: any(ev.meets(ev.forgotten(kf), mu, -1) and fcl(mu, p, kf)
                       for mu in orb for kf in fks)),
        ("eventual_constancy", "some_omega_point", "ec.some_omega.limit",
         "some omega point with support closed under p-shifts after some k'",
         lambda p: any(cl(mu, p, k) for mu in om for k in lims(p))),
        ("eventual_constancy", "some_omega_point", "ec.some_omega.forgotten",
         "some omega point with p-closed support in some forgotten signal",
         lambda p: any(fcl(mu, p, kf) for mu in om for kf in fks)),
        ("eventual_constancy", "signal", "ec.signal.limit",
         "some k' with x(k) = x(k+p) for all k >= k'",
         lambda p: any(sig_from(p, k) for k in lims(p))),
        ("eventual_constancy", "signal", "ec.signal.forgotten",
         "some forgetting offset k'' with a p-invariant forgotten signal",
         lambda p: any(fsig(p, kf) for kf in fks)),
        ("constancy", "all_orbit_points", "c.all_orbit.initial",
         "every orbit point: support closed under p-shifts from -1",
         lambda p: all(cl(mu, p, -1) for mu in orb)),
        ("constancy", "all_orbit_points", "c.all_orbit.every_limit",
         "every orbit point and every k': support closed under p-shifts after k'",
         lambda p: all(cl(mu, p, k) for mu in orb for k in lims(p))),
        ("constancy", "all_orbit_points", "c.all_orbit.forgotten",
         "every orbit point and every forgetting offset: p-closed support",
         lambda p: all(fcl(mu, p, kf) for mu in orb for kf in fks)),
        ("constancy", "all_orbit_points", "c.all_orbit.implication",
         "every orbit point: x(k)=mu implies x(k+p)=mu and x(k-p)=mu from -1",
         lambda p: all(impl(mu, p, -1) for mu in orb)),
        ("constancy", "some_orbit_point", "c.some_orbit.initial",
         "some orbit point with support closed under p-shifts from -1",
         lambda p: any(cl(mu, p, -1) for mu in orb)),
        ("constancy", "some_orbit_point", "c.some_orbit.every_limit",
         "some orbit point with p-closed support after every k'",
         lambda p: any(all(cl(mu, p, k) for k in lims(p)) for mu in orb)),
        ("constancy", "some_orbit_point", "c.some_orbit.forgotten",
         "some orbit point with p-closed support in every forgotten signal",
         lambda p: any(all(fcl(mu, p, kf) for kf in fks) for mu in orb)),
        ("constancy", "signal", "c.signal.initial",
         "x(k) = x(k+p) for every k",
         lambda p: sig_from(p, -1)),
        ("constancy", "signal", "c.signal.every_limit",
         "x(k) = x(k+p) for every k' and every k >= k'",
         lambda p: all(sig_from(p, k) for k in lims(p))),
        ("constancy", "signal", "c.signal.forgotten",
         "every forgotten signal is p-invariant",
         lambda p: all(fsig(p, kf) for kf in fks)),
        ("eventual_periodicity", "omega_points", "ep.omega.limit",
         "every omega point: support closed under p-shifts after some k'",
         lambda p: all(any(cl(mu, p, k) for k in lims(p)) for mu in om)),
        ("eventual_periodicity", "omega_points", "ep.omega.forgotten",
         "every omega point: p-closed support in some forgotten signal",
         lambda p: all(any(fcl(mu, p, kf) for kf in fks) for mu in om)),
        ("eventual_periodicity", "omega_points", "ep.omega.implication",
         "every omega point: some k' with x(k)=mu implying x(k+p)=mu and x(k-p)=mu",
         lambda p: all(any(impl(mu, p, k) for k in lims(p)) for mu in om)),
        ("eventual_periodicity", "signal", "ep.signal.limit",
         "some k' with x(k) = x(k+p) for all k >= k'",
         lambda p: any(sig_from(p, k) for k in lims(p))),
        ("eventual_periodicity", "signal", "ep.signal.forgotten",
         "some forgotten signal is p-invariant",
         lambda p: any(fsig(p, kf) for kf in fks)),
        ("periodicity", "orbit_points", "per.orbit.initial",
         "every orbit point: support closed under p-shifts from -1",
         lambda p: all(cl(mu, p, -1) for mu in orb)),
        ("periodicity", "orbit_points", "per.orbit.every_limit",
         "every orbit point and every k': p-closed support after k'",
         lambda p: all(cl(mu, p, k) for mu in orb for k in lims(p))),
        ("periodicity", "orbit_points", "per.orbit.forgotten",
         "every orbit point and every forgetting offset: p-closed support",
         lambda p: all(fcl(mu, p, kf) for mu in orb for kf in fks)),
        ("periodicity", "signal", "per.signal.initial",
         "x(k) = x(k+p) for every k",
         lambda p: sig_from(p, -1)),
        ("periodicity", "signal", "per.signal.every_limit",
         "x(k) = x(k+p) for every k' and every k >= k'",
         lambda p: all(sig_from(p, k) for k in lims(p))),
        ("periodicity", "signal", "per.signal.forgotten",
         "every forgotten signal is p-invariant",
         lambda p: all(fsig(p, kf) for kf in fks)),
    ]


def _real_statements(ev: _Evaluator) -> List[tuple]:
    """(group, subgroup, key, text, fn(T) -> bool) for real time."""
    w = ev.w
    lims = lambda T: ev.limit_candidates(T)
    init = lambda T: ev.initial_times(w, lims(T))
    fts = ev.forget_candidates()

    def cl(mu, T, t):
        return ev.closure(w, mu, T, t)

    def fw(tf):
        return ev.forgotten(tf)

    def f_init_cl(mu, T, tf):
        # some initial time t' of the forgotten signal after which mu's support is T-closed
        g = fw(tf)
        return any(ev.closure(g, mu, T, t) for t in ev.initial_times(g, lims(T)))

    def f_init_sig(T, tf, any_time=False):
        g = fw(tf)
        ts = lims(T) if any_time else ev.initial_times(g, lims(T))
        return any(ev.signal_shift(g, T, t) for t in ts)

    def sig_from(T, t):
        return ev.signal_shift(w, T, t)

    def later(ts, t):
        return [s for s in ts if s >= t]

    orb, om = ev.orbit, ev.omega
    return [
        ("eventual_constancy", "all_orbit_points", "ec.all_orbit.after_initial",
         "every orbit point: some t1' after an initial time with T-closed support after t1'",
         lambda T: all(any(cl(mu, T, t1) for t in init(T) for t1 in later(lims(T), t))
                       for mu in orb)),
        ("eventual_constancy", "all_orbit_points", "ec.all_orbit.limit",
         "every orbit point: some real t1' with T-closed support after t1'",
         lambda T: all(any(cl(mu, T, t) for t in lims(T)) for mu in orb)),
        ("eventual_constancy", "all_orbit_points", "ec.all_orbit.forgotten",
         "every orbit point: some forgotten signal with T-closed support after an initial time",
         lambda T: all(any(f_init_cl(mu, T, tf) for tf in fts) for mu in orb)),
        ("eventual_constancy", "some_orbit_point", "ec.some_orbit.limit",
         "some orbit point met after t1' with T-closed support after t1'",
         lambda T: any(ev.meets(w, mu, t) and cl(mu, T, t) for mu in orb for t in lims(T))),
        ("eventual_constancy", "some_omega_point", "ec.some_omega.limit",
         "some omega point with T-closed support after some t1'",
         lambda T: any(cl(mu, T, t) for mu in om for t in lims(T))),
        ("eventual_constancy", "signal", "ec.signal.after_initial",
         "some t1' after an initial time with x(t) = x(t+T) for t >= t1'",
         lambda T: any(sig_from(T, t1) for t in init(T) for t1 in later(lims(T), t))),
        ("eventual_constancy", "signal", "ec.signal.limit",
         "some real t1' with x(t) = x(t+T) for t >= t1'",
         lambda T: any(sig_from(T, t) for t in lims(T))),
        ("eventual_constancy", "signal", "ec.signal.forgotten_initial",
         "some forgotten signal T-invariant after one of its initial times",
         lambda T: any(f_init_sig(T, tf) for tf in fts)),
        ("eventual_constancy", "signal", "ec.signal.forgotten_any",
         "some forgotten signal T-invariant after some real time",
         lambda T: any(f_init_sig(T, tf, any_time=True) for tf in fts)),
        ("constancy", "all_orbit_points", "c.all_orbit.initial",
         "every orbit point: T-closed support after some initial time",
         lambda T: all(any(cl(mu, T, t) for t in init(T)) for mu in orb)),
        ("constancy", "all_orbit_points", "c.all_orbit.every_later",
         "every orbit point: some initial time t' with T-closed support after every t1' >= t'",
         lambda T: all(any(all(cl(mu, T, t1) for t1 in later(lims(T), t)) for t in init(T))
                       for mu in orb)),
        ("constancy", "all_orbit_points", "c.all_orbit.forgotten",
         "every orbit point and every forgotten signal: T-closed after an initial time",
         lambda T: all(f_init_cl(mu, T, tf) for mu in orb for tf in fts)),
        ("constancy", "some_orbit_point", "c.some_orbit.initial",
         "some orbit point with T-closed support after some initial time",
         lambda T: any(cl(mu, T, t) for mu in orb for t in init(T))),
        ("constancy", "some_orbit_point", "c.some_orbit.every_later",
         "some orbit point and initial time t' with T-closed support after every t1' >= t'",
         lambda T: any(all(cl(mu, T, t1) for t1 in later(lims(T), t))
                       for mu in orb for t in init(T))),
        ("constancy", "some_orbit_point", "c.some_orbit.forgotten",
         "some orbit point T-closed after an initial time of every forgotten signal",
         lambda T: any(all(f_init_cl(mu, T, tf) for tf in fts) for mu in orb)),
        ("constancy", "signal", "c.signal.initial",
         "some initial time t' with x(t) = x(t+T) for t >= t'",
         lambda T: any(sig_from(T, t) for t in init(T))),
        ("constancy", "signal", "c.signal.every_later",
         "some initial time t' with x(t) = x(t+T) after every t1' >= t'",
         lambda T: any(all(sig_from(T, t1) for t1 in later(lims(T), t)) for t in init(T))),
        ("constancy", "signal", "c.signal.forgotten",
         "every forgotten signal T-invariant after one of its initial times",
         lambda T: all(f_init_sig(T, tf) for tf in fts)),
        ("eventual_periodicity", "omega_points", "ep.omega.limit",
         "every omega point: T-closed support after some t'",
         lambda T: all(any(cl(mu, T, t) for t in lims(T)) for mu in om)),
        ("eventual_periodicity", "omega_points", "ep.omega.forgotten",
         "every omega point: some forgotten signal T-closed after an initial time",
         lambda T: all(any(f_init_cl(mu, T, tf) for tf in fts) for mu in om)),
        ("eventual_periodicity", "signal", "ep.signal.limit",
         "some t' with x(t) = x(t+T) for all t >= t'",
         lambda T: any(sig_from(T, t) for t in lims(T))),
        ("eventual_periodicity", "signal", "ep.signal.forgotten",
         "some forgotten signal T-invariant after one of its initial times",
         lambda T: any(f_init_sig(T, tf) for tf in fts)),
        ("periodicity", "orbit_points", "per.orbit.initial",
         "every orbit point: T-closed support after some initial time",
         lambda T: all(any(cl(mu, T, t) for t in init(T)) for mu in orb)),
        ("periodicity", "orbit_points", "per.orbit.forgotten",
         "every orbit point and every forgotten signal: T-closed after an initial time",
         lambda T: all(f_init_cl(mu, T, tf) for mu in orb for tf in fts)),
        ("periodicity", "signal", "per.signal.initial",
         "some initial time t' with x(t) = x(t+T) for t >= t'",
         lambda T: any(sig_from(T, t) for t in init(T))),
        ("periodicity", "signal", "per.signal.every_later",
         "some initial time t' with x(t) = x(t+T) after every t1' >= t'",
         lambda T: any(all(sig_from(T, t1) for t1 in later(lims(T), t)) for t in init(T))),
        ("periodicity", "signal", "per.signal.forgotten",
         "every forgotten signal T-invariant after one of its initial times",
         lambda T: all(f_init_sig(T, tf) for tf in fts)),
    ]


def _expectations(sa, candidates) -> Dict[str, Dict[str, bool]]:
    """What the engine predicts for each statement group at each candidate."""
    omega = [mu for mu, pa in sa.per_point.items() if _in_omega(sa, mu)]
    out: Dict[str, Dict[str, bool]] = {}
    for c in candidates:
        key = _fmt(c)
        periodic_sig = c in sa.periods and _periodic_limits(sa, sa.limits)
        pp = [mu for mu in omega if c in sa.per_point[mu].periods]
        periodic_pts = [mu for mu, pa in sa.per_point.items()
                        if c in pa.periods and pa.is_periodic_point]
        vals = {
            "eventual_constancy/all_orbit_points": len(pp) == len(omega),
            "eventual_constancy/some_orbit_point": bool(pp),
            "eventual_constancy/some_omega_point": bool(pp),
            "eventual_constancy/signal": c in sa.periods,
            "constancy/all_orbit_points": periodic_sig,
            "constancy/some_orbit_point": bool(periodic_pts),
            "constancy/signal": periodic_sig,
            "eventual_periodicity/omega_points": c in sa.periods,
            "eventual_periodicity/signal": c in sa.periods,
            "periodicity/orbit_points": periodic_sig,
            "periodicity/signal": periodic_sig,
        }
        for g, v in vals.items():
            out.setdefault(g, {})[key] = v
    return out


def _in_omega(sa, mu) -> bool:
    from .periodicity import omega_of
    return mu in omega_of(sa.signal)


def _periodic_limits(sa, limits) -> bool:
    if limits.kind == "all":
        return True
    if sa.discrete:
        return False
    return sa.window is not None


def characterization_report(sig, p_bound: Optional[int] = None,
                            T_candidates: Iterable = (), horizon=None) -> CharacterizationReport:
    """Evaluate every characterization statement at each candidate period.

    Discrete signals use p = 1..p_bound; real signals use T_candidates.
    ``horizon`` bounds the time quantifiers; None picks the smallest
    sufficient value.
    """
    sa = analyze_signal(sig)
    c = sa.signal
    if sa.discrete:
        if not p_bound or p_bound < 1:
            raise ValueError("p_bound must be a positive integer")
        candidates = list(range(1, p_bound + 1))
    else:
        candidates = sorted({parse_rat(t) for t in T_candidates})
        if not candidates or candidates[0] <= 0:
            raise ValueError("T_candidates must be a nonempty list of positive rationals")
    if horizon is None:
        horizon = _min_horizon(c, candidates)
    horizon = parse_rat(horizon) if not isinstance(horizon, int) else horizon
    ev = _Evaluator(c, candidates, horizon)
    specs = _discrete_statements(ev) if sa.discrete else _real_statements(ev)
    statements = []
    for group, sub, key, text, fn in specs:
        st = Statement(group, sub, key, text)
        for cand in candidates:
            st.values[_fmt(cand)] = bool(fn(cand))
        statements.append(st)

    expected = _expectations(sa, candidates)
    problems = []
    for st in statements:
        exp = expected[f"{st.group}/{st.subgroup}"]
        for k, v in st.values.items():
            if v != exp[k]:
                problems.append(f"{st.key} at {k}: evaluated {v}, engine predicts {exp[k]}")

    aggregates = {}
    for group, truth in (("eventual_constancy", sa.classification in ("constant", "eventually_constant")),
                         ("constancy", sa.classification == "constant")):
        members = [s for s in statements if s.group == group]
        all_true = all(all(s.values.values()) for s in members)
        refuted = sorted({k for s in members for k, v in s.values.items() if not v},
                         key=lambda k: Fraction(k))
        if truth and not all_true:
            problems.append(f"{group}: classification holds but candidates {refuted} fail")
        verdict = "holds for all tested candidates" if all_true else "refuted"
        if all_true and not truth:
            verdict = "not refuted by the tested candidates"
        aggregates[group] = {"classification_says": truth, "verdict": verdict,
                             "refuting_candidates": refuted}

    return CharacterizationReport(sa.classification, sa.discrete, candidates, horizon,
                                  statements, expected, aggregates, _quantifier_swap(sa), problems)


def _min_horizon(sig, candidates):
    tmax = max(candidates)
    if isinstance(sig, DiscreteSignal):
        return (sig.anchor + 1) + len(sig.cycle) + tmax + 1
    lo = sig.lowest_time() - 1
    if sig.tail is not None:
        return (sig.tail.anchor - lo) + sig.tail.period + tmax + 1
    last = sig.transient[-1][0] if sig.transient else lo
    return (last - lo) + 2 + tmax


def _quantifier_swap(sa) -> Dict[str, object]:
    """Each omega point eventually periodic on its own versus one common period and limit."""
    from .periodicity import omega_of
    omega = sorted(omega_of(sa.signal))
    each = all(not sa.per_point[mu].periods.is_empty() for mu in omega)
    hp = hypothesis_p_report(sa.signal)
    common = None
    if sa.periods.kind == "all":
        common = 1
    elif sa.periods.prime is not None:
        common = sa.periods.prime
    holds = each == (common is not None and all(common in sa.per_point[mu].periods
                                                 for mu in omega))
    return {
        "each_point_eventually_periodic": each,
        "common_period": None if common is None else _fmt(common),
        "equivalence_holds": holds and hp.lcm_relation_holds,
        "status": "exact" if sa.discrete else "empirical on representable class",
    }


# serialization ----------------------------------------------------------

def report_to_dict(rep: CharacterizationReport) -> dict:
    return {
        "header": rep.header,
        "classification": rep.classification,
        "time": "discrete" if rep.discrete else "real",
        "candidates": [_fmt(c) for c in rep.candidates],
        "horizon": _fmt(rep.horizon),
        "statements": [{"key": s.key, "group": s.group, "subgroup": s.subgroup,
                        "text": s.text, "values": s.values} for s in rep.statements],
        "aggregates": rep.aggregates,
        "quantifier_swap": rep.quantifier_swap,
        "consistent": rep.consistent,
        "inconsistencies": rep.inconsistencies,
    }


def report_to_text(rep: CharacterizationReport) -> str:
    lines = [f"# {rep.header}",
             f"classification: {rep.classification}",
             f"candidates: {', '.join(_fmt(c) for c in rep.candidates)}"]
    for s in rep.statements:
        row = " ".join(f"{k}={'T' if v else 'F'}" for k, v in s.values.items())
        lines.append(f"{s.key}: {row}")
    for g, agg in rep.aggregates.items():
        lines.append(f"{g}: {agg['verdict']}")
    qs = rep.quantifier_swap
    lines.append(f"quantifier_swap: {'holds' if qs['equivalence_holds'] else 'fails'} ({qs['status']})")
    lines.append(f"consistent: {'yes' if rep.consistent else 'no'}")
    lines += [f"inconsistency: {p}" for p in rep.inconsistencies]
    return "\n".join(lines) + "\n"
