"""Deterministic text and JSON encodings of analyses.

JSON schema (all rationals are strings "p/q" or integers as strings, points
are bit strings, lists of points are sorted by integer value):

    {"time": "discrete" | "real", "width": int,
     "classification": str, "prime_period": str | "all" | null,
     "periods": str, "limits": str, "prime_limit": str | null,
     "window": [str, str] | null, "orbit": [bits], "omega": [bits],
     "points": {bits: point}}

    point = {"prime_period", "periods", "limits", "prime_limit",
             "periodic_point": bool, "window": [str, str] | null,
             "support": str, "decomposition": {"period", "limit",
             "members": [str] | [[str, str]]} | null}
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .core import format_rat
from .dsignal import EvPeriodicIntSet
from .periodicity import PointAnalysis, SignalAnalysis, omega_of
from .rsignal import EvPeriodicIntervalSet


def _r(x) -> Optional[str]:
    return None if x is None else format_rat(Fraction(x))


def _iv(a, b) -> str:
    return f"[{_r(a)}, {_r(b)})"


def describe_support(s) -> str:
    if isinstance(s, EvPeriodicIntSet):
        parts = []
        if s.exceptional:
            parts.append("{" + ", ".join(map(str, sorted(s.exceptional))) + "}")
        if s.residues:
            res = ", ".join(str(s.anchor + r) for r in sorted(s.residues))
            parts.append(f"{{{res}}} + {s.period}j, j >= 0")
        return " u ".join(parts) if parts else "empty"
    assert isinstance(s, EvPeriodicIntervalSet)
    if s.everything:
        return "(-inf, inf)"
    parts = []
    if s.initial_ray is not None:
        parts.append(f"(-inf, {_r(s.initial_ray)})")
    parts += [_iv(a, b) for a, b in s.transient_intervals]
    if s.tail is not None:
        pieces = " ".join(_iv(a, b) for a, b in s.tail.pattern)
        parts.append(f"{{{pieces}}} + {_r(s.tail.period)}j, j >= 0")
    if s.final_ray is not None:
        parts.append(f"[{_r(s.final_ray)}, inf)")
    return " u ".join(parts) if parts else "empty"


def _prime(ps) -> Optional[str]:
    if ps.kind == "all":
        return "all"
    return _r(ps.prime)


def _window(w):
    return None if w is None else [_r(w[0]), _r(w[1])]


def point_to_dict(pa: PointAnalysis) -> dict:
    window = None
    if not pa.discrete and pa.is_periodic_point:
        t0 = pa.signal.first_change()
        lo = pa.prime_limit
        if t0 is not None and lo is not None:
            window = [_r(lo), _r(t0)]
    dec = None
    if pa.decomposition is not None:
        d = pa.decomposition
        members = [str(m) for m in d.members] if d.discrete else [[_r(a), _r(b)] for a, b in d.members]
        dec = {"period": _r(d.period), "limit": _r(d.limit), "members": members}
    return {
        "prime_period": _prime(pa.periods),
        "periods": pa.periods.describe(),
        "limits": pa.limits.describe(),
        "prime_limit": _r(pa.prime_limit),
        "periodic_point": pa.is_periodic_point,
        "window": window,
        "support": describe_support(pa.support),
        "decomposition": dec,
    }


def analysis_to_dict(sa: SignalAnalysis) -> dict:
    c = sa.signal
    return {
        "time": "discrete" if sa.discrete else "real",
        "width": c.width,
        "classification": sa.classification,
        "prime_period": _prime(sa.periods),
        "periods": sa.periods.describe(),
        "limits": sa.limits.describe(),
        "prime_limit": _r(sa.prime_limit),
        "window": _window(sa.window),
        "orbit": [str(m) for m in sorted(sa.per_point)],
        "omega": [str(m) for m in sorted(omega_of(c))],
        "points": {str(mu): point_to_dict(pa) for mu, pa in sorted(sa.per_point.items())},
    }


def _fmt_window(w) -> str:
    return "none" if w is None else f"[{w[0]}, {w[1]})"


def _point_lines(d: dict, indent: str = "") -> list:
    out = [
        f"{indent}prime_period: {d['prime_period'] or 'none'}",
        f"{indent}periods: {d['periods']}",
        f"{indent}limits: {d['limits']}",
        f"{indent}prime_limit: {d['prime_limit'] if d['prime_limit'] is not None else 'none'}",
        f"{indent}periodic_point: {'yes' if d['periodic_point'] else 'no'}",
    ]
    if d["window"] is not None:
        out.append(f"{indent}window: {_fmt_window(d['window'])}")
    out.append(f"{indent}support: {d['support']}")
    dec = d["decomposition"]
    if dec is not None:
        if dec["members"] and isinstance(dec["members"][0], list):
            mem = " ".join(f"[{a}, {b})" for a, b in dec["members"])
        else:
            mem = " ".join(dec["members"])
        out.append(f"{indent}decomposition: period={dec['period']} limit={dec['limit']} "
                   f"members: {mem or 'none'}")
    return out


def analysis_to_text(sa: SignalAnalysis) -> str:
    d = analysis_to_dict(sa)
    pp = d["prime_period"] or "none"
    lines = [
        f"summary: classification: {d['classification']}, prime_period: {pp}",
        f"time: {d['time']}",
        f"width: {d['width']}",
        f"classification: {d['classification']}",
        f"prime_period: {pp}",
        f"periods: {d['periods']}",
        f"limits: {d['limits']}",
        f"prime_limit: {d['prime_limit'] if d['prime_limit'] is not None else 'none'}",
    ]
    if d["time"] == "real":
        lines.append(f"window: {_fmt_window(d['window'])}")
    lines.append(f"orbit: {' '.join(d['orbit'])}")
    lines.append(f"omega: {' '.join(d['omega'])}")
    for mu, pd in d["points"].items():
        lines.append(f"point {mu}:")
        lines += _point_lines(pd, "  ")
    return "\n".join(lines) + "\n"


def point_to_text(pa: PointAnalysis) -> str:
    d = point_to_dict(pa)
    return "\n".join([f"point: {pa.point}"] + _point_lines(d)) + "\n"


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
