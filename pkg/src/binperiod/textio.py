"""Text formats for signals, windows, flows and edit scripts.

Every parse error names the offending line. ``#`` starts a comment.

    dsignal n=2
    prefix: 00 01
    cycle: 11 10

    rsignal n=1
    initial: 0
    transient: -2:1 -1:0
    tail: anchor=0 period=5 pattern: 0:1 2:0

    window n=1 time=discrete        window n=1 time=real
    start: -1                       start: -2
    values: 0 1 1 0                 values: -2:0 0:1 1/2:0
    end: 3                          end: 10

    phi: mu1 | ~mu1 & ~mu2; ~mu1 | mu1 & ~mu2
    alpha: prefix=01 cycle=11
    init: 00
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .core import Point, format_rat, parse_rat
from .dsignal import DiscreteSignal
from .errors import ParseError, SignalError, WidthError
from .flowgen import BooleanFunction, ComputationFunction, parse_phi
from .oracle import WindowSignal
from .perturb import (SetFlat, SetInstant, SetInterval, SetProgression, SetTrain, ShiftBreak,
                      ShiftInitial)
from .rsignal import RealSignal, Tail

_HEADER = re.compile(r"^(dsignal|rsignal|window)\s+n\s*=\s*(\d+)(?:\s+time\s*=\s*(discrete|real))?$")


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _where(no: int, source: Optional[str]) -> str:
    return f"{source}:{no}" if source else f"line {no}"


def _point(tok: str, n: int, loc: str) -> Point:
    try:
        p = Point.parse(tok)
    except SignalError as exc:
        raise ParseError(str(exc), loc) from None
    if p.width != n:
        raise ParseError(f"point {tok!r} has width {p.width}, expected {n}", loc)
    return p


def _rat(tok: str, loc: str):
    try:
        return parse_rat(tok)
    except (ParseError, TypeError):
        raise ParseError(f"bad rational {tok!r}", loc) from None


def _int(tok: str, loc: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad integer {tok!r}", loc) from None


def _timed(tok: str, n: int, loc: str):
    if ":" not in tok:
        raise ParseError(f"expected <time>:<bits>, got {tok!r}", loc)
    t, b = tok.rsplit(":", 1)
    return _rat(t, loc), _point(b, n, loc)


def _fields(text: str, source: Optional[str]) -> Tuple[str, int, Optional[str], Dict[str, Tuple[int, str]], int]:
    it = list(_lines(text))
    if not it:
        raise ParseError("empty input", _where(1, source))
    no, head = it[0]
    m = _HEADER.match(head)
    if not m:
        raise ParseError(f"expected a header like 'dsignal n=<width>', got {head!r}",
                         _where(no, source))
    n = int(m.group(2))
    if not 1 <= n <= 64:
        raise ParseError(f"width {n} outside 1..64", _where(no, source))
    fields: Dict[str, Tuple[int, str]] = {}
    for no2, line in it[1:]:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected '<field>: ...', got {line!r}", _where(no2, source))
        if key in fields:
            raise ParseError(f"duplicate field {key!r}", _where(no2, source))
        fields[key] = (no2, rest.strip())
    return m.group(1), n, m.group(3), fields, no


def _require(fields, key, kind, head_no, source):
    if key not in fields:
        raise ParseError(f"{kind} needs a '{key}:' line", _where(head_no, source))
    return fields[key]


def _unknown(fields, allowed, source):
    for key, (no, _) in fields.items():
        if key not in allowed:
            raise ParseError(f"unknown field {key!r}", _where(no, source))


# signals -------------------------------------------------------------------

def parse_dsignal(text: str, source: Optional[str] = None) -> DiscreteSignal:
    kind, n, _, fields, head = _fields(text, source)
    if kind != "dsignal":
        raise ParseError(f"expected a dsignal, found {kind}", _where(head, source))
    _unknown(fields, {"prefix", "cycle"}, source)
    pno, ptxt = fields.get("prefix", (head, ""))
    cno, ctxt = _require(fields, "cycle", "dsignal", head, source)
    prefix = tuple(_point(t, n, _where(pno, source)) for t in ptxt.split())
    cycle = tuple(_point(t, n, _where(cno, source)) for t in ctxt.split())
    if not cycle:
        raise ParseError("cycle must be nonempty", _where(cno, source))
    return DiscreteSignal(n, prefix, cycle)


def _parse_tail(txt: str, n: int, loc: str) -> Tail:
    head, sep, pat = txt.partition("pattern:")
    if not sep:
        raise ParseError("tail needs 'pattern:'", loc)
    kv = {}
    for tok in head.split():
        k, eq, v = tok.partition("=")
        if not eq or k not in ("anchor", "period"):
            raise ParseError(f"unexpected tail token {tok!r}", loc)
        kv[k] = _rat(v, loc)
    if set(kv) != {"anchor", "period"}:
        raise ParseError("tail needs anchor= and period=", loc)
    pattern = tuple(_timed(t, n, loc) for t in pat.split())
    try:
        return Tail(kv["anchor"], kv["period"], pattern)
    except (SignalError, ValueError) as exc:
        raise ParseError(str(exc), loc) from None


def parse_rsignal(text: str, source: Optional[str] = None) -> RealSignal:
    kind, n, _, fields, head = _fields(text, source)
    if kind != "rsignal":
        raise ParseError(f"expected an rsignal, found {kind}", _where(head, source))
    _unknown(fields, {"initial", "transient", "tail"}, source)
    ino, itxt = _require(fields, "initial", "rsignal", head, source)
    initial = _point(itxt, n, _where(ino, source))
    tno, ttxt = fields.get("transient", (head, ""))
    transient = tuple(_timed(t, n, _where(tno, source)) for t in ttxt.split())
    tail = None
    if "tail" in fields:
        lno, ltxt = fields["tail"]
        tail = _parse_tail(ltxt, n, _where(lno, source))
    try:
        return RealSignal(n, initial, transient, tail)
    except (SignalError, ValueError) as exc:
        loc = _where(fields["tail"][0] if "tail" in fields else tno, source)
        raise ParseError(str(exc), loc) from None


def parse_signal(text: str, source: Optional[str] = None) -> Union[DiscreteSignal, RealSignal]:
    first = next(_lines(text), (1, ""))[1]
    if first.startswith("rsignal"):
        return parse_rsignal(text, source)
    return parse_dsignal(text, source)


def write_dsignal(sig: DiscreteSignal) -> str:
    prefix = " ".join(map(str, sig.prefix))
    cycle = " ".join(map(str, sig.cycle))
    return f"dsignal n={sig.width}\nprefix: {prefix}".rstrip() + f"\ncycle: {cycle}\n"


def write_rsignal(sig: RealSignal) -> str:
    out = [f"rsignal n={sig.width}", f"initial: {sig.initial}"]
    if sig.transient:
        out.append("transient: " + " ".join(f"{format_rat(t)}:{v}" for t, v in sig.transient))
    if sig.tail is not None:
        pat = " ".join(f"{format_rat(o)}:{v}" for o, v in sig.tail.pattern)
        out.append(f"tail: anchor={format_rat(sig.tail.anchor)} "
                   f"period={format_rat(sig.tail.period)} pattern: {pat}")
    return "\n".join(out) + "\n"


def write_signal(sig) -> str:
    return write_dsignal(sig) if isinstance(sig, DiscreteSignal) else write_rsignal(sig)


# windows -------------------------------------------------------------------

def parse_window(text: str, source: Optional[str] = None) -> WindowSignal:
    kind, n, time, fields, head = _fields(text, source)
    if kind != "window":
        raise ParseError(f"expected a window, found {kind}", _where(head, source))
    _unknown(fields, {"start", "values", "end"}, source)
    discrete = time != "real"
    sno, stxt = _require(fields, "start", "window", head, source)
    vno, vtxt = _require(fields, "values", "window", head, source)
    eno, etxt = _require(fields, "end", "window", head, source)
    loc = _where(vno, source)
    if discrete:
        start, end = _int(stxt, _where(sno, source)), _int(etxt, _where(eno, source))
        values = tuple(_point(t, n, loc) for t in vtxt.split())
    else:
        start, end = _rat(stxt, _where(sno, source)), _rat(etxt, _where(eno, source))
        values = tuple(_timed(t, n, loc) for t in vtxt.split())
    try:
        return WindowSignal(n, start, end, values, discrete)
    except ValueError as exc:
        raise ParseError(str(exc), _where(eno, source)) from None


def write_window(w: WindowSignal) -> str:
    if w.discrete:
        vals = " ".join(map(str, w.values))
        return (f"window n={w.width} time=discrete\nstart: {w.start}\n"
                f"values: {vals}\nend: {w.end}\n")
    vals = " ".join(f"{format_rat(t)}:{v}" for t, v in w.values)
    return (f"window n={w.width} time=real\nstart: {format_rat(w.start)}\n"
            f"values: {vals}\nend: {format_rat(w.end)}\n")


# flows ---------------------------------------------------------------------

@dataclass(frozen=True)
class FlowSpec:
    phi: BooleanFunction
    exprs: Tuple[str, ...]
    alpha: ComputationFunction
    init: Point


def parse_flow(text: str, source: Optional[str] = None) -> FlowSpec:
    fields: Dict[str, Tuple[int, str]] = {}
    for no, line in _lines(text):
        if re.match(r"^flow(\s+n\s*=\s*\d+)?$", line):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("phi", "alpha", "init"):
            raise ParseError(f"expected 'phi:', 'alpha:' or 'init:', got {line!r}", _where(no, source))
        if key in fields:
            raise ParseError(f"duplicate field {key!r}", _where(no, source))
        fields[key] = (no, rest.strip())
    for key in ("phi", "alpha", "init"):
        if key not in fields:
            raise ParseError(f"flow needs a '{key}:' line", _where(1, source))
    pno, ptxt = fields["phi"]
    exprs = tuple(e.strip() for e in ptxt.split(";") if e.strip())
    try:
        phi = parse_phi(exprs)
    except (ParseError, WidthError) as exc:
        raise ParseError(str(exc), _where(pno, source)) from None
    n = phi.width
    ano, atxt = fields["alpha"]
    aloc = _where(ano, source)
    prefix: List[Point] = []
    cycle: List[Point] = []
    target = None
    for tok in atxt.split():
        if tok.startswith("prefix="):
            target, tok = prefix, tok[len("prefix="):]
        elif tok.startswith("cycle="):
            target, tok = cycle, tok[len("cycle="):]
        if target is None:
            raise ParseError("alpha values must follow prefix= or cycle=", aloc)
        if tok:
            target.append(_point(tok, n, aloc))
    if not cycle:
        raise ParseError("alpha needs a nonempty cycle=", aloc)
    ino, itxt = fields["init"]
    init = _point(itxt, n, _where(ino, source))
    return FlowSpec(phi, exprs, ComputationFunction(tuple(prefix), tuple(cycle)), init)


# edit scripts ---------------------------------------------------------------

_INTERVAL = re.compile(r"^\[\s*([^,\s]+)\s*,\s*([^)\s]+)\s*\)$")


def _kv(tokens: List[str], loc: str) -> Dict[str, str]:
    out = {}
    for tok in tokens:
        k, eq, v = tok.partition("=")
        if not eq or not v:
            raise ParseError(f"expected key=value, got {tok!r}", loc)
        if k in out:
            raise ParseError(f"duplicate key {k!r}", loc)
        out[k] = v
    return out


def _need(kv: Dict[str, str], keys, loc: str):
    missing = [k for k in keys if k not in kv]
    extra = [k for k in kv if k not in keys]
    if missing:
        raise ParseError(f"missing {', '.join(k + '=' for k in missing)}", loc)
    if extra:
        raise ParseError(f"unexpected {', '.join(k + '=' for k in extra)}", loc)


def parse_edit_script(text: str, width: int, source: Optional[str] = None) -> List:
    """Edits in order. Discrete and real edits may not be mixed.

    set k=<int> v=<bits>
    set-progression k0=<int> d=<int> v=<bits>
    set-interval [<t>,<t>) v=<bits>        (use inf for an unbounded end)
    set-train [<t>,<t>) T=<rat> v=<bits>
    set-flat t=<rat> v=<bits>
    shift t=<rat> by=<+-rat>
    shift-t0 <+-rat>
    """
    edits = []
    kinds = set()
    for no, line in _lines(text):
        loc = _where(no, source)
        cmd, *rest = line.split(None, 1)
        args = rest[0] if rest else ""
        if cmd in ("set-interval", "set-train"):
            m = re.match(r"^(\[[^)]*\))\s*(.*)$", args)
            if not m:
                raise ParseError(f"{cmd} needs an interval like [a,b)", loc)
            im = _INTERVAL.match(m.group(1))
            if not im:
                raise ParseError(f"bad interval {m.group(1)!r}", loc)
            a = _rat(im.group(1), loc)
            b = None if im.group(2) in ("inf", "+inf") else _rat(im.group(2), loc)
            kv = _kv(m.group(2).split(), loc)
            if cmd == "set-interval":
                _need(kv, ("v",), loc)
                edits.append(SetInterval(a, b, _point(kv["v"], width, loc)))
            else:
                _need(kv, ("T", "v"), loc)
                if b is None:
                    raise ParseError("a train needs a bounded interval", loc)
                edits.append(SetTrain(a, b, _rat(kv["T"], loc), _point(kv["v"], width, loc)))
            kinds.add("real")
        elif cmd == "set":
            kv = _kv(args.split(), loc)
            _need(kv, ("k", "v"), loc)
            edits.append(SetInstant(_int(kv["k"], loc), _point(kv["v"], width, loc)))
            kinds.add("discrete")
        elif cmd == "set-progression":
            kv = _kv(args.split(), loc)
            _need(kv, ("k0", "d", "v"), loc)
            edits.append(SetProgression(_int(kv["k0"], loc), _int(kv["d"], loc),
                                        _point(kv["v"], width, loc)))
            kinds.add("discrete")
        elif cmd == "set-flat":
            kv = _kv(args.split(), loc)
            _need(kv, ("t", "v"), loc)
            edits.append(SetFlat(_rat(kv["t"], loc), _point(kv["v"], width, loc)))
            kinds.add("real")
        elif cmd == "shift":
            kv = _kv(args.split(), loc)
            _need(kv, ("t", "by"), loc)
            edits.append(ShiftBreak(_rat(kv["t"], loc), _rat(kv["by"], loc)))
            kinds.add("real")
        elif cmd == "shift-t0":
            if not args or len(args.split()) != 1:
                raise ParseError("shift-t0 needs one signed rational", loc)
            edits.append(ShiftInitial(_rat(args, loc)))
            kinds.add("real")
        else:
            raise ParseError(f"unknown edit {cmd!r}", loc)
        if len(kinds) > 1:
            raise ParseError("discrete and real edits cannot be mixed", loc)
    return edits
