"""Command-line front end.

Exit status: 0 success, 1 analysis error (or a failed check), 2 usage or
parse error. Reports go to standard output, errors to standard error.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .bridge import embed, sample
from .core import Point, parse_rat
from .dsignal import DiscreteSignal
from .errors import ParseError, SignalError
from .flowgen import run_flow
from .oracle import agree
from .periodicity import analyze_point, analyze_signal
from .perturb import SetInstant, SetProgression, d_edit, r_edit
from .render import analysis_to_dict, analysis_to_text, point_to_dict, point_to_text, to_json
from .report import characterization_report, report_to_dict, report_to_text
from .textio import (parse_dsignal, parse_edit_script, parse_flow, parse_rsignal, parse_signal,
                     write_signal)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _rat_arg(text: str, flag: str):
    try:
        return parse_rat(text)
    except (ParseError, TypeError):
        raise UsageError(f"{flag}: bad rational {text!r}") from None


def _with_analysis(sig, fmt: str, analyze: bool) -> str:
    """The signal in its file format, optionally followed by its analysis."""
    sa = analyze_signal(sig) if analyze else None
    if fmt == "json":
        body = {"signal": write_signal(sig)}
        if sa is not None:
            body["analysis"] = analysis_to_dict(sa)
        return to_json(body)
    text = write_signal(sig)
    if sa is not None:
        text += "\n" + analysis_to_text(sa)
    return text


def cmd_analyze(args) -> str:
    sa = analyze_signal(parse_signal(_read(args.file), args.file))
    return to_json(analysis_to_dict(sa)) if args.format == "json" else analysis_to_text(sa)


def cmd_point(args) -> str:
    sig = parse_signal(_read(args.file), args.file)
    try:
        mu = Point.parse(args.mu)
    except SignalError as exc:
        raise UsageError(f"--mu: {exc}") from None
    pa = analyze_point(sig, mu)
    if args.format == "json":
        return to_json({"point": str(mu), **point_to_dict(pa)})
    return point_to_text(pa)


def cmd_embed(args) -> str:
    sig = parse_dsignal(_read(args.file), args.file)
    out = embed(sig, _rat_arg(args.t0, "--t0"), _rat_arg(args.h, "--h"))
    return _with_analysis(out, args.format, args.analyze)


def cmd_sample(args) -> str:
    sig = parse_rsignal(_read(args.file), args.file)
    out = sample(sig, _rat_arg(args.t0, "--t0"), _rat_arg(args.h, "--h"),
                 phase_check=not args.no_phase_check)
    return _with_analysis(out, args.format, args.analyze)


def cmd_perturb(args) -> str:
    sig = parse_signal(_read(args.file), args.file)
    edits = parse_edit_script(_read(args.script), sig.width, args.script)
    discrete_edits = [isinstance(e, (SetInstant, SetProgression)) for e in edits]
    if isinstance(sig, DiscreteSignal):
        if not all(discrete_edits):
            raise ParseError("real-time edits cannot be applied to a discrete signal", args.script)
        out = d_edit(sig, edits)
    else:
        if any(discrete_edits):
            raise ParseError("discrete edits cannot be applied to a real signal", args.script)
        out = r_edit(sig, edits)
    return _with_analysis(out, args.format, True)


def cmd_flow(args) -> str:
    fs = parse_flow(_read(args.file), args.file)
    out = run_flow(fs.phi, fs.alpha, fs.init)
    return _with_analysis(out, args.format, args.analyze)


def cmd_check(args) -> tuple:
    sig = parse_signal(_read(args.file), args.file)
    if isinstance(sig, DiscreteSignal):
        if args.p_bound is None or args.p_bound < 1:
            raise UsageError("check on a discrete signal needs --p-bound N >= 1")
        Ts = []
    else:
        if not args.T:
            raise UsageError("check on a real signal needs --T with a comma separated list")
        Ts = [_rat_arg(t, "--T") for t in args.T.split(",") if t.strip()]
        if any(t <= 0 for t in Ts):
            raise UsageError("--T values must be positive")
    horizon = None if args.horizon is None else _rat_arg(args.horizon, "--horizon")
    if horizon is not None and horizon.denominator == 1 and isinstance(sig, DiscreteSignal):
        horizon = int(horizon)
    rep = characterization_report(sig, args.p_bound, Ts, horizon)
    ag = agree(sig, None, args.p_bound or 12, Ts)
    ok = rep.consistent and ag.ok
    if args.format == "json":
        body = {"characterization": report_to_dict(rep),
                "oracle": {"checks": ag.checks, "period_candidates": [str(p) for p in ag.period_candidates],
                           "disagreements": [str(d) for d in ag.disagreements]},
                "ok": ok}
        return to_json(body), ok
    text = report_to_text(rep)
    text += f"oracle_checks: {ag.checks}\n"
    text += f"oracle_disagreements: {len(ag.disagreements)}\n"
    text += "".join(f"disagreement: {d}\n" for d in ag.disagreements)
    text += f"ok: {'yes' if ok else 'no'}\n"
    return text, ok


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="binperiod", description="Periodicity analysis of binary signals.")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)
    sub.required = True

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    sp = add("analyze", "full signal analysis with per-point reports")
    sp.add_argument("file")
    sp = add("point", "analysis of one point")
    sp.add_argument("file")
    sp.add_argument("--mu", required=True, help="point as a bit string, e.g. 01")
    sp = add("embed", "discrete signal to real signal on the grid t0 + kh")
    sp.add_argument("file")
    sp.add_argument("--t0", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--analyze", action="store_true")
    sp = add("sample", "real signal to discrete signal on the grid t0 + kh")
    sp.add_argument("file")
    sp.add_argument("--t0", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--no-phase-check", action="store_true")
    sp.add_argument("--analyze", action="store_true")
    sp = add("perturb", "apply an edit script and analyze the result")
    sp.add_argument("file")
    sp.add_argument("--script", required=True)
    sp = add("flow", "generate the trajectory of an asynchronous flow")
    sp.add_argument("file")
    sp.add_argument("--analyze", action="store_true")
    sp = add("check", "characterization statements and oracle agreement")
    sp.add_argument("file")
    sp.add_argument("--p-bound", type=int, default=None)
    sp.add_argument("--T", default=None, help="comma separated positive rationals")
    sp.add_argument("--horizon", default=None)
    return p


_COMMANDS = {"analyze": cmd_analyze, "point": cmd_point, "embed": cmd_embed,
             "sample": cmd_sample, "perturb": cmd_perturb, "flow": cmd_flow,
             "check": cmd_check}


def execute(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = _COMMANDS[args.cmd](args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except SignalError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    out.write(result)
    return 0 if ok else 1


def main() -> None:
    sys.exit(execute())
