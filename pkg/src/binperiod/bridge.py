"""Discrete <-> real correspondence on a uniform grid t0 + k*h."""
from __future__ import annotations

from fractions import Fraction

from .core import parse_rat
from .dsignal import DiscreteSignal, d_canonicalize
from .errors import DomainError, GridMismatch
from .rsignal import RealSignal, Tail, r_canonicalize, r_limits, r_value_at


def embed(sig: DiscreteSignal, t0, h) -> RealSignal:
    """x(t) = sig(k) on [t0+kh, t0+(k+1)h), sig(-1) before t0."""
    t0, h = parse_rat(t0), parse_rat(h)
    if h <= 0:
        raise DomainError("grid step h must be positive")
    c = d_canonicalize(sig)
    a = c.anchor
    # prefix values at k = 0 .. a-1 become transient cells
    entries = tuple((t0 + k * h, c.prefix[k + 1]) for k in range(0, a))
    anchor = t0 + a * h
    if a == -1:
        # the cycle already covers k = -1; start the tail at k = 0
        anchor = t0
        cyc = c.cycle[1:] + c.cycle[:1]
    else:
        cyc = c.cycle
    pattern = tuple((i * h, v) for i, v in enumerate(cyc))
    tail = Tail(anchor, h * len(cyc), pattern)
    return r_canonicalize(RealSignal(c.width, c.prefix[0] if c.prefix else c.cycle[0],
                                     entries, tail))


def _grid_refines(sig: RealSignal, t0: Fraction, h: Fraction) -> None:
    c = r_canonicalize(sig)
    lo = c.lowest_time()
    hi = (c.tail.anchor + 2 * c.tail.period) if c.tail else (lo + 2)
    hi = max(hi, t0 + h)
    for t in c.change_times(lo, hi):
        q = (t - t0) / h
        if t < t0 or q.denominator != 1:
            raise GridMismatch(f"breakpoint {t} falls strictly inside a grid cell "
                               f"(t0={t0}, h={h})")
    if c.tail is not None:
        q = c.tail.period / h
        if q.denominator != 1:
            raise GridMismatch(f"tail period {c.tail.period} is not a multiple of h={h}")


def sample(sig: RealSignal, t0, h, phase_check: bool = True) -> DiscreteSignal:
    """x^(-1) = x(-inf+0), x^(k) = x(t0 + k h)."""
    t0, h = parse_rat(t0), parse_rat(h)
    if h <= 0:
        raise DomainError("grid step h must be positive")
    if phase_check:
        _grid_refines(sig, t0, h)
    c = r_canonicalize(sig)
    initial = c.initial
    if c.tail is None:
        last = max([t for t, _ in c.transient] + [t0])
        n = max(0, -((t0 - last) // h)) + 1
        prefix = [initial] + [r_value_at(c, t0 + k * h) for k in range(n)]
        return d_canonicalize(DiscreteSignal(c.width, tuple(prefix[:-1]), (prefix[-1],)))
    A, P = c.tail.anchor, c.tail.period
    # grid samples are eventually periodic with period lcm(P, h)/h steps
    ratio = P / h
    steps = ratio.numerator  # P*num/den steps -> period in steps is numerator
    start = max(0, int((A - t0) // h) + 1)
    prefix = [initial] + [r_value_at(c, t0 + k * h) for k in range(start)]
    cycle = [r_value_at(c, t0 + k * h) for k in range(start, start + steps)]
    return d_canonicalize(DiscreteSignal(c.width, tuple(prefix), tuple(cycle)))
