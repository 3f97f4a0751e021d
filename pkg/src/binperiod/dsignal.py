"""Discrete-time signals N_ -> B^n in lasso form (prefix + repeating cycle)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence, Tuple

from .core import Point, TimeSet, check_width
from .errors import DomainError, WidthError


def primitive_period(seq: Sequence) -> int:
    """Least d dividing len(seq) such that seq is d-periodic (rotation period)."""
    m = len(seq)
    fail = [0] * (m + 1)
    fail[0] = -1
    k = -1
    for i in range(m):
        while k >= 0 and seq[k] != seq[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    d = m - fail[m]
    return d if m % d == 0 else m


@dataclass(frozen=True)
class DiscreteSignal:
    """Value at k is prefix[k+1] for k < len(prefix)-1, else read from cycle.

    The cycle starts at index len(prefix) - 1 (the anchor).
    """

    width: int
    prefix: Tuple[Point, ...]
    cycle: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise DomainError("cycle must be nonempty")
        check_width(self.width, self.prefix + self.cycle)

    @classmethod
    def lasso(cls, prefix: Sequence, cycle: Sequence) -> "DiscreteSignal":
        """Build from points or bit strings; width is taken from the cycle."""
        pre = tuple(p if isinstance(p, Point) else Point.parse(p) for p in prefix)
        cyc = tuple(p if isinstance(p, Point) else Point.parse(p) for p in cycle)
        if not cyc:
            raise DomainError("cycle must be nonempty")
        return cls(cyc[0].width, pre, cyc)

    @classmethod
    def constant(cls, mu: Point) -> "DiscreteSignal":
        return cls(mu.width, (), (mu,))

    @property
    def anchor(self) -> int:
        return len(self.prefix) - 1

    @property
    def period(self) -> int:
        return len(self.cycle)

    def __call__(self, k: int) -> Point:
        return d_value_at(self, k)

    def values(self, start: int, stop: int) -> list:
        return [d_value_at(self, k) for k in range(start, stop)]

    def canonical(self) -> "DiscreteSignal":
        return d_canonicalize(self)

    def same_as(self, other: "DiscreteSignal") -> bool:
        return d_canonicalize(self) == d_canonicalize(other)


def d_value_at(sig: DiscreteSignal, k: int) -> Point:
    if k < -1:
        raise DomainError(f"discrete time must be >= -1, got {k}")
    a = sig.anchor
    if k < a:
        return sig.prefix[k + 1]
    return sig.cycle[(k - a) % len(sig.cycle)]


def d_canonicalize(sig: DiscreteSignal) -> DiscreteSignal:
    d = primitive_period(sig.cycle)
    cycle = list(sig.cycle[:d])
    prefix = list(sig.prefix)
    # absorb prefix entries that agree with the cycle run backwards
    while prefix and prefix[-1] == cycle[-1]:
        prefix.pop()
        cycle = [cycle[-1]] + cycle[:-1]
    return DiscreteSignal(sig.width, tuple(prefix), tuple(cycle))


def d_forget(sig: DiscreteSignal, kp: int) -> DiscreteSignal:
    """sigma^{k'}: result(k) = sig(k + k')."""
    if kp < 0:
        raise DomainError(f"forget offset must be >= 0, got {kp}")
    a = sig.anchor
    start = max(a, kp - 1)
    prefix = tuple(d_value_at(sig, k) for k in range(kp - 1, start))
    cycle = tuple(d_value_at(sig, start + i) for i in range(len(sig.cycle)))
    return d_canonicalize(DiscreteSignal(sig.width, prefix, cycle))


@dataclass(frozen=True)
class DSummary:
    orbit: FrozenSet[Point]
    omega: FrozenSet[Point]
    omega_horizon: int
    initial_value: Point
    final_value: Optional[Point]
    final_time_set: TimeSet


def d_summarize(sig: DiscreteSignal) -> DSummary:
    c = d_canonicalize(sig)
    omega = frozenset(c.cycle)
    orbit = frozenset(c.prefix) | omega
    late = [k for k in range(-1, c.anchor) if d_value_at(c, k) not in omega]
    horizon = late[-1] + 1 if late else -1
    if len(c.cycle) == 1:
        final = c.cycle[0]
        fts = TimeSet.all() if not c.prefix else TimeSet.since(c.anchor)
    else:
        final = None
        fts = TimeSet.empty()
    return DSummary(orbit, omega, horizon, d_value_at(c, -1), final, fts)


@dataclass(frozen=True)
class EvPeriodicIntSet:
    """exceptional (below anchor) plus {anchor + r + j*period : r in residues}."""

    exceptional: FrozenSet[int]
    anchor: int
    period: int
    residues: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "exceptional", frozenset(self.exceptional))
        object.__setattr__(self, "residues", frozenset(self.residues))
        if self.period < 1 or self.anchor < -1:
            raise DomainError("bad periodic integer set")
        if any(not -1 <= e < self.anchor for e in self.exceptional):
            raise DomainError("exceptional members must lie below the anchor")
        if any(not 0 <= r < self.period for r in self.residues):
            raise DomainError("residues must lie in 0..period-1")

    def __contains__(self, k: int) -> bool:
        if k < self.anchor:
            return k in self.exceptional
        return (k - self.anchor) % self.period in self.residues

    def members(self, stop: int) -> list:
        return [k for k in range(-1, stop) if k in self]

    def is_empty(self) -> bool:
        return not self.exceptional and not self.residues


def d_support_set(sig: DiscreteSignal, mu: Point) -> EvPeriodicIntSet:
    if mu.width != sig.width:
        raise WidthError(f"point width {mu.width} != signal width {sig.width}")
    c = d_canonicalize(sig)
    res = sorted(i for i, v in enumerate(c.cycle) if v == mu)
    # anchor at the first occurrence inside the periodic part
    shift = res[0] if res else 0
    anchor = c.anchor + shift
    m = len(c.cycle)
    exc = {k for k in range(-1, anchor) if d_value_at(c, k) == mu}
    residues = {r - shift for r in res}
    return EvPeriodicIntSet(frozenset(exc), anchor, m, frozenset(residues))
