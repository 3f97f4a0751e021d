"""Asynchronous Boolean flows: iterate Phi coordinate-wise under a computation function.

Expressions use variables ``mu1 .. mun`` (also ``x1`` or ``μ1``) with
negation (``¬``, ``~``, ``!`` or a postfix ``'``), conjunction (``·``, ``&``,
``*``), disjunction (``∪``, ``|``, ``+``) and exclusive or (``⊕``, ``^``).
Precedence: negation > conjunction > {disjunction, xor}, left associative.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .core import Point
from .dsignal import DiscreteSignal, d_canonicalize
from .errors import ParseError, WidthError

MAX_FLOW_WIDTH = 20

_TOKEN = re.compile(r"\s*(?:(?P<var>(?:mu|μ|x)_?(?P<idx>\d+))|(?P<const>[01])|(?P<op>[¬~!·&*∪|+⊕^()']))")
_NOT = set("¬~!")
_AND = set("·&*")
_OR = set("∪|+⊕^")


@dataclass(frozen=True)
class BooleanFunction:
    width: int
    table: Tuple[Point, ...]

    def __post_init__(self):
        if not 1 <= self.width <= MAX_FLOW_WIDTH:
            raise WidthError(f"flow width must be in 1..{MAX_FLOW_WIDTH}")
        if len(self.table) != 2 ** self.width:
            raise WidthError("truth table must have 2^n entries")
        if any(p.width != self.width for p in self.table):
            raise WidthError("truth table entries must have width n")

    def __call__(self, mu: Point) -> Point:
        return self.table[mu.to_int()]


@dataclass(frozen=True)
class ComputationFunction:
    """alpha^k for k >= 0, as a lasso: prefix then a repeating cycle."""

    prefix: Tuple[Point, ...]
    cycle: Tuple[Point, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("alpha cycle must be nonempty")
        w = {p.width for p in self.prefix + self.cycle}
        if len(w) != 1:
            raise WidthError("alpha values must share one width")

    @property
    def width(self) -> int:
        return self.cycle[0].width

    def at(self, k: int) -> Point:
        if k < len(self.prefix):
            return self.prefix[k]
        return self.cycle[(k - len(self.prefix)) % len(self.cycle)]

    def phase(self, k: int) -> int:
        """Index identifying alpha's state at step k (prefix positions first)."""
        if k < len(self.prefix):
            return k
        return len(self.prefix) + (k - len(self.prefix)) % len(self.cycle)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r}", f"column {pos + 1}")
        col = m.start(m.lastgroup) + 1
        if m.group("var"):
            out.append(("var", m.group("idx"), col))
        elif m.group("const"):
            out.append(("const", m.group("const"), col))
        else:
            out.append(("op", m.group("op"), col))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Callable:
        if not self.toks:
            raise ParseError("empty expression", "column 1")
        f = self.disj()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", f"column {tok[2]}")
        return f

    def disj(self):
        f = self.conj()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in _OR:
            self.take()
            g = self.conj()
            if tok[1] in "⊕^":
                f = (lambda a, b: lambda v: a(v) ^ b(v))(f, g)
            else:
                f = (lambda a, b: lambda v: a(v) | b(v))(f, g)
        return f

    def conj(self):
        f = self.neg()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in _AND:
            self.take()
            g = self.neg()
            f = (lambda a, b: lambda v: a(v) & b(v))(f, g)
        return f

    def neg(self):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in _NOT:
            self.take()
            f = self.neg()
            return lambda v: 1 - f(v)
        f = self.atom()
        while (tok := self.peek()) and tok == ("op", "'", tok[2]):
            self.take()
            f = (lambda a: lambda v: 1 - a(v))(f)
        return f

    def atom(self):
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of expression", f"column {len(self.toks) and self.toks[-1][2] + 1}")
        kind, val, col = tok
        if kind == "var":
            i = int(val)
            if not 1 <= i <= self.n:
                raise ParseError(f"variable index {i} outside 1..{self.n}", f"column {col}")
            return lambda v: v[i - 1]
        if kind == "const":
            c = int(val)
            return lambda v: c
        if val == "(":
            f = self.disj()
            close = self.take()
            if close is None or close[1] != ")":
                where = f"column {close[2]}" if close else "end of expression"
                raise ParseError("missing ')'", where)
            return f
        raise ParseError(f"unexpected {val!r}", f"column {col}")


def parse_phi(exprs: Sequence[str]) -> BooleanFunction:
    """Truth table of Phi = (exprs[0], ..., exprs[n-1]) by exhaustive evaluation."""
    n = len(exprs)
    if not 1 <= n <= MAX_FLOW_WIDTH:
        raise WidthError(f"flow width must be in 1..{MAX_FLOW_WIDTH}, got {n}")
    fns = []
    for j, e in enumerate(exprs):
        try:
            fns.append(_Parser(e, n).parse())
        except ParseError as exc:
            raise ParseError(str(exc), f"coordinate {j + 1}") from None
    table = []
    for code in range(2 ** n):
        mu = Point.from_int(code, n)
        table.append(Point(tuple(f(mu.bits) for f in fns)))
    return BooleanFunction(n, tuple(table))


def run_flow(phi: BooleanFunction, alpha: ComputationFunction, mu0: Point) -> DiscreteSignal:
    """x(-1) = mu0; coordinate i of x(k) is Phi_i(x(k-1)) when alpha^k_i = 1."""
    if alpha.width != phi.width or mu0.width != phi.width:
        raise WidthError("phi, alpha and the initial state must share one width")
    bound = 2 ** phi.width * (len(alpha.prefix) + len(alpha.cycle)) + 1
    seen = {}
    states = [mu0]
    state = mu0
    for k in range(bound + 1):
        key = (state, alpha.phase(k)) if k >= len(alpha.prefix) else None
        if key is not None and key in seen:
            first = seen[key]
            # states[j] is x(j - 1); step k produces x(k)
            prefix = tuple(states[: first])
            cycle = tuple(states[first: k])
            return d_canonicalize(DiscreteSignal(phi.width, prefix, cycle))
        if key is not None:
            seen[key] = k
        a = alpha.at(k)
        img = phi(state)
        state = Point(tuple(img.bits[i] if a.bits[i] else state.bits[i] for i in range(phi.width)))
        states.append(state)
    raise AssertionError("flow did not close into a cycle within the state bound")
