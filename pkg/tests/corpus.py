"""Seeded random signals and the hand-built example signals, shared by the tests."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from binperiod import DiscreteSignal, Point, RealSignal, Tail

LASSO_SEED = 20240611
REAL_SEED = 7177


def random_point(rng: random.Random, n: int) -> Point:
    return Point.from_int(rng.randrange(2 ** n), n)


def random_lasso(rng: random.Random, n_max=3, prefix_max=5, cycle_max=8) -> DiscreteSignal:
    n = rng.randint(1, n_max)
    # a small value pool makes repeated values (and so periodic points) likely
    pool = [random_point(rng, n) for _ in range(rng.randint(1, 3))]
    prefix = [rng.choice(pool + [random_point(rng, n)]) for _ in range(rng.randint(0, prefix_max))]
    cycle = [rng.choice(pool) for _ in range(rng.randint(1, cycle_max))]
    return DiscreteSignal(n, tuple(prefix), tuple(cycle))


def _time(rng: random.Random, lo: Fraction, spread: int = 3) -> Fraction:
    return lo + Fraction(rng.randint(1, spread * 2), rng.choice((1, 2)))


def random_real(rng: random.Random, n_max=3, transient_max=6, tail_max=4) -> RealSignal:
    n = rng.randint(1, n_max)
    pool = [random_point(rng, n) for _ in range(rng.randint(2, 3))]
    initial = rng.choice(pool)
    t = Fraction(rng.randint(-4, 2))
    transient = []
    for _ in range(rng.randint(0, transient_max)):
        transient.append((t, rng.choice(pool)))
        t = _time(rng, t)
    tail = None
    if rng.random() < 0.8:
        k = rng.randint(1, tail_max)
        offs = [Fraction(0)]
        for _ in range(k - 1):
            offs.append(_time(rng, offs[-1], 2))
        period = offs[-1] + Fraction(rng.randint(1, 4), rng.choice((1, 2)))
        pattern = tuple((o, rng.choice(pool)) for o in offs)
        anchor = transient[-1][0] + Fraction(rng.randint(0, 2)) if transient else t
        tail = Tail(anchor, period, pattern)
    return RealSignal(n, initial, tuple(transient), tail)


def lasso_corpus(count=200, seed=LASSO_SEED) -> List[DiscreteSignal]:
    rng = random.Random(seed)
    return [random_lasso(rng) for _ in range(count)]


def real_corpus(count=100, seed=REAL_SEED) -> List[RealSignal]:
    rng = random.Random(seed)
    return [random_real(rng) for _ in range(count)]


# example signals ---------------------------------------------------------

def alternating() -> DiscreteSignal:
    """1 at odd k, 0 at even k (k >= -1)."""
    return DiscreteSignal.lasso([], ["1", "0"])


def zero_then_ones() -> DiscreteSignal:
    return DiscreteSignal.lasso(["0"], ["1"])


def odd_support_from_one() -> DiscreteSignal:
    """Width 2; the value 11 occurs exactly at k = 1, 3, 5, ..."""
    return DiscreteSignal.lasso(["00", "00"], ["11", "01"])


def heaviside() -> RealSignal:
    return RealSignal.build("0", [(0, "1")])


def ones_from_zero() -> RealSignal:
    """1 on [2k, 2k+1) for k >= 0, 0 before."""
    return RealSignal.build("0", [], (0, 2, [(0, "1"), (1, "0")]))


def late_train() -> RealSignal:
    """1 on (-inf, 0), then 1 on [3,4), [5,6), [7,8), ..."""
    return RealSignal.build("1", [(0, "0")], (3, 2, [(0, "1"), (1, "0")]))


def gap_train() -> RealSignal:
    """1 on [0,1), [4,5), [6,7), [8,9), ..."""
    return RealSignal.build("0", [(0, "1"), (1, "0")], (4, 2, [(0, "1"), (1, "0")]))


def three_value(first_change) -> RealSignal:
    """Width 2: 00 before first_change, 01 until 3, then 11 on [3+3j, 4+3j)."""
    return RealSignal.build("00", [(first_change, "01")], (3, 3, [(0, "11"), (1, "01")]))


def single_gap() -> RealSignal:
    """1 on (-inf,2) and [4+5j, 5+5j)."""
    return RealSignal.build("1", [(2, "0")], (4, 5, [(0, "1"), (1, "0")]))


def double_gap() -> RealSignal:
    """1 on (-inf,1), [2+5j, 3+5j) and [4+5j, 5+5j)."""
    return RealSignal.build("1", [(1, "0")], (2, 5, [(0, "1"), (1, "0"), (2, "1"), (3, "0")]))


def five_train() -> RealSignal:
    """1 on (-inf,0), [1,2), [3,5) and their shifts by 5."""
    return RealSignal.build("1", [(0, "0")], (1, 5, [(0, "1"), (1, "0"), (2, "1"), (4, "0")]))


def late_five_train() -> RealSignal:
    """1 on (-inf,0), [1,5), then [6,7), [8,10) and their shifts by 5."""
    return RealSignal.build("1", [(0, "0"), (1, "1")],
                            (5, 5, [(0, "0"), (1, "1"), (2, "0"), (3, "1")]))


def grid_lasso() -> DiscreteSignal:
    """0 at k = -1, 0, 1 and 1 exactly at k = 2, 4, 6, ..."""
    return DiscreteSignal.lasso(["0", "0", "0"], ["1", "0"])


def fifth_instants() -> DiscreteSignal:
    """Width 2: 11 at k = -1, 4, 9, ..., 00 elsewhere."""
    return DiscreteSignal.lasso([], ["11", "00", "00", "00", "00"])


def fourth_instants() -> DiscreteSignal:
    return DiscreteSignal.lasso([], ["11", "00", "00", "00"])


def ray_train() -> RealSignal:
    """Width 2: 11 on (-inf,0) and [1+3j, 3+3j), 00 on [3j, 1+3j), j >= 0."""
    return RealSignal.build("11", [(0, "00")], (1, 3, [(0, "11"), (2, "00")]))
