"""Constructive real numbers.

A :class:`CRN` is a pair of procedures: a fundamental sequence
``n -> x_n`` of rationals (``n >= 1``) and a regulator ``k -> M`` with
``|x_m - x_n| < 2**-k`` whenever ``m, n > M``. Precision is always a dyadic
exponent ``k``.

Order between CRNs is only semidecidable. :func:`apartness_search` looks
for a finite certificate that two numbers differ and answers ``Unknown``
when its fuel runs out; no function here ever reports two CRNs equal.
"""
from __future__ import annotations

import enum
import random
import threading
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvalidWitness, NegativePrecision
from .rational import ceil_log2, dyadic, precision_for
from .search import SearchOutcome, markov_search

Sequence_ = Callable[[int], Fraction]
Regulator = Callable[[int], int]


class CRN:
    """A constructive real: fundamental sequence plus regulator.

    The regulator is normalised on construction to a running maximum, so
    ``modulus(k + 1) >= modulus(k)`` and ``modulus(k) >= 1``. ``exact``
    records the rational value when it is known by construction; test
    oracles that only make sense on rationals read it.
    """

    def __init__(self, seq: Sequence_, reg: Regulator, *, exact: Fraction | None = None):
        self._seq = seq
        self._reg = reg
        self._mods: list[int] = []
        self._lock = threading.Lock()
        self.exact = exact

    def term(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("sequence indices start at 1")
        return Fraction(self._seq(n))

    def modulus(self, k: int) -> int:
        if k < 0:
            raise NegativePrecision(f"precision exponent must be >= 0, got {k}")
        with self._lock:
            mods = self._mods
            while len(mods) <= k:
                prev = mods[-1] if mods else 1
                mods.append(max(prev, int(self._reg(len(mods)))))
            return mods[k]

    def approx(self, k: int) -> Fraction:
        """A rational within ``2**-k`` of the limit."""
        return self.term(self.modulus(k) + 1)

    @cached_property
    def bound(self) -> Fraction:
        """``B`` with ``|x_n| < B`` for every ``n > modulus(0)``."""
        return abs(self.approx(0)) + 1

    def __add__(self, other):
        return crn_add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return crn_add(self, crn_neg(_lift(other)))

    def __rsub__(self, other):
        return crn_add(_lift(other), crn_neg(self))

    def __mul__(self, other):
        return crn_mul(self, _lift(other))

    __rmul__ = __mul__

    def __neg__(self):
        return crn_neg(self)

    def __abs__(self):
        return crn_abs(self)

    def __repr__(self):
        if self.exact is not None:
            return f"CRN({self.exact})"
        return f"CRN(~{self.approx(20)})"


def _lift(v) -> CRN:
    if isinstance(v, CRN):
        return v
    return crn_from_rational(Fraction(v))


def _both_exact(op, x: CRN, y: CRN):
    if x.exact is None or y.exact is None:
        return None
    return op(x.exact, y.exact)


def crn_from_rational(q) -> CRN:
    q = Fraction(q)
    return CRN(lambda n: q, lambda k: 1, exact=q)


def crn_from_sequence(seq: Sequence_, reg: Regulator) -> CRN:
    return CRN(seq, reg)


def crn_from_epsilon_regulator(seq: Sequence_, reg_eps: Callable[[Fraction], int]) -> CRN:
    """Build a CRN from a regulator that takes a rational tolerance."""
    return CRN(seq, lambda k: reg_eps(dyadic(k)))


def approx(x: CRN, k: int) -> Fraction:
    return x.approx(k)


def approx_eps(x: CRN, eps: Fraction) -> Fraction:
    return x.approx(precision_for(eps))


def crn_add(x: CRN, y: CRN) -> CRN:
    return CRN(lambda n: x.term(n) + y.term(n),
               lambda k: max(x.modulus(k + 1), y.modulus(k + 1)),
               exact=_both_exact(lambda a, b: a + b, x, y))


def crn_neg(x: CRN) -> CRN:
    return CRN(lambda n: -x.term(n), x.modulus,
               exact=None if x.exact is None else -x.exact)


def crn_abs(x: CRN) -> CRN:
    return CRN(lambda n: abs(x.term(n)), x.modulus,
               exact=None if x.exact is None else abs(x.exact))


def crn_min(x: CRN, y: CRN) -> CRN:
    return CRN(lambda n: min(x.term(n), y.term(n)),
               lambda k: max(x.modulus(k + 1), y.modulus(k + 1)),
               exact=_both_exact(min, x, y))


def crn_max(x: CRN, y: CRN) -> CRN:
    return CRN(lambda n: max(x.term(n), y.term(n)),
               lambda k: max(x.modulus(k + 1), y.modulus(k + 1)),
               exact=_both_exact(max, x, y))


def crn_mul(x: CRN, y: CRN) -> CRN:
    # |x_m y_m - x_n y_n| <= Bx|y_m - y_n| + By|x_m - x_n| beyond modulus(0)
    def reg(k):
        shift = ceil_log2(x.bound + y.bound + 1) + 1
        return max(x.modulus(k + shift), y.modulus(k + shift))

    return CRN(lambda n: x.term(n) * y.term(n), reg,
               exact=_both_exact(lambda a, b: a * b, x, y))


class Sign(enum.Enum):
    FIRST_SMALLER = "FirstSmaller"
    FIRST_LARGER = "FirstLarger"


@dataclass(frozen=True)
class ApartnessWitness:
    """``|approx(x, k+2) - approx(y, k+2)| > 2**-k`` in direction ``sign``."""

    k: int
    sign: Sign

    def verify(self, x: CRN, y: CRN) -> bool:
        d = x.approx(self.k + 2) - y.approx(self.k + 2)
        if abs(d) <= dyadic(self.k):
            return False
        return (d < 0) == (self.sign is Sign.FIRST_SMALLER)

    def to_json(self):
        return {"k": self.k, "sign": self.sign.value}


def apart_at(x: CRN, y: CRN, k: int) -> ApartnessWitness | None:
    """The apartness test at one precision; ``None`` when it fails."""
    d = x.approx(k + 2) - y.approx(k + 2)
    if abs(d) > dyadic(k):
        return ApartnessWitness(k, Sign.FIRST_SMALLER if d < 0 else Sign.FIRST_LARGER)
    return None


def apartness_search(x: CRN, y: CRN, fuel: int) -> SearchOutcome:
    """Try precisions ``0..fuel-1``; step ``s`` tests ``k = s - 1``."""
    return markov_search(lambda s: apart_at(x, y, s - 1), fuel)


def zero_witness(y: CRN, k: int) -> ApartnessWitness:
    """Check ``|approx(y, k+2)| > 2**-k`` and package it as a witness."""
    w = apart_at(y, crn_from_rational(0), k)
    if w is None:
        raise InvalidWitness(f"|approx(y, {k + 2})| does not exceed 2^-{k}")
    return w


def crn_div(x: CRN, y: CRN, w: ApartnessWitness) -> CRN:
    """``x / y`` given a certificate that ``y`` is apart from zero."""
    if not w.verify(y, crn_from_rational(0)):
        raise InvalidWitness(f"witness k={w.k} does not separate the divisor from 0")
    # beyond n0 every |y_n| > 2**-(k+1)
    n0 = y.modulus(w.k + 2)

    def seq(n):
        n = max(n, n0 + 1)
        return x.term(n) / y.term(n)

    def reg(k):
        shift = 2 * (w.k + 1) + ceil_log2(x.bound + y.bound + 1) + 1
        return max(n0, x.modulus(k + shift), y.modulus(k + shift))

    return CRN(seq, reg, exact=_both_exact(lambda a, b: a / b, x, y))


class GapOrder(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    WITHIN_GAP = "WithinGap"


def compare_with_gap(x: CRN, y: CRN, k: int) -> GapOrder:
    ax, ay = x.approx(k + 2), y.approx(k + 2)
    eps = dyadic(k)
    if ax < ay - eps:
        return GapOrder.LESS
    if ax > ay + eps:
        return GapOrder.GREATER
    return GapOrder.WITHIN_GAP


def sampled_cauchy_check(x: CRN, ks: Iterable[int], pairs: int = 10,
                         rng: random.Random | None = None, spread: int = 1000) -> bool:
    """Check the regulator on random index pairs beyond ``modulus(k)``.

    Returns ``False`` on the first violated ``|x_m - x_n| < 2**-k``.
    """
    rng = rng or random.Random(0)
    for k in ks:
        m0 = x.modulus(k)
        eps = dyadic(k)
        for _ in range(pairs):
            m = m0 + 1 + rng.randrange(spread)
            n = m0 + 1 + rng.randrange(spread)
            if abs(x.term(m) - x.term(n)) >= eps:
                return False
    return True
