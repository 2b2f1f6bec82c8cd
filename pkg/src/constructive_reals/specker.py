"""A Specker sequence and the two sets it splits ``[a, b]`` into.

The sequence is

    s_n = a + (b - a) * sum(2**-(h(j) + 2) for j <= n)

where ``h`` lists the programs of a candidate pool in the order a lockstep
simulation sees them halt. ``h`` is injective, so the terms increase
strictly and stay below the midpoint of ``[a, b]``; over an unbounded pool
their supremum encodes the halting set and is not computable.

From it come ``A = union of [a, s_n)`` and ``B = intersection of [s_n, b]``.
Membership in ``A`` (equivalently non-membership in ``B``) is found by
search and is never decided negatively: a point where every tested term is
still below it gets ``Unknown``, however much fuel is spent.
"""
from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import EnumerationExhausted, InvalidWitness, OutOfInterval
from .machine import Program, decode, run
from .rational import dyadic, format_rational, precision_for
from .search import Accept, SearchOutcome, markov_search, outcome_to_json


@dataclass(frozen=True)
class IntervalSpec:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"need a < b, got [{self.a}, {self.b}]")

    def check(self, x: Fraction) -> None:
        if not self.a <= x <= self.b:
            raise OutOfInterval(
                f"{format_rational(x)} is outside [{format_rational(self.a)}, "
                f"{format_rational(self.b)}]")


def enumerate_pool(programs: Sequence[Program], budget: int) -> list[int]:
    """Pool positions of the programs that halt within ``budget`` steps.

    Ordered by halting step, ties by position; this is the discovery order
    of running the whole pool in lockstep.
    """
    found = []
    for pos, prog in enumerate(programs):
        res = run(prog, budget)
        if res.halted:
            found.append((res.at_step, pos))
    found.sort()
    return [pos for _, pos in found]


@dataclass(frozen=True)
class SpeckerSeq:
    """Specker terms over ``interval``.

    The candidate pool is program numbers ``0..index_bound-1`` followed by
    ``staged`` programs (each a program tuple or a program number). ``h``
    reports pool positions, which for the first ``index_bound`` entries
    are the program numbers themselves. Passing ``enumeration`` skips the
    machine runs and uses the given injective list as ``h``.
    """

    interval: IntervalSpec
    index_bound: int = 64
    budget: int = 10_000
    staged: tuple = ()
    enumeration: tuple[int, ...] | None = None

    @classmethod
    def from_enumeration(cls, interval: IntervalSpec, h: Sequence[int]) -> "SpeckerSeq":
        h = tuple(h)
        if len(set(h)) != len(h) or any(v < 0 for v in h):
            raise ValueError("enumeration must list distinct naturals")
        return cls(interval, index_bound=0, budget=1, enumeration=h)

    @cached_property
    def pool(self) -> list[Program]:
        staged = [decode(p) if isinstance(p, int) else tuple(p) for p in self.staged]
        return [decode(n) for n in range(self.index_bound)] + staged

    @cached_property
    def h(self) -> tuple[int, ...]:
        if self.enumeration is not None:
            return self.enumeration
        return tuple(enumerate_pool(self.pool, self.budget))

    @cached_property
    def _partial_sums(self) -> list[Fraction]:
        sums, acc = [], Fraction(0)
        for v in self.h:
            acc += dyadic(v + 2)
            sums.append(acc)
        return sums

    def __len__(self) -> int:
        """Number of terms available at the configured bounds."""
        return len(self.h)

    def term(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("term index must be >= 0")
        if n >= len(self.h):
            raise EnumerationExhausted(n + 1, len(self.h))
        a, b = self.interval.a, self.interval.b
        return a + (b - a) * self._partial_sums[n]

    def terms(self) -> list[Fraction]:
        return [self.term(n) for n in range(len(self))]

    def program(self, position: int) -> Program:
        """The program at a pool position.

        Staged programs are returned as instruction tuples: their Goedel
        numbers nest one pairing per instruction and are far too large to
        build for programs of realistic length.
        """
        return self.pool[position]


@dataclass(frozen=True)
class Ball:
    center: Fraction
    radius_exp: int

    @property
    def radius(self) -> Fraction:
        return dyadic(self.radius_exp)


@dataclass(frozen=True)
class OpennessCertificate:
    """A ball around ``point`` inside ``A_witness``, hence inside A."""

    point: Fraction
    ball: Ball
    witness: int
    set_tag: str = "A"


@dataclass(frozen=True)
class SpeckerSets:
    """The sets ``A = U [a, s_n)`` and ``B = n [s_n, b]`` of a Specker sequence.

    Both are held as procedures; nothing here enumerates their points.
    """

    seq: SpeckerSeq

    @property
    def interval(self) -> IntervalSpec:
        return self.seq.interval

    def in_A_n(self, x: Fraction, n: int) -> bool:
        return self.interval.a <= x < self.seq.term(n)

    def in_B_n(self, x: Fraction, n: int) -> bool:
        return self.seq.term(n) <= x <= self.interval.b

    def _below_term(self, x: Fraction):
        available = len(self.seq)

        def sd(step):
            n = step - 1
            if n < available and x < self.seq.term(n):
                return n
            return None

        return sd

    def in_A(self, x: Fraction, fuel: int) -> SearchOutcome:
        """Search for ``n`` with ``x < s_n``; terms past the known ones never accept."""
        x = Fraction(x)
        self.interval.check(x)
        return markov_search(self._below_term(x), fuel)

    def not_in_B(self, x: Fraction, fuel: int) -> SearchOutcome:
        # x is outside B_n exactly when x < s_n: same search, same witness
        x = Fraction(x)
        self.interval.check(x)
        return markov_search(self._below_term(x), fuel)

    def in_B_at_tested_levels(self, x: Fraction, fuel: int) -> bool:
        """Whether ``x`` lies in every ``B_n`` with ``n < fuel`` that is known."""
        x = Fraction(x)
        self.interval.check(x)
        upto = min(fuel, len(self.seq))
        return all(self.in_B_n(x, n) for n in range(upto))

    def openness_certificate_A(self, x: Fraction, n_witness: int) -> OpennessCertificate:
        """Largest dyadic ball at ``x`` whose right end stays at or below ``s_n``."""
        x = Fraction(x)
        self.interval.check(x)
        s = self.seq.term(n_witness)
        if not x < s:
            raise InvalidWitness(
                f"{format_rational(x)} is not below s_{n_witness} = {format_rational(s)}")
        r = precision_for(s - x)
        return OpennessCertificate(x, Ball(x, r), n_witness)

    def verify_certificate(self, cert: OpennessCertificate) -> bool:
        s = self.seq.term(cert.witness)
        return cert.ball.center + cert.ball.radius <= s

    def pseudo_open_probe_B(self, x: Fraction, radius_exp: int, fuel: int) -> SearchOutcome:
        """Search for a Specker term strictly inside the ball ``B(x, radius_exp)``.

        An ``Accept(m)`` shows the ball meets ``A`` (it contains ``s_m - e``
        for small ``e``), so it is not a ball inside ``B``.
        """
        x = Fraction(x)
        self.interval.check(x)
        eps = dyadic(radius_exp)
        available = len(self.seq)

        def sd(step):
            m = step - 1
            if m < available and abs(self.seq.term(m) - x) < eps:
                return m
            return None

        return markov_search(sd, fuel)

    def disjointness_check(self, x: Fraction, fuel: int) -> "MembershipReport":
        x = Fraction(x)
        out_a = self.in_A(x, fuel)
        out_b = self.not_in_B(x, fuel)
        in_b_all = self.in_B_at_tested_levels(x, fuel)
        if isinstance(out_a, Accept) and in_b_all:
            raise AssertionError(f"{x} accepted into A while inside every tested B_n")
        if isinstance(out_a, Accept) != isinstance(out_b, Accept) or (
                isinstance(out_a, Accept) and out_a.witness != out_b.witness):
            raise AssertionError(f"A and not-B searches disagree at {x}")
        return MembershipReport(x, out_a, out_b, in_b_all, fuel)


@dataclass(frozen=True)
class MembershipReport:
    """One row of a disjointness or probe run."""

    x: Fraction
    outcome_A: SearchOutcome
    outcome_B: SearchOutcome
    in_B_at_tested_levels: bool = field(default=False)
    fuel: int = 0

    @property
    def witness(self) -> int | None:
        for o in (self.outcome_A, self.outcome_B):
            if isinstance(o, Accept):
                return o.witness
        return None

    def b_verdict(self) -> str:
        if isinstance(self.outcome_B, Accept):
            return f"NotInB({self.outcome_B.witness})"
        return "Unknown"

    def to_json(self) -> str:
        return json.dumps({
            "x": format_rational(self.x),
            "outcome_A": outcome_to_json(self.outcome_A),
            "outcome_B": outcome_to_json(self.outcome_B),
            "witness": self.witness,
            "fuel": self.fuel,
        }, sort_keys=True)
