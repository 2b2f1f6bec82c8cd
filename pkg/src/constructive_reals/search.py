"""Fuel-bounded search over semidecidable predicates.

A semidecider is any callable ``step -> witness | None`` on steps
``1, 2, ...``; ``None`` means no witness at that step. Searches never run
unbounded: each takes an explicit ``fuel`` and reports one of three
outcomes, :class:`Accept`, :class:`Reject` or :class:`Unknown`.
"""
from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Generic, TypeVar, Union

from .machine import HaltResult, halts_within

W = TypeVar("W")

SemiDecider = Callable[[int], Any]


@dataclass(frozen=True)
class Accept(Generic[W]):
    witness: W
    at_step: int


@dataclass(frozen=True)
class Reject:
    proof_tag: str


@dataclass(frozen=True)
class Unknown:
    fuel_spent: int


SearchOutcome = Union[Accept, Reject, Unknown]


def outcome_to_json(outcome: SearchOutcome) -> dict:
    if isinstance(outcome, Accept):
        w = outcome.witness
        if hasattr(w, "to_json"):
            w = w.to_json()
        return {"kind": "Accept", "witness": w, "at_step": outcome.at_step}
    if isinstance(outcome, Reject):
        return {"kind": "Reject", "proof_tag": outcome.proof_tag}
    return {"kind": "Unknown", "fuel_spent": outcome.fuel_spent}


def markov_search(sd: SemiDecider, fuel: int) -> SearchOutcome:
    """Run ``sd`` at steps ``1..fuel`` and accept the first witness."""
    if fuel < 1:
        raise ValueError("fuel must be >= 1")
    for s in range(1, fuel + 1):
        w = sd(s)
        if w is not None:
            return Accept(w, s)
    return Unknown(fuel)


def bounded_search(sd: SemiDecider, bound: int, fuel: int) -> SearchOutcome:
    """Search steps ``1..bound`` only; exhausting the range is a refutation."""
    out = markov_search(sd, min(bound, fuel)) if bound >= 1 else Unknown(0)
    if isinstance(out, Unknown) and bound <= fuel:
        return Reject(f"no witness at steps 1..{bound}")
    return out


def triangle_schedule(size: int | None = None):
    """Yield ``(index, step)`` pairs diagonal by diagonal.

    Diagonal ``d`` holds the pairs with ``index + step == d + 1``, newest
    index first, so index ``i`` is first probed after ``i*(i+1)//2``
    earlier probes. ``size`` drops indices outside a finite family.
    """
    d = 0
    while True:
        top = d if size is None else min(d, size - 1)
        for i in range(top, -1, -1):
            yield i, d - i + 1
        d += 1


def dovetail(pool: Sequence[SemiDecider] | Callable[[int], SemiDecider],
             fuel: int) -> list[tuple[int, SearchOutcome]]:
    """Interleave a family of semideciders fairly under one fuel budget.

    ``pool`` is a finite sequence or, for an infinite family, a callable
    from index to semidecider. Each probe of a live ``(index, step)`` pair
    costs one unit of fuel; indices outside a finite pool and indices that
    already accepted are skipped for free, so a finite pool whose members
    all accept stops early. Returns one entry per probed
    index, in index order: its :class:`Accept`, or ``Unknown(probes)``.
    """
    if fuel < 1:
        raise ValueError("fuel must be >= 1")
    finite = not callable(pool)
    size = len(pool) if finite else None
    if size == 0:
        return []
    results: dict[int, SearchOutcome] = {}
    probes: dict[int, int] = {}
    deciders: dict[int, SemiDecider] = {}
    spent = accepted = 0
    for i, s in triangle_schedule(size):
        if spent >= fuel or accepted == size:
            break
        if isinstance(results.get(i), Accept):
            continue
        sd = deciders.get(i)
        if sd is None:
            sd = deciders[i] = pool[i] if finite else pool(i)
        spent += 1
        probes[i] = probes.get(i, 0) + 1
        w = sd(s)
        if w is None:
            results[i] = Unknown(probes[i])
        else:
            results[i] = Accept(w, s)
            accepted += 1
    return sorted(results.items())


HaltOracle = Callable[[int, int], HaltResult]


def q_of(P: HaltOracle, n: int, k: int) -> int:
    """Step ``k`` while ``P`` is still running on ``n``, else its halting step."""
    if k < 1:
        raise ValueError("k must be >= 1")
    res = P(n, k)
    return res.at_step if res.halted else k


@dataclass(frozen=True)
class CaptureSequence:
    """The sequence ``k -> d(Q(n, k))`` built from a machine run.

    If the machine halts on ``n`` at step ``m`` the sequence is frozen at
    ``d(m)`` from ``k = m`` on; otherwise it is ``d`` itself. Which case
    holds is undecidable in general, so nothing here tries to tell.
    """

    n: int
    base: Callable[[int], Fraction]
    P: HaltOracle = halts_within

    def q(self, k: int) -> int:
        return q_of(self.P, self.n, k)

    def __call__(self, k: int) -> Fraction:
        return self.base(self.q(k))

    def table(self, upto: int) -> list[tuple[int, int, Fraction]]:
        """Rows ``(k, Q(n, k), x_k)`` for ``k = 1..upto``.

        Reuses one run: ``Q(n, k)`` only depends on whether the halting
        step is at most ``k``.
        """
        res = self.P(self.n, upto)
        rows = []
        for k in range(1, upto + 1):
            q = res.at_step if res.halted and res.at_step <= k else k
            rows.append((k, q, self.base(q)))
        return rows


def capture_sequence(P: HaltOracle, n: int, d: Callable[[int], Fraction]) -> CaptureSequence:
    return CaptureSequence(n, d, P)
