"""Nested-interval bisection driven by apartness of function values.

Given ``f`` and rationals ``p < q`` whose images are provably apart, each
step evaluates ``f`` at the midpoint, raises the comparison precision until
the midpoint image separates from one endpoint image, and keeps a half whose
endpoint images are apart. The endpoints shrink onto a single constructive
real. For a function that really is locally constant no initial gap exists;
for a discontinuous test oracle the engine closes in on the jump.

Endpoints stay exact rationals, so halving and nesting hold with no
tolerance at all.
"""
from __future__ import annotations

import enum
import json
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoInitialGap, StepStalled
from .rational import dyadic, format_rational, parse_rational
from .reals import CRN, ApartnessWitness, Sign, apart_at, apartness_search, crn_from_rational
from .search import Accept

FunctionOracle = Callable[[CRN], CRN]


class Half(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"


@dataclass(frozen=True)
class BisectionStep:
    """Step ``i`` split ``[p, q]`` at ``r`` and kept ``chosen``.

    ``witness`` separates the images of the kept half's endpoints.
    """

    i: int
    p: Fraction
    q: Fraction
    r: Fraction
    chosen: Half
    witness: ApartnessWitness

    @property
    def kept(self) -> tuple[Fraction, Fraction]:
        return (self.p, self.r) if self.chosen is Half.LEFT else (self.r, self.q)

    def to_json(self) -> dict:
        return {"i": self.i, "p": format_rational(self.p), "q": format_rational(self.q),
                "r": format_rational(self.r), "chosen": self.chosen.value,
                "witness_k": self.witness.k}


@dataclass
class BisectionTrace:
    p0: Fraction
    q0: Fraction
    initial_witness: ApartnessWitness
    steps: list[BisectionStep] = field(default_factory=list)

    @property
    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        return [(self.p0, self.q0)] + [s.kept for s in self.steps]

    @property
    def final(self) -> tuple[Fraction, Fraction]:
        return self.intervals[-1]

    @property
    def width(self) -> Fraction:
        p, q = self.final
        return q - p

    @property
    def d(self) -> CRN:
        return limit_point(self)

    def to_json(self) -> str:
        return json.dumps([s.to_json() for s in self.steps], indent=1)


def _precisions(start: int, budget: int):
    # k0, k0+2, k0+4, ... : budget tries per step
    return range(start, start + 2 * budget, 2)


def bisect(f: FunctionOracle, p: Fraction, q: Fraction, gap_fuel: int, depth: int,
           *, step_fuel: int | None = None, k0: int = 0) -> BisectionTrace:
    """Run ``depth`` halving steps on ``[p, q]``.

    Raises :class:`NoInitialGap` when ``f(p)`` and ``f(q)`` cannot be
    separated within ``gap_fuel`` precisions, and :class:`StepStalled`
    (carrying the partial trace) when a midpoint image cannot be separated
    from either endpoint image within ``step_fuel`` tries. When the
    midpoint image is apart from both, the left half is kept.
    """
    p, q = Fraction(p), Fraction(q)
    if not p < q:
        raise ValueError("need p < q")
    step_fuel = gap_fuel if step_fuel is None else step_fuel
    fp, fq = f(crn_from_rational(p)), f(crn_from_rational(q))
    start = apartness_search(fp, fq, gap_fuel)
    if not isinstance(start, Accept):
        raise NoInitialGap(
            f"f({format_rational(p)}) and f({format_rational(q)}) not separated "
            f"within {gap_fuel} precisions")
    trace = BisectionTrace(p, q, start.witness)
    for i in range(depth):
        r = (p + q) / 2
        fr = f(crn_from_rational(r))
        for k in _precisions(k0, step_fuel):
            w = apart_at(fr, fp, k)
            if w is not None:
                half = Half.LEFT
                break
            w = apart_at(fr, fq, k)
            if w is not None:
                half = Half.RIGHT
                break
        else:
            raise StepStalled(i, trace)
        if half is Half.LEFT:
            # witness compares f(r) with f(p); restate it for the pair (f(p), f(r))
            w = _flip(w)
            trace.steps.append(BisectionStep(i, p, q, r, half, w))
            q, fq = r, fr
        else:
            trace.steps.append(BisectionStep(i, p, q, r, half, w))
            p, fp = r, fr
    return trace


def _flip(w: ApartnessWitness) -> ApartnessWitness:
    other = Sign.FIRST_LARGER if w.sign is Sign.FIRST_SMALLER else Sign.FIRST_SMALLER
    return ApartnessWitness(w.k, other)


def _width_regulator(trace: BisectionTrace):
    w0 = trace.q0 - trace.p0

    def reg(k):
        i, eps = 0, dyadic(k)
        while w0 / (1 << i) >= eps:
            i += 1
        return max(1, i)

    return reg


def _endpoint_crn(points: list[Fraction], trace: BisectionTrace) -> CRN:
    depth = len(points) - 1
    return CRN(lambda n: points[min(n - 1, depth)], _width_regulator(trace))


def limit_point(trace: BisectionTrace) -> CRN:
    """The common limit of the left and right endpoint sequences.

    Term ``n`` is the left endpoint after ``n - 1`` steps (the last one
    repeats once the trace ends); the regulator is the first step whose
    width drops below ``2**-k``.
    """
    return _endpoint_crn([p for p, _ in trace.intervals], trace)


def right_limit_point(trace: BisectionTrace) -> CRN:
    return _endpoint_crn([q for _, q in trace.intervals], trace)


@dataclass(frozen=True)
class LocalConstancyClaim:
    """``f`` is claimed equal to ``value`` on the ball of radius ``2**-radius_exp``."""

    point: CRN
    radius_exp: int
    value: CRN


@dataclass(frozen=True)
class LocalConstancyReport:
    passed: bool
    checked: int
    counterexample: Fraction | None = None


def _van_der_corput(i: int) -> Fraction:
    out, denom = Fraction(0), 1
    while i:
        denom <<= 1
        i, bit = divmod(i, 2)
        out += Fraction(bit, denom)
    return out


def ball_samples(center: Fraction, radius: Fraction, count: int) -> list[Fraction]:
    """``count`` rational points of the open ball, centre first.

    The rest follow a van der Corput sequence on ``(-1, 1)`` pushed toward
    the boundary by ``u -> sign(u) * (1 - (1 - |u|)**2)``.
    """
    pts = [center]
    i = 1
    while len(pts) < count:
        u = 2 * _van_der_corput(i) - 1
        i += 1
        if u == 0:
            continue
        v = 1 - (1 - abs(u)) ** 2
        pts.append(center + radius * (v if u > 0 else -v))
    return pts


def check_local_constancy(f: FunctionOracle, claim: LocalConstancyClaim,
                          samples: int, k: int) -> LocalConstancyReport:
    """Sample the claimed ball and compare each image with the claimed value.

    An image passes when its approximation at precision ``k`` is within
    ``2 * 2**-k`` of the value's. Only the positive claim with the given
    radius is tested; double-negated local constancy has no finite test.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    radius = dyadic(claim.radius_exp)
    center = claim.point.exact
    if center is None:
        # shrink by the centre's error so every sample stays inside the true ball
        err = dyadic(k + claim.radius_exp + 4)
        center = claim.point.approx(k + claim.radius_exp + 4)
        radius -= err
    v = claim.value.approx(k)
    tol = 2 * dyadic(k)
    pts = ball_samples(center, radius, samples)
    for n, x in enumerate(pts, 1):
        if abs(f(crn_from_rational(x)).approx(k) - v) > tol:
            return LocalConstancyReport(False, n, x)
    return LocalConstancyReport(True, len(pts))


def step_oracle(c: Fraction, low: Fraction = Fraction(0), high: Fraction = Fraction(1)) -> FunctionOracle:
    """``low`` below ``c``, ``high`` at or above it; rational inputs only.

    Not a constructive function: deciding ``x < c`` needs the exact value,
    which only rational embeddings carry.
    """
    c = Fraction(c)

    def f(x: CRN) -> CRN:
        if x.exact is None:
            raise TypeError("step oracle is defined on exact rational inputs only")
        return crn_from_rational(low if x.exact < c else high)

    return f


def const_oracle(v: Fraction) -> FunctionOracle:
    value = crn_from_rational(Fraction(v))
    return lambda x: value


def parse_oracle(text: str) -> FunctionOracle:
    """``"step@c"`` or ``"const@v"`` with rational ``c``, ``v``."""
    kind, sep, arg = text.partition("@")
    if not sep:
        raise ValueError(f"oracle needs '@': {text!r}")
    value = parse_rational(arg)
    if kind == "step":
        return step_oracle(value)
    if kind == "const":
        return const_oracle(value)
    raise ValueError(f"unknown oracle kind {kind!r}")
