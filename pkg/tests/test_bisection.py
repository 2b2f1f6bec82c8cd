import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from constructive_reals.bisection import (
    Half, LocalConstancyClaim, ball_samples, bisect, check_local_constancy, const_oracle,
    limit_point, parse_oracle, right_limit_point, step_oracle)
from constructive_reals.errors import NoInitialGap, StepStalled
from constructive_reals.rational import dyadic
from constructive_reals.reals import CRN, apartness_search, crn_from_rational, sampled_cauchy_check
from constructive_reals.search import Unknown

THIRD = F(1, 3)


@pytest.fixture(scope="module")
def third_trace():
    return bisect(step_oracle(THIRD), F(0), F(1), gap_fuel=50, depth=40)


def test_step_third_depth_40(third_trace):
    lo, hi = third_trace.final
    assert len(third_trace.steps) == 40
    assert hi - lo == dyadic(40)
    assert lo <= THIRD <= hi


def test_constant_has_no_gap():
    with pytest.raises(NoInitialGap):
        bisect(const_oracle(0), F(0), F(1), gap_fuel=100, depth=5)


def test_one_step_at_half():
    tr = bisect(step_oracle(F(1, 2)), F(0), F(1), gap_fuel=10, depth=1)
    (st_,) = tr.steps
    assert st_.r == F(1, 2) and st_.chosen is Half.LEFT
    assert tr.final == (F(0), F(1, 2))


def test_tie_prefers_left():
    # f(0) = 0, f(1/2) = 1, f(1) = 2: the midpoint image is apart from both
    f = lambda x: crn_from_rational(0 if x.exact < F(1, 2) else (1 if x.exact < 1 else 2))
    tr = bisect(f, F(0), F(1), gap_fuel=10, depth=1)
    assert tr.steps[0].chosen is Half.LEFT


def test_trace_invariants(third_trace):
    ivs = third_trace.intervals
    p0, q0 = ivs[0]
    for i, (p, q) in enumerate(ivs):
        assert q - p == (q0 - p0) * dyadic(i)
    for (p, q), (p2, q2) in zip(ivs, ivs[1:]):
        assert p <= p2 < q2 <= q
    f = step_oracle(THIRD)
    assert third_trace.initial_witness.verify(f(crn_from_rational(p0)), f(crn_from_rational(q0)))
    for s in third_trace.steps:
        a, b = s.kept
        assert s.witness.verify(f(crn_from_rational(a)), f(crn_from_rational(b)))


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=F(-3), max_value=F(5)), st.integers(0, 30))
def test_step_convergence(c, depth):
    p, q = F(-3), F(5)
    if not p < c <= q:
        return
    tr = bisect(step_oracle(c), p, q, gap_fuel=20, depth=depth)
    lo, hi = tr.final
    assert lo < c <= hi
    assert hi - lo == (q - p) * dyadic(depth)


def test_limit_point(third_trace):
    d = limit_point(third_trace)
    assert abs(d.approx(20) - THIRD) <= dyadic(20)
    assert sampled_cauchy_check(d, [0, 5, 20, 35], pairs=10, rng=random.Random(2), spread=60)
    right = right_limit_point(third_trace)
    assert isinstance(apartness_search(d, right, 38), Unknown)


def test_limit_point_depth_zero():
    tr = bisect(step_oracle(THIRD), F(0), F(1), gap_fuel=10, depth=0)
    d = limit_point(tr)
    assert tr.steps == []
    assert abs(d.approx(0) - 0) <= 1


def test_stalled_step_reports_partial_trace():
    # the midpoint image sits 2^-31 from both endpoint images: too fine for 3 tries
    eps = dyadic(31)

    def f(x):
        v = x.exact
        return crn_from_rational(0 if v < F(1, 4) else (eps if v < F(3, 4) else 2 * eps))

    with pytest.raises(StepStalled) as exc:
        bisect(f, F(0), F(1), gap_fuel=40, depth=3, step_fuel=3)
    assert exc.value.step == 0 and exc.value.trace.steps == []


def test_trace_json(third_trace):
    rows = json.loads(third_trace.to_json())
    assert len(rows) == 40
    assert set(rows[0]) == {"i", "p", "q", "r", "chosen", "witness_k"}
    assert rows[0] == {"i": 0, "p": "0", "q": "1", "r": "1/2", "chosen": "Left",
                       "witness_k": third_trace.steps[0].witness.k}


def test_step_oracle_needs_exact_input():
    f = step_oracle(THIRD)
    with pytest.raises(TypeError):
        f(CRN(lambda n: F(1, n), lambda k: 2 ** k))


def test_parse_oracle():
    assert parse_oracle("const@3/4")(crn_from_rational(9)).exact == F(3, 4)
    assert parse_oracle("step@1/3")(crn_from_rational(F(1, 3))).exact == 1
    for bad in ("step", "ramp@1", "step@x"):
        with pytest.raises(ValueError):
            parse_oracle(bad)


def test_ball_samples_inside():
    pts = ball_samples(F(1, 3), dyadic(5), 200)
    assert pts[0] == F(1, 3) and len(set(pts)) == 200
    assert all(abs(p - F(1, 3)) < dyadic(5) for p in pts)
    assert max(abs(p - F(1, 3)) for p in pts) > dyadic(5) * F(99, 100)


def test_local_constancy_examples():
    c = const_oracle(F(2, 5))
    claim = LocalConstancyClaim(crn_from_rational(F(1, 7)), 3, crn_from_rational(F(2, 5)))
    for k in (0, 10, 40):
        assert check_local_constancy(c, claim, 50, k).passed
    f = step_oracle(THIRD)
    for v in (0, 1):
        claim = LocalConstancyClaim(crn_from_rational(THIRD), 5, crn_from_rational(v))
        rep = check_local_constancy(f, claim, 20, 4)
        assert not rep.passed
        assert (rep.counterexample < THIRD) == (v == 1)
        assert abs(rep.counterexample - THIRD) < dyadic(5)
    claim = LocalConstancyClaim(crn_from_rational(F(1, 2)), 5, crn_from_rational(1))
    assert check_local_constancy(f, claim, 1, 10).passed
    assert check_local_constancy(f, claim, 1, 10).checked == 1


def test_local_constancy_inexact_center():
    center = CRN(lambda n: F(3, 4) + F(1, n), lambda k: 2 ** k)
    claim = LocalConstancyClaim(center, 4, crn_from_rational(1))
    assert check_local_constancy(step_oracle(F(1, 2)), claim, 40, 8).passed
