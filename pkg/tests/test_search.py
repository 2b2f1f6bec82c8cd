from fractions import Fraction as F
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from constructive_reals.machine import Halt, Inc, encode, halts_within
from constructive_reals.rational import dyadic
from constructive_reals.search import (
    Accept, Reject, Unknown, bounded_search, capture_sequence, dovetail, markov_search, q_of,
    triangle_schedule)

HALT_AT_7 = encode((Inc(0),) * 6 + (Halt(),))
LOOPER = 7  # decodes to [DJZ 0 0]


def below_one_percent(k):
    return k if dyadic(k) < F(1, 100) else None


def test_markov_examples():
    assert markov_search(below_one_percent, 10) == Accept(7, 7)
    assert markov_search(below_one_percent, 5) == Unknown(5)
    assert markov_search(lambda s: None, 1000) == Unknown(1000)
    with pytest.raises(ValueError):
        markov_search(below_one_percent, 0)


@given(st.integers(1, 50), st.integers(1, 50), st.integers(0, 50))
def test_markov_fuel_monotone(target, fuel, extra):
    sd = lambda s: ("w", s) if s >= target else None
    out = markov_search(sd, fuel)
    assert out == markov_search(sd, fuel)
    if isinstance(out, Accept):
        assert markov_search(sd, fuel + extra) == out
    else:
        assert out == Unknown(fuel)


def test_bounded_search_can_reject():
    assert bounded_search(lambda s: None, 10, 100) == Reject("no witness at steps 1..10")
    assert bounded_search(lambda s: None, 10, 5) == Unknown(5)
    assert bounded_search(lambda s: s if s == 4 else None, 10, 100) == Accept(4, 4)


def accept_from(step, tag):
    return lambda s: tag if s >= step else None


def test_dovetail_hand_schedule():
    pool = [accept_from(3, "a"), accept_from(5, "b")]
    # probes: (0,1) (1,1) (0,2) (1,2) (0,3)* (1,3) (1,4) (1,5)*
    assert dovetail(pool, 20) == [(0, Accept("a", 3)), (1, Accept("b", 5))]
    assert dovetail(pool, 8) == [(0, Accept("a", 3)), (1, Accept("b", 5))]
    assert dovetail(pool, 7) == [(0, Accept("a", 3)), (1, Unknown(4))]


def test_dovetail_small_cases():
    assert dovetail([accept_from(1, "x"), accept_from(1, "y")], 1) == [(0, Accept("x", 1))]
    assert dovetail([], 10) == []
    assert dovetail([lambda s: None], 3) == [(0, Unknown(3))]


def test_triangle_schedule_prefix():
    gen = triangle_schedule()
    assert [next(gen) for _ in range(6)] == [(0, 1), (1, 1), (0, 2), (2, 1), (1, 2), (0, 3)]


@pytest.mark.parametrize("fuel", [1, 2, 3, 10, 55, 56, 100, 997])
def test_dovetail_fairness(fuel):
    res = dovetail(lambda i: (lambda s: None), fuel)
    probed = {i for i, _ in res}
    assert sum(o.fuel_spent for _, o in res) == fuel
    # index i is first probed after i(i+1)/2 earlier probes
    assert probed == {i for i in range(fuel) if i * (i + 1) // 2 < fuel}
    root = isqrt(2 * fuel)
    assert all(i in probed for i in range(root) if (i + 1) ** 2 < 2 * fuel)


def test_dovetail_deterministic():
    pool = lambda i: (lambda s: (i, s) if s * (i + 1) % 7 == 0 else None)
    assert dovetail(pool, 300) == dovetail(pool, 300)


def staged_oracle(m):
    """Halts on every input at step m."""
    return lambda n, budget: (True, m) if budget >= m else (False, None)


def test_q_of_examples():
    assert [q_of(halts_within, HALT_AT_7, k) for k in (5, 7, 100)] == [5, 7, 7]
    assert all(q_of(halts_within, LOOPER, k) == k for k in (1, 2, 50, 1000))
    assert q_of(halts_within, LOOPER, 1) == 1
    from constructive_reals.machine import HaltResult
    P = lambda n, b: HaltResult(*staged_oracle(3)(n, b))
    assert [q_of(P, 0, k) for k in range(1, 6)] == [1, 2, 3, 3, 3]
    with pytest.raises(ValueError):
        q_of(halts_within, 0, 0)


def test_capture_examples():
    d = lambda k: F(1, k)
    x = capture_sequence(halts_within, HALT_AT_7, d)
    assert [x(k) for k in range(1, 12)] == [F(1, k) for k in range(1, 8)] + [F(1, 7)] * 4
    y = capture_sequence(halts_within, LOOPER, d)
    assert all(y(k) == d(k) for k in range(1, 200))
    c = capture_sequence(halts_within, HALT_AT_7, lambda k: F(5, 3))
    assert all(c(k) == F(5, 3) for k in range(1, 20))
    assert x.table(10) == [(k, x.q(k), x(k)) for k in range(1, 11)]


@given(st.integers(0, 300), st.integers(2, 40))
def test_capture_dichotomy(n, K):
    d = lambda k: F(1, k)
    x = capture_sequence(halts_within, n, d)
    res = halts_within(n, K)
    if res.halted:
        m = res.at_step
        assert all(x(k) == d(m) for k in range(m, K + 5))
        assert all(x(k) == d(k) for k in range(1, m))
    else:
        assert all(x(k) == d(k) for k in range(1, K + 1))
