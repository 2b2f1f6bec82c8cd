import pytest
from hypothesis import given, settings, strategies as st

from constructive_reals.machine import (
    DecOrJump, Halt, HaltResult, Inc, RunState, countdown_program, decode, encode,
    enumerate_halters, format_program, halts_within, parse_program, run, step)
from constructive_reals.specker import enumerate_pool

# halting steps simulated by hand
GOLDEN = [
    ("HALT", 1),
    ("INC 0\nINC 0\nINC 0", 4),
    ("INC 0\nINC 0\nINC 0\nDJZ 0 5\nDJZ 1 3", 11),
    ("DJZ 0 2\nHALT\nINC 1", 3),
    ("INC 1\nDJZ 1 0\nDJZ 1 3\nHALT", 4),
]
LOOP = (DecOrJump(0, 0),)

instructions = st.one_of(
    st.just(Halt()),
    st.builds(Inc, st.integers(0, 1)),
    st.builds(DecOrJump, st.integers(0, 1), st.integers(0, 6)),
)
programs = st.lists(instructions, max_size=5).map(tuple)


def step_run(prog, budget):
    s = RunState()
    while not s.halted and s.steps < budget:
        s = step(s, prog)
    return HaltResult(True, s.steps) if s.halted else HaltResult(False, None)


def test_decode_zero_is_empty():
    assert decode(0) == ()
    assert halts_within(0, 5) == (True, 1)


def test_halt_round_trip():
    e = encode((Halt(),))
    assert decode(e) == (Halt(),)


@given(st.integers(0, 10**40))
def test_decode_encode(n):
    assert encode(decode(n)) == n


@given(programs)
def test_encode_decode(prog):
    assert decode(encode(prog)) == prog


def test_step_inc_then_falls_off():
    prog = (Inc(0),)
    s1 = step(RunState(), prog)
    assert s1 == RunState(1, (1, 0), 1, False)
    s2 = step(s1, prog)
    assert s2.halted and s2.steps == 2


def test_step_halt_and_loop():
    assert step(RunState(), (Halt(),)).halted
    s = RunState()
    for _ in range(50):
        s = step(s, LOOP)
    assert not s.halted and s.ip == 0
    with pytest.raises(ValueError):
        step(RunState(halted=True), LOOP)


@pytest.mark.parametrize("text, steps", GOLDEN)
def test_golden_suite(text, steps):
    prog = parse_program(text)
    assert run(prog, 1000) == (True, steps)
    assert step_run(prog, 1000) == (True, steps)
    assert parse_program(format_program(prog)) == prog


def test_halts_within_examples():
    assert halts_within(encode((Halt(),)), 10) == (True, 1)
    assert halts_within(encode(LOOP), 10**6) == (False, None)
    n = encode((Inc(0), Halt()))
    assert halts_within(n, 1) == (False, None)


@settings(max_examples=200)
@given(programs, st.integers(1, 60))
def test_fast_run_matches_stepper(prog, budget):
    assert run(prog, budget) == step_run(prog, budget)


@given(programs, st.integers(1, 40), st.integers(0, 40))
def test_halting_monotone_in_budget(prog, b, extra):
    r = run(prog, b)
    if r.halted:
        assert run(prog, b + extra) == r
        assert r.at_step <= b


@pytest.mark.parametrize("n", [0, 1, 5, 40])
def test_countdown_program(n):
    assert run(countdown_program(n), 10**4) == (True, 3 * n + 2)


def test_enumerate_examples():
    assert enumerate_pool([(), LOOP], 1000) == [0]
    assert enumerate_halters(0, 100) == []
    first = enumerate_halters(64, 500)
    assert len(set(first)) == len(first)
    assert first == enumerate_halters(64, 500)


def test_enumeration_order_and_growth():
    h = enumerate_halters(40, 100)
    steps = [halts_within(n, 100).at_step for n in h]
    assert sorted(zip(steps, h)) == list(zip(steps, h))
    # more candidates only add entries; the relative order of old ones is kept
    h2 = enumerate_halters(80, 100)
    assert [n for n in h2 if n < 40] == h
    pool = [decode(n) for n in range(10)] + [countdown_program(30)]
    assert enumerate_pool(pool, 50) == enumerate_pool(pool, 200)[:-1]
    assert enumerate_pool(pool, 200)[-1] == 10


def test_parse_program_errors():
    from constructive_reals.errors import ParseError
    for bad in ["JMP 1", "INC 2", "DJZ 0", "HALT 1", "DJZ 0 -1"]:
        with pytest.raises(ParseError):
            parse_program(bad)
    assert parse_program("# comment\n\nINC 1  # trailing\n") == (Inc(1),)
