"""Two-counter register machines with a total Goedel numbering.

A program is a tuple of instructions over counters 0 and 1:

``Inc(c)``
    add one to counter ``c`` and continue.
``DecOrJump(c, t)``
    if counter ``c`` is positive decrement it and continue, otherwise jump
    to instruction ``t``.
``Halt()``
    stop.

Running off the end of the program (including the empty program) also
halts; that check costs one step, the same as an explicit ``Halt``.

Numbering. Every natural decodes to a program. Instruction codes are
``0 -> Halt``, ``1 -> Inc(0)``, ``2 -> Inc(1)`` and ``3 + 2*t + c ->
DecOrJump(c, t)``. Lists use ``0 -> ()`` and ``1 + pair(head, rest)`` with
Cantor pairing, so encoding and decoding are mutually inverse bijections.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple, Union

from .errors import ParseError


@dataclass(frozen=True)
class Inc:
    counter: int

    def __str__(self):
        return f"INC {self.counter}"


@dataclass(frozen=True)
class DecOrJump:
    counter: int
    target: int

    def __str__(self):
        return f"DJZ {self.counter} {self.target}"


@dataclass(frozen=True)
class Halt:
    def __str__(self):
        return "HALT"


Instruction = Union[Inc, DecOrJump, Halt]
Program = tuple  # tuple[Instruction, ...]


def pair(a: int, b: int) -> int:
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def encode_instruction(ins: Instruction) -> int:
    if isinstance(ins, Halt):
        return 0
    if isinstance(ins, Inc):
        return 1 + ins.counter
    return 3 + 2 * ins.target + ins.counter


def decode_instruction(code: int) -> Instruction:
    if code == 0:
        return Halt()
    if code <= 2:
        return Inc(code - 1)
    t, c = divmod(code - 3, 2)
    return DecOrJump(c, t)


def encode(program) -> int:
    n = 0
    for ins in reversed(tuple(program)):
        n = 1 + pair(encode_instruction(ins), n)
    return n


def decode(index: int) -> Program:
    if index < 0:
        raise ValueError("program index must be a natural number")
    out = []
    while index:
        head, index = unpair(index - 1)
        out.append(decode_instruction(head))
    return tuple(out)


@dataclass(frozen=True)
class RunState:
    ip: int = 0
    counters: tuple[int, int] = (0, 0)
    steps: int = 0
    halted: bool = False


def step(state: RunState, program: Program) -> RunState:
    """Execute one instruction; ``state`` must not be halted."""
    if state.halted:
        raise ValueError("machine already halted")
    ip, (c0, c1) = state.ip, state.counters
    steps = state.steps + 1
    if ip >= len(program):
        return RunState(ip, (c0, c1), steps, True)
    ins = program[ip]
    if isinstance(ins, Halt):
        return RunState(ip, (c0, c1), steps, True)
    regs = [c0, c1]
    if isinstance(ins, Inc):
        regs[ins.counter] += 1
        ip += 1
    elif regs[ins.counter] > 0:
        regs[ins.counter] -= 1
        ip += 1
    else:
        ip = ins.target
    return RunState(ip, (regs[0], regs[1]), steps, False)


class HaltResult(NamedTuple):
    halted: bool
    at_step: int | None


def run(program: Program, budget: int) -> HaltResult:
    """Run ``program`` from a fresh state for at most ``budget`` steps.

    Equivalent to iterating :func:`step`, written as a flat loop because
    enumeration runs many programs to large budgets. A repeated machine
    state proves the run never halts, so that case stops early with the
    same answer the full budget would give.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    ops = [(0, 0, 0) if isinstance(i, Halt)
           else (1, i.counter, 0) if isinstance(i, Inc)
           else (2, i.counter, i.target) for i in program]
    size = len(ops)
    ip = 0
    regs = [0, 0]
    # Brent cycle detection on (ip, c0, c1)
    saved = (0, 0, 0)
    power = lam = 1
    for t in range(1, budget + 1):
        if ip >= size:
            return HaltResult(True, t)
        kind, c, target = ops[ip]
        if kind == 0:
            return HaltResult(True, t)
        if kind == 1:
            regs[c] += 1
            ip += 1
        elif regs[c]:
            regs[c] -= 1
            ip += 1
        else:
            ip = target
        cur = (ip, regs[0], regs[1])
        if cur == saved:
            return HaltResult(False, None)
        if power == lam:
            saved = cur
            power <<= 1
            lam = 0
        lam += 1
    return HaltResult(False, None)


def halts_within(n: int, budget: int) -> HaltResult:
    """Run program number ``n`` for at most ``budget`` steps."""
    return run(decode(n), budget)


def enumerate_halters(index_bound: int, budget: int) -> list[int]:
    """Indices ``n < index_bound`` seen to halt within ``budget`` steps.

    The order is that of a lockstep simulation of all candidates: by
    halting step, ties broken by index. Each index appears at most once.
    """
    found = []
    for n in range(index_bound):
        res = halts_within(n, budget)
        if res.halted:
            found.append((res.at_step, n))
    found.sort()
    return [n for _, n in found]


def countdown_program(n: int) -> Program:
    """A program that halts after exactly ``3*n + 2`` steps.

    Loads ``n`` into counter 0 with straight-line increments, then counts
    it down at two steps per unit.
    """
    return (Inc(0),) * n + (DecOrJump(0, n + 2), DecOrJump(1, n))


def parse_program(text: str) -> Program:
    """Read one instruction per line: ``INC c``, ``DJZ c t`` or ``HALT``.

    Blank lines and ``#`` comments are ignored.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        op = parts[0].upper()
        try:
            if op == "HALT" and len(parts) == 1:
                out.append(Halt())
                continue
            args = [int(p) for p in parts[1:]]
            if op == "INC" and len(args) == 1 and args[0] in (0, 1):
                out.append(Inc(args[0]))
                continue
            if op == "DJZ" and len(args) == 2 and args[0] in (0, 1) and args[1] >= 0:
                out.append(DecOrJump(args[0], args[1]))
                continue
        except ValueError:
            pass
        raise ParseError(f"line {lineno}: bad instruction {raw!r}")
    return tuple(out)


def format_program(program: Program) -> str:
    return "".join(f"{ins}\n" for ins in program)
