"""Routing the sequence 1/k through a machine: it freezes exactly when the machine halts."""
from fractions import Fraction

from constructive_reals.machine import Halt, Inc, countdown_program, encode
from constructive_reals.search import CaptureSequence


def show(name, n, upto=12):
    seq = CaptureSequence(n, lambda k: Fraction(1, k))
    print(name)
    for k, q, x in seq.table(upto):
        print(f"  k={k:2d}  Q={q:2d}  x_k={x}")


def main():
    show("halts at step 7:", encode((Inc(0),) * 6 + (Halt(),)))
    show("never halts:", 7)
    print("countdown(2) halts at step", 3 * 2 + 2, "- its Goedel number:",
          encode(countdown_program(2)))


if __name__ == "__main__":
    main()
