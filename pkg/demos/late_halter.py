"""No fuel settles the right end of the interval, yet a bigger machine budget can.

At x = 1 both searches stay Unknown for any fuel. A point just above the last
known term is also Unknown until a slow program is given enough steps to halt;
its term then lands above the point.
"""
from fractions import Fraction

from constructive_reals.machine import countdown_program
from constructive_reals.rational import dyadic
from constructive_reals.specker import IntervalSpec, SpeckerSeq, SpeckerSets

UNIT = IntervalSpec(Fraction(0), Fraction(1))


def main():
    sets = SpeckerSets(SpeckerSeq(UNIT, 64, 100))
    for fuel in (10, 1000, 10**4):
        print(f"x=1 fuel={fuel}:", sets.in_A(Fraction(1), fuel))

    late = countdown_program(40)
    x = sets.seq.terms()[-1] + dyadic(67)
    for budget in (100, 121, 122, 200):
        s = SpeckerSets(SpeckerSeq(UNIT, 64, budget, staged=(late,)))
        print(f"budget={budget:3d}: {len(s.seq)} terms, in_A -> {s.in_A(x, 10**4)}")


if __name__ == "__main__":
    main()
