"""Bisection closing in on the jump of a step function, with its limit point."""
from fractions import Fraction

from constructive_reals.bisection import bisect, limit_point, step_oracle
from constructive_reals.errors import NoInitialGap
from constructive_reals.bisection import const_oracle


def main():
    c = Fraction(2, 7)
    trace = bisect(step_oracle(c), Fraction(0), Fraction(1), gap_fuel=20, depth=24)
    for s in trace.steps[:6]:
        print(f"step {s.i}: [{s.p}, {s.q}] split at {s.r} keep {s.chosen.value} (k={s.witness.k})")
    lo, hi = trace.final
    print(f"after {len(trace.steps)} steps: width {trace.width}, contains 2/7: {lo < c <= hi}")
    d = limit_point(trace)
    print("limit point to 2^-20:", float(d.approx(20)))

    try:
        bisect(const_oracle(1), Fraction(0), Fraction(1), gap_fuel=50, depth=5)
    except NoInitialGap as exc:
        print("constant function:", exc)


if __name__ == "__main__":
    main()
