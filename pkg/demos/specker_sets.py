"""A Specker sequence on [0, 1] and three-valued membership in the sets it cuts out."""
from fractions import Fraction

from constructive_reals.specker import IntervalSpec, SpeckerSeq, SpeckerSets


def main():
    seq = SpeckerSeq(IntervalSpec(Fraction(0), Fraction(1)), index_bound=64, budget=10**5)
    print(f"{len(seq)} halters among the first 64 programs")
    print("h =", list(seq.h)[:12], "...")
    for n in (0, 1, 2, len(seq) - 1):
        print(f"s_{n} = {float(seq.term(n)):.20f}")

    sets = SpeckerSets(seq)
    for x in (Fraction(1, 5), seq.term(3), Fraction(1, 2), Fraction(1)):
        rep = sets.disjointness_check(x, fuel=1000)
        print(f"x={x}:  A -> {rep.outcome_A}   B -> {rep.b_verdict()}")

    x = Fraction(1, 5)
    cert = sets.openness_certificate_A(x, sets.in_A(x, 100).witness)
    print(f"ball of radius 2^-{cert.ball.radius_exp} around {x} lies in A:",
          sets.verify_certificate(cert))
    s5 = seq.term(5)
    print("probe near s_5 with radius 2^-9:", sets.pseudo_open_probe_B(s5, 9, 100))


if __name__ == "__main__":
    main()
