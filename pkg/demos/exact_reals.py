"""Exact reals built from rational sequences, and what can be asked of them."""
from fractions import Fraction

from constructive_reals import CRN, apartness_search, crn_div, crn_from_rational, zero_witness
from constructive_reals.reals import GapOrder, compare_with_gap


def sqrt2():
    # Newton from 2: error after i rounds is below 2^-(2^i), so n > k + 1 suffices
    def seq(n):
        x = Fraction(2)
        for _ in range(n.bit_length() + 1):
            x = (x + 2 / x) / 2
        return x

    return CRN(seq, lambda k: k + 1)


def main():
    r = sqrt2()
    for k in (4, 16, 40):
        a = r.approx(k)
        print(f"k={k:2d}  approx={float(a):.15f}  |a^2 - 2|={float(abs(a * a - 2)):.3e}")

    two = r * r
    print("sqrt2*sqrt2 vs 2 at k=30:", compare_with_gap(two, crn_from_rational(2), 30))
    print("searching for a gap between them with fuel 50:",
          apartness_search(two, crn_from_rational(2), 50))

    third = crn_from_rational(Fraction(1, 3))
    w = zero_witness(r - 1, 2)
    print("witness that sqrt2 - 1 is apart from 0:", w)
    q = crn_div(third, r - 1, w)
    print("(1/3)/(sqrt2 - 1) to 2^-30:", q.approx(30), "=", float(q.approx(30)))
    print("order of sqrt2 and 7/5 at k=3:", compare_with_gap(r, crn_from_rational(Fraction(7, 5)), 3))
    print("order of sqrt2 and 7/5 at k=8:", compare_with_gap(r, crn_from_rational(Fraction(7, 5)), 8))
    assert compare_with_gap(r, crn_from_rational(Fraction(7, 5)), 8) is GapOrder.GREATER


if __name__ == "__main__":
    main()
