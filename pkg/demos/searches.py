"""Fuelled searches: one predicate at a time, then a whole pool fairly interleaved."""
from constructive_reals.machine import decode, format_program, halts_within
from constructive_reals.search import Accept, dovetail, markov_search


def main():
    print(markov_search(lambda s: s if s * s > 50 else None, 100))
    print(markov_search(lambda s: None, 100))

    # one semidecider per program: "has it halted after s steps?"
    def halter(i):
        return lambda s: s if halts_within(i, s).halted else None

    results = dovetail(halter, 200)
    for i, out in results[:12]:
        print(f"{i:3d}  {format_program(decode(i)).replace(chr(10), '; '):30s}  {out}")
    found = sum(isinstance(o, Accept) for _, o in results)
    print(f"{len(results)} programs probed, {found} seen halting")


if __name__ == "__main__":
    main()
