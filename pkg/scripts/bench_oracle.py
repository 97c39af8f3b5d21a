"""Time the automorphism oracle across the corpus.

Run:  python3 scripts/bench_oracle.py [--jobs K] [--budget SEC] [--groups a,b,...]
"""

import argparse
import sys

import pgw


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--budget", type=float, default=600.0)
    ap.add_argument("--groups", default=",".join(pgw.CORPUS_NAMES))
    ap.add_argument("--unpruned", action="store_true",
                    help="also time the exhaustive route (small groups only)")
    args = ap.parse_args()

    names = [s for s in args.groups.split(",") if s]
    print(f"{'group':>8} {'|G|':>6} {'total':>7} {'inner':>6} {'bucket':>6} {'secs':>8}")
    for name in names:
        P = pgw.load(name)
        c = pgw.enumerate_automorphisms(P, budget=args.budget, jobs=args.jobs)
        print(
            f"{name:>8} {P.order:>6} {c.total:>7} {c.inner:>6} "
            f"{c.order_p_noninner_fixing_frattini:>6} {c.elapsed:>8.2f}"
        )
        if args.unpruned and P.order <= 3**4:
            u = pgw.enumerate_automorphisms(
                P, budget=args.budget, jobs=1, pruned=False
            )
            assert (u.total, u.inner) == (c.total, c.inner), name
            print(f"{'':>8} {'':>6} {'':>7} {'':>6} {'unpruned':>6} {u.elapsed:>8.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
