"""Run every identity check over a range of fields and trace bounds.

    python scripts/verify_all.py --max-trace 16 --fields 2 3 5 6 7 13
"""
import argparse
import sys
import time

from nfpart.field import QuadField
from nfpart.ideals import GlaisherData, principal
from nfpart.theorems import verify_chain_theorem, verify_glaisher, verify_ideal_theorem


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-trace", type=int, default=14)
    ap.add_argument("--fields", type=int, nargs="+", default=[1, 2, 3, 5])
    ap.add_argument("--moduli", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--max-parts", type=int, default=6)
    args = ap.parse_args(argv)

    failed = 0
    for d in args.fields:
        F = QuadField(d)
        jobs = [(f"glaisher d={k}", lambda k=k: verify_glaisher(F, k, args.max_trace))
                for k in args.moduli]
        jobs.append(("chain", lambda: verify_chain_theorem(F, args.max_trace, args.max_parts)))
        if d == 2:
            jobs.append(("ideal (√2), 2",
                         lambda: verify_ideal_theorem(GlaisherData(principal(F(0, 1)), 2), args.max_trace)))
            jobs.append(("ideal (3√2), 6",
                         lambda: verify_ideal_theorem(GlaisherData(principal(F(0, 3)), 6), args.max_trace)))
        if d == 3:
            jobs.append(("ideal (1+√3), 2",
                         lambda: verify_ideal_theorem(GlaisherData(principal(F(1, 1)), 2), args.max_trace)))
        for label, job in jobs:
            t0 = time.perf_counter()
            rep = job()
            failed += not rep.passed
            print(f"{F!s:8} {label:16} {time.perf_counter() - t0:6.2f}s  {rep.summary()}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
