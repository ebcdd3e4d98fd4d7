"""Run every verification suite for n = 0..N and summarize timings.

    python3 scripts/verify_ranks.py --n-max 5 --jobs 2
"""

import argparse
import sys
import time

from vexkit.verify import run_suites


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    ok = True
    for n in range(args.n_max + 1):
        start = time.perf_counter()
        reports = run_suites(["all"], n, jobs=args.jobs, cap=args.n_max)
        for r in reports:
            print(r.line())
            for idx, msg in r.failures[:10]:
                print(f"  counterexample #{idx}: {msg}")
        ok &= all(r.ok for r in reports)
        print(f"-- n={n} done in {time.perf_counter() - start:.2f}s")
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
