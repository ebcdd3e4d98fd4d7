"""Tabulate vexillary counts in W_n against V_n = sum_k C(n,k)^2 C_k.

    python3 scripts/count_vexillary.py --n-max 7 --jobs 4
"""

import argparse
import time

from vexkit.vexillary import count_vexillary, egge_count, vn_formula


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--egge-max", type=int, default=5, help="largest n for the even-embedding count")
    args = ap.parse_args()

    print(f"{'n':>2} {'V_n':>7} {'vexillary':>9} {'egge':>7} {'seconds':>8}")
    for n in range(args.n_max + 1):
        start = time.perf_counter()
        vex = count_vexillary(n, cap=args.n_max, jobs=args.jobs)
        egge = egge_count(n, cap=args.n_max, jobs=args.jobs) if n <= args.egge_max else None
        secs = time.perf_counter() - start
        flag = "" if vex == vn_formula(n) and egge in (None, vex) else "  MISMATCH"
        print(f"{n:>2} {vn_formula(n):>7} {vex:>9} {egge if egge is not None else '-':>7} {secs:>8.2f}{flag}")


if __name__ == "__main__":
    main()
