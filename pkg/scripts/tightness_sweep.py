"""Gap between the best applicable bound and the exhaustive optimum over a grid.

    python scripts/tightness_sweep.py --q 2 3 --max-n 10 --out results.csv
"""

import argparse
import csv
import sys
import time

from equidistant.search import CANDIDATE_CAP, candidate_count, tightness_report


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-candidates", type=int, default=1 << 15,
                    help="skip triples with more weight-d words than this")
    ap.add_argument("--budget", type=int, default=2_000_000, help="node limit per search")
    ap.add_argument("--out", help="CSV file (default stdout)")
    args = ap.parse_args(argv)

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh)
    w.writerow(["n", "q", "d", "optimum", "bound", "gap", "proven", "matches", "seconds"])
    for q in args.q:
        for n in range(1, args.max_n + 1):
            for d in range(1, n + 1):
                if candidate_count(n, q, d) > min(args.max_candidates, CANDIDATE_CAP):
                    continue
                t0 = time.perf_counter()
                r = tightness_report(n, q, d, args.budget)
                w.writerow([n, q, d, r.optimum, r.bound, r.gap, r.proven_optimal,
                            "|".join(r.matches), f"{time.perf_counter() - t0:.2f}"])
                fh.flush()
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
