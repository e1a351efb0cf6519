"""Probe, for fixed q and d, the smallest n from which the optimum stays at floor(2n/d).

Only reports what the search sees on the scanned range; nothing here claims
the threshold beyond it.  ``--seed`` shuffles the vertex order, which must not
change any optimum (a cheap reproducibility check).

    python scripts/deza_threshold_probe.py --q 3 --d 4 --n-min 4 --n-max 20 --seed 1
"""

import argparse
import json
import time

from equidistant.search import CANDIDATE_CAP, candidate_count, max_equidistant


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, required=True)
    ap.add_argument("--d", type=int, required=True)
    ap.add_argument("--n-min", type=int, default=None)
    ap.add_argument("--n-max", type=int, required=True)
    ap.add_argument("--budget", type=int, default=2_000_000)
    ap.add_argument("--seed", type=int, default=None, help="shuffle vertex order")
    args = ap.parse_args(argv)

    rows = []
    for n in range(args.n_min or args.d, args.n_max + 1):
        if candidate_count(n, args.q, args.d) > CANDIDATE_CAP:
            break
        t0 = time.perf_counter()
        res = max_equidistant(n, args.q, args.d, args.budget, order_seed=args.seed)
        rows.append({"n": n, "optimum": res.optimum, "floor_2n_d": 2 * n // args.d,
                     "proven": res.proven_optimal, "seconds": round(time.perf_counter() - t0, 2)})
        print(json.dumps(rows[-1]), flush=True)

    # the last n at which the optimum was above floor(2n/d), if any
    above = [r["n"] for r in rows if r["proven"] and r["optimum"] > r["floor_2n_d"]]
    print(json.dumps({"q": args.q, "d": args.d, "scanned": [rows[0]["n"], rows[-1]["n"]] if rows else None,
                      "last_n_above_floor": max(above) if above else None}))


if __name__ == "__main__":
    main()
