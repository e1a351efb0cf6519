"""Branch-and-bound against the naive oracle and best_bound over a q^n window.

The oracle lives with the tests (tests/oracles.py); run from the repo root.

    python scripts/consistency_sweep.py --max-qn 4096 --q-max 5
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "tests"))

from oracles import naive_max_equidistant  # noqa: E402

from equidistant.bounds import best_bound  # noqa: E402
from equidistant.search import max_equidistant  # noqa: E402


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-qn", type=int, default=1 << 12)
    ap.add_argument("--q-max", type=int, default=5)
    ap.add_argument("--oracle-nodes", type=int, default=300_000)
    args = ap.parse_args(argv)

    bad = 0
    for q in range(2, args.q_max + 1):
        n = 1
        while q ** n <= args.max_qn:
            for d in range(1, n + 1):
                t0 = time.perf_counter()
                res = max_equidistant(n, q, d)
                opt, done = naive_max_equidistant(n, q, d, node_limit=args.oracle_nodes)
                bound = best_bound(n, q, d).minimum
                status = "ok" if done and opt == res.optimum else ("oracle-incomplete" if not done else "MISMATCH")
                if res.optimum > bound or status == "MISMATCH":
                    bad += 1
                print(f"{n:3d} {q:3d} {d:3d}  bb={res.optimum:4d} oracle={opt:4d} bound={bound:4d} "
                      f"{status} {time.perf_counter() - t0:.2f}s", flush=True)
            n += 1
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
