"""Run a seeded verification campaign and dump the summary as JSON.

    python scripts/fuzz_campaign.py --n-max 5 --trials 100 --seed 2026 --out fuzz.json
"""

import argparse
import json
import sys
import time

from amtt.theorem import FuzzConfig, fuzz_campaign


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--entry-bound", type=int, default=9)
    parser.add_argument("--out", default="-")
    args = parser.parse_args()

    config = FuzzConfig(n_max=args.n_max, trials=args.trials, seed=args.seed, entry_bound=args.entry_bound)
    t0 = time.perf_counter()
    summary = fuzz_campaign(config)
    print(f"{summary.checks} checks, {len(summary.failures)} failures, "
          f"{time.perf_counter() - t0:.1f}s", file=sys.stderr)

    text = json.dumps(summary.to_json_obj(), indent=2)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
