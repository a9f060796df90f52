"""Time both sides of the identity as n grows.

The determinant side is polynomial (Bareiss); the forest side enumerates
every forest, so it blows up quickly.  Prints one row per n.

    python scripts/benchmark_sides.py --n-max 7 --repeats 5
"""

import argparse
import time

from amtt.forests import enumerate_forests
from amtt.linalg import VertexSubset, det_exact, minor, random_semi_laplacian
from amtt.theorem import forest_sum, signed_forests


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'n':>3} {'forests':>9} {'enum s':>9} {'det ms':>9} {'sum ms':>9}  match")
    for n in range(2, args.n_max + 1):
        U = W = VertexSubset(n, (1,))
        t0 = time.perf_counter()
        count = len(enumerate_forests(n, U, W))
        signed_forests(n, U, W)
        t_enum = time.perf_counter() - t0

        t_det = t_sum = 0.0
        match = True
        for r in range(args.repeats):
            M = random_semi_laplacian(n, 9, f"{args.seed}:{n}:{r}")
            t0 = time.perf_counter()
            lhs = det_exact(minor(M, W, U))
            t_det += time.perf_counter() - t0
            t0 = time.perf_counter()
            rhs = forest_sum(M, U, W)
            t_sum += time.perf_counter() - t0
            match &= lhs == rhs
        print(f"{n:>3} {count:>9} {t_enum:>9.3f} {1000 * t_det / args.repeats:>9.3f} "
              f"{1000 * t_sum / args.repeats:>9.3f}  {match}")


if __name__ == "__main__":
    main()
