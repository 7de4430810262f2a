#!/usr/bin/env python3
"""Run every corroboration suite at desk scale and report violations."""

import argparse
import sys
import time

from signschemes import (
    verify_bound,
    verify_identities,
    verify_inequalities,
    verify_monotonicity,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--samples", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    violations = 0

    t0 = time.time()
    rep = verify_identities(args.n_max, seed=args.seed)
    violations += len(rep.violations)
    print(
        f"identities  n_max={rep.n_max}: vectors={rep.vectors_checked} "
        f"squares={rep.squares_checked} sums={rep.sums_checked} "
        f"parity={rep.parity_checked} violations={len(rep.violations)} "
        f"[{time.time() - t0:.1f}s]"
    )

    t0 = time.time()
    rep = verify_inequalities(args.samples, seed=args.seed)
    violations += len(rep.violations)
    print(
        f"inequalities samples={rep.samples}: corners={rep.corner_checks} "
        f"max_residual={rep.max_residual:.3g} violations={len(rep.violations)} "
        f"[{time.time() - t0:.1f}s]"
    )

    t0 = time.time()
    rep = verify_monotonicity(
        min(args.n_max, 8), samples_per_move=max(10, args.samples // 1000),
        seed=args.seed,
    )
    violations += len(rep.violations)
    print(
        f"monotonicity n_max={rep.n_max}: certificates={rep.certificates} "
        f"moves={rep.moves_checked} violations={len(rep.violations)} "
        f"[{time.time() - t0:.1f}s]"
    )

    for n in range(1, args.n_max + 1):
        t0 = time.time()
        rep = verify_bound(n, budget=args.samples, seed=args.seed)
        print(
            f"bound n={n}: best={rep.best_value:.12g} bound={rep.bound} "
            f"method={rep.method} evaluations={rep.evaluations} "
            f"[{time.time() - t0:.1f}s]"
        )

    print("OK" if violations == 0 else f"{violations} violation(s)")
    return 0 if violations == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
