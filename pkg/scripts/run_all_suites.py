#!/usr/bin/env python3
"""Run every verification suite at its default grid and print a summary.

Usage: python scripts/run_all_suites.py [--seed N] [--k K]
Exit code 0 iff every suite passes.
"""

import argparse
import sys
import time

from finmot.cli import SUITES, RunConfig


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--k", type=int, default=2)
    args = parser.parse_args()
    failures = 0
    for name in sorted(SUITES):
        cfg = RunConfig(command="verify", seed=args.seed, k=args.k,
                        params={"suite": name})
        started = time.monotonic()
        results, checks = SUITES[name](cfg)
        elapsed = time.monotonic() - started
        n_pass = sum(1 for c in checks if c.passed)
        ok = n_pass == len(checks)
        failures += 0 if ok else 1
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {name:<18} {n_pass}/{len(checks)} checks  "
              f"({elapsed:.2f}s)")
        for key, val in results.items():
            print(f"         {key} = {val}")
        if not ok:
            for c in checks:
                if not c.passed:
                    print(f"         failed: {c.id} {c.detail}")
    print(f"{len(SUITES) - failures}/{len(SUITES)} suites passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
