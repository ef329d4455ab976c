"""Run the randomized property suites and print one line per suite."""

import argparse

from shlat.properties import SUITES, sweep


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    args = p.parse_args()
    results = sweep(args.trials, args.seed, args.suite, args.workers)
    for r in results:
        status = "ok" if r.ok else f"{len(r.failures)} FAILURES, first: {r.failures[0]}"
        print(f"{r.suite:18} {r.trials:>7} trials {r.seconds:7.2f}s  {status}")
    raise SystemExit(0 if all(r.ok for r in results) else 1)


if __name__ == "__main__":
    main()
