"""Run every built-in application instance and tabulate the analyzer verdicts."""

import argparse

from shlat import analyze
from shlat.cases import check_expected, crt, integer_division, linear_code, prime_valuations, sign_abs, sorting_bound


def instances():
    yield sign_abs([-2, -1, 1, 2])
    yield sign_abs([-3, -1, 1, 3], ["1/8", "3/8", "3/8", "1/8"])
    yield linear_code(2, 2, 3, [[1, 0, 1], [0, 1, 1]])
    yield linear_code(3, 2, 4, [[1, 0, 1, 1], [0, 1, 1, 2]])
    for m in (12, 30):
        yield prime_valuations(m)
    for moduli in ((3, 4), (3, 4, 5), (7, 8, 9, 11)):
        case = crt(moduli)
        yield case
        yield case.drop()
    for k in range(3, 6):
        yield sorting_bound(k)
    yield sorting_bound(3, [(1, 2), (2, 3)])
    for m in (1, 10, 100):
        yield integer_division(m)


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    print(f"{'case':34} {'n':>3} {'sum d':>10} {'n-1':>4} {'indep':>6} {'verdict':>12}  expected")
    for case in instances():
        rep = analyze(case.target, case.components)
        checks = check_expected(case, rep)
        label = case.name + (f" {case.params.get('moduli') or case.params.get('m') or case.params.get('k') or ''}")
        print(
            f"{label[:34]:34} {rep.n:>3} {rep.sum_distances:>10.6f} {rep.n - 1:>4} "
            f"{str(rep.mutually_independent):>6} {rep.verdict:>12}  {'ok' if all(checks.values()) else checks}"
        )


if __name__ == "__main__":
    main()
