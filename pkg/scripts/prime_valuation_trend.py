"""Trend of the prime-valuation decomposition as the range 1..m grows.

For X uniform on 1..m and its p-adic valuations, prints the distance sum
against the bound n - log(m!)/(m log m), the joint-vs-product gap of two
valuations, and the floor and ceiling forms of the tail probability next to
the exact count.
"""

import argparse
import math

from shlat import analyze
from shlat.cases import prime_valuations, valuation_tail


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m", default="10,30,100,300,1000")
    args = p.parse_args()
    print(f"{'m':>6} {'n':>4} {'sum d':>10} {'bound':>10} {'slack':>9}  P(v2>=1,v3>=1): exact / floor / ceil   indep gap")
    for m in map(int, args.m.split(",")):
        case = prime_valuations(m)
        rep = analyze(case.target, case.components)
        bound = case.expected["valuation_bound_float"]
        t = valuation_tail(m, {2: 1, 3: 1})
        t2, t3 = valuation_tail(m, {2: 1}), valuation_tail(m, {3: 1})
        gap = float(t["exact"] - t2["exact"] * t3["exact"])
        print(
            f"{m:>6} {rep.n:>4} {rep.sum_distances:>10.5f} {bound:>10.5f} {bound - rep.sum_distances:>9.5f}"
            f"  {str(t['exact']):>9} / {str(t['floor']):>7} / {str(t['ceil']):>7}   {gap:+.5f}"
        )
    print(f"reference: 1/6 = {1 / 6:.5f}, log m!/(m log m) -> 1 (at m=1000: {math.lgamma(1001) / (1000 * math.log(1000)):.4f})")


if __name__ == "__main__":
    main()
