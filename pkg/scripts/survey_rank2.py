"""Polyhedrality of random even hyperbolic rank-two lattices.

    python3 scripts/survey_rank2.py --n 500 --seed 7 --size 12
"""

import argparse
import random
from collections import Counter

from coxk3.k3 import polyhedral_rank2
from coxk3.verify import polyhedrality_agreement, random_even_hyperbolic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--size", type=int, default=12, help="entries are drawn from [-size, size]")
    ap.add_argument("--bound", type=int, default=50, help="box for the brute-force cross-check")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    disagree = []
    for _ in range(args.n):
        G = random_even_hyperbolic(rng, args.size)
        res = polyhedral_rank2(G)
        tally[res.target if res.polyhedral else "none"] += 1
        ok, why = polyhedrality_agreement(G, args.bound)
        if not ok:
            disagree.append((G, why))
    print(f"forms: {args.n}  seed: {args.seed}  size: {args.size}")
    print(f"  square 0 class:   {tally[0]}")
    print(f"  square -2 class:  {tally[-2]}")
    print(f"  non-polyhedral:   {tally['none']}")
    print(f"  box disagreements: {len(disagree)}")
    for G, why in disagree[:5]:
        print(f"    {G}: {why}")


if __name__ == "__main__":
    main()
