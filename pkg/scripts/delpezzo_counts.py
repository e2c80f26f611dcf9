"""Lines, conics and predicted double-cover data for del Pezzo surfaces.

    python3 scripts/delpezzo_counts.py
"""

import time

from coxk3 import delpezzo
from coxk3.k3 import predict_delpezzo_cover


def main() -> None:
    print(f"{'k':>2} {'K^2':>3} {'lines':>6} {'conics':>7} {'gens':>5} {'rels':>5} {'secs':>6}")
    for k in range(5, 10):
        t = time.perf_counter()
        lines = delpezzo.delpezzo_curves(k, "lines")
        conics = delpezzo.delpezzo_curves(k, "conics")
        pred = predict_delpezzo_cover(k)
        dt = time.perf_counter() - t
        print(f"{k:>2} {10 - k:>3} {len(lines):>6} {len(conics):>7} "
              f"{len(pred.generator_degrees):>5} {len(pred.relation_degrees):>5} {dt:>6.2f}")


if __name__ == "__main__":
    main()
