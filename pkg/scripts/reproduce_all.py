"""Run every check against the printed data and print a status table.

    python3 scripts/reproduce_all.py [--json]
"""

import argparse
import sys

from coxk3.serialize import dumps
from coxk3.verify import DEVIATION_REGISTRY, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="one JSON report per line")
    args = ap.parse_args()
    bad = 0
    for rep in run_all():
        if args.json:
            print(dumps(rep.to_json()))
        else:
            print(f"{rep.case:18s} {rep.status:10s} {rep.citation}")
            for note in rep.notes:
                print(f"{'':18s} - {note}")
        if rep.status != "pass" and not (rep.status == "deviation" and rep.case in DEVIATION_REGISTRY):
            bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
