"""Classify GGS groups on p letters by the abelian criterion.

    python3 scripts/ggs_classification.py [p ...]     (default: 3 5)
"""

import sys
from itertools import product

from spinal.constructions import build_ggs
from spinal.criteria import check_abelian_criterion


def classify(p: int) -> None:
    periodic = 0
    total = 0
    for e in product(range(p), repeat=p - 1):
        if not any(e):
            continue
        total += 1
        rep = check_abelian_criterion(build_ggs(p, e))
        if rep.holds:
            periodic += 1
            print(f"p={p} e={e}: periodic")
        else:
            print(f"p={p} e={e}: not periodic, witness {rep.witness['expr']}")
    print(f"p={p}: {periodic} of {total} defining vectors give periodic groups")


if __name__ == "__main__":
    for arg in sys.argv[1:] or ["3", "5"]:
        classify(int(arg))
