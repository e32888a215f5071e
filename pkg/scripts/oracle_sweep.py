"""Brute-force vs formula sweep over a grid of small instances, one JSON line per instance.

    python scripts/oracle_sweep.py [--budget 4194304] [--out sweep.jsonl]
"""

from __future__ import annotations

import argparse
import json
import sys

from irredcount.classgroup import Prescription, decompose
from irredcount.ff import GF
from irredcount.oracle import DEFAULT_BUDGET, verify

GRID = [
    (2, "II", 1, 0, 14),
    (2, "II", 2, 0, 14),
    (2, "II", 3, 0, 14),
    (2, "II", 4, 0, 14),
    (2, "II", 5, 0, 14),
    (2, "I", 1, 1, 14),
    (2, "I", 2, 2, 14),
    (2, "I", 1, 3, 12),
    (3, "I", 2, 1, 8),
    (3, "I", 1, 2, 8),
    (3, "II", 3, 0, 8),
    (4, "II", 2, 0, 7),
    (4, "I", 1, 1, 7),
    (5, "I", 1, 1, 6),
    (8, "II", 1, 0, 5),
    (9, "II", 2, 0, 4),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()
    failed = 0
    for q, kind, ell, t, top in GRID:
        gs = decompose(Prescription(GF.from_q(q), kind, ell, t))
        rep = verify(gs, top, top, args.budget)
        doc = rep.to_json()
        doc.pop("rows")
        json.dump(doc, args.out)
        args.out.write("\n")
        args.out.flush()
        failed += not rep.passed
    print(f"{len(GRID) - failed}/{len(GRID)} instances agree", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
