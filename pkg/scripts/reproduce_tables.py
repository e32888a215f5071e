"""Print the N_n tables for the two worked Type I instances and the q=2, ell=3 Type II case.

Classes are labelled by products of fixed representatives (xi1, xi2), so the
layout does not depend on which basis the decomposition happens to pick.

    python scripts/reproduce_tables.py [--n-max 20] [--check]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from irredcount.classgroup import Prescription, class_mul, class_of, class_pow, decompose, identity
from irredcount.counting import Counter
from irredcount.ff import GF

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
from tests.reference_tables import TABLE_Q2_I_22, TABLE_Q3_I_21  # noqa: E402

INSTANCES = {
    "q2_I_22": (2, "I", 2, 2, ((1, 1), (1, 1, 0, 0, 1)), [(0, 0), (0, 1), (2, 0), (2, 1)]),
    "q3_I_21": (3, "I", 2, 1, ((1, 1), (2, 1)), [(a, b) for a in range(3) for b in range(6)]),
    "q2_II_3": (2, "II", 3, 0, ((1, 1), (1, 0, 0, 1)), [(a, b) for a in range(4) for b in range(2)]),
}


def table(name: str, n_max: int) -> tuple[list[tuple[int, int]], dict[int, list[int]]]:
    q, kind, ell, t, reps, columns = INSTANCES[name]
    p = Prescription(GF(q), kind, ell, t)
    gs = decompose(p)
    gens = [class_of(p, r) for r in reps]
    counts = Counter(gs).N_table(n_max)
    index = []
    for e in columns:
        c = identity(p)
        for g, k in zip(gens, e):
            c = class_mul(p, c, class_pow(p, g, k))
        index.append(gs.dlog(c))
    return columns, {n: [counts[n][v] for v in index] for n in range(1, n_max + 1)}


def reference(name: str, n: int) -> list[int] | None:
    if name == "q2_I_22":
        return list(TABLE_Q2_I_22[n]) if n in TABLE_Q2_I_22 else None
    if name == "q3_I_21":
        if n not in TABLE_Q3_I_21[0]:
            return None
        return [TABLE_Q3_I_21[a][n][b] for a in range(3) for b in range(6)]
    return None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--check", action="store_true", help="diff against the frozen reference tables")
    args = ap.parse_args()
    diffs = 0
    for name in INSTANCES:
        start = time.perf_counter()
        columns, rows = table(name, args.n_max)
        print(f"# {name}  ({time.perf_counter() - start:.3f}s)")
        print("n," + ",".join(f"xi1^{a} xi2^{b}" for a, b in columns))
        for n, vals in rows.items():
            print(f"{n}," + ",".join(map(str, vals)))
            ref = reference(name, n) if args.check else None
            if ref is not None and ref != vals:
                for (a, b), got, want in zip(columns, vals, ref):
                    if got != want:
                        diffs += 1
                        print(f"  ! N_{n}(xi1^{a} xi2^{b}) = {got}, reference {want}", file=sys.stderr)
        print()
    if args.check:
        print(f"{diffs} entries differ from the reference tables", file=sys.stderr)
    return 1 if diffs else 0


if __name__ == "__main__":
    sys.exit(main())
