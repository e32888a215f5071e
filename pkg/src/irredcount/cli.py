"""Command-line front end.

    irredcount group  --q 3 --type II --ell 3
    irredcount count N --q 2 --type I --ell 2 --t 2 --n 1..20 --class rep=1,0,1,0,1
    irredcount count I --q 2 --type II --ell 1 --d 2 --class lead=1
    irredcount zeta   --q 2 --type II --ell 3
    irredcount verify --q 3 --type I --ell 2 --t 1 --n-max 8 --d-max 8

Exit status: 0 success, 1 verification mismatch, 2 usage or instance error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .classgroup import (
    DEFAULT_MAX_ORDER,
    ZERO,
    ExponentVector,
    GroupStructure,
    Prescription,
    class_of,
    decompose,
    prescribe_to_class,
)
from .counting import Counter
from .errors import (
    BudgetExceeded,
    GroupTooLarge,
    InvalidInput,
    UnknownClass,
    ZeroConstant,
)
from .ff import GF, is_monic, poly_from_str, poly_pretty, poly_to_str
from .oracle import DEFAULT_BUDGET, verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- parsing -------------------------------------------------------------------


@dataclass(frozen=True)
class InstanceSpec:
    field: GF
    kind: str
    ell: int
    t: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "InstanceSpec":
        modulus = _int_list(args.modulus) if args.modulus else None
        if args.q is not None:
            if args.p is not None or args.r is not None:
                raise UsageError("give either --q or --p/--r, not both")
            F = GF.from_q(args.q, modulus)
        elif args.p is not None:
            F = GF(args.p, args.r or 1, modulus)
        else:
            raise UsageError("a field is required: --q, or --p with optional --r/--modulus")
        if args.kind == "I" and args.t is None:
            raise UsageError("Type I needs --t")
        return cls(F, args.kind, args.ell, args.t or 0)

    def prescription(self) -> Prescription:
        return Prescription(self.field, self.kind, self.ell, self.t)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_range(text: str) -> range:
    """"a..b" (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}; use 'a..b' or a single value") from None
    if a < 1 or b < a:
        raise UsageError(f"bad range {text!r}; need 1 <= a <= b")
    return range(a, b + 1)


def resolve_class(gs: GroupStructure, text: str) -> ExponentVector:
    """Turn one of "v=2,1", "rep=1,0,1,0,1", "lead=0,0 end=1,1" into an exponent vector."""
    p = gs.presc
    parts = dict(_split_assignment(tok) for tok in text.split())
    if not parts:
        raise UsageError("empty class spec")
    if "v" in parts:
        if len(parts) > 1:
            raise UsageError("give exactly one class form")
        v = _int_list(parts["v"])
        if len(v) != len(gs.orders):
            raise UnknownClass(f"exponent vector needs {len(gs.orders)} entries, got {len(v)}")
        return gs.dlog(gs.class_from_exponents(v))
    if "rep" in parts:
        if len(parts) > 1:
            raise UsageError("give exactly one class form")
        f = poly_from_str(p.field, parts["rep"])
        if not is_monic(f):
            raise UnknownClass(f"{parts['rep']!r} is not a monic polynomial")
        c = class_of(p, f)
        if c is ZERO:
            raise UnknownClass("polynomials with zero constant term have no Type I class")
        return gs.dlog(c)
    if "lead" in parts and set(parts) <= {"lead", "end"}:
        lead = _int_list(parts["lead"])
        end = _int_list(parts["end"]) if "end" in parts else None
        return gs.dlog(prescribe_to_class(p, lead, end))
    raise UsageError(f"unrecognised class spec {text!r}; use v=..., rep=... or lead=... [end=...]")


def _split_assignment(tok: str) -> tuple[str, str]:
    key, sep, val = tok.partition("=")
    if not sep or key not in ("v", "rep", "lead", "end"):
        raise UsageError(f"bad class token {tok!r}")
    return key, val


# -- output --------------------------------------------------------------------


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit_table(rows: list[dict], columns: Sequence[str], fmt: str, header: dict, out) -> None:
    if fmt == "json":
        json.dump({**header, "rows": rows}, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r[c]) for c in columns])
        return
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def _cell(x) -> str:
    if isinstance(x, (list, tuple)):
        return ",".join(map(str, x))
    return str(x)


# -- commands ------------------------------------------------------------------


def _structure(args) -> GroupStructure:
    spec = InstanceSpec.from_args(args)
    return decompose(spec.prescription(), args.max_group_order)


def cmd_group(args, out) -> int:
    gs = _structure(args)
    info = gs.to_json()
    if args.format == "json":
        json.dump(info, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        rows = [
            {"index": i, "order": r, "generator": poly_to_str(g)}
            for i, (g, r) in enumerate(zip(gs.gens, gs.orders), start=1)
        ]
        _emit_table(rows, ("index", "order", "generator"), "csv", {}, out)
    else:
        out.write(f"field {info['field']}  type {info['type']}  ell={info['ell']}  t={info['t']}\n")
        out.write(f"order {gs.order} = " + " x ".join(f"C_{r}" for r in gs.orders) + f"  (R={gs.R})\n")
        for i, (g, r) in enumerate(zip(gs.gens, gs.orders), start=1):
            out.write(f"  xi{i}: <{poly_pretty(g)}>  [{poly_to_str(g)}]  order {r}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    gs = _structure(args)
    which = args.which
    span_text = args.n if which == "N" else args.d
    if span_text is None:
        span_text = args.d if which == "N" else args.n
    if span_text is None:
        raise UsageError(f"count {which} needs --{'n' if which == 'N' else 'd'}")
    span = parse_range(span_text)
    classes = gs.vectors() if args.cls == "all" else [resolve_class(gs, args.cls)]
    counter = Counter(gs)
    value = counter.N if which == "N" else counter.I
    if which == "N":
        counter.N_table(span.stop - 1)
    var = "n" if which == "N" else "d"
    rows = [
        {var: n, "class": list(v), "rep": poly_to_str(gs.elements[v]), "value": value(v, n)}
        for n in span
        for v in classes
    ]
    header = {"instance": gs.to_json(), "kind": which}
    _emit_table(rows, (var, "class", "rep", "value"), args.format, header, out)
    return EXIT_OK


def cmd_zeta(args, out) -> int:
    gs = _structure(args)
    z = Counter(gs).zeta()
    nums = [
        {"j": list(j), "coeffs": [c.to_strings() for c in P]} for j, P in z.numerators.items()
    ]
    doc = {
        "instance": gs.to_json(),
        "R": gs.R,
        "basis": f"coordinates on 1, w, ..., w^(phi(R)-1), w = exp(2 pi i/{gs.R})",
        "prefactor": _frac(z.prefactor),
        "trivial": {"numerator": list(z.trivial_numerator), "denominator": list(z.trivial_denominator)},
        "numerators": nums,
    }
    if args.format == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("j", "power", "coords"))
        for row in nums:
            for k, coords in enumerate(row["coeffs"]):
                w.writerow((_cell(row["j"]), k, ";".join(coords)))
    else:
        out.write(f"R={gs.R}  prefactor {doc['prefactor']}\n")
        out.write(f"trivial: {doc['trivial']['numerator']} / {doc['trivial']['denominator']}\n")
        for j, P in z.numerators.items():
            terms = " + ".join(
                (f"({c})" if k else str(c)) + ("" if k == 0 else "z" if k == 1 else f"z^{k}")
                for k, c in enumerate(P)
                if c
            )
            out.write(f"P_{','.join(map(str, j))}(z) = {terms}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    gs = _structure(args)
    report = verify(gs, args.n_max, args.d_max, args.budget)
    if args.format == "json":
        json.dump(report.to_json(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        cols = ("kind", "n", "class", "rep", "expected", "computed", "ok")
        _emit_table(report.rows, cols, "csv", {}, out)
    else:
        status = "PASS" if report.passed else "FAIL"
        out.write(
            f"{status}: {len(report.rows)} comparisons "
            f"(N for n<={args.n_max}, I for d<={args.d_max}) in {report.elapsed:.2f}s\n"
        )
    if not report.passed:
        bad = report.first_failure()
        print(
            f"mismatch: {bad['kind']}_{bad['n']}({bad['class']}) oracle={bad['expected']} "
            f"formula={bad['computed']}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _instance_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("instance")
    g.add_argument("--q", type=int, help="field size (prime power)")
    g.add_argument("--p", type=int, help="characteristic (with --r)")
    g.add_argument("--r", type=int, help="extension degree over F_p")
    g.add_argument("--modulus", help="F_q modulus over F_p, digits constant first, e.g. 2,2,1")
    g.add_argument("--type", dest="kind", choices=("I", "II"), required=True)
    g.add_argument("--ell", type=int, required=True, help="number of leading coefficients")
    g.add_argument("--t", type=int, help="number of ending coefficients (Type I)")
    g.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    g.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_ORDER)
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle size cap")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irredcount",
        description="Count monic irreducibles over F_q with prescribed coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    parent = _instance_parent()

    sub.add_parser("group", parents=[parent], help="class group structure")

    c = sub.add_parser("count", parents=[parent], help="N_n or I_d per class")
    c.add_argument("which", choices=("N", "I"))
    c.add_argument("--n", help="degree range for N, e.g. 1..20")
    c.add_argument("--d", help="degree range for I, e.g. 1..12")
    c.add_argument(
        "--class",
        dest="cls",
        nargs="+",
        default=["all"],
        help="'all', v=E1,E2, rep=COEFFS, or lead=A1,.. [end=B0,..]",
    )

    sub.add_parser("zeta", parents=[parent], help="numerator polynomials P_j")

    v = sub.add_parser("verify", parents=[parent], help="compare formulas with brute force")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--d-max", type=int, default=8)
    return parser


COMMANDS = {"group": cmd_group, "count": cmd_count, "zeta": cmd_zeta, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if hasattr(args, "cls"):
        args.cls = " ".join(args.cls)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InvalidInput, GroupTooLarge, ZeroConstant, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except UnknownClass as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
    return EXIT_USAGE


def run(argv: Optional[Sequence[str]] = None) -> str:
    """Run the CLI and return its stdout; raises SystemExit on a nonzero status."""
    buf = io.StringIO()
    code = main(argv, buf)
    if code:
        raise SystemExit(code)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
