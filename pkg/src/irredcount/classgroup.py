"""The group of classes of monic polynomials sharing prescribed coefficients.

Type I classes fix the ``ell`` coefficients below the leading term and the
``t`` lowest coefficients (constant term nonzero); Type II classes fix only the
``ell`` leading ones.  A class is represented by its unique monic
representative of degree ``ell + t`` (Type I) or ``ell`` (Type II), stored as a
polynomial tuple (constant term first).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import GroupTooLarge, InvalidInput, UnknownClass, ZeroConstant
from .ff import GF, Poly, enumerate_monic, is_monic, poly_to_str
from .ntheory import lcm

DEFAULT_MAX_ORDER = 1 << 20

ExponentVector = tuple[int, ...]


class _Zero:
    """Group-algebra zero: the class of a Type I polynomial with f(0) = 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _Zero()


@dataclass(frozen=True)
class Prescription:
    field: GF
    kind: str
    ell: int
    t: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("I", "II"):
            raise InvalidInput(f"kind must be 'I' or 'II', got {self.kind!r}")
        if self.ell < 1:
            raise InvalidInput(f"ell must be >= 1, got {self.ell}")
        if self.kind == "I" and self.t < 1:
            raise InvalidInput("Type I needs t >= 1")
        if self.kind == "II" and self.t:
            raise InvalidInput("Type II takes no ending coefficients (t must be 0)")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def tau(self) -> int:
        return self.ell + self.t - 1 if self.kind == "I" else self.ell - 1

    @property
    def rep_degree(self) -> int:
        return self.ell + self.t

    @property
    def order(self) -> int:
        q = self.q
        if self.kind == "I":
            return (q - 1) * q ** (self.ell + self.t - 1)
        return q**self.ell

    def describe(self) -> dict:
        return {"field": self.field.spec(), "type": self.kind, "ell": self.ell, "t": self.t}


# -- representatives -----------------------------------------------------------


def split(p: Prescription, rep: Poly) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(leading a_1..a_ell, ending b_0..b_{t-1}) of a representative."""
    D = p.rep_degree
    lead = tuple(rep[D - j] for j in range(1, p.ell + 1))
    return lead, tuple(rep[: p.t])


def join(p: Prescription, lead: Sequence[int], end: Sequence[int] = ()) -> Poly:
    D = p.rep_degree
    out = [0] * (D + 1)
    out[D] = 1
    for j, a in enumerate(lead, start=1):
        out[D - j] = a
    for j, b in enumerate(end):
        out[j] = b
    return tuple(out)


def identity(p: Prescription) -> Poly:
    return join(p, (0,) * p.ell, (1,) + (0,) * (p.t - 1) if p.kind == "I" else ())


def check_rep(p: Prescription, c) -> Poly:
    """Validate a class representative; raise UnknownClass otherwise."""
    q = p.q
    if (
        not isinstance(c, tuple)
        or len(c) != p.rep_degree + 1
        or c[-1] != 1
        or any(not (isinstance(x, int) and 0 <= x < q) for x in c)
        or (p.kind == "I" and c[0] == 0)
    ):
        raise UnknownClass(f"{c!r} is not a class representative for {p.describe()}")
    return c


def class_of(p: Prescription, f: Poly):
    """The class of monic ``f``; ZERO for Type I when f(0) = 0."""
    if not is_monic(f):
        raise InvalidInput(f"class_of needs a monic polynomial, got {f}")
    m = len(f) - 1
    if p.kind == "I" and f[0] == 0:
        return ZERO
    lead = tuple(f[m - j] if m - j >= 0 else 0 for j in range(1, p.ell + 1))
    end = tuple(f[j] if j <= m else 0 for j in range(p.t))
    return join(p, lead, end)


def _trunc_mul(F: GF, a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i in range(min(n, len(a))):
        x = a[i]
        if x:
            for j in range(min(n - i, len(b))):
                out[i + j] = F.add(out[i + j], F.mul(x, b[j]))
    return out


def class_mul(p: Prescription, a: Poly, b: Poly) -> Poly:
    F = p.field
    la, ea = split(p, a)
    lb, eb = split(p, b)
    # leading blocks multiply as reversed polynomials mod x^(ell+1)
    lead = _trunc_mul(F, (1,) + la, (1,) + lb, p.ell + 1)[1:]
    end = _trunc_mul(F, ea, eb, p.t) if p.t else []
    return join(p, lead, end)


def class_inverse(p: Prescription, a: Poly) -> Poly:
    """Inverse class, solving the two triangular systems coefficient by coefficient."""
    F = p.field
    lead, end = split(p, a)
    f = (1,) + lead
    g = [1] + [0] * p.ell
    for d in range(1, p.ell + 1):
        s = 0
        for j in range(1, d + 1):
            s = F.add(s, F.mul(f[j], g[d - j]))
        g[d] = F.neg(s)
    e: list[int] = []
    if p.t:
        inv_b0 = F.inv(end[0])
        e = [inv_b0] + [0] * (p.t - 1)
        for d in range(1, p.t):
            s = 0
            for j in range(1, d + 1):
                s = F.add(s, F.mul(end[j], e[d - j]))
            e[d] = F.neg(F.mul(inv_b0, s))
    return join(p, g[1:], e)


def class_pow(p: Prescription, a: Poly, e: int) -> Poly:
    if e < 0:
        a, e = class_inverse(p, a), -e
    out = identity(p)
    while e:
        if e & 1:
            out = class_mul(p, out, a)
        a = class_mul(p, a, a)
        e >>= 1
    return out


def prescribe_to_class(
    p: Prescription, leading: Sequence[int], ending: Optional[Sequence[int]] = None
) -> Poly:
    F = p.field
    if len(leading) != p.ell:
        raise InvalidInput(f"expected {p.ell} leading coefficients, got {len(leading)}")
    lead = [F.check(a) for a in leading]
    if p.kind == "II":
        if ending:
            raise InvalidInput("Type II prescriptions take no ending coefficients")
        return join(p, lead)
    if ending is None or len(ending) != p.t:
        raise InvalidInput(f"Type I needs {p.t} ending coefficients")
    end = [F.check(b) for b in ending]
    if end[0] == 0:
        raise ZeroConstant("constant term must be nonzero for Type I")
    return join(p, lead, end)


def all_classes(p: Prescription) -> Iterator[Poly]:
    """Every representative, in ascending enumeration order."""
    return enumerate_monic(p.field, p.rep_degree, nonzero_constant=p.kind == "I")


# -- structure -----------------------------------------------------------------


@dataclass(eq=False)
class GroupStructure:
    presc: Prescription
    gens: tuple[Poly, ...]
    orders: tuple[int, ...]
    table: dict[Poly, ExponentVector]

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def R(self) -> int:
        return lcm(*self.orders)

    @cached_property
    def elements(self) -> dict[ExponentVector, Poly]:
        return {v: c for c, v in self.table.items()}

    def dlog(self, c: Poly) -> ExponentVector:
        try:
            return self.table[c]
        except (KeyError, TypeError):
            raise UnknownClass(f"{c!r} is not a class of {self.presc.describe()}") from None

    def class_from_exponents(self, v: Sequence[int]) -> Poly:
        v = tuple(int(x) for x in v)
        if len(v) != len(self.orders):
            raise UnknownClass(f"exponent vector {v} has wrong length (want {len(self.orders)})")
        return self.elements[tuple(x % r for x, r in zip(v, self.orders))]

    def vectors(self) -> list[ExponentVector]:
        """All exponent vectors in lexicographic order."""
        return list(product(*(range(r) for r in self.orders)))

    def to_json(self) -> dict:
        out = self.presc.describe()
        out.update(
            order=self.order,
            R=self.R,
            factors=[
                {"generator": poly_to_str(g), "order": r} for g, r in zip(self.gens, self.orders)
            ],
        )
        return out


def dlog(gs: GroupStructure, c: Poly) -> ExponentVector:
    return gs.dlog(c)


def _candidates(p: Prescription) -> Iterator[Poly]:
    seen = set()
    if p.kind == "II" and p.field.r == 1:
        # <x^j + 1> with j coprime to p are tried first
        for j in range(1, p.ell + 1):
            if gcd(j, p.field.p) == 1:
                c = class_of(p, (1,) + (0,) * (j - 1) + (1,))
                seen.add(c)
                yield c
    for c in all_classes(p):
        if c not in seen:
            yield c


def decompose(p: Prescription, max_order: int = DEFAULT_MAX_ORDER) -> GroupStructure:
    """Invariant-factor basis of the class group with a full discrete-log table.

    Each round picks the first candidate of maximal order modulo the span of the
    generators found so far, then corrects it by a product of earlier generators
    so that its own order equals that quotient order (so the product stays direct).
    """
    n = p.order
    if n > max_order:
        raise GroupTooLarge(f"|E| = {n} exceeds the cap {max_order}")
    one = identity(p)
    span: dict[Poly, ExponentVector] = {one: ()}
    gens: list[Poly] = []
    orders: list[int] = []
    while len(span) < n:
        bound = n // len(span)
        if orders:
            bound = min(bound, orders[-1])
        best, best_m = None, 0
        for c in _candidates(p):
            if c in span:
                continue
            x, m = c, 1
            while x not in span:
                x = class_mul(p, x, c)
                m += 1
            if m > best_m:
                best, best_m = c, m
                if m == bound:
                    break
        h, m = best, best_m
        shift = span[class_pow(p, h, m)]
        for g, a in zip(gens, shift):
            if a % m:
                raise AssertionError(f"lift failed: exponent {a} not divisible by {m}")
            h = class_mul(p, h, class_pow(p, g, -(a // m)))
        new: dict[Poly, ExponentVector] = {}
        power = one
        for k in range(m):
            for c, v in span.items():
                new[class_mul(p, c, power)] = v + (k,)
            power = class_mul(p, power, h)
        if len(new) != len(span) * m or power != one:
            raise AssertionError("generator is not independent of the span")
        span = new
        gens.append(h)
        orders.append(m)
    return GroupStructure(p, tuple(gens), tuple(orders), span)


def structure_from_generators(p: Prescription, gens: Sequence[Poly]) -> GroupStructure:
    """GroupStructure on a caller-chosen basis; the generators must give a direct product of E."""
    one = identity(p)
    span: dict[Poly, ExponentVector] = {one: ()}
    orders: list[int] = []
    for g in gens:
        g = check_rep(p, g)
        m, x = 1, g
        while x != one:
            x = class_mul(p, x, g)
            m += 1
        new: dict[Poly, ExponentVector] = {}
        power = one
        for k in range(m):
            for c, v in span.items():
                new[class_mul(p, c, power)] = v + (k,)
            power = class_mul(p, power, g)
        if len(new) != len(span) * m:
            raise InvalidInput(f"generator {poly_to_str(g)} is not independent of the earlier ones")
        span = new
        orders.append(m)
    if len(span) != p.order:
        raise InvalidInput(f"generators span {len(span)} of {p.order} classes")
    return GroupStructure(p, tuple(gens), tuple(orders), span)
