"""Arithmetic in F_q = F_p[y]/(m(y)) and in the polynomial ring F_q[x].

Field elements are plain ints in ``[0, q)``: the base-p digits of the int are
the coordinates on the basis 1, y, ..., y^(r-1).  Polynomials are tuples of
such ints, constant term first, with no trailing zeros; the zero polynomial is
``()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence

from .errors import DivisionByZero, InvalidInput
from .ntheory import is_prime, prime_power

Poly = tuple[int, ...]

# r > 1 fields up to this size get full operation tables
_TABLE_MAX_Q = 256
# degrees above this use the Frobenius-gcd irreducibility test
TRIAL_DIVISION_MAX_DEG = 12


@dataclass(frozen=True)
class GF:
    """The finite field F_q, q = p**r, with a fixed polynomial basis over F_p."""

    p: int
    r: int = 1
    modulus: Optional[Poly] = None
    q: int = field(init=False)
    _add: Optional[list[int]] = field(init=False, repr=False, compare=False, default=None)
    _mul: Optional[list[int]] = field(init=False, repr=False, compare=False, default=None)
    _inv: Optional[list[int]] = field(init=False, repr=False, compare=False, default=None)
    _neg: Optional[list[int]] = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidInput(f"p={self.p} is not prime")
        if self.r < 1:
            raise InvalidInput(f"extension degree must be >= 1, got {self.r}")
        set_ = object.__setattr__
        set_(self, "q", self.p**self.r)
        if self.r == 1:
            if self.modulus is not None:
                raise InvalidInput("prime fields take no modulus")
            return
        base = GF(self.p)
        if self.modulus is None:
            mod = next(f for f in enumerate_monic(base, self.r) if is_irreducible(base, f))
            set_(self, "modulus", mod)
        else:
            mod = tuple(int(c) for c in self.modulus)
            if len(mod) != self.r + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
                raise InvalidInput(f"modulus {mod} is not monic of degree {self.r} over F_{self.p}")
            if not is_irreducible(base, mod):
                raise InvalidInput(f"modulus {mod} is reducible over F_{self.p}")
            set_(self, "modulus", mod)
        if self.q <= _TABLE_MAX_Q:
            q = self.q
            add = [self._add_slow(a, b) for a in range(q) for b in range(q)]
            mul = [self._mul_slow(a, b) for a in range(q) for b in range(q)]
            inv = [0] * q
            for a in range(1, q):
                for b in range(1, q):
                    if mul[a * q + b] == 1:
                        inv[a] = b
                        break
            set_(self, "_add", add)
            set_(self, "_mul", mul)
            set_(self, "_inv", inv)
            set_(self, "_neg", [self.from_digits([-d for d in self.digits(a)]) for a in range(q)])

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_q(cls, q: int, modulus: Optional[Sequence[int]] = None) -> "GF":
        try:
            p, r = prime_power(q)
        except ValueError as exc:
            raise InvalidInput(str(exc)) from None
        if r == 1:
            if modulus is not None and len(modulus) > 2:
                raise InvalidInput(f"modulus given for prime field F_{q}")
            return cls(p)
        return cls(p, r, tuple(modulus) if modulus is not None else None)

    @classmethod
    def from_spec(cls, text: str) -> "GF":
        """Parse ``"q=9,mod=2,2,1"`` (modulus digits constant first) or ``"q=5"``."""
        text = text.replace(" ", "")
        head, _, mod = text.partition(",mod=")
        if not head.startswith("q="):
            raise InvalidInput(f"bad field spec {text!r}")
        try:
            q = int(head[2:])
            modulus = tuple(int(c) for c in mod.split(",")) if mod else None
        except ValueError:
            raise InvalidInput(f"bad field spec {text!r}") from None
        return cls.from_q(q, modulus)

    def spec(self) -> str:
        if self.r == 1:
            return f"q={self.q}"
        return f"q={self.q},mod=" + ",".join(map(str, self.modulus))

    # -- encodings ------------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.r):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, digs: Sequence[int]) -> int:
        if len(digs) > self.r:
            raise InvalidInput(f"too many digits for F_{self.q}")
        out = 0
        for d in reversed(digs):
            out = out * self.p + d % self.p
        return out

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise InvalidInput(f"{a} is not an element encoding of F_{self.q}")
        return a

    # -- arithmetic -----------------------------------------------------------

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _mul_slow(self, a: int, b: int) -> int:
        p, r, m = self.p, self.r, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod_ = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod_[i + j] += x * y
        for k in range(2 * r - 2, r - 1, -1):
            c = prod_[k] % p
            if c:
                for j in range(r):
                    prod_[k - r + j] -= c * m[j]
            prod_[k] = 0
        return self.from_digits(prod_[:r])

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a * self.q + b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.r == 1:
            return -a % self.p
        if self._neg is not None:
            return self._neg[a]
        return self.from_digits([-d for d in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        if self._mul is not None:
            return self._mul[a * self.q + b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.q}")
        if self.r == 1:
            return pow(a, -1, self.p)
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.r == 1:
            return pow(a, e, self.p)
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out


def fe_arith(F: GF, a: int, b: int, op: str) -> int:
    """Dispatch ``op`` in {add, sub, mul, inv}; ``inv`` ignores ``b``."""
    F.check(a)
    if op == "inv":
        return F.inv(a)
    F.check(b)
    if op == "add":
        return F.add(a, b)
    if op == "sub":
        return F.sub(a, b)
    if op == "mul":
        return F.mul(a, b)
    raise InvalidInput(f"unknown field op {op!r}")


# -- polynomials ---------------------------------------------------------------


def trim(coeffs: Sequence[int]) -> Poly:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def degree(a: Poly) -> int:
    return len(a) - 1


def poly_add(F: GF, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out)


def poly_neg(F: GF, a: Poly) -> Poly:
    return tuple(F.neg(c) for c in a)


def poly_sub(F: GF, a: Poly, b: Poly) -> Poly:
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F: GF, a: Poly, c: int) -> Poly:
    return trim([F.mul(x, c) for x in a])


def poly_mul(F: GF, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    if F.r == 1:
        p = F.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim([c % p for c in out])
    q, addt, mult = F.q, F._add, F._mul
    if addt is None:
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return trim(out)
    for i, x in enumerate(a):
        if x:
            row = x * q
            for j, y in enumerate(b):
                out[i + j] = addt[out[i + j] * q + mult[row + y]]
    return trim(out)


def poly_divmod(F: GF, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quo = [0] * (len(a) - db)
    if F.r == 1:
        p = F.p
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] % p * inv_lead % p
            rem[i] = 0
            if c:
                off = i - db
                quo[off] = c
                for j in range(db):
                    rem[off + j] -= c * b[j]
        return trim(quo), trim([c % p for c in rem[:db]])
    q, addt, mult = F.q, F._add, F._mul
    if addt is None:
        for i in range(len(rem) - 1, db - 1, -1):
            c = F.mul(rem[i], inv_lead)
            rem[i] = 0
            if c:
                off = i - db
                quo[off] = c
                for j in range(db):
                    if b[j]:
                        rem[off + j] = F.sub(rem[off + j], F.mul(c, b[j]))
        return trim(quo), trim(rem[:db])
    negs = F._neg
    for i in range(len(rem) - 1, db - 1, -1):
        c = mult[rem[i] * q + inv_lead]
        rem[i] = 0
        if c:
            off = i - db
            quo[off] = c
            row = negs[c] * q
            for j in range(db):
                rem[off + j] = addt[rem[off + j] * q + mult[row + b[j]]]
    return trim(quo), trim(rem[:db])


def poly_mod(F: GF, a: Poly, b: Poly) -> Poly:
    return poly_divmod(F, a, b)[1]


def poly_arith(F: GF, a: Poly, b: Poly, op: str):
    """Dispatch ``op`` in {add, mul, divmod}."""
    if op == "add":
        return poly_add(F, a, b)
    if op == "mul":
        return poly_mul(F, a, b)
    if op == "divmod":
        return poly_divmod(F, a, b)
    raise InvalidInput(f"unknown polynomial op {op!r}")


def poly_monic(F: GF, a: Poly) -> Poly:
    if not a:
        return a
    return poly_scale(F, a, F.inv(a[-1]))


def poly_gcd(F: GF, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_pow(F: GF, a: Poly, e: int) -> Poly:
    out: Poly = (1,)
    while e:
        if e & 1:
            out = poly_mul(F, out, a)
        a = poly_mul(F, a, a)
        e >>= 1
    return out


def poly_powmod(F: GF, a: Poly, e: int, m: Poly) -> Poly:
    out: Poly = poly_mod(F, (1,), m)
    a = poly_mod(F, a, m)
    while e:
        if e & 1:
            out = poly_mod(F, poly_mul(F, out, a), m)
        a = poly_mod(F, poly_mul(F, a, a), m)
        e >>= 1
    return out


def poly_eval(F: GF, a: Poly, x: int) -> int:
    out = 0
    for c in reversed(a):
        out = F.add(F.mul(out, x), c)
    return out


def is_monic(a: Poly) -> bool:
    return bool(a) and a[-1] == 1


# -- irreducibility and enumeration --------------------------------------------


def is_irreducible(F: GF, f: Poly) -> bool:
    """Whether the monic polynomial ``f`` of degree >= 1 is irreducible over F."""
    if not is_monic(f) or len(f) < 2:
        raise InvalidInput(f"is_irreducible needs a monic non-constant polynomial, got {f}")
    d = len(f) - 1
    if d == 1:
        return True
    if f[0] == 0:
        return False
    if d <= TRIAL_DIVISION_MAX_DEG:
        for k in range(1, d // 2 + 1):
            for g in irreducibles(F, k):
                if _divides(F, g, f):
                    return False
        return True
    # f is irreducible iff gcd(x^(q^i) - x, f) = 1 for all i <= d/2
    x: Poly = (0, 1)
    h = x
    for _ in range(d // 2):
        h = poly_powmod(F, h, F.q, f)
        if len(poly_gcd(F, poly_sub(F, h, x), f)) > 1:
            return False
    return True


def _divides(F: GF, g: Poly, f: Poly) -> bool:
    """Whether monic ``g`` divides ``f``; remainder-only long division."""
    dg = len(g) - 1
    rem = list(f)
    if F.r == 1:
        p = F.p
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i] % p
            if c:
                off = i - dg
                for j in range(dg):
                    rem[off + j] -= c * g[j]
        return not any(c % p for c in rem[:dg])
    q, addt, mult, negs = F.q, F._add, F._mul, F._neg
    if addt is None:
        return not poly_mod(F, f, g)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c:
            off = i - dg
            row = negs[c] * q
            for j in range(dg):
                rem[off + j] = addt[rem[off + j] * q + mult[row + g[j]]]
    return not any(rem[:dg])


def enumerate_monic(F: GF, d: int, nonzero_constant: bool = False) -> Iterator[Poly]:
    """Yield monic degree-``d`` polynomials in ascending order of sum(c_i q^i)."""
    if d < 0:
        raise InvalidInput(f"degree must be >= 0, got {d}")
    if d == 0:
        yield (1,)
        return
    q = F.q
    ranges = [range(q)] * (d - 1) + [range(1, q) if nonzero_constant else range(q)]
    for hi in product(*ranges):
        yield hi[::-1] + (1,)


@lru_cache(maxsize=None)
def irreducibles(F: GF, d: int) -> tuple[Poly, ...]:
    """All monic irreducibles of degree ``d``, in enumeration order."""
    return tuple(f for f in enumerate_monic(F, d, nonzero_constant=d > 1) if is_irreducible(F, f))


# -- text form -----------------------------------------------------------------


def poly_to_str(a: Poly) -> str:
    return ",".join(map(str, a)) if a else "0"


def poly_from_str(F: GF, text: str) -> Poly:
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        coeffs = [F.check(int(c)) for c in text.split(",")]
    except ValueError:
        raise InvalidInput(f"bad polynomial {text!r}") from None
    return trim(coeffs)


def poly_pretty(a: Poly, var: str = "x") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        coef = "" if c == 1 and i else str(c)
        terms.append(coef + mono)
    return " + ".join(terms)
