"""Exact arithmetic in the cyclotomic field Q(w), w a primitive R-th root of unity.

Elements are stored as rational coordinates on the power basis
1, w, ..., w^(phi(R)-1), i.e. as polynomials reduced modulo the R-th
cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import NotRational

Rational = Union[int, Fraction]


def _int_poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _int_poly_exact_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Quotient of ``a`` by monic ``b``; raise if the remainder is nonzero."""
    rem = list(a)
    db = len(b) - 1
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        quo[i - db] = c
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
    if any(rem):
        raise ArithmeticError("inexact cyclotomic division")
    return tuple(quo)


@lru_cache(maxsize=None)
def cyclotomic_poly(R: int) -> tuple[int, ...]:
    """Phi_R as integer coefficients, constant term first."""
    if R < 1:
        raise ValueError(f"R must be >= 1, got {R}")
    num = (-1,) + (0,) * (R - 1) + (1,)
    den: tuple[int, ...] = (1,)
    for d in range(1, R):
        if R % d == 0:
            den = _int_poly_mul(den, cyclotomic_poly(d))
    return _int_poly_exact_div(num, den)


@dataclass(frozen=True)
class CycloCtx:
    """Reduction context for Q(w_R)."""

    R: int
    phi: tuple[int, ...] = field(init=False)
    deg: int = field(init=False)
    _powers: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.R < 1:
            raise ValueError(f"R must be >= 1, got {self.R}")
        phi = cyclotomic_poly(self.R)
        deg = len(phi) - 1
        # product of Phi_d over d | R must give x^R - 1
        prod: tuple[int, ...] = (1,)
        for d in range(1, self.R + 1):
            if self.R % d == 0:
                prod = _int_poly_mul(prod, cyclotomic_poly(d))
        assert prod == (-1,) + (0,) * (self.R - 1) + (1,), f"bad cyclotomic product for R={self.R}"
        assert phi[-1] == 1
        powers = []
        cur = [0] * deg
        cur[0] = 1
        for _ in range(self.R):
            powers.append(tuple(cur))
            # multiply by x, then reduce the overflowing coefficient
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, phi)]
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "deg", deg)
        object.__setattr__(self, "_powers", tuple(powers))

    def zero(self) -> "CycloNum":
        return CycloNum(self, (Fraction(0),) * self.deg)

    def const(self, a: Rational) -> "CycloNum":
        coeffs = [Fraction(0)] * self.deg
        coeffs[0] = Fraction(a)
        return CycloNum(self, tuple(coeffs))

    def root(self, k: int) -> "CycloNum":
        """w_R^k."""
        return CycloNum(self, tuple(Fraction(c) for c in self._powers[k % self.R]))

    def from_exponents(self, counts: Mapping[int, Rational]) -> "CycloNum":
        """sum of counts[k] * w_R^k."""
        acc = [Fraction(0)] * self.deg
        for k, c in counts.items():
            if c:
                for i, v in enumerate(self._powers[k % self.R]):
                    if v:
                        acc[i] += c * v
        return CycloNum(self, tuple(acc))

    def from_coeffs(self, coeffs: Iterable[Rational]) -> "CycloNum":
        """Reduce an arbitrary polynomial in w (constant first) modulo Phi_R."""
        return self.from_exponents(dict(enumerate(coeffs)))


def root_of_unity(ctx: CycloCtx, k: int) -> "CycloNum":
    return ctx.root(k)


class CycloNum:
    """An element of Q(w_R).  Immutable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycloCtx, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != ctx.deg:
            raise ValueError(f"expected {ctx.deg} coordinates, got {len(coeffs)}")
        self.ctx = ctx
        self.coeffs = coeffs

    def _lift(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.ctx.R != self.ctx.R:
                raise ValueError(f"mixed cyclotomic orders {self.ctx.R} and {other.ctx.R}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        deg, phi = self.ctx.deg, self.ctx.phi
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        for k in range(2 * deg - 2, deg - 1, -1):
            c = prod[k]
            if c:
                base = k - deg
                for j in range(deg):
                    if phi[j]:
                        prod[base + j] -= c * phi[j]
        return CycloNum(self.ctx, tuple(prod[:deg]))

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "CycloNum":
        return CycloNum(self.ctx, tuple(a * c for a in self.coeffs))

    def __truediv__(self, c: Rational) -> "CycloNum":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / c)

    def __pow__(self, e: int) -> "CycloNum":
        if e < 0:
            raise ValueError("negative powers are not supported")
        out, base = self.ctx.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.ctx.R == other.ctx.R and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.R, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def conjugate(self) -> "CycloNum":
        """Apply w -> w^(-1)."""
        return self.ctx.from_exponents({-k: c for k, c in enumerate(self.coeffs) if c})

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __str__(self):
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else "w" if k == 1 else f"w^{k}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out or "0"

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*w^{k}")
        return f"CycloNum(R={self.ctx.R}: {' + '.join(terms) or '0'})"


def conjugate(a: CycloNum) -> CycloNum:
    return a.conjugate()


def to_rational(a: CycloNum) -> Fraction:
    return a.to_rational()
