"""Brute-force ground truth for the counting pipeline.

``brute_I`` enumerates monic polynomials and tallies the irreducible ones by
class.  ``brute_F`` walks every element of F_{q^n}, forms its characteristic
polynomial as the product over its Frobenius conjugates, and tallies classes.
Neither touches characters or generating functions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .classgroup import ZERO, ExponentVector, GroupStructure, class_of
from .counting import Counter
from .errors import BudgetExceeded
from .ff import GF, Poly, irreducibles, poly_pow, poly_to_str
from .ntheory import divisors, factorize, mobius

DEFAULT_BUDGET = 1 << 22


def total_irreducibles(q: int, d: int) -> int:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return sum(mobius(k) * q ** (d // k) for k in divisors(d)) // d


class ExtensionField:
    """F_{q^n} = F_q[y]/(m(y)), m the first monic irreducible of degree n.

    Elements are ints sum_i c_i q^i (c_i encodings in F_q); multiplication goes
    through discrete-log tables on a primitive element of the form y + c.
    """

    def __init__(self, F: GF, n: int):
        self.F, self.n = F, n
        self.Q = F.q**n
        self.modulus = irreducibles(F, n)[0]
        self._ndigits = F.r * n
        g = self._find_primitive()
        order = self.Q - 1
        exp = [0] * order
        log = [-1] * self.Q
        cur = self._vec(1)
        if g < F.q**2:
            c = g % F.q
            step = lambda v: self._mul_linear(v, c)  # noqa: E731
        else:
            gv = self._vec(g)
            step = lambda v: self._mul_vec(v, gv)  # noqa: E731
        for k in range(order):
            e = self._enc(cur)
            exp[k] = e
            log[e] = k
            cur = step(cur)
        if len(set(exp)) != order:
            raise AssertionError("chosen generator is not primitive")
        self.exp, self.log = exp, log

    # vectors are lists of n F_q encodings, constant first
    def _vec(self, a: int) -> list[int]:
        q, out = self.F.q, []
        for _ in range(self.n):
            a, c = divmod(a, q)
            out.append(c)
        return out

    def _enc(self, v) -> int:
        out = 0
        for c in reversed(v):
            out = out * self.F.q + c
        return out

    def _mul_vec(self, u: list[int], v: list[int]) -> list[int]:
        F, n, m = self.F, self.n, self.modulus
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] = F.add(prod[i + j], F.mul(a, b))
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                for j in range(n):
                    prod[k - n + j] = F.sub(prod[k - n + j], F.mul(c, m[j]))
        return prod[:n]

    def _mul_linear(self, v: list[int], c: int) -> list[int]:
        """v * (y + c)."""
        F, n, m = self.F, self.n, self.modulus
        shifted = [0] + v
        top = shifted[n]
        out = []
        for j in range(n):
            x = shifted[j]
            if top:
                x = F.sub(x, F.mul(top, m[j]))
            out.append(F.add(x, F.mul(c, v[j])))
        return out

    def _pow_vec(self, v: list[int], e: int) -> list[int]:
        out = self._vec(1)
        while e:
            if e & 1:
                out = self._mul_vec(out, v)
            v = self._mul_vec(v, v)
            e >>= 1
        return out

    def _find_primitive(self) -> int:
        """Encoding of a primitive element; y + c is preferred (cheap table build)."""
        order = self.Q - 1
        one = self._vec(1)
        primes = list(factorize(order)) if order > 1 else []

        def primitive(g: list[int]) -> bool:
            return any(g) and all(self._pow_vec(g, order // ell) != one for ell in primes)

        for c in range(self.F.q):
            g = self._mul_linear(one, c)
            if primitive(g):
                return self._enc(g)
        for e in range(self.F.q**2, self.Q):
            if primitive(self._vec(e)):
                return e
        raise AssertionError("F_{q^n}^* has no generator")

    def add(self, a: int, b: int) -> int:
        p = self.F.p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        for _ in range(self._ndigits):
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += (x + y) % p * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.F.p
        if p == 2:
            return a
        out, scale = 0, 1
        for _ in range(self._ndigits):
            a, x = divmod(a, p)
            out += -x % p * scale
            scale *= p
        return out


@lru_cache(maxsize=64)
def char_poly_census(F: GF, n: int) -> tuple[tuple[Poly, int], ...]:
    """(Q_alpha, multiplicity) over all alpha in F_{q^n}, one entry per Frobenius orbit."""
    K = ExtensionField(F, n)
    q, order = F.q, K.Q - 1
    exp, log = K.exp, K.log
    out: list[tuple[Poly, int]] = [((0,) * n + (1,), 1)]  # alpha = 0
    seen = bytearray(order)
    for k in range(order):
        if seen[k]:
            continue
        orbit = [k]
        j = k * q % order if order > 1 else 0
        while j != k:
            orbit.append(j)
            j = j * q % order
        for j in orbit:
            seen[j] = 1
        s = len(orbit)
        assert n % s == 0
        # product of (x - beta) over the distinct conjugates, coefficients in F_{q^n}
        coeffs = [1]
        for kb in orbit:
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = K.add(nxt[i + 1], c)
                if c:
                    nxt[i] = K.add(nxt[i], K.neg(exp[(kb + log[c]) % order]))
            coeffs = nxt
        # conjugates of alpha permute the roots, so the product lies in F_q[x]
        if any(c >= q for c in coeffs):
            raise AssertionError(f"orbit product of g^{k} is not Frobenius-invariant")
        out.append((poly_pow(F, tuple(coeffs), n // s), s))
    assert sum(m for _, m in out) == K.Q
    return tuple(out)


def _zero_tally(gs: GroupStructure) -> dict[ExponentVector, int]:
    return {v: 0 for v in gs.vectors()}


def brute_F(gs: GroupStructure, n: int, budget: int = DEFAULT_BUDGET) -> dict[ExponentVector, int]:
    """#{alpha in F_{q^n} : <Q_alpha> = class}, for every class."""
    p = gs.presc
    if p.q**n > budget:
        raise BudgetExceeded(f"q^n = {p.q ** n} exceeds budget {budget}")
    tally = _zero_tally(gs)
    for Q, mult in char_poly_census(p.field, n):
        c = class_of(p, Q)
        if c is ZERO:
            continue
        tally[gs.dlog(c)] += mult
    return tally


def brute_I(gs: GroupStructure, d: int, budget: int = DEFAULT_BUDGET) -> dict[ExponentVector, int]:
    """Number of monic irreducibles of degree d in each class."""
    p = gs.presc
    if p.q**d > budget:
        raise BudgetExceeded(f"q^d = {p.q ** d} exceeds budget {budget}")
    tally = _zero_tally(gs)
    for f in irreducibles(p.field, d):
        c = class_of(p, f)
        if c is not ZERO:
            tally[gs.dlog(c)] += 1
    return tally


@dataclass
class OracleReport:
    instance: dict
    rows: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r["ok"] for r in self.rows)

    def first_failure(self) -> Optional[dict]:
        return next((r for r in self.rows if not r["ok"]), None)

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "passed": self.passed,
            "checked": len(self.rows),
            "elapsed": round(self.elapsed, 3),
            "first_failure": self.first_failure(),
            "rows": self.rows,
        }


def verify(
    gs: GroupStructure,
    n_max: int,
    d_max: int,
    budget: int = DEFAULT_BUDGET,
    counter: Optional[Counter] = None,
) -> OracleReport:
    """Compare brute_F with N for n <= n_max and brute_I with I for d <= d_max."""
    start = time.perf_counter()
    counter = counter or Counter(gs)
    report = OracleReport(gs.to_json())
    for kind, top, brute, formula in (
        ("N", n_max, brute_F, counter.N),
        ("I", d_max, brute_I, counter.I),
    ):
        for n in range(1, top + 1):
            expected = brute(gs, n, budget)
            for v in gs.vectors():
                got = formula(v, n)
                report.rows.append(
                    {
                        "kind": kind,
                        "n": n,
                        "class": list(v),
                        "rep": poly_to_str(gs.class_from_exponents(v)),
                        "expected": expected[v],
                        "computed": got,
                        "ok": expected[v] == got,
                    }
                )
    report.elapsed = time.perf_counter() - start
    return report
