"""Exact counts N_n(class) and I_d(class) from character sums over the class group.

For every nontrivial character index j the polynomial
P_j(z) = 1 + sum_{k=1}^{tau} c_{k,j} z^k collects the character sums over the
classes hit by monic degree-k polynomials.  N_n is a character-weighted sum of
n [z^n] log P_j(z) plus a main term; I_d follows by Moebius inversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .classgroup import ZERO, ExponentVector, GroupStructure, class_of
from .cyclo import CycloCtx, CycloNum
from .errors import InvalidInput, NotInteger
from .ff import enumerate_monic
from .ntheory import divisors, mobius

CharIndex = tuple[int, ...]
PPoly = tuple[CycloNum, ...]


def spectrum_E_d(gs: GroupStructure, d: int) -> list[ExponentVector]:
    """Exponent vectors of the classes of monic degree-d polynomials (f(0) != 0 for Type I)."""
    p = gs.presc
    if not 1 <= d <= p.tau:
        raise InvalidInput(f"degree {d} outside 1..tau={p.tau}")
    seen: set[ExponentVector] = set()
    hits = 0
    for f in enumerate_monic(p.field, d, nonzero_constant=p.kind == "I"):
        c = class_of(p, f)
        assert c is not ZERO
        seen.add(gs.dlog(c))
        hits += 1
    # below degree ell+t (resp. ell) every coefficient is prescribed, so no class repeats
    assert len(seen) == hits, "class map is not injective below the representative degree"
    return sorted(seen)


def char_exponent(gs: GroupStructure, v: Sequence[int], j: Sequence[int]) -> int:
    """k such that prod_i w_{r_i}^{v_i j_i} = w_R^k."""
    R = gs.R
    return sum(vi * ji * (R // r) for vi, ji, r in zip(v, j, gs.orders)) % R


def char_coeff(
    gs: GroupStructure, spectrum: Sequence[ExponentVector], j: CharIndex, ctx: CycloCtx
) -> CycloNum:
    counts: dict[int, int] = {}
    for v in spectrum:
        k = char_exponent(gs, v, j)
        counts[k] = counts.get(k, 0) + 1
    return ctx.from_exponents(counts)


def build_P(gs: GroupStructure, j: CharIndex, ctx: CycloCtx, spectra=None) -> PPoly:
    tau = gs.presc.tau
    if spectra is None:
        spectra = [spectrum_E_d(gs, d) for d in range(1, tau + 1)]
    return (ctx.const(1),) + tuple(char_coeff(gs, s, j, ctx) for s in spectra)


def log_series(P: Sequence[CycloNum], n_max: int) -> list[CycloNum]:
    """[b_1, ..., b_{n_max}] with b_n = n [z^n] log P(z), P(0) = 1.

    Uses z P'/P = sum_n b_n z^n, i.e. b_n = n c_n - sum_{k<n} b_k c_{n-k}.
    """
    if P[0] != 1:
        raise InvalidInput("log_series needs constant term 1")
    tau = len(P) - 1
    out: list[CycloNum] = []
    for n in range(1, n_max + 1):
        acc = P[n] * n if n <= tau else P[0] * 0
        for k in range(max(1, n - tau), n):
            acc = acc - out[k - 1] * P[n - k]
        out.append(acc)
    return out


def solve_power_congruence(
    orders: Sequence[int], k: int, t: Sequence[int]
) -> list[ExponentVector]:
    """All s with k*s_i = t_i (mod r_i) for every component."""
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    per_axis = []
    for r, ti in zip(orders, t):
        g = gcd(k, r)
        if ti % g:
            return []
        m = r // g
        s0 = (ti // g) * pow(k // g, -1, m) % m if m > 1 else 0
        per_axis.append([s0 + i * m for i in range(g)])
    return list(product(*per_axis))


def _as_count(x: Fraction, what: str) -> int:
    if x.denominator != 1 or x < 0:
        raise NotInteger(f"{what} = {x} is not a nonnegative integer")
    return int(x)


@dataclass
class ZetaData:
    """Numerators P_j and the trivial factor of the log-zeta expression."""

    numerators: dict[CharIndex, PPoly]
    trivial_numerator: tuple[int, ...]
    trivial_denominator: tuple[int, ...]
    prefactor: Fraction


class Counter:
    """Cached pipeline for one group structure.

    Spectra, P_j and their log-series coefficients are computed once and
    extended on demand; N and I tables reuse them for every class.
    """

    def __init__(self, gs: GroupStructure):
        self.gs = gs
        self.presc = gs.presc
        self.ctx = CycloCtx(gs.R)
        tau = self.presc.tau
        self.spectra = [spectrum_E_d(gs, d) for d in range(1, tau + 1)]
        self.indices: list[CharIndex] = [j for j in gs.vectors() if any(j)]
        self.P: dict[CharIndex, PPoly] = {
            j: build_P(gs, j, self.ctx, self.spectra) for j in self.indices
        }
        self._b: dict[CharIndex, list[CycloNum]] = {j: [] for j in self.indices}
        self._N: dict[int, dict[ExponentVector, int]] = {}

    def b(self, j: CharIndex, n_max: int) -> list[CycloNum]:
        cached = self._b[j]
        if len(cached) < n_max:
            cached = self._b[j] = log_series(self.P[j], n_max)
        return cached[:n_max]

    def _weighted_sum(self, t: ExponentVector, n: int) -> CycloNum:
        """sum over nontrivial j of conj-character(t) * b_n(P_j)."""
        gs, R = self.gs, self.gs.R
        by_exp: dict[int, list[CycloNum]] = {}
        for j in self.indices:
            e = -char_exponent(gs, t, j) % R
            by_exp.setdefault(e, []).append(self.b(j, n)[n - 1])
        total = self.ctx.zero()
        for e, vals in by_exp.items():
            s = vals[0]
            for v in vals[1:]:
                s = s + v
            total = total + (s if e == 0 else s * self.ctx.root(e))
        return total

    def N(self, t: ExponentVector, n: int) -> int:
        if n < 1:
            raise InvalidInput(f"n must be >= 1, got {n}")
        row = self._N.get(n)
        if row is not None and t in row:
            return row[t]
        p, q = self.presc, self.presc.q
        s = self._weighted_sum(tuple(t), n)
        if p.kind == "I":
            val = (s + (q**n - 1)) / ((q - 1) * q**p.tau)
        else:
            val = (s + q**n) / q**p.ell
        out = _as_count(val.to_rational(), f"N_{n}{tuple(t)}")
        self._N.setdefault(n, {})[tuple(t)] = out
        return out

    def N_table(self, n_max: int) -> dict[int, dict[ExponentVector, int]]:
        for j in self.indices:
            self.b(j, n_max)
        return {n: {t: self.N(t, n) for t in self.gs.vectors()} for n in range(1, n_max + 1)}

    def I(self, t: ExponentVector, d: int) -> int:
        if d < 1:
            raise InvalidInput(f"d must be >= 1, got {d}")
        total = 0
        for k in divisors(d):
            mu = mobius(k)
            if mu:
                for s in solve_power_congruence(self.gs.orders, k, t):
                    total += mu * self.N(s, d // k)
        return _as_count(Fraction(total, d), f"I_{d}{tuple(t)}")

    def I_table(self, d_max: int) -> dict[int, dict[ExponentVector, int]]:
        self.N_table(d_max)
        return {d: {t: self.I(t, d) for t in self.gs.vectors()} for d in range(1, d_max + 1)}

    def zeta(self) -> ZetaData:
        p, q = self.presc, self.presc.q
        if p.kind == "I":
            num, den = (1, -1), (1, -q)
            pref = Fraction(1, (q - 1) * q**p.tau)
        else:
            num, den = (1,), (1, -q)
            pref = Fraction(1, q**p.ell)
        return ZetaData(dict(self.P), num, den, pref)


def N_of(gs: GroupStructure, eps: ExponentVector, n: int, counter: Optional[Counter] = None) -> int:
    return (counter or Counter(gs)).N(tuple(eps), n)


def I_of(gs: GroupStructure, t: ExponentVector, d: int, counter: Optional[Counter] = None) -> int:
    return (counter or Counter(gs)).I(tuple(t), d)


def zeta_numerators(gs: GroupStructure, counter: Optional[Counter] = None) -> ZetaData:
    return (counter or Counter(gs)).zeta()
