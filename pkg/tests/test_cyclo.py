from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irredcount.cyclo import CycloCtx, conjugate, cyclotomic_poly, root_of_unity
from irredcount.errors import NotRational


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)


def test_root_examples():
    assert CycloCtx(4).root(2) == -1
    assert CycloCtx(6).root(3) == -1
    c9 = CycloCtx(9)
    assert c9.root(6) == -c9.root(3) - 1


def test_arith_examples():
    c4 = CycloCtx(4)
    i = c4.root(1)
    assert (1 + i) * (1 - i) == 2
    assert i * i == -1
    c8 = CycloCtx(8)
    assert c8.root(1) * c8.root(1) == c8.root(2)


def test_conjugate_and_rational_examples():
    c4 = CycloCtx(4)
    assert conjugate(c4.root(1)) == -c4.root(1)
    assert c4.const(Fraction(3, 7)).conjugate() == Fraction(3, 7)
    c8 = CycloCtx(8)
    assert conjugate(1 + c8.root(1)) == 1 + c8.root(7)
    assert (c4.const(2)).to_rational() == 2
    with pytest.raises(NotRational):
        c4.root(1).to_rational()
    c6 = CycloCtx(6)
    assert (c6.root(1) + c6.root(5)).to_rational() == 1


@pytest.mark.parametrize("R", range(1, 25))
def test_roots_and_orthogonality(R):
    ctx = CycloCtx(R)
    for k in range(R):
        assert root_of_unity(ctx, k) ** R == 1
    for m in range(-24, 25):
        s = ctx.zero()
        for k in range(R):
            s = s + ctx.root(k * m)
        assert s == (R if m % R == 0 else 0)


def _elements(R):
    ctx = CycloCtx(R)
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(coeff, min_size=ctx.deg, max_size=ctx.deg).map(
        lambda cs: ctx.from_coeffs(cs)
    )


@pytest.mark.parametrize("R", [3, 4, 6, 8, 9, 12])
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_ring_laws(R, data):
    a, b, c = (data.draw(_elements(R)) for _ in range(3))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert (a * a.conjugate()).conjugate() == a * a.conjugate()


def test_mixed_contexts_rejected():
    with pytest.raises(ValueError):
        CycloCtx(4).root(1) + CycloCtx(8).root(1)


def test_str_and_strings():
    c4 = CycloCtx(4)
    assert str(1 - c4.root(1)) == "1 - w"
    assert (c4.root(1) / 2).to_strings() == ["0/1", "1/2"]
