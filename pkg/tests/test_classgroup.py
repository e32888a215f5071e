from __future__ import annotations

import random
from itertools import product

import pytest

from irredcount.classgroup import (
    ZERO,
    Prescription,
    all_classes,
    class_inverse,
    class_mul,
    class_of,
    class_pow,
    decompose,
    identity,
    prescribe_to_class,
    structure_from_generators,
)
from irredcount.errors import GroupTooLarge, InvalidInput, UnknownClass, ZeroConstant
from irredcount.ff import GF, enumerate_monic, poly_mul

SMALL = [
    (2, "I", 1, 1),
    (2, "I", 2, 2),
    (2, "I", 1, 3),
    (3, "I", 2, 1),
    (3, "I", 1, 2),
    (4, "I", 1, 1),
    (5, "I", 1, 1),
    (2, "II", 1, 0),
    (2, "II", 3, 0),
    (2, "II", 5, 0),
    (3, "II", 2, 0),
    (3, "II", 3, 0),
    (4, "II", 2, 0),
    (8, "II", 1, 0),
    (9, "II", 1, 0),
]


def presc(q, kind, ell, t):
    return Prescription(GF.from_q(q), kind, ell, t)


def test_class_of_examples():
    p = presc(2, "I", 2, 2)
    assert class_of(p, (1,)) == (1, 0, 0, 0, 1)
    assert class_of(p, (1, 0, 1)) == (1, 0, 1, 0, 1)
    assert class_of(p, (0, 1)) is ZERO
    p2 = presc(2, "II", 3, 0)
    assert class_of(p2, (0, 0, 0, 0, 0, 1)) == (0, 0, 0, 1)


def test_mul_inverse_examples():
    p = presc(2, "I", 2, 2)
    xi1 = class_of(p, (1, 1))
    assert class_pow(p, xi1, 4) == identity(p) != class_pow(p, xi1, 2)
    assert class_inverse(p, identity(p)) == identity(p)
    assert class_inverse(p, (1, 0, 1, 0, 1)) == (1, 0, 1, 0, 1)
    p3 = presc(3, "II", 3, 0)
    x1 = class_of(p3, (1, 1))
    orders = [k for k in range(1, 28) if class_pow(p3, x1, k) == identity(p3)]
    assert orders[0] == 9
    p32 = presc(3, "II", 2, 0)
    a = class_of(p32, (0, 1, 1))
    assert class_mul(p32, class_inverse(p32, a), a) == (0, 0, 1)


def test_prescribe_examples():
    p = presc(2, "II", 3, 0)
    assert prescribe_to_class(p, (0, 0, 1)) == (1, 0, 0, 1)
    assert prescribe_to_class(p, (0, 0, 0)) == identity(p)
    p1 = presc(2, "I", 2, 2)
    assert prescribe_to_class(p1, (0, 0), (1, 1)) == (1, 1, 0, 0, 1)
    with pytest.raises(ZeroConstant):
        prescribe_to_class(p1, (0, 0), (0, 1))
    with pytest.raises(InvalidInput):
        prescribe_to_class(p1, (0,), (1, 1))


def test_prescription_validation():
    with pytest.raises(InvalidInput):
        presc(2, "I", 2, 0)
    with pytest.raises(InvalidInput):
        presc(2, "II", 2, 1)
    with pytest.raises(InvalidInput):
        presc(2, "III", 2, 0)


@pytest.mark.parametrize("inst", SMALL, ids=str)
def test_group_axioms(inst):
    p = presc(*inst)
    elems = list(all_classes(p))
    assert len(elems) == p.order
    one = identity(p)
    rng = random.Random(1)
    triples = [tuple(rng.choice(elems) for _ in range(3)) for _ in range(200)]
    members = set(elems)
    for a in elems:
        assert class_mul(p, one, a) == a
        assert class_mul(p, a, class_inverse(p, a)) == one
        for b in elems if len(elems) <= 64 else elems[:8]:
            ab = class_mul(p, a, b)
            assert ab in members and ab == class_mul(p, b, a)
    for a, b, c in triples:
        assert class_mul(p, class_mul(p, a, b), c) == class_mul(p, a, class_mul(p, b, c))


@pytest.mark.parametrize("inst", SMALL, ids=str)
def test_class_map_is_multiplicative(inst):
    p = presc(*inst)
    F = p.field
    rng = random.Random(7)
    top = p.tau + 4
    for _ in range(200):
        f, g = (_random_monic(rng, F, rng.randint(0, top), p.kind == "I") for _ in range(2))
        assert class_of(p, poly_mul(F, f, g)) == class_mul(p, class_of(p, f), class_of(p, g))


def _random_monic(rng, F, d, nonzero_constant):
    cs = [rng.randrange(F.q) for _ in range(d)] + [1]
    if nonzero_constant and d:
        cs[0] = rng.randrange(1, F.q)
    return tuple(cs)


@pytest.mark.parametrize("inst", SMALL, ids=str)
def test_decomposition(inst):
    p = presc(*inst)
    gs = decompose(p)
    prod = 1
    for r in gs.orders:
        prod *= r
    assert prod == p.order == len(gs.table)
    assert list(gs.orders) == sorted(gs.orders, reverse=True)
    assert all(b % a == 0 for a, b in zip(gs.orders[1:], gs.orders))
    assert sorted(gs.table.values()) == gs.vectors()
    assert gs.dlog(identity(p)) == (0,) * len(gs.orders)
    for c, v in list(gs.table.items())[:50]:
        assert gs.class_from_exponents(v) == c
        rebuilt = identity(p)
        for g, e in zip(gs.gens, v):
            rebuilt = class_mul(p, rebuilt, class_pow(p, g, e))
        assert rebuilt == c


@pytest.mark.parametrize(
    "inst,orders",
    [((2, "I", 2, 2), (4, 2)), ((3, "I", 2, 1), (6, 3)), ((2, "II", 5, 0), (8, 2, 2))],
)
def test_decompose_orders(inst, orders):
    assert decompose(presc(*inst)).orders == orders


def test_dlog_examples():
    p = presc(2, "II", 3, 0)
    gs = decompose(p)
    assert gs.gens == (class_of(p, (1, 1)), class_of(p, (1, 0, 0, 1)))
    assert gs.dlog((1, 0, 0, 1)) == (0, 1)
    p1 = presc(2, "I", 2, 2)
    gs1 = structure_from_generators(p1, [class_of(p1, (1, 1)), class_of(p1, (1, 1, 0, 0, 1))])
    assert gs1.dlog((1, 0, 1, 0, 1)) == (2, 0)
    with pytest.raises(UnknownClass):
        gs1.dlog((0, 0, 0, 0, 1))


def test_structure_from_generators_rejects_dependent_basis():
    p = presc(2, "I", 2, 2)
    xi1 = class_of(p, (1, 1))
    with pytest.raises(InvalidInput):
        structure_from_generators(p, [xi1, class_pow(p, xi1, 2)])
    with pytest.raises(InvalidInput):
        structure_from_generators(p, [xi1])


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        decompose(presc(2, "II", 21, 0))
    with pytest.raises(GroupTooLarge):
        decompose(presc(3, "II", 3, 0), max_order=10)


@pytest.mark.parametrize(
    "inst", [(2, "I", 2, 2), (3, "I", 2, 1), (2, "I", 1, 2), (2, "II", 3, 0), (3, "II", 2, 0)], ids=str
)
def test_classes_are_equidistributed(inst):
    p = presc(*inst)
    D = p.ell + p.t if p.kind == "I" else p.ell
    for d in range(D, D + 3):
        tally = {}
        for f in enumerate_monic(p.field, d, nonzero_constant=p.kind == "I"):
            c = class_of(p, f)
            tally[c] = tally.get(c, 0) + 1
        assert len(tally) == p.order
        assert set(tally.values()) == {p.q ** (d - D)}


def test_exponent_vectors_reach_distinct_classes():
    p = presc(2, "II", 4, 0)
    gs = decompose(p)
    seen = {gs.class_from_exponents(v) for v in product(*(range(r) for r in gs.orders))}
    assert len(seen) == p.order
