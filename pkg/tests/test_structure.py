import pytest

from conftest import as_set, elements
from ringforge.constructors import matrix_ring, upper_triangular, zmod
from ringforge.corpus import corpus_names, corpus_ring
from ringforge.errors import NotIdempotentModJ, TooLarge
from ringforge.config import set_caps
from ringforge.ring import is_unit, opposite_ring
from ringforge.structure import (
    center, central_idempotents, idempotent_lift, is_local_idempotent, jacobson_radical,
    primitive_orthogonal_decomposition, projective_cover, radical_filtration, semisimple_quotient,
    wedderburn_data,
)
from ringforge.subgroup import is_two_sided_ideal, sg_product

T2 = upper_triangular(zmod(2), 2)
M2 = matrix_ring(zmod(2), 2)
E11, E12, E22 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def radical_by_definition(r):
    els = elements(r)
    return {x for x in els
            if all(is_unit(r, r.sub(r.one, r.mul(y, x))) for y in els)}


def test_radical_examples():
    assert as_set(jacobson_radical(zmod(4))) == {(0,), (2,)}
    assert jacobson_radical(zmod(6)).is_zero()
    assert as_set(jacobson_radical(T2)) == {(0, 0, 0), E12}


@pytest.mark.parametrize("name", ["Z12", "T2F3", "F2C4", "A2-rad2", "nakayama-cyclic-2"])
def test_radical_by_definition(name):
    r = corpus_ring(name)
    assert as_set(jacobson_radical(r)) == radical_by_definition(r)


def test_radical_cap():
    set_caps(radical_scan=16)
    with pytest.raises(TooLarge):
        jacobson_radical(zmod(32))


def test_filtrations():
    f = radical_filtration(zmod(4))
    assert [as_set(p) for p in f.powers[1:]] == [{(0,), (2,)}, {(0,)}] and f.index == 2
    f = radical_filtration(zmod(8))
    assert [as_set(p) for p in f.powers[1:]] == [{(0,), (2,), (4,), (6,)}, {(0,), (4,)}, {(0,)}]
    assert f.index == 3
    f = radical_filtration(M2)
    assert f.index == 1 and f[1].is_zero() and f[5].is_zero()


@pytest.mark.parametrize("name", corpus_names())
def test_structure_invariants(name):
    r = corpus_ring(name)
    J = jacobson_radical(r)
    assert is_two_sided_ideal(J)[0]
    assert jacobson_radical(opposite_ring(r)) == J
    filt = radical_filtration(r)
    for a in range(filt.index + 1):
        for b in range(filt.index + 1):
            assert sg_product(filt[a], filt[b]) <= filt[a + b]
    q, _ = semisimple_quotient(r)
    assert jacobson_radical(q).is_zero()
    data = wedderburn_data(r)
    total = 1
    for b in data:
        assert b.simple_size == b.field_order ** b.multiplicity
        assert b.block_size == b.simple_size ** b.multiplicity
        assert b.field_order % b.characteristic == 0
        total *= b.block_size
    assert total == r.size // J.size == data.quotient_size
    dec = primitive_orthogonal_decomposition(r)
    acc = r.zero
    for n, e in enumerate(dec.idempotents):
        acc = r.add(acc, e)
        assert is_local_idempotent(r, e)
        for m, f in enumerate(dec.idempotents):
            if n != m:
                assert r.mul(e, f) == r.zero
    assert acc == r.one
    for j, b in enumerate(data, start=1):
        assert len(dec.of_class(j)) == b.multiplicity


def test_center():
    assert as_set(center(M2)) == {M2.zero, M2.one}
    assert center(zmod(6)).size == 6
    assert as_set(center(T2)) == {T2.zero, T2.one}
    for r in (M2, T2, corpus_ring("F2C4")):
        els = elements(r)
        scan = {x for x in els if all(r.mul(x, y) == r.mul(y, x) for y in els)}
        assert as_set(center(r)) == scan


def test_central_idempotents():
    ci = central_idempotents(zmod(6), center(zmod(6)))
    assert sorted(ci.all) == [(0,), (1,), (3,), (4,)]
    assert sorted(ci.primitive) == [(3,), (4,)]
    ci = central_idempotents(zmod(4))
    assert sorted(ci.all) == [(0,), (1,)] and ci.primitive == [(1,)]
    ci = central_idempotents(M2)
    assert ci.primitive == [M2.one]


def test_semisimple_quotient():
    q, _ = semisimple_quotient(zmod(4))
    assert q.size == 2
    q, _ = semisimple_quotient(T2)
    assert q.size == 4 and jacobson_radical(q).is_zero()
    assert len(central_idempotents(q).primitive) == 2
    q, _ = semisimple_quotient(M2)
    assert q.size == 16


def test_wedderburn_examples():
    z6 = [(b.block_size, b.simple_size, b.multiplicity, b.field_order, b.characteristic)
          for b in wedderburn_data(zmod(6))]
    assert z6 == [(2, 2, 1, 2, 2), (3, 3, 1, 3, 3)]
    m2 = [(b.block_size, b.simple_size, b.multiplicity, b.field_order, b.characteristic)
          for b in wedderburn_data(M2)]
    assert m2 == [(16, 4, 2, 2, 2)]
    t2 = [(b.block_size, b.simple_size, b.multiplicity, b.field_order, b.characteristic)
          for b in wedderburn_data(T2)]
    assert t2 == [(2, 2, 1, 2, 2)] * 2


def test_idempotent_lift():
    assert idempotent_lift(zmod(4), (1,)) == (1,)
    assert idempotent_lift(zmod(12), (4,)) == (4,)
    assert idempotent_lift(T2, (1, 1, 0)) == (1, 1, 0)
    # 5 = 1 + 4 is idempotent mod J = {0, 2, 4, 6} in Z8; its lift is 1
    assert idempotent_lift(zmod(8), (5,)) == (1,)
    with pytest.raises(NotIdempotentModJ):
        idempotent_lift(zmod(6), (2,))


def test_lift_reduces_to_input():
    r = corpus_ring("M2Z4")
    J = jacobson_radical(r)
    for x in elements(r)[::7]:
        if r.sub(r.mul(x, x), x) in J:
            e = idempotent_lift(r, x)
            assert r.mul(e, e) == e and r.sub(e, x) in J


def test_decompositions():
    dec = primitive_orthogonal_decomposition(zmod(6))
    assert sorted(dec.idempotents) == [(3,), (4,)]
    dec = primitive_orthogonal_decomposition(M2)
    assert sorted(dec.idempotents) == sorted([(1, 0, 0, 0), (0, 0, 0, 1)])
    assert dec.classes == [1, 1]
    assert primitive_orthogonal_decomposition(zmod(4)).idempotents == [(1,)]


def test_local_corners():
    for e in primitive_orthogonal_decomposition(M2).idempotents:
        corner = {M2.mul(M2.mul(e, x), e) for x in elements(M2)}
        assert sum(1 for x in corner if M2.mul(x, x) == x) == 2


def test_projective_covers():
    assert projective_cover(zmod(4), (1,)).size == 4
    assert as_set(projective_cover(T2, E11)) == {(0, 0, 0), E11, E12, (1, 1, 0)}
    assert as_set(projective_cover(T2, E22)) == {(0, 0, 0), E22}
