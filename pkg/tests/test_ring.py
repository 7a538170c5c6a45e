import json

import pytest

from conftest import as_set, elements, span
from ringforge.constructors import direct_product, matrix_ring, upper_triangular, zmod
from ringforge.errors import (
    AmbientMismatch, DimensionMismatch, NoIdentity, NotAnIdeal, NotAssociative, OrderMismatch,
    ParseError, TooLarge,
)
from ringforge.config import set_caps
from ringforge.ring import (
    dump_ring, enumerate_elements, is_unit, load_ring, make_ring, opposite_ring, ring_from_dict,
    ring_to_dict,
)
from ringforge.subgroup import (
    ideal, quotient_ring, sg_contains, sg_equal, sg_intersect, sg_product, sg_size, sg_sum,
    subgroup, whole,
)

T2 = upper_triangular(zmod(2), 2)        # basis E11, E12, E22
E11, E12, E22 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
M2 = matrix_ring(zmod(2), 2)             # basis E11, E12, E21, E22


def nonassociative_spec():
    # b1*b1 = b2, b1*b2 = 0, b2*b1 = b1: (b1 b1) b1 = b1 but b1 (b1 b1) = 0
    mul = [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
           [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
           [[0, 0, 1], [0, 1, 0], [0, 0, 0]]]
    return {"orders": [2, 2, 2], "one": [1, 0, 0], "mul": mul}


def test_make_ring_examples():
    z4 = make_ring([4], [1], [[[1]]])
    assert z4.size == 4
    v4 = make_ring([2, 2], [1, 1], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
    assert v4.size == 4 and v4.mul((1, 0), (0, 1)) == (0, 0)
    with pytest.raises(NoIdentity):
        make_ring([4], [1], [[[2]]])


def test_make_ring_rejects_bad_input():
    with pytest.raises(NotAssociative) as info:
        ring_from_dict(nonassociative_spec())
    i, j, l = info.value.witness
    mul = nonassociative_spec()["mul"]

    def times(x, y):
        out = [0, 0, 0]
        for a, xa in enumerate(x):
            for b, yb in enumerate(y):
                for c in range(3):
                    out[c] = (out[c] + xa * yb * mul[a][b][c]) % 2
        return out

    unit = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert times(times(unit[i], unit[j]), unit[l]) != times(unit[i], times(unit[j], unit[l]))
    with pytest.raises(DimensionMismatch):
        make_ring([2, 2], [1, 0], [[[1, 0]]])
    with pytest.raises(DimensionMismatch):
        make_ring([1], [0], [[[0]]])
    # b1*b1 = b2 where b1 has order 2 but b2 has order 4: 2*(b1*b1) != 0
    with pytest.raises(OrderMismatch):
        make_ring([4, 2, 4], [1, 0, 0],
                  [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                   [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                   [[0, 0, 1], [0, 0, 0], [0, 0, 0]]])


def test_arithmetic():
    z4, v4 = zmod(4), direct_product(zmod(2), zmod(2))
    assert z4.add((3,), (2,)) == (1,)
    assert v4.add((1, 0), (1, 1)) == (0, 1)
    for r in (z4, v4, T2):
        for x in elements(r):
            assert r.add(x, r.neg(x)) == r.zero
    assert z4.mul((2,), (2,)) == (0,)
    assert zmod(6).mul((2,), (3,)) == (0,)
    assert T2.mul(E11, E12) == E12
    assert T2.mul(E12, E11) == (0, 0, 0)


def test_full_ring_axioms_by_scan():
    for r in (T2, zmod(12), direct_product(zmod(4), zmod(2))):
        els = elements(r)
        for x in els:
            assert r.mul(r.one, x) == x == r.mul(x, r.one)
            for y in els:
                for z in els[::3]:
                    assert r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z))
                    assert r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z))


def test_is_unit():
    z4 = zmod(4)
    assert is_unit(z4, (3,)) and not is_unit(z4, (2,))
    assert is_unit(M2, (1, 0, 0, 1)) and not is_unit(M2, (1, 0, 0, 0))


def test_is_unit_matches_scan():
    for r in (M2, T2, zmod(12)):
        els = elements(r)
        for x in els:
            scan = any(r.mul(x, y) == r.one and r.mul(y, x) == r.one for y in els)
            assert is_unit(r, x) == scan


def test_enumerate_elements():
    assert list(enumerate_elements(zmod(4))) == [(0,), (1,), (2,), (3,)]
    assert len(list(enumerate_elements(direct_product(zmod(2), zmod(2))))) == 4
    assert list(enumerate_elements(M2)) == elements(M2)
    set_caps(elements=8)
    with pytest.raises(TooLarge) as info:
        list(enumerate_elements(M2))
    assert info.value.cap_name == "elements"


def test_env_cap(monkeypatch):
    monkeypatch.setenv("RINGFORGE_CAP_ELEMENTS", "4")
    with pytest.raises(TooLarge):
        list(enumerate_elements(T2))


def test_subgroup_examples():
    z4, z6 = zmod(4), zmod(6)
    v4 = direct_product(zmod(2), zmod(2))
    assert as_set(subgroup(z4, [(2,)])) == {(0,), (2,)}
    assert subgroup(T2, []).size == 1
    assert as_set(subgroup(v4, [(1, 1)])) == {(0, 0), (1, 1)}
    evens, threes = subgroup(z6, [(2,)]), subgroup(z6, [(3,)])
    assert sg_intersect(evens, threes).is_zero()
    assert sg_equal(sg_sum(subgroup(z4, [(2,)]), subgroup(z4, [(2,)])), subgroup(z4, [(2,)]))
    assert sg_size(sg_sum(evens, threes)) == 6
    assert sg_contains(evens, (4,)) and not sg_contains(evens, (3,))
    with pytest.raises(AmbientMismatch):
        sg_sum(evens, subgroup(z4, [(2,)]))


def test_subgroup_matches_span():
    r = direct_product(zmod(4), zmod(6))
    for gens in ([(2, 3)], [(1, 2), (2, 0)], [(0, 4), (3, 3)], [(2, 2), (2, 4)]):
        s = subgroup(r, gens)
        assert as_set(s) == span(r, gens)
        assert r.size % s.size == 0


def test_products():
    z4, z6 = zmod(4), zmod(6)
    assert sg_product(subgroup(z4, [(2,)]), subgroup(z4, [(2,)])).is_zero()
    assert sg_product(subgroup(z6, [(2,)]), subgroup(z6, [(3,)])).is_zero()
    J = subgroup(T2, [E12])
    assert sg_product(J, J).is_zero()
    assert all(T2.mul(x, y) == T2.zero for x in J.elements() for y in J.elements())


def test_ideals():
    assert as_set(ideal(T2, [E12])) == {T2.zero, E12}
    assert ideal(M2, [(1, 0, 0, 0)]) == whole(M2)
    for r in (T2, M2, zmod(6)):
        assert ideal(r, [r.one], "right") == whole(r)
    # left and right ideals generated by E11 in T2 differ
    assert as_set(ideal(T2, [E11], "right")) == {(0, 0, 0), E11, E12, (1, 1, 0)}
    assert as_set(ideal(T2, [E11], "left")) == {(0, 0, 0), E11}


def test_quotients():
    q, proj = quotient_ring(zmod(4), subgroup(zmod(4), [(2,)]))
    assert q.size == 2
    q, proj = quotient_ring(zmod(6), subgroup(zmod(6), []))
    assert q.size == 6
    q, proj = quotient_ring(T2, subgroup(T2, [E12]))
    assert q.size == 4
    els = elements(T2)
    for x in els:
        for y in els:
            assert proj(T2.mul(x, y)) == q.mul(proj(x), proj(y))
            assert proj(T2.add(x, y)) == q.add(proj(x), proj(y))
    assert proj(T2.one) == q.one
    assert all(q.mul(x, x) == x for x in elements(q))   # F2 x F2 is Boolean
    with pytest.raises(NotAnIdeal):
        quotient_ring(T2, subgroup(T2, [E11]))


def test_opposite():
    z6 = zmod(6)
    assert opposite_ring(z6).mul_table == z6.mul_table
    op = opposite_ring(T2)
    assert op.mul(E12, E11) == E12 and op.mul(E11, E12) == T2.zero
    m2 = matrix_ring(zmod(2), 2)
    assert opposite_ring(opposite_ring(m2)).mul_table == m2.mul_table
    s = subgroup(T2, [E12, E22])
    assert as_set(subgroup(op, [E12, E22])) == as_set(s)


def test_json_round_trip(tmp_path):
    path = tmp_path / "t2.json"
    dump_ring(T2, path)
    again = load_ring(path)
    assert again == T2
    data = json.loads(path.read_text())
    assert data["orders"] == [2, 2, 2]
    assert ring_from_dict(ring_to_dict(M2)) == M2


def test_load_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(nonassociative_spec()))
    with pytest.raises(NotAssociative):
        load_ring(bad)
    broken = tmp_path / "broken.json"
    broken.write_text('{"orders": [2,\n "one"')
    with pytest.raises(ParseError, match="line 2"):
        load_ring(broken)
    missing = tmp_path / "missing.json"
    missing.write_text('{"orders": [2]}')
    with pytest.raises(DimensionMismatch):
        load_ring(missing)
