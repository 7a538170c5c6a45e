import pytest

from conftest import as_set
from ringforge.config import set_caps
from ringforge.constructors import matrix_ring, upper_triangular, zmod
from ringforge.corpus import corpus_names, corpus_ring
from ringforge.errors import TooLarge
from ringforge.oracle import (
    brute_central_idempotents, brute_ext_nonsplit, brute_radical, brute_socle, maximal_right_ideals,
    oracle_report,
)
from ringforge.qf import right_socle_of_projective
from ringforge.simples import ext_nonzero, simple_classes
from ringforge.structure import center, central_idempotents, jacobson_radical
from ringforge.subgroup import principal_right_ideal, whole

T2 = upper_triangular(zmod(2), 2)
M2 = matrix_ring(zmod(2), 2)
E11, E12 = (1, 0, 0), (0, 1, 0)


def test_brute_radical_examples():
    maxi = sorted(sorted(m) for m in maximal_right_ideals(zmod(6)))
    assert maxi == [[(0,), (2,), (4,)], [(0,), (3,)]]
    assert brute_radical(zmod(6)).is_zero()
    assert as_set(brute_radical(zmod(4))) == {(0,), (2,)}
    assert len(maximal_right_ideals(T2)) == 2
    assert as_set(brute_radical(T2)) == {(0, 0, 0), E12}


def test_brute_socle_examples():
    z4 = zmod(4)
    assert as_set(brute_socle(z4, whole(z4))) == {(0,), (2,)}
    assert as_set(brute_socle(T2, principal_right_ideal(T2, E11))) == {(0, 0, 0), E12}
    assert brute_socle(M2, whole(M2)) == whole(M2)


def test_brute_ext_examples():
    (c,) = simple_classes(zmod(4))
    assert brute_ext_nonsplit(zmod(4), c, c)
    z6 = zmod(6)
    assert not any(brute_ext_nonsplit(z6, a, b) for a in simple_classes(z6) for b in simple_classes(z6))
    assert not brute_ext_nonsplit(T2, 2, 1)
    assert brute_ext_nonsplit(T2, 1, 2)


def test_caps():
    with pytest.raises(TooLarge):
        brute_radical(zmod(8), cap=4)
    (c,) = simple_classes(M2)
    with pytest.raises(TooLarge):
        brute_ext_nonsplit(M2, c, c, module_cap=8)
    set_caps(oracle_ring=4)
    report = oracle_report(zmod(8))
    ext = [v for v in report if v.name == "oracle_ext"][0]
    assert ext.passed and ext.detail.startswith("skipped")


@pytest.mark.parametrize("name", corpus_names())
def test_oracle_equivalences(name):
    r = corpus_ring(name)
    assert brute_radical(r) == jacobson_radical(r)
    assert sorted(brute_central_idempotents(r)) == sorted(central_idempotents(r, center(r)).all)
    classes = simple_classes(r)
    for c in classes:
        module = principal_right_ideal(r, c.idempotent)
        assert brute_socle(r, module) == right_socle_of_projective(r, c.idempotent)
    for a in classes:
        for b in classes:
            assert brute_ext_nonsplit(r, a, b) == ext_nonzero(r, a, b), (a.id, b.id)
