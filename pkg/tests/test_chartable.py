from fractions import Fraction

import pytest

from cclab.chartable import (build_table, dixon_prime, is_probable_prime,
                             min_nontrivial_degree, poly_roots_mod,
                             charpoly_mod, verify_table)
from cclab.classfun import classes, inner
from cclab.cyclotomic import Cyclo


def test_prime_utilities():
    assert is_probable_prime(2) and is_probable_prime(97) and is_probable_prime(104729)
    assert not is_probable_prime(1) and not is_probable_prime(561)
    ell = dixon_prime(24, 12)
    assert ell > 48 and ell % 12 == 1 and is_probable_prime(ell)


def test_poly_roots_mod():
    ell = 101
    # (x-3)(x-5)(x-7) mod 101
    f = [-(3 * 5 * 7) % ell, (3 * 5 + 3 * 7 + 5 * 7) % ell, (-(3 + 5 + 7)) % ell, 1]
    assert poly_roots_mod(f, ell) == [3, 5, 7]
    # irreducible quadratic has no roots
    assert poly_roots_mod([1, 0, 1], 7) == []


def test_charpoly_mod():
    import numpy as np

    ell = 97
    A = np.array([[2, 1], [0, 5]], dtype=object)
    cp = charpoly_mod(A, ell)
    # (x-2)(x-5) = x^2 - 7x + 10
    assert cp == [10 % ell, (-7) % ell, 1]


DEGREES = {
    "SL(2,3)": [1, 1, 1, 2, 2, 2, 3],
    "SL(2,5)": [1, 2, 2, 3, 3, 4, 4, 5, 6],
    "SL(2,7)": [1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8],
    "GL(2,3)": [1, 1, 2, 2, 2, 3, 3, 4],
    "Sp(4,2)": [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16],
}


@pytest.mark.parametrize("s", sorted(DEGREES))
def test_degree_lists(s, tbl):
    ct = tbl(s)
    assert sorted(ct.degrees) == DEGREES[s]
    assert sum(d * d for d in ct.degrees) == ct.group.order


def test_cyclic_group_table(grp, tbl):
    ct = tbl("GL(1,5)")
    assert ct.degrees == [1, 1, 1, 1]
    # values are fourth roots of unity
    for chi in ct.irreducibles:
        for v in chi.values:
            assert (v ** 4) == Cyclo.rational(1)


def test_orthogonality_is_verified(tbl):
    ct = tbl("SL(2,5)")
    verify_table(ct)  # idempotent and exact
    # spot: distinct rows are orthogonal
    assert inner(ct.irreducibles[0], ct.irreducibles[3]) == 0


def test_min_nontrivial_degree(tbl):
    assert min_nontrivial_degree(tbl("SL(2,5)")) == 2
    assert min_nontrivial_degree(tbl("Sp(4,3)")) == 4


def test_character_count_equals_class_count(tbl):
    for s in ("SL(2,3)", "Sp(4,2)", "SO+(4,3)"):
        ct = tbl(s)
        assert ct.k == classes(ct.group).k


def test_degrees_divide_group_order(tbl):
    ct = tbl("Sp(4,2)")
    for d in ct.degrees:
        assert ct.group.order % d == 0


def test_sp43_table(tbl):
    ct = tbl("Sp(4,3)")
    assert ct.k == 34
    assert sorted(ct.degrees)[:6] == [1, 4, 4, 5, 5, 6]
    assert max(ct.degrees) == 81
