import pytest

from cclab.cyclotomic import Cyclo
from cclab.fields import GF, field, field_for_q, make_field_spec


def test_field_make_basics():
    spec = make_field_spec(3, 1)
    assert spec["q"] == 3 and spec["modulus"] == [0, 1]
    f4 = make_field_spec(2, 2)
    assert f4["modulus"] == [1, 1, 1]  # x^2 + x + 1, the only choice
    with pytest.raises(ValueError):
        GF(4, 1)
    with pytest.raises(ValueError):
        GF(6, 1)


def test_frobenius_fixes_field():
    F = field(3, 2)
    for a in F.elements():
        assert F.pow(a, 9) == a


@pytest.mark.parametrize("p,f", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
def test_inverse_law_whole_field(p, f):
    F = field(p, f)
    for a in F.units():
        assert F.mul(a, F.pow(a, F.q - 2)) == 1


def test_field_laws_exhaustive_small():
    F = field(2, 2)
    for a in F.elements():
        for b in F.elements():
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in F.elements():
                lhs = F.mul(a, F.add(b, c))
                rhs = F.add(F.mul(a, b), F.mul(a, c))
                assert lhs == rhs


def test_trace_values():
    F9 = field(3, 2)
    assert F9.trace_to_prime(0) == 0
    assert F9.trace_to_prime(1) == 2  # f * 1 = 2 mod 3
    F4 = field(2, 2)
    g = F4.primitive_element()
    # Tr(g) = g + g^2 over the canonical modulus
    assert F4.trace_to_prime(g) == 1


def test_additive_character():
    F = field(3, 1)
    assert F.additive_character(0) == Cyclo.rational(1)
    s = Cyclo.zero(3)
    for x in F.elements():
        s = s + F.additive_character(x)
    assert s.is_zero()
    for x in F.elements():
        for y in F.elements():
            lhs = F.additive_character(F.add(x, y))
            assert lhs == F.additive_character(x) * F.additive_character(y)


def test_gauss_sum_modulus_squared():
    for q in (3, 5, 7, 9):
        F = field_for_q(q)
        v = F.gauss_sum_vector()
        s = Cyclo.from_exponents(F.p, {k: int(c) for k, c in enumerate(v)})
        assert s.norm2() == q


def test_quadratic_character():
    F = field(7, 1)
    squares = {F.mul(a, a) for a in F.units()}
    for a in F.units():
        assert F.quadratic_character(a) == (1 if a in squares else -1)
    assert F.least_nonsquare() not in squares
