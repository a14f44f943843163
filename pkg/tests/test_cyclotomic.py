import random
from fractions import Fraction

from cclab.cyclotomic import Cyclo, cyclotomic_polynomial, sort_key


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_relations():
    for e in (1, 2, 3, 4, 5, 6, 8, 12):
        z = Cyclo.root(e)
        assert z ** e == 1
        assert (z ** e) == Cyclo.rational(1)
        # embedding round trip: zeta_{2e}^2 = zeta_e
        assert Cyclo.root(2 * e) ** 2 == z


def test_sum_of_all_roots_vanishes():
    for e in (2, 3, 5, 6, 12):
        s = Cyclo.zero(e)
        for k in range(e):
            s = s + Cyclo.root(e, k)
        assert s.is_zero()


def test_ring_laws_random():
    rng = random.Random(7)
    e = 12
    def rand():
        return Cyclo.from_exponents(
            e, {rng.randrange(e): Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                for _ in range(3)})
    for _ in range(50):
        a, b, c = rand(), rand(), rand()
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a.conj().conj() == a


def test_conjugation_and_norm():
    z = Cyclo.root(5, 2)
    assert z.norm2() == 1
    w = Cyclo.root(3) + 2
    assert w.norm2() == (w * w.conj()).rational_value()
    assert (Cyclo.root(8) * Cyclo.root(8).conj()).rational_value() == 1


def test_gauss_sum_modulus():
    # |sum_x zeta_3^(x^2)|^2 = 3
    s = Cyclo.zero(3)
    for x in range(3):
        s = s + Cyclo.root(3, (x * x) % 3)
    assert s.norm2() == 3


def test_mixed_order_equality():
    a = Cyclo.root(6, 2)
    b = Cyclo.root(3, 1)
    assert a == b
    assert hash(a) == hash(b)
    assert Cyclo.root(4, 2) == Cyclo.rational(-1)


def test_rational_detection():
    z = Cyclo.root(5)
    s = z + z ** 2 + z ** 3 + z ** 4
    assert s.is_rational() and s.rational_value() == -1
    assert Cyclo.rational(Fraction(3, 2)).is_rational()


def test_sort_key_total_order():
    vals = [Cyclo.root(12, k) for k in range(12)]
    keys = [sort_key(v, 12) for v in vals]
    assert len(set(keys)) == 12
