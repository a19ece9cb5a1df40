from fractions import Fraction

import pytest

from monobasis import GF, QQ, FpElement, InputError, field_from_spec
from monobasis.fields import is_prime


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 101, 997}
    for k in range(2, 1000):
        assert is_prime(k) == (all(k % q for q in range(2, k)) if k > 2 else k == 2)
    assert all(is_prime(p) for p in primes)


def test_fp_arithmetic():
    F = GF(13)
    a, b = F.of(7), F.of(9)
    assert a + b == F.of(3)
    assert a * b == F.of(63)
    assert a - b == F.of(-2)
    assert (a / b) * b == a
    assert a ** (-1) * a == F.one
    assert F.of(0) ** 0 == F.one
    assert not F.zero
    assert bool(a)


def test_fp_pow_matches_repeated_multiplication():
    F = GF(101)
    x = F.of(17)
    acc = F.one
    for e in range(1, 12):
        acc = acc * x
        assert x**e == acc


def test_fp_mixed_primes_rejected():
    with pytest.raises(InputError):
        GF(7).of(1) + GF(11).of(1)


def test_fp_coercion_and_format():
    F = GF(13)
    assert F.of(Fraction(1, 2)) == F.of(7)  # 2*7 = 14 = 1 mod 13
    assert F.of("1/2") == F.of(7)
    assert F.format(F.of(-1)) == "12"
    assert str(F.of(-1)) == "12 (mod 13)"


def test_rationals():
    assert QQ.of("2/4") == Fraction(1, 2)
    assert QQ.format(Fraction(-6, 4)) == "-3/2"
    assert QQ.zero == 0 and QQ.one == 1


def test_field_from_spec():
    assert field_from_spec("q") is QQ
    assert field_from_spec("fp:13").p == 13
    with pytest.raises(InputError):
        field_from_spec("fp:12")
    with pytest.raises(InputError):
        field_from_spec("gf9")


def test_int_coercion_in_operators():
    F = GF(13)
    assert F.of(5) + 9 == F.of(1)
    assert 9 + F.of(5) == F.of(1)
    assert 2 * F.of(7) == F.of(1)
    assert isinstance(F.of(3) / 2, FpElement)
