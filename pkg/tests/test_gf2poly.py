"""Polynomial arithmetic over GF(2) on bit-packed ints."""

import random

import pytest

from gf2synth.gf2poly import (
    all_one_poly,
    find_irreducible,
    gf2_degree,
    gf2_divmod,
    gf2_ext_gcd,
    gf2_gcd,
    gf2_inv_mod,
    gf2_is_irreducible,
    gf2_mod,
    gf2_mul,
    gf2_mulmod,
    gf2_powmod,
)


def test_degree():
    assert gf2_degree(0) == -1
    assert gf2_degree(1) == 0
    assert gf2_degree(0b1011) == 3


def test_mul_known_values():
    # (x + 1)^2 == x^2 + 1 in characteristic 2
    assert gf2_mul(0b11, 0b11) == 0b101
    # (x^2 + x + 1)(x + 1) == x^3 + 1
    assert gf2_mul(0b111, 0b11) == 0b1001
    assert gf2_mul(0, 0b1101) == 0
    assert gf2_mul(1, 0b1101) == 0b1101


def test_divmod_reconstructs():
    rng = random.Random(7)
    for _ in range(200):
        a = rng.getrandbits(24)
        b = rng.getrandbits(12) | 1 << 11
        q, r = gf2_divmod(a, b)
        assert gf2_mul(q, b) ^ r == a
        assert gf2_degree(r) < gf2_degree(b)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        gf2_divmod(5, 0)


def test_ext_gcd_bezout():
    rng = random.Random(11)
    for _ in range(200):
        a = rng.getrandbits(16)
        b = rng.getrandbits(16)
        g, s, t = gf2_ext_gcd(a, b)
        assert gf2_mul(s, a) ^ gf2_mul(t, b) == g
        assert gf2_gcd(a, b) == g


def test_inv_mod():
    f = all_one_poly(4)  # x^4 + x^3 + x^2 + x + 1, irreducible
    for a in range(1, 16):
        inv = gf2_inv_mod(a, f)
        assert gf2_mulmod(a, inv, f) == 1
    with pytest.raises(ZeroDivisionError):
        gf2_inv_mod(0, f)


def test_powmod_matches_repeated_mult():
    f = find_irreducible(8)
    a = 0b1011001
    acc = 1
    for e in range(20):
        assert gf2_powmod(a, e, f) == acc
        acc = gf2_mulmod(acc, a, f)


def test_irreducibility_small():
    # degree 2: x^2 + x + 1 is the only irreducible
    assert gf2_is_irreducible(0b111)
    assert not gf2_is_irreducible(0b101)  # (x+1)^2
    assert not gf2_is_irreducible(0b110)  # x(x+1)
    # the two irreducible cubics
    assert gf2_is_irreducible(0b1011)
    assert gf2_is_irreducible(0b1101)
    assert not gf2_is_irreducible(0b1111)  # (x+1)(x^2+x+1)


def test_irreducible_count_degree_4():
    # there are exactly three irreducible quartics over GF(2)
    quartics = [f for f in range(1 << 4, 1 << 5) if gf2_is_irreducible(f)]
    assert quartics == [0b10011, 0b11001, 0b11111]


def test_all_one_poly_irreducible_iff_ghost_condition():
    """The all-one polynomial of degree m is irreducible exactly when m+1 is
    prime with 2 primitive mod m+1; cross-check against Rabin's test."""
    from gf2synth.fields import check_ghost_bit_support

    for m in range(2, 40):
        assert gf2_is_irreducible(all_one_poly(m)) == check_ghost_bit_support(m)


def test_find_irreducible_prefers_all_one():
    assert find_irreducible(4) == all_one_poly(4)
    assert find_irreducible(10) == all_one_poly(10)
    # degree 5 has no irreducible all-one polynomial; smallest is x^5 + x^2 + 1
    f5 = find_irreducible(5)
    assert f5 == 0b100101
    assert gf2_is_irreducible(f5)
    f8 = find_irreducible(8)
    assert gf2_degree(f8) == 8 and gf2_is_irreducible(f8)
