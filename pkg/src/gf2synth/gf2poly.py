"""Polynomial arithmetic over GF(2), bit-packed into Python ints.

Bit i of an int is the coefficient of x^i, so the integer 0b1011 is
x^3 + x + 1. Python ints are arbitrary precision, which makes them a natural
carrier for GF(2)[x]: addition is XOR and the divisions below are the usual
shift-and-subtract schoolbook loops.

These routines back the classical reference oracles; none of them touch the
circuit layer.
"""

from __future__ import annotations


def gf2_degree(a: int) -> int:
    """Degree of a, with deg(0) == -1."""
    return a.bit_length() - 1


def gf2_mul(a: int, b: int) -> int:
    """Carry-less product in GF(2)[x]."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def gf2_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b in GF(2)[x]."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = gf2_degree(b)
    q = 0
    while gf2_degree(a) >= db:
        shift = gf2_degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2_mod(a: int, b: int) -> int:
    return gf2_divmod(a, b)[1]


def gf2_mulmod(a: int, b: int, mod: int) -> int:
    return gf2_mod(gf2_mul(a, b), mod)


def gf2_powmod(a: int, e: int, mod: int) -> int:
    """a**e mod `mod` by square and multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    result = 1
    base = gf2_mod(a, mod)
    while e:
        if e & 1:
            result = gf2_mulmod(result, base, mod)
        base = gf2_mulmod(base, base, mod)
        e >>= 1
    return result


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b)."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q, r = gf2_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ gf2_mul(q, s1)
        t0, t1 = t1, t0 ^ gf2_mul(q, t1)
    return r0, s0, t0


def gf2_inv_mod(a: int, mod: int) -> int:
    """Multiplicative inverse of a modulo `mod`; a must be a unit."""
    a = gf2_mod(a, mod)
    g, s, _ = gf2_ext_gcd(a, mod)
    if g != 1:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return gf2_mod(s, mod)


def gf2_is_irreducible(f: int) -> bool:
    """Rabin's test: f of degree n is irreducible iff x^(2^n) == x mod f and
    gcd(x^(2^(n/q)) - x, f) == 1 for every prime divisor q of n."""
    n = gf2_degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if f & 1 == 0:  # divisible by x
        return False
    x = 0b10
    h = x
    for _ in range(n):
        h = gf2_mulmod(h, h, f)
    if h != gf2_mod(x, f):
        return False
    for q in _prime_divisors(n):
        h = x
        for _ in range(n // q):
            h = gf2_mulmod(h, h, f)
        if gf2_gcd(h ^ x, f) != 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def all_one_poly(m: int) -> int:
    """x^m + x^(m-1) + ... + x + 1 as a bit-packed int."""
    return (1 << (m + 1)) - 1


def find_irreducible(n: int) -> int:
    """Smallest (by integer value) irreducible polynomial of degree n.

    Preference order: the all-one polynomial when it is irreducible, otherwise
    the lexicographically smallest irreducible of degree n. The all-one
    polynomial of degree n is irreducible exactly when n+1 is prime with 2
    primitive mod n+1, which ties the reduction polynomial to the redundant
    representation whenever both exist.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    candidate = all_one_poly(n)
    if gf2_is_irreducible(candidate):
        return candidate
    for low in range(1, 1 << n, 2):  # constant term must be 1 for n >= 2
        f = (1 << n) | low
        if gf2_is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {n} found")  # unreachable
