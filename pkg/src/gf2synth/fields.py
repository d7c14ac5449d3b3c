"""Classical reference arithmetic for F_{2^m} in the supported representations.

Three element layouts appear throughout the package, all little-endian
(``coeffs[i]`` multiplies the i-th basis vector):

* ``PolyElement`` - m coefficients over the polynomial basis 1, x, ..., x^(m-1).
* ``GhostBitElement`` - m+1 coefficients in the redundant quotient ring
  F_2[x]/(x^(m+1) + 1). Available when m+1 is prime and 2 generates the
  multiplicative group mod m+1; then multiplication is a plain cyclic
  convolution and squaring permutes coefficients.
* ``GnbElement`` - m coefficients over a Gaussian normal basis of type t.
  Squaring is a cyclic shift and the identity is the all-ones vector.

Everything in this module is plain integer arithmetic (bit-packed vectors);
it serves as the ground truth the synthesized circuits are checked against
and never imports the circuit layer.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .errors import (
    ConstructionFailed,
    DegreeMismatch,
    DegreeTooSmall,
    InvalidParams,
    NoGnbFound,
    UnsupportedDegree,
)
from .gf2poly import (
    all_one_poly,
    find_irreducible,
    gf2_inv_mod,
    gf2_mulmod,
    gf2_powmod,
)

# ---------------------------------------------------------------------------
# small number theory helpers

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Trial division for the sizes that occur here; Miller-Rabin above 2^32."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < 1 << 32:
        d = 41
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    return _miller_rabin(n)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:  # deterministic far beyond any size used here
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in (Z/pZ)* for prime p."""
    a %= p
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    order = p - 1
    for q in _prime_factors(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


# ---------------------------------------------------------------------------
# bit vector conversions

def bits_to_int(bits) -> int:
    """Little-endian bit tuple to int (bit i of the result is bits[i])."""
    v = 0
    for i, b in enumerate(bits):
        if b:
            v |= 1 << i
    return v


def int_to_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(n))


def _rotl(v: int, s: int, n: int) -> int:
    """Cyclic left rotation within n bits: bit i of result is bit (i-s) of v."""
    s %= n
    if s == 0:
        return v
    mask = (1 << n) - 1
    return ((v << s) | (v >> (n - s))) & mask


def _rotr(v: int, s: int, n: int) -> int:
    """Cyclic right rotation within n bits: bit i of result is bit (i+s) of v."""
    return _rotl(v, n - (s % n), n)


# ---------------------------------------------------------------------------
# element containers


def _check_bits(coeffs, expected_len: int, what: str) -> tuple[int, ...]:
    coeffs = tuple(coeffs)
    if len(coeffs) != expected_len:
        raise ValueError(f"{what} needs {expected_len} coefficients, got {len(coeffs)}")
    for c in coeffs:
        if c not in (0, 1):
            raise ValueError(f"{what} coefficients must be 0 or 1, got {c!r}")
    return coeffs


@dataclass(frozen=True)
class PolyElement:
    """Element of F_{2^m} over the polynomial basis, m little-endian bits."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("field degree must be at least 2")
        object.__setattr__(self, "coeffs", _check_bits(self.coeffs, self.m, "PolyElement"))

    def to_int(self) -> int:
        return bits_to_int(self.coeffs)

    @classmethod
    def from_int(cls, m: int, v: int) -> "PolyElement":
        return cls(m, int_to_bits(v, m))


@dataclass(frozen=True)
class GhostBitElement:
    """Redundant m+1 bit representative in F_2[x]/(x^(m+1) + 1)."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("field degree must be at least 2")
        object.__setattr__(
            self, "coeffs", _check_bits(self.coeffs, self.m + 1, "GhostBitElement")
        )

    def to_int(self) -> int:
        return bits_to_int(self.coeffs)

    @classmethod
    def from_int(cls, m: int, v: int) -> "GhostBitElement":
        return cls(m, int_to_bits(v, m + 1))


@dataclass(frozen=True)
class GnbElement:
    """Coordinates over a Gaussian normal basis, m little-endian bits."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("field degree must be at least 2")
        object.__setattr__(self, "coeffs", _check_bits(self.coeffs, self.m, "GnbElement"))

    def to_int(self) -> int:
        return bits_to_int(self.coeffs)

    @classmethod
    def from_int(cls, m: int, v: int) -> "GnbElement":
        return cls(m, int_to_bits(v, m))


FieldElement = Union[GhostBitElement, GnbElement]


# ---------------------------------------------------------------------------
# ghost-bit representation


def check_ghost_bit_support(m: int) -> bool:
    """True iff m+1 is prime and 2 is primitive mod m+1.

    Exactly then x^(m+1) + 1 factors as (x + 1) * f with f the irreducible
    all-one polynomial of degree m, and the redundant representation below
    carries F_{2^m}.
    """
    if m < 2:
        return False
    q = m + 1
    return is_prime(q) and multiplicative_order(2, q) == m


def _require_ghost(m: int) -> None:
    if not check_ghost_bit_support(m):
        raise UnsupportedDegree(
            f"m={m} has no ghost-bit representation (need m+1 prime with 2 primitive)"
        )


def ghost_square_perm(m: int) -> tuple[int, ...]:
    """Squaring permutation: coefficient i moves to position 2i mod (m+1)."""
    _require_ghost(m)
    n = m + 1
    return tuple(2 * i % n for i in range(n))


def phi_embed(a: PolyElement) -> GhostBitElement:
    """Embed a polynomial-basis element by appending a zero ghost coefficient."""
    _require_ghost(a.m)
    return GhostBitElement(a.m, a.coeffs + (0,))


def phi_retract(a: GhostBitElement) -> PolyElement:
    """Reduce mod the all-one polynomial: xor the ghost bit into every other bit.

    Both representatives of a field element (a vector and its complement)
    retract to the same polynomial-basis element.
    """
    _require_ghost(a.m)
    top = a.coeffs[a.m]
    return PolyElement(a.m, tuple(c ^ top for c in a.coeffs[: a.m]))


def gbb_zero(m: int) -> GhostBitElement:
    _require_ghost(m)
    return GhostBitElement(m, (0,) * (m + 1))


def gbb_identity(m: int) -> GhostBitElement:
    _require_ghost(m)
    return GhostBitElement(m, (1,) + (0,) * m)


def gbb_square(a: GhostBitElement) -> GhostBitElement:
    """Square by permuting coefficients (x^i -> x^(2i) in the quotient ring)."""
    n = a.m + 1
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[2 * i % n] = c
    return GhostBitElement(a.m, tuple(out))


def gbb_frobenius(a: GhostBitElement, r: int) -> GhostBitElement:
    """a^(2^r) by r applications of the squaring permutation."""
    if r < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    n = a.m + 1
    p2r = pow(2, r, n)
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i * p2r % n] = c
    return GhostBitElement(a.m, tuple(out))


def gbb_mult(a: GhostBitElement, b: GhostBitElement) -> GhostBitElement:
    """Cyclic convolution of the two coefficient vectors mod x^(m+1) + 1."""
    if a.m != b.m:
        raise DegreeMismatch(f"degree mismatch: {a.m} vs {b.m}")
    n = a.m + 1
    av = a.to_int()
    bv = b.to_int()
    acc = 0
    j = 0
    while av:
        if av & 1:
            acc ^= _rotl(bv, j, n)
        av >>= 1
        j += 1
    return GhostBitElement.from_int(a.m, acc)


def gbb_add(a: GhostBitElement, b: GhostBitElement) -> GhostBitElement:
    if a.m != b.m:
        raise DegreeMismatch(f"degree mismatch: {a.m} vs {b.m}")
    return GhostBitElement(a.m, tuple(x ^ y for x, y in zip(a.coeffs, b.coeffs)))


# ---------------------------------------------------------------------------
# Gaussian normal basis


@dataclass(frozen=True)
class GnbParams:
    """Parameters of a type-t Gaussian normal basis for F_{2^m}.

    p == t*m + 1 is prime, u has order t mod p, and ``f_table`` is the index
    table F(1..p-1): F(2^i * u^j mod p) == i for 0 <= i < m, 0 <= j < t.
    The constructor performs no validation on purpose, so that deliberately
    corrupted tables can be fed to ``gnb_verify_isomorphism`` and reported
    false; use the factories ``make_gnb_params`` / ``find_gnb_type`` to obtain
    checked instances.
    """

    m: int
    t: int
    p: int
    u: int
    f_table: tuple[int, ...]

    def F(self, k: int) -> int:
        """The index function on 1 <= k <= p-1."""
        if not 1 <= k <= self.p - 1:
            raise ValueError(f"F is defined on 1..{self.p - 1}, got {k}")
        return self.f_table[k - 1]


def _gnb_conditions_ok(m: int, t: int) -> bool:
    p = t * m + 1
    if not is_prime(p):
        return False
    return gcd((p - 1) // multiplicative_order(2, p), m) == 1


def _build_f_table(m: int, t: int, p: int, u: int) -> tuple[int, ...]:
    table: list[Optional[int]] = [None] * (p - 1)
    for i in range(m):
        pi = pow(2, i, p)
        for j in range(t):
            idx = pi * pow(u, j, p) % p
            if table[idx - 1] is not None:
                raise InvalidParams(
                    f"index table collision at residue {idx} (m={m}, t={t}, u={u})"
                )
            table[idx - 1] = i
    if any(v is None for v in table):  # cannot happen once no slot collides
        raise InvalidParams(f"index table does not cover all residues (m={m}, t={t})")
    return tuple(table)  # type: ignore[arg-type]


def make_gnb_params(m: int, t: int) -> GnbParams:
    """Checked construction of the type-t normal basis parameters for m.

    Picks the smallest u of order exactly t mod p = t*m + 1.
    """
    if m < 2:
        raise InvalidParams("field degree must be at least 2")
    if t < 1:
        raise InvalidParams("type must be at least 1")
    p = t * m + 1
    if not is_prime(p):
        raise InvalidParams(f"p = t*m + 1 = {p} is not prime")
    if gcd((p - 1) // multiplicative_order(2, p), m) != 1:
        raise InvalidParams(
            f"index of the subgroup generated by 2 mod {p} is not coprime to m={m}"
        )
    u = next(c for c in range(1, p) if multiplicative_order(c, p) == t)
    return GnbParams(m=m, t=t, p=p, u=u, f_table=_build_f_table(m, t, p, u))


def validate_gnb_params(params: GnbParams) -> None:
    """Raise InvalidParams unless params satisfy all defining conditions."""
    m, t, p, u = params.m, params.t, params.p, params.u
    if m < 2:
        raise InvalidParams("field degree must be at least 2")
    if t < 1:
        raise InvalidParams("type must be at least 1")
    if p != t * m + 1:
        raise InvalidParams(f"p={p} is not t*m + 1 = {t * m + 1}")
    if not is_prime(p):
        raise InvalidParams(f"p={p} is not prime")
    if gcd((p - 1) // multiplicative_order(2, p), m) != 1:
        raise InvalidParams(
            f"index of the subgroup generated by 2 mod {p} is not coprime to m={m}"
        )
    if not 1 <= u < p or multiplicative_order(u, p) != t:
        raise InvalidParams(f"u={u} does not have order {t} mod {p}")
    if len(params.f_table) != p - 1:
        raise InvalidParams("index table length must be p - 1")
    if params.f_table != _build_f_table(m, t, p, u):
        raise InvalidParams("index table does not match its defining construction")


def find_gnb_type(m: int, t_bound: int = 30) -> GnbParams:
    """Smallest-type Gaussian normal basis for m, searching t = 1..t_bound.

    Degrees divisible by 8 never admit one (2 would have to generate a group
    of even index), so the search is guaranteed to fail there.
    """
    if m < 2:
        raise UnsupportedDegree("field degree must be at least 2")
    for t in range(1, t_bound + 1):
        if _gnb_conditions_ok(m, t):
            return make_gnb_params(m, t)
    raise NoGnbFound(f"no Gaussian normal basis of type <= {t_bound} exists for m={m}")


def gnb_zero(m: int) -> GnbElement:
    return GnbElement(m, (0,) * m)


def gnb_identity(m: int) -> GnbElement:
    """The multiplicative identity has all-ones coordinates over a normal basis."""
    return GnbElement(m, (1,) * m)


def gnb_square(a: GnbElement) -> GnbElement:
    """Squaring is a cyclic right shift of the coordinates."""
    return GnbElement(a.m, tuple(a.coeffs[(i - 1) % a.m] for i in range(a.m)))


def gnb_frobenius(a: GnbElement, r: int) -> GnbElement:
    """a^(2^r): shift the coordinates right by r positions."""
    if r < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    return GnbElement(a.m, tuple(a.coeffs[(i - r) % a.m] for i in range(a.m)))


def gnb_add(a: GnbElement, b: GnbElement) -> GnbElement:
    if a.m != b.m:
        raise DegreeMismatch(f"degree mismatch: {a.m} vs {b.m}")
    return GnbElement(a.m, tuple(x ^ y for x, y in zip(a.coeffs, b.coeffs)))


def gnb_mult(params: GnbParams, a: GnbElement, b: GnbElement) -> GnbElement:
    """Sum-of-rotations product formula driven by the index table.

    Coordinate i of the product collects a_(F(k+1)+i) * b_(F(p-k)+i) over
    k = 1..tm-1, plus for odd t the wrap terms pairing offsets k-1 and
    k-1+m/2 for k = 1..m/2 (odd type forces m even). Index arithmetic is
    mod m, so each term is an AND of two rotations.
    """
    m, t, p = params.m, params.t, params.p
    if a.m != m or b.m != m:
        raise DegreeMismatch(f"elements of degree {a.m}/{b.m} vs params for {m}")
    ft = params.f_table
    av = a.to_int()
    bv = b.to_int()
    acc = 0
    for k in range(1, t * m):
        acc ^= _rotr(av, ft[k], m) & _rotr(bv, ft[p - k - 1], m)
    if t % 2:
        half = m // 2
        for k in range(1, half + 1):
            acc ^= _rotr(av, k - 1, m) & _rotr(bv, k - 1 + half, m)
            acc ^= _rotr(av, k - 1 + half, m) & _rotr(bv, k - 1, m)
    return GnbElement.from_int(m, acc)


# ---------------------------------------------------------------------------
# inversion plan (addition-chain exponentiation to alpha^(2^m - 2))


@dataclass(frozen=True)
class LadderStep:
    """One doubling: target holds beta_(2r) = beta_r * beta_r^(2^r).

    ``source_reg`` holds beta_r = alpha^(2^r - 1); the operand is the same
    register read through r squarings.
    """

    source_reg: int
    target_reg: int
    r: int


@dataclass(frozen=True)
class CombineStep:
    """One addition-chain merge: target = acc * operand^(2^operand_exponent)."""

    acc_reg: int
    operand_reg: int
    operand_exponent: int
    target_reg: int


@dataclass(frozen=True)
class InverterPlan:
    """Multiplication schedule computing alpha^(2^m - 2) = alpha^(-1).

    ``k_list`` holds the exponents of the set bits of m-1 in decreasing
    order. The ladder doubles beta_1 = alpha up to beta_(2^k1); the combine
    steps fold in beta_(2^k) for the remaining set bits, reading each operand
    through a power-of-two Frobenius shift. A single final squaring (free in
    both representations) turns alpha^(2^(m-1) - 1) into the inverse; circuit
    synthesis folds it into the last multiplier's write permutation.

    Register indices: 0 is the input, 1..k1 the ladder targets, then one
    register per combine step. The overall product lands in ``output_reg``.
    """

    m: int
    k_list: tuple[int, ...]
    ladder: tuple[LadderStep, ...]
    combine: tuple[CombineStep, ...]

    @property
    def floor_log(self) -> int:
        return self.k_list[0]

    @property
    def hamming_weight(self) -> int:
        return len(self.k_list)

    @property
    def multiplications(self) -> int:
        return len(self.ladder) + len(self.combine)

    @property
    def register_count(self) -> int:
        return 1 + len(self.ladder) + len(self.combine)

    @property
    def output_reg(self) -> int:
        return self.register_count - 1


def addition_chain(m: int) -> InverterPlan:
    """Plan for inverting in F_{2^m}: floor(log2(m-1)) doublings plus
    HW(m-1)-1 merges, one multiplication each."""
    if m < 2:
        raise DegreeTooSmall("inversion plans need m >= 2")
    e = m - 1
    k_list = tuple(k for k in range(e.bit_length() - 1, -1, -1) if (e >> k) & 1)
    k1 = k_list[0]
    ladder = tuple(
        LadderStep(source_reg=j, target_reg=j + 1, r=1 << j) for j in range(k1)
    )
    combine = []
    partial = 1 << k1
    for s, k in enumerate(k_list[1:], start=1):
        combine.append(
            CombineStep(
                acc_reg=k1 + s - 1,
                operand_reg=k,
                operand_exponent=partial,
                target_reg=k1 + s,
            )
        )
        partial += 1 << k
    assert partial == e
    return InverterPlan(m=m, k_list=k_list, ladder=ladder, combine=tuple(combine))


# ---------------------------------------------------------------------------
# field specification and generic dispatch


class Representation(enum.Enum):
    GHOST_BIT = "gbb"
    GNB = "gnb"


@dataclass(frozen=True)
class FieldSpec:
    """A field degree together with the chosen circuit representation."""

    m: int
    representation: Representation
    gnb_params: Optional[GnbParams] = None

    def __post_init__(self):
        if self.m < 2:
            raise UnsupportedDegree("field degree must be at least 2")
        if self.representation is Representation.GHOST_BIT:
            _require_ghost(self.m)
            if self.gnb_params is not None:
                raise ValueError("ghost-bit spec must not carry normal-basis params")
        else:
            if self.gnb_params is None:
                raise InvalidParams("normal-basis spec needs GnbParams")
            if self.gnb_params.m != self.m:
                raise InvalidParams(
                    f"params are for m={self.gnb_params.m}, spec says m={self.m}"
                )
            validate_gnb_params(self.gnb_params)

    @classmethod
    def ghost_bit(cls, m: int) -> "FieldSpec":
        return cls(m=m, representation=Representation.GHOST_BIT)

    @classmethod
    def gnb(cls, m: int, t: Optional[int] = None, t_bound: int = 30) -> "FieldSpec":
        params = make_gnb_params(m, t) if t is not None else find_gnb_type(m, t_bound)
        return cls(m=m, representation=Representation.GNB, gnb_params=params)

    @property
    def width(self) -> int:
        """Wires per register: m+1 ghost-bit, m normal basis."""
        if self.representation is Representation.GHOST_BIT:
            return self.m + 1
        return self.m

    @property
    def ghost_square_perm(self) -> Optional[tuple[int, ...]]:
        if self.representation is Representation.GHOST_BIT:
            return ghost_square_perm(self.m)
        return None


def field_zero(spec: FieldSpec) -> FieldElement:
    if spec.representation is Representation.GHOST_BIT:
        return gbb_zero(spec.m)
    return gnb_zero(spec.m)


def field_identity(spec: FieldSpec) -> FieldElement:
    if spec.representation is Representation.GHOST_BIT:
        return gbb_identity(spec.m)
    return gnb_identity(spec.m)


def element_from_int(spec: FieldSpec, v: int) -> FieldElement:
    if spec.representation is Representation.GHOST_BIT:
        return GhostBitElement.from_int(spec.m, v)
    return GnbElement.from_int(spec.m, v)


def field_mult(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    if spec.representation is Representation.GHOST_BIT:
        return gbb_mult(a, b)
    return gnb_mult(spec.gnb_params, a, b)


def field_square(spec: FieldSpec, a: FieldElement) -> FieldElement:
    if spec.representation is Representation.GHOST_BIT:
        return gbb_square(a)
    return gnb_square(a)


def field_frobenius(spec: FieldSpec, a: FieldElement, r: int) -> FieldElement:
    if spec.representation is Representation.GHOST_BIT:
        return gbb_frobenius(a, r)
    return gnb_frobenius(a, r)


def itoh_tsujii_inverse(spec: FieldSpec, a: FieldElement) -> FieldElement:
    """Run the inversion plan on classical values; zero maps to zero.

    This follows the multiplication schedule register by register, exactly
    like the synthesized circuit does, and serves as the reference for the
    plan itself (independent tests check it against extended-Euclid and
    product-equals-identity oracles).
    """
    expected = GhostBitElement if spec.representation is Representation.GHOST_BIT else GnbElement
    if not isinstance(a, expected):
        raise TypeError(f"expected {expected.__name__} for this spec")
    if a.m != spec.m:
        raise DegreeMismatch(f"element degree {a.m} vs spec degree {spec.m}")
    plan = addition_chain(spec.m)
    regs: list[Optional[FieldElement]] = [None] * plan.register_count
    regs[0] = a
    for st in plan.ladder:
        x = regs[st.source_reg]
        regs[st.target_reg] = field_mult(spec, x, field_frobenius(spec, x, st.r))
    for st in plan.combine:
        regs[st.target_reg] = field_mult(
            spec,
            regs[st.acc_reg],
            field_frobenius(spec, regs[st.operand_reg], st.operand_exponent),
        )
    return field_square(spec, regs[plan.output_reg])


# ---------------------------------------------------------------------------
# polynomial-basis ground truth for the ghost-bit field


def ghost_field_modulus(m: int) -> int:
    """The all-one irreducible polynomial that phi_retract reduces by."""
    _require_ghost(m)
    return all_one_poly(m)


def poly_mult(a: PolyElement, b: PolyElement) -> PolyElement:
    if a.m != b.m:
        raise DegreeMismatch(f"degree mismatch: {a.m} vs {b.m}")
    f = ghost_field_modulus(a.m)
    return PolyElement.from_int(a.m, gf2_mulmod(a.to_int(), b.to_int(), f))


def poly_inverse(a: PolyElement) -> PolyElement:
    """Inverse mod the all-one polynomial via extended Euclid."""
    f = ghost_field_modulus(a.m)
    return PolyElement.from_int(a.m, gf2_inv_mod(a.to_int(), f))


# ---------------------------------------------------------------------------
# certification of a normal-basis parameter set


def gnb_verify_isomorphism(
    params: GnbParams,
    *,
    max_ext_degree: int = 24,
    trials: int = 512,
    seed: int = 0xB10F,
) -> bool:
    """Certify that ``gnb_mult`` realizes F_{2^m} multiplication.

    Builds the basis explicitly inside F_2[x]/(g) with g irreducible of
    degree t*m: picks an element of order p, sums the t conjugates indexed
    by powers of u into a Gauss period, and checks that its m squarings are
    linearly independent and that coordinate-wise ``gnb_mult`` matches field
    multiplication (all element pairs when 4^m <= 2^16, otherwise structured
    plus seeded random pairs). Squarings and the all-ones identity are
    checked as well.

    Above ``max_ext_degree`` the explicit construction is skipped: the index
    table is recomputed from (m, t, p, u) and algebraic properties of the
    product (identity, commutativity, Frobenius compatibility, associativity
    samples) are tested instead.

    Returns False on any mismatch (e.g. a corrupted index table). Raises
    ConstructionFailed only if the ambient field cannot be built at all
    (p not prime or inconsistent with t*m + 1).
    """
    m, t, p, u = params.m, params.t, params.p, params.u
    if m < 2 or t < 1 or p != t * m + 1 or not is_prime(p):
        raise ConstructionFailed(
            f"cannot build an ambient field for m={m}, t={t}, p={p}"
        )
    if not 1 <= u < p:
        raise ConstructionFailed(f"u={u} is not a unit mod {p}")
    if len(params.f_table) != p - 1:
        raise ConstructionFailed("index table length must be p - 1")

    if t * m > max_ext_degree:
        return _gnb_verify_by_properties(params, trials=trials, seed=seed)

    n = t * m
    g = find_irreducible(n)
    group_order = (1 << n) - 1
    if group_order % p != 0:
        # p | 2^(tm) - 1 whenever ord_p(2) divides tm; a failure here means
        # the parameters do not describe a subgroup of the right size.
        raise ConstructionFailed(f"{p} does not divide 2^{n} - 1")

    cofactor = group_order // p
    alpha = 0
    for c in range(2, 2 + 64):
        cand = gf2_powmod(c, cofactor, g)
        if cand != 1:
            alpha = cand
            break
    if alpha == 0:
        raise ConstructionFailed("found no element of the required order")

    # Gauss period: sum of the conjugates of alpha over the order-t subgroup.
    eta = 0
    for j in range(t):
        eta ^= gf2_powmod(alpha, pow(u, j, p), g)

    cols = []
    v = eta
    for _ in range(m):
        cols.append(v)
        v = gf2_mulmod(v, v, g)

    # Row-reduce the basis columns once; each pivot remembers which original
    # columns combine into it so membership tests also yield coordinates.
    pivots: list[tuple[int, int, int]] = []  # (pivot bit, reduced vec, mask)
    for idx, col in enumerate(cols):
        vec, mask = col, 1 << idx
        for pb, rv, rm in pivots:
            if (vec >> pb) & 1:
                vec ^= rv
                mask ^= rm
        if vec == 0:
            return False  # squarings are linearly dependent: not a basis
        pivots.append((vec.bit_length() - 1, vec, mask))

    def to_coords(z: int) -> Optional[int]:
        mask = 0
        for pb, rv, rm in pivots:
            if (z >> pb) & 1:
                z ^= rv
                mask ^= rm
        return mask if z == 0 else None

    def lift(coords: int) -> int:
        z = 0
        i = 0
        while coords:
            if coords & 1:
                z ^= cols[i]
            coords >>= 1
            i += 1
        return z

    if to_coords(1) != (1 << m) - 1:
        return False  # identity must sit at the all-ones coordinate vector

    def agree(ac: int, bc: int) -> bool:
        prod = gf2_mulmod(lift(ac), lift(bc), g)
        got = gnb_mult(params, GnbElement.from_int(m, ac), GnbElement.from_int(m, bc))
        return to_coords(prod) == got.to_int()

    size = 1 << m
    if size * size <= 1 << 16:
        pairs = ((ac, bc) for ac in range(size) for bc in range(size))
    else:
        rng = random.Random(seed)
        structured = [(1, rng.getrandbits(m) or 1) for _ in range(8)]
        structured += [((1 << m) - 1, rng.getrandbits(m)) for _ in range(8)]
        sampled = [
            (rng.getrandbits(m), rng.getrandbits(m)) for _ in range(trials)
        ]
        pairs = iter(structured + sampled)
    for ac, bc in pairs:
        if not agree(ac, bc):
            return False

    for ac in range(size) if size <= 1 << 12 else (random.Random(seed ^ 1).getrandbits(m) for _ in range(64)):
        sq = gf2_mulmod(lift(ac), lift(ac), g)
        if to_coords(sq) != gnb_square(GnbElement.from_int(m, ac)).to_int():
            return False
    return True


def _gnb_verify_by_properties(params: GnbParams, *, trials: int, seed: int) -> bool:
    """Fallback certification when t*m exceeds the construction cap."""
    m, t, p, u = params.m, params.t, params.p, params.u
    if multiplicative_order(u, p) != t:
        return False
    if gcd((p - 1) // multiplicative_order(2, p), m) != 1:
        return False
    try:
        if params.f_table != _build_f_table(m, t, p, u):
            return False
    except InvalidParams:
        return False

    rng = random.Random(seed)
    one = gnb_identity(m)
    samples = [GnbElement.from_int(m, rng.getrandbits(m)) for _ in range(max(8, trials // 16))]
    for a in samples:
        if gnb_mult(params, one, a) != a:
            return False
        b = GnbElement.from_int(m, rng.getrandbits(m))
        if gnb_mult(params, a, b) != gnb_mult(params, b, a):
            return False
        lhs = gnb_square(gnb_mult(params, a, b))
        rhs = gnb_mult(params, gnb_square(a), gnb_square(b))
        if lhs != rhs:
            return False
    for _ in range(4):
        a = GnbElement.from_int(m, rng.getrandbits(m))
        b = GnbElement.from_int(m, rng.getrandbits(m))
        c = GnbElement.from_int(m, rng.getrandbits(m))
        if gnb_mult(params, gnb_mult(params, a, b), c) != gnb_mult(
            params, a, gnb_mult(params, b, c)
        ):
            return False
    return True
