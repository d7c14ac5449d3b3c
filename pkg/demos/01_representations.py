"""Walk through both field representations on small degrees."""
from gf2synth import (
    FieldSpec,
    GhostBitElement,
    PolyElement,
    find_gnb_type,
    gbb_mult,
    gbb_square,
    gnb_identity,
    gnb_mult,
    gnb_square,
    make_gnb_params,
    phi_embed,
    phi_retract,
)

# --- ghost-bit representation of F_16 --------------------------------------
# One redundant coefficient turns squaring into a pure wire permutation.

a = phi_embed(PolyElement.from_int(4, 0b0101))  # x^2 + 1
print("embedded   ", a.coeffs)

sq = gbb_square(a)
print("squared    ", sq.coeffs)
assert sq.coeffs == (1, 0, 0, 0, 1)

back = phi_retract(sq)
print("retracted  ", back.coeffs)  # x^3 + x^2 + x
assert back.to_int() == 0b1110

# the vector and its complement name the same element
flip = GhostBitElement(4, tuple(1 - c for c in sq.coeffs))
assert phi_retract(flip) == back

# multiplication is a cyclic convolution of the 5-bit vectors
b = phi_embed(PolyElement.from_int(4, 0b0011))
print("product    ", phi_retract(gbb_mult(a, b)).coeffs)

# --- Gaussian normal basis for F_32 ----------------------------------------
# Coordinates over conjugates alpha^(2^i); squaring is a cyclic shift.

params = make_gnb_params(5, 2)
print("\nnormal basis m=5: type", params.t, "p =", params.p, "u =", params.u)
print("index table", params.f_table)

one = gnb_identity(5)
print("identity   ", one.coeffs)  # all ones over a normal basis
assert gnb_square(one) == one

x = gnb_mult(params, one, one)
assert x == one

# every degree not divisible by 8 has some type; a few lookups:
for m in (7, 10, 163, 233):
    print(f"smallest type for m={m}:", find_gnb_type(m).t)

# FieldSpec bundles degree + representation for the synthesis entry points
spec = FieldSpec.gnb(5)
print("\nspec:", spec.m, spec.representation.value, "width", spec.width)
