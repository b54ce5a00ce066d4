"""Tour of exact GF(2^k) arithmetic and polynomial root counting.

Field elements are plain ints: the bit-encoding of a polynomial over
GF(2).  In GF(4) with modulus x^2 + x + 1 the codes are 0, 1, 2 = w,
3 = w + 1.
"""

from char2spec import GF4, GF16, field_spec
from char2spec.upoly import (count_roots_in_closure, count_roots_in_field,
                             poly, poly_gcd, poly_mul, poly_str, radical)

w = 2
print("GF(4) sample products:")
print(f"  w * w       = {GF4.mul(w, w)}   (w + 1)")
print(f"  w^-1        = {GF4.inv(w)}")
print(f"  sqrt(w)     = {GF4.sqrt(w)}   since (w+1)^2 = w")
print(f"  1 + 1       = {1 ^ 1}   (characteristic 2)")

print("\nEvery element has a unique square root (Frobenius is bijective):")
print(" ", {a: GF4.sqrt(a) for a in GF4.elements()})

f = poly([2, 0, 1])  # t^2 + w
print(f"\nf = {poly_str(f)}")
print(f"  radical(f)           = {poly_str(radical(GF4, f))}   (f is a square)")
print(f"  distinct roots in F  = {count_roots_in_field(GF4, f)}")
print(f"  distinct in closure  = {count_roots_in_closure(GF4, f)}")

g = poly_mul(GF4, poly([0, 1]), poly_mul(GF4, poly([1, 1]), poly([2, 1])))
print(f"\ng = t(t+1)(t+w) = {poly_str(g)}")
print(f"  roots in F = {count_roots_in_field(GF4, g)}, gcd(f, g) = "
      f"{poly_str(poly_gcd(GF4, f, g))}")

big = field_spec("gf2^12")
a = 0b101010101010
print(f"\nLarger fields use carry-less reduction: in gf2^12, "
      f"{a} * {a}^-1 = {big.mul(a, big.inv(a))}")
print(f"GF(16) default modulus bit-code: {GF16.modulus} (x^4 + x + 1)")
