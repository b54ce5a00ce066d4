"""Characteristic polynomials two ways, companions, and spectrum profiles."""

from char2spec import GF4, profile
from char2spec.matrix import (char_poly_berkowitz, char_poly_hessenberg,
                              companion, from_rows, min_poly)
from char2spec.upoly import poly, poly_str

m = from_rows([[2, 1, 0], [1, 2, 1], [0, 3, 1]])
print("M =", m)
print("  char poly (Hessenberg):", poly_str(char_poly_hessenberg(GF4, m)))
print("  char poly (Berkowitz): ", poly_str(char_poly_berkowitz(GF4, m)))
print("  min poly:              ", poly_str(min_poly(GF4, m)))

r = poly([1, 2, 0, 1])  # t^3 + w t + 1
c = companion(r)
print(f"\ncompanion({poly_str(r)}) =", c)
print("  its char poly:", poly_str(char_poly_hessenberg(GF4, c)))

p = profile(GF4, m)
print("\nSpectrum profile of M:")
print(f"  distinct eigenvalues in F:        {p.distinct_in_f}")
print(f"  nonzero in F:                     {p.distinct_nonzero_in_f}")
print(f"  distinct in the closure:          {p.distinct_in_closure}")
print(f"  nonzero in the closure:           {p.distinct_nonzero_in_closure}")

# trace-zero 2x2 matrices have a single repeated eigenvalue in char 2
t = from_rows([[1, 2], [3, 1]])
print("\ntrace-zero example", t, "->", profile(GF4, t).to_json())
