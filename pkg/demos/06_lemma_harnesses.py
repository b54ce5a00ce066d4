"""Seeded lemma harnesses: duality identities, covering, confinement."""

from char2spec import GF4
from char2spec.harnesses import run_lemma
from char2spec.structure import diagonal_zero_witness
from char2spec.spectra import profile

for name, trials in [("trace-ortho-1", 100), ("trace-ortho-2", 100),
                     ("transrank", 50), ("covering", 100), ("vanishing", 100),
                     ("confinement-first", 40), ("lastblock", 1)]:
    v = run_lemma(GF4, name, trials=trials, seed=42)
    extra = {k: val for k, val in v.detail.items() if k != "witnesses"}
    print(f"{name:<18} {v.outcome:<6} {extra}")

print("\nZero-diagonal spaces are never 2-spec (n >= 3):")
for n in (3, 4, 5):
    w = diagonal_zero_witness(GF4, n)
    p = profile(GF4, w)
    print(f"  n={n}: witness with {p.distinct_in_f} distinct eigenvalues in F, "
          f"char poly coefficients {list(p.char_poly)}")
