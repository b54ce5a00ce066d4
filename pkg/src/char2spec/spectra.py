"""Bounded-spectrum predicates for matrices and matrix subspaces.

The four properties track how many distinct eigenvalues an element may
have: in the ground field or in its algebraic closure, counting or
discarding the eigenvalue 0.  All counts come from the characteristic
polynomial; the minimal polynomial has the same root set, which is
asserted against :func:`matrix.min_poly` in the tests.

Space-level verification enumerates every element when q^dim fits the
budget and falls back to seeded counter-based sampling otherwise.  The
verdict records the mode, and a failure always carries the witness
matrix that is smallest in enumeration (or sample-index) order; the
witness is re-verified through the scalar path before being reported.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .gf import FieldSpec
from .matrix import Mat, char_poly
from .subspace import MatSubspace, index_chunks
from .upoly import (Poly, count_nonzero_roots_in_closure, count_nonzero_roots_in_field,
                    count_roots_in_closure, count_roots_in_field, poly_str)
from . import _bulk

CHUNK = 1 << 16


@dataclass(frozen=True)
class SpectrumProfile:
    char_poly: Poly
    distinct_in_f: int
    distinct_nonzero_in_f: int
    distinct_in_closure: int
    distinct_nonzero_in_closure: int

    def to_json(self) -> dict:
        return {"char_poly": poly_str(self.char_poly),
                "distinct_in_f": self.distinct_in_f,
                "distinct_nonzero_in_f": self.distinct_nonzero_in_f,
                "distinct_in_closure": self.distinct_in_closure,
                "distinct_nonzero_in_closure": self.distinct_nonzero_in_closure}


def profile(fs: FieldSpec, m: Mat) -> SpectrumProfile:
    f = char_poly(fs, m)
    return SpectrumProfile(
        char_poly=f,
        distinct_in_f=count_roots_in_field(fs, f),
        distinct_nonzero_in_f=count_nonzero_roots_in_field(fs, f),
        distinct_in_closure=count_roots_in_closure(fs, f),
        distinct_nonzero_in_closure=count_nonzero_roots_in_closure(fs, f),
    )


@dataclass(frozen=True)
class SpecPredicate:
    """k-spec / kbar-spec / k*-spec / kbar*-spec, encoded by where the roots
    are counted and whether 0 is discarded."""
    kind: str            # "in_field" | "in_closure"
    exclude_zero: bool
    k: int

    @property
    def name(self) -> str:
        bar = "bar" if self.kind == "in_closure" else ""
        star = "*" if self.exclude_zero else ""
        return f"{self.k}{bar}{star}-spec"

    def count(self, prof: SpectrumProfile) -> int:
        if self.kind == "in_field":
            return prof.distinct_nonzero_in_f if self.exclude_zero else prof.distinct_in_f
        return prof.distinct_nonzero_in_closure if self.exclude_zero else prof.distinct_in_closure


def parse_predicate(text: str, k: int | None = None) -> SpecPredicate:
    """Parse '1-spec', '2bar-spec', '0bar*-spec', '1*-spec' (and the same
    without the '-spec' suffix)."""
    t = text.strip().lower()
    if t.endswith("-spec"):
        t = t[:-5]
    star = t.endswith("*")
    if star:
        t = t[:-1]
    bar = t.endswith("bar")
    if bar:
        t = t[:-3]
    kk = int(t) if t else k
    if kk is None:
        raise ValueError(f"predicate {text!r} has no bound k")
    return SpecPredicate("in_closure" if bar else "in_field", star, kk)


def check_element(fs: FieldSpec, m: Mat, pred: SpecPredicate) -> bool:
    return pred.count(profile(fs, m)) <= pred.k


def is_even_poly(f: Poly) -> bool:
    """True iff every odd-degree coefficient vanishes."""
    return all(c == 0 for c in f[1::2])


@dataclass
class SpaceVerdict:
    predicate: str
    label: str
    mode: str              # "exhaustive" | "sampled"
    checked: int
    seed: int | None
    outcome: str           # "holds" | "fails"
    witness: Mat | None = None
    witness_profile: SpectrumProfile | None = None
    witness_index: int | None = None

    @property
    def holds(self) -> bool:
        return self.outcome == "holds"

    def to_json(self) -> dict:
        out = {"predicate": self.predicate, "label": self.label, "mode": self.mode,
               "checked": self.checked, "seed": self.seed, "outcome": self.outcome}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
            out["witness_profile"] = self.witness_profile.to_json()
            out["witness_index"] = self.witness_index
        return out


def _scan_space(fs: FieldSpec, s: MatSubspace, fail_batch, fail_scalar,
                budget: int, samples: int, seed: int, workers: int):
    """Shared scan plumbing.  Returns (mode, checked, used_seed, min_fail_index).

    fail_batch(mats [N, n, n]) -> bool array, or None to force the scalar
    path; fail_scalar(Mat) -> bool.  The scan is exhaustive when
    q^dim <= budget, else `samples` seeded counter-based draws; the
    minimal failing index is independent of the worker partitioning.
    """
    n, _ = s.shape
    d = s.dim
    total = fs.q ** d
    exhaustive = total <= budget
    count = total if exhaustive else samples
    used_seed = None if exhaustive else seed
    basis = tuple(s.space.basis)

    use_bulk = fail_batch is not None and _bulk.supports(fs)

    def run_range(lo: int, hi: int) -> int | None:
        best = None
        if use_bulk:
            import numpy as np
            for clo in range(lo, hi, CHUNK):
                chi = min(clo + CHUNK, hi)
                if exhaustive:
                    coords = _bulk.exhaustive_coords(fs.q, d, clo, chi)
                else:
                    coords = _bulk.sample_coords(fs.q, d, seed, clo, chi)
                if d:
                    ents = _bulk.elements_from_coords(fs, basis, coords)
                else:
                    ents = np.zeros((chi - clo, n * n), dtype=np.uint8)
                bad = fail_batch(ents.reshape(-1, n, n))
                hits = np.flatnonzero(bad)
                if hits.size:
                    best = clo + int(hits[0])
                    break
            return best
        for i in range(lo, hi):
            m = _element_for_index(fs, s, i, exhaustive, seed)
            if fail_scalar(m):
                return i
        return None

    chunks = index_chunks(count, workers)
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: run_range(*c), chunks))
    else:
        results = [run_range(*c) for c in chunks]
    fails = [r for r in results if r is not None]
    return ("exhaustive" if exhaustive else "sampled", count, used_seed,
            min(fails) if fails else None)


def _element_for_index(fs: FieldSpec, s: MatSubspace, index: int,
                       exhaustive: bool, seed: int) -> Mat:
    if exhaustive:
        return s.element_at(index)
    coords = _bulk.sample_coords(fs.q, s.dim, seed, index, index + 1)[0]
    mul = fs.mul
    n, m = s.shape
    out = [0] * (n * m)
    for c, row in zip(coords, s.space.basis):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] ^= mul(int(c), x)
    return Mat(n, m, out)


def check_space(fs: FieldSpec, s: MatSubspace, pred: SpecPredicate,
                budget: int = 1 << 24, samples: int = 10 ** 6, seed: int = 0,
                workers: int = 1, label: str = "") -> SpaceVerdict:
    """Verify the predicate on every (or a seeded sample of) element(s)."""
    n, m = s.shape
    if n != m:
        raise ValueError("spectrum predicates need square matrices")

    def fail_batch(mats):
        polys = _bulk.batch_charpoly(fs, mats)
        counts = _bulk.root_counts(fs, polys, pred.kind, pred.exclude_zero)
        return counts > pred.k

    def fail_scalar(mat: Mat) -> bool:
        return not check_element(fs, mat, pred)

    mode, checked, used_seed, bad = _scan_space(
        fs, s, fail_batch if _bulk.spectra_supported(fs, n) else None,
        fail_scalar, budget, samples, seed, workers)
    v = SpaceVerdict(pred.name, label, mode, checked, used_seed, "holds")
    if bad is not None:
        w = _element_for_index(fs, s, bad, mode == "exhaustive", seed)
        prof = profile(fs, w)
        if pred.count(prof) <= pred.k:
            raise AssertionError("witness failed to re-verify; scan is inconsistent")
        v.outcome = "fails"
        v.witness = w
        v.witness_profile = prof
        v.witness_index = bad
    return v


def check_space_even_charpoly(fs: FieldSpec, s: MatSubspace,
                              budget: int = 1 << 24, samples: int = 10 ** 6,
                              seed: int = 0, workers: int = 1,
                              label: str = "") -> SpaceVerdict:
    """Verify that every element's characteristic polynomial is even
    (all odd-degree coefficients vanish)."""
    n, m = s.shape
    if n != m:
        raise ValueError("characteristic polynomials need square matrices")

    def fail_batch(mats):
        import numpy as np
        polys = _bulk.batch_charpoly(fs, mats)
        odd = polys[:, 1::2]
        return np.any(odd != 0, axis=1)

    def fail_scalar(mat: Mat) -> bool:
        return not is_even_poly(char_poly(fs, mat))

    mode, checked, used_seed, bad = _scan_space(
        fs, s, fail_batch, fail_scalar, budget, samples, seed, workers)
    v = SpaceVerdict("even-char-poly", label, mode, checked, used_seed, "holds")
    if bad is not None:
        w = _element_for_index(fs, s, bad, mode == "exhaustive", seed)
        prof = profile(fs, w)
        if is_even_poly(prof.char_poly):
            raise AssertionError("witness failed to re-verify; scan is inconsistent")
        v.outcome = "fails"
        v.witness = w
        v.witness_profile = prof
        v.witness_index = bad
    return v
