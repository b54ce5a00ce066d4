"""Linear subspaces of F^m and of Mat_{n,m}(F).

Subspaces are stored as reduced row-echelon bases with respect to a
fixed global coordinate order (row-major flattening for matrix spaces),
so equality is basis identity and every report is deterministic.
Enumeration streams (all elements, projective representatives, the
Grassmannian of d-dimensional subspaces) produce each object exactly
once in an order independent of any worker partitioning; exceeding the
configured budget raises :class:`BudgetExceeded`, which callers convert
into an explicit "budget" verdict distinct from failure.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .gf import FieldSpec
from .matrix import Mat, rref_rows

Vec = tuple[int, ...]

DEFAULT_BUDGET = 1 << 24


class BudgetExceeded(Exception):
    """An enumeration would produce more objects than the budget allows."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration of {needed} objects exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


class VecSubspace:
    """A subspace of F^ambient held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient: int, vectors) -> None:
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise ValueError("ambient dimension mismatch")
        basis, pivots = rref_rows(field, rows) if rows else ([], [])
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def _trusted(cls, field: FieldSpec, ambient: int, basis, pivots) -> "VecSubspace":
        s = cls.__new__(cls)
        s.field = field
        s.ambient = ambient
        s.basis = tuple(tuple(r) for r in basis)
        s.pivots = tuple(pivots)
        return s

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_compatible(self, other: "VecSubspace") -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def reduce(self, v) -> list[int]:
        mul = self.field.mul
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient):
                    w[j] ^= mul(c, row[j])
        return w

    def member(self, v) -> bool:
        return not any(self.reduce(v))

    def coords_of(self, v) -> Vec:
        """Coefficients of v in the canonical basis (v must be a member)."""
        coords = tuple(v[p] for p in self.pivots)
        if not self.member(v):
            raise ValueError("vector is not in the subspace")
        return coords

    def sum_with(self, other: "VecSubspace") -> "VecSubspace":
        self._check_compatible(other)
        return VecSubspace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "VecSubspace") -> "VecSubspace":
        """Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry
        the intersection in their right half."""
        self._check_compatible(other)
        m = self.ambient
        stacked = [list(r) + list(r) for r in self.basis]
        stacked += [list(r) + [0] * m for r in other.basis]
        if not stacked:
            return VecSubspace(self.field, m, [])
        reduced, _ = rref_rows(self.field, stacked)
        inter = [row[m:] for row in reduced if not any(row[:m])]
        return VecSubspace(self.field, m, inter)

    def annihilator(self) -> "VecSubspace":
        """Nullspace of the basis matrix: all phi with phi(x)=0 on the space."""
        m = self.ambient
        free = [j for j in range(m) if j not in self.pivots]
        vecs = []
        for f in free:
            v = [0] * m
            v[f] = 1
            for row, p in zip(self.basis, self.pivots):
                v[p] = row[f]  # char 2: -x = x
            vecs.append(v)
        return VecSubspace(self.field, m, vecs)

    def contains_space(self, other: "VecSubspace") -> bool:
        return all(self.member(v) for v in other.basis)

    def element_at(self, index: int) -> Vec:
        """The index-th element in the canonical enumeration order: the j-th
        base-q digit of the index is the coefficient of basis row j."""
        q = self.field.q
        mul = self.field.mul
        out = [0] * self.ambient
        for row in self.basis:
            c = index % q
            index //= q
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] ^= mul(c, x)
        return tuple(out)

    def enumerate_elements(self, budget: int = DEFAULT_BUDGET) -> Iterator[Vec]:
        total = self.field.q ** self.dim
        if total > budget:
            raise BudgetExceeded(total, budget)
        for i in range(total):
            yield self.element_at(i)

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "basis": [list(r) for r in self.basis]}

    def __eq__(self, other) -> bool:
        return (isinstance(other, VecSubspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"VecSubspace(dim {self.dim} of F^{self.ambient})"


def span(field: FieldSpec, ambient: int, vectors) -> VecSubspace:
    return VecSubspace(field, ambient, vectors)


def full_space(field: FieldSpec, ambient: int) -> VecSubspace:
    eye = [[1 if i == j else 0 for j in range(ambient)] for i in range(ambient)]
    return VecSubspace._trusted(field, ambient, eye, range(ambient))


def line(field: FieldSpec, v) -> VecSubspace:
    return VecSubspace(field, len(v), [v])


class QuotientChart:
    """Concrete chart for V/W: the non-pivot coordinates of W serve as the
    quotient basis; the projection reduces modulo W and drops the pivots."""

    __slots__ = ("field", "sub", "free")

    def __init__(self, field: FieldSpec, sub: VecSubspace):
        self.field = field
        self.sub = sub
        self.free = tuple(j for j in range(sub.ambient) if j not in sub.pivots)

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, v) -> Vec:
        w = self.sub.reduce(v)
        return tuple(w[j] for j in self.free)

    def lift(self, coords) -> Vec:
        out = [0] * self.sub.ambient
        for j, c in zip(self.free, coords):
            out[j] = c
        return tuple(out)

    def matrix(self) -> Mat:
        """The projection as a (dim quotient) x ambient matrix."""
        m = self.sub.ambient
        rows = []
        for i in range(m):
            e = [0] * m
            e[i] = 1
            rows.append(self.project(e))
        cols = rows  # rows[i] is the image of e_i: assemble column-wise
        return Mat(self.dim, m, tuple(cols[j][i] for i in range(self.dim) for j in range(m)))


# ----------------------------------------------------------------------
# matrix subspaces
# ----------------------------------------------------------------------
class MatSubspace:
    """A subspace of Mat_{n,m}(F) as a VecSubspace of F^{n*m} (row-major)."""

    __slots__ = ("shape", "space")

    def __init__(self, shape: tuple[int, int], space: VecSubspace):
        n, m = shape
        if space.ambient != n * m:
            raise ValueError("flattened ambient does not match shape")
        self.shape = (n, m)
        self.space = space

    @classmethod
    def from_matrices(cls, field: FieldSpec, shape: tuple[int, int], mats) -> "MatSubspace":
        n, m = shape
        vecs = []
        for a in mats:
            if (a.rows, a.cols) != (n, m):
                raise ValueError("matrix shape mismatch")
            vecs.append(a.entries)
        return cls(shape, VecSubspace(field, n * m, vecs))

    @property
    def field(self) -> FieldSpec:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> list[Mat]:
        n, m = self.shape
        return [Mat(n, m, row) for row in self.space.basis]

    def member(self, a: Mat) -> bool:
        return self.space.member(a.entries)

    def contains_space(self, other: "MatSubspace") -> bool:
        return self.shape == other.shape and self.space.contains_space(other.space)

    def sum_with(self, other: "MatSubspace") -> "MatSubspace":
        return MatSubspace(self.shape, self.space.sum_with(other.space))

    def intersect(self, other: "MatSubspace") -> "MatSubspace":
        return MatSubspace(self.shape, self.space.intersect(other.space))

    def element_at(self, index: int) -> Mat:
        n, m = self.shape
        return Mat(n, m, self.space.element_at(index))

    def enumerate_elements(self, budget: int = DEFAULT_BUDGET) -> Iterator[Mat]:
        n, m = self.shape
        for v in self.space.enumerate_elements(budget):
            yield Mat(n, m, v)

    def transform(self, f) -> "MatSubspace":
        """Image space under a linear map f: Mat -> Mat (applied to the basis)."""
        imgs = [f(b) for b in self.basis_matrices()]
        if not imgs:
            return MatSubspace(self.shape, VecSubspace(self.field, self.space.ambient, []))
        shape = (imgs[0].rows, imgs[0].cols)
        return MatSubspace.from_matrices(self.field, shape, imgs)

    def to_json(self) -> dict:
        return {"shape": list(self.shape),
                "basis": [b.to_json() for b in self.basis_matrices()]}

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatSubspace)
                and self.shape == other.shape and self.space == other.space)

    def __hash__(self) -> int:
        return hash((self.shape, self.space))

    def __repr__(self) -> str:
        n, m = self.shape
        return f"MatSubspace(dim {self.dim} of Mat_{n}x{m})"


def mat_subspace_from_json(field: FieldSpec, obj: dict) -> MatSubspace:
    from .matrix import mat_from_json
    shape = tuple(obj["shape"])
    return MatSubspace.from_matrices(field, shape, [mat_from_json(b) for b in obj["basis"]])


def trace_orthogonal(s: MatSubspace) -> MatSubspace:
    """The trace-dual space: all v in Hom(V,U) with tr(vu)=0 for every u in S.

    For S <= Mat_{n,m} the result lives in Mat_{m,n}; tr(vu) pairs vec(v)
    against vec(u^T), so the dual is the annihilator of the transposed
    flattenings.  dim S + dim S^perp = n*m and the double dual returns S.
    """
    n, m = s.shape
    fs = s.field
    transposed = []
    for b in s.basis_matrices():
        transposed.append(tuple(b.entries[i * m + j] for j in range(m) for i in range(n)))
    ann = VecSubspace(fs, n * m, transposed).annihilator()
    return MatSubspace((m, n), ann)


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------
def enumerate_projective(field: FieldSpec, ambient: int) -> Iterator[Vec]:
    """One representative per line of F^ambient, first nonzero coordinate
    normalized to 1; ordered by pivot position then by base-q counter."""
    q = field.q
    for p in range(ambient):
        tail = ambient - p - 1
        for i in range(q ** tail):
            v = [0] * ambient
            v[p] = 1
            rest = i
            for j in range(ambient - 1, p, -1):
                v[j] = rest % q
                rest //= q
            yield tuple(v)


def projective_count(q: int, ambient: int) -> int:
    return (q ** ambient - 1) // (q - 1)


def projective_points_of(space: VecSubspace) -> Iterator[Vec]:
    """One representative per line of the given subspace."""
    for c in enumerate_projective(space.field, space.dim):
        mul = space.field.mul
        out = [0] * space.ambient
        for coef, row in zip(c, space.basis):
            if coef:
                for j, x in enumerate(row):
                    if x:
                        out[j] ^= mul(coef, x)
        yield tuple(out)


def gaussian_binomial(m: int, d: int, q: int) -> int:
    if d < 0 or d > m:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (d - i) - 1
    return num // den


def enumerate_grassmannian(field: FieldSpec, d: int, ambient: int,
                           budget: int = DEFAULT_BUDGET) -> Iterator[VecSubspace]:
    """All d-dimensional subspaces of F^ambient, each exactly once, as RREF
    bases: pivot-column sets in lexicographic order, free entries counting
    in base q (last free position fastest)."""
    total = gaussian_binomial(ambient, d, field.q)
    if total > budget:
        raise BudgetExceeded(total, budget)
    q = field.q
    if d == 0:
        yield VecSubspace(field, ambient, [])
        return
    for pivots in combinations(range(ambient), d):
        pivot_set = set(pivots)
        free = [(r, c) for r in range(d) for c in range(pivots[r] + 1, ambient)
                if c not in pivot_set]
        base = [[0] * ambient for _ in range(d)]
        for r, p in enumerate(pivots):
            base[r][p] = 1
        for idx in range(q ** len(free)):
            rows = [row[:] for row in base]
            rest = idx
            for (r, c) in reversed(free):
                rows[r][c] = rest % q
                rest //= q
            yield VecSubspace._trusted(field, ambient, rows, pivots)


def index_chunks(total: int, workers: int) -> list[tuple[int, int]]:
    """Split [0, total) into contiguous ranges; the verdict merge over these
    ranges is defined so results do not depend on the worker count."""
    if total <= 0:
        return []
    workers = max(1, workers)
    step = (total + workers - 1) // workers
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def random_subspace(field: FieldSpec, rng, ambient: int, dim: int) -> VecSubspace:
    """Uniform-ish random subspace of the given dimension (rejection on rank)."""
    if dim > ambient:
        raise ValueError("dimension exceeds ambient")
    while True:
        vecs = [[rng.randrange(field.q) for _ in range(ambient)] for _ in range(dim)]
        s = VecSubspace(field, ambient, vecs)
        if s.dim == dim:
            return s
