"""
Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are immutable row-major tuples.
All echelon forms use the leftmost-column / topmost-row pivot rule, so a
subspace has exactly one stored basis.
"""

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class NoSolution(ValueError):
    """Raised when a right-hand side is not in the column space."""


class ContainmentViolation(ValueError):
    """Raised when a complement is requested for a non-subspace."""


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p". Zero denominators and floats are rejected."""
    if not isinstance(s, str):
        raise ValueError("rational must be a string, got %r" % (s,))
    parts = s.strip().split("/")
    if len(parts) > 2 or not all(_is_int(p) for p in parts):
        raise ValueError("malformed rational %r" % s)
    if len(parts) == 2 and int(parts[1]) == 0:
        raise ValueError("zero denominator in %r" % s)
    if len(parts) == 2:
        return Fraction(int(parts[0]), int(parts[1]))
    return Fraction(int(parts[0]))


def _is_int(p: str) -> bool:
    p = p.strip()
    if p[:1] in "+-":
        p = p[1:]
    return p.isdigit()


def fstr(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def vec(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vlincomb(coeffs: Sequence[Fraction], vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


class Matrix:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "entries", "_columns")

    def __init__(self, rows: int, cols: int, entries: Optional[Sequence[Sequence]] = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape %dx%d" % (rows, cols))
        if entries is None:
            entries = [[0] * cols for _ in range(rows)]
        entries = tuple(tuple(frac(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError("entries do not match shape %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._columns = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Sequence]) -> "Matrix":
        columns = [tuple(c) for c in columns]
        entries = [[c[i] for c in columns] for i in range(nrows)]
        return cls(nrows, len(columns), entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [unit(n, i) for i in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return self.columns()[j]

    def columns(self) -> Tuple[Vector, ...]:
        if self._columns is None:
            self._columns = tuple(
                tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return self._columns

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.columns())

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length %d, expected %d" % (len(v), self.cols))
        return vlincomb(v, self.columns(), self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        return Matrix.from_columns(self.rows, [self.apply(c) for c in other.columns()])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s + %s" % (self.shape, other.shape))
        return Matrix(self.rows, self.cols,
                      [vadd(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [vscale(-1, r) for r in self.entries])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape \
            and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def replace(self, i: int, j: int, value) -> "Matrix":
        rows = [list(r) for r in self.entries]
        rows[i][j] = frac(value)
        return Matrix(self.rows, self.cols, rows)

    def to_json(self):
        return [[fstr(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data, rows: int, cols: int) -> "Matrix":
        if rows == 0 or cols == 0:
            if data not in ([], [[]] * rows):
                if not (isinstance(data, list) and all(r == [] for r in data)):
                    raise ValueError("expected an empty %dx%d matrix" % (rows, cols))
            return cls(rows, cols)
        return cls(rows, cols, [[parse_rational(x) for x in row] for row in data])

    def __repr__(self):
        return "Matrix(%d, %d, %s)" % (self.rows, self.cols, self.to_json())


def rref(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Fully reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, len(m)):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(m: Matrix) -> int:
    return len(rref(m.entries, m.cols)[1])


class Subspace:
    """A subspace of Q^n stored by its reduced echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vectors = [vec(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector of length %d in Q^%d" % (len(v), ambient_dim))
        basis, pivots = rref(vectors, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Remainder of v after elimination against the echelon basis."""
        v = list(v)
        for b, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for k in range(p, self.ambient_dim):
                    if b[k]:
                        v[k] -= c * b[k]
        return tuple(v)

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coordinates of v in the echelon basis; v must be a member."""
        if not self.contains(v):
            raise NoSolution("vector is not in the subspace")
        return tuple(frac(v[p]) for p in self.pivots)

    def contains(self, v: Sequence[Fraction]) -> bool:
        if not any(v):
            return True
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim \
            and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(%d, %s)" % (self.ambient_dim, [[fstr(x) for x in b] for b in self.basis])


def kernel_basis(m: Matrix) -> Subspace:
    red, pivots = rref(m.entries, m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def image_basis(m: Matrix) -> Subspace:
    return Subspace(m.rows, m.columns())


def solve_preimage(m: Matrix, v: Sequence[Fraction]) -> Vector:
    """Some x with m x = v; free variables are set to zero.

    Raises NoSolution when v is outside the column space.
    """
    if len(v) != m.rows:
        raise ValueError("right-hand side of length %d, expected %d" % (len(v), m.rows))
    aug = [list(row) + [frac(b)] for row, b in zip(m.entries, v)]
    red, pivots = rref(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise NoSolution("vector is not in the image")
    x = [ZERO] * m.cols
    for row, p in zip(red, pivots):
        x[p] = row[m.cols]
    return tuple(x)


def complement_basis(inner: Subspace, outer: Subspace) -> Subspace:
    """A complement D of inner inside outer (inner + D = outer, direct).

    Greedy: walk outer's echelon basis in order, keeping each vector that is
    independent of inner plus what has been kept so far. When outer is the
    whole space these are the standard unit vectors in index order.
    """
    if inner.ambient_dim != outer.ambient_dim:
        raise ValueError("ambient dimensions differ")
    if not inner.issubspace(outer):
        raise ContainmentViolation("inner subspace is not contained in outer")
    span = Subspace(inner.ambient_dim, inner.basis)
    kept = []
    for b in outer.basis:
        if span.dim == outer.dim:
            break
        if not span.contains(b):
            kept.append(b)
            span = Subspace(inner.ambient_dim, span.basis + (b,))
    return Subspace(inner.ambient_dim, kept)


def random_complement(inner: Subspace, outer: Subspace, rng, height: int = 3) -> Subspace:
    """A complement built from random small-integer combinations of outer's basis."""
    if not inner.issubspace(outer):
        raise ContainmentViolation("inner subspace is not contained in outer")
    span = Subspace(inner.ambient_dim, inner.basis)
    kept = []
    while span.dim < outer.dim:
        coeffs = [rng.randint(-height, height) for _ in outer.basis]
        v = vlincomb([Fraction(c) for c in coeffs], outer.basis, outer.ambient_dim)
        if not span.contains(v):
            kept.append(v)
            span = Subspace(inner.ambient_dim, span.basis + (v,))
    return Subspace(inner.ambient_dim, kept)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("not square")
    n = m.rows
    aug = [list(row) + list(unit(n, i)) for i, row in enumerate(m.entries)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise NoSolution("matrix is singular")
    return Matrix(n, n, [row[n:] for row in red])
