"""
Finite graded complexes X_0 <- X_1 <- ... <- X_N over Q, their homology,
and contraction data (eta, lambda, s) with

    lambda . eta - 1 = l1 . s + s . l1

in every degree.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .exactlin import (
    Matrix, Subspace, Vector, complement_basis, image_basis, inverse, is_zero,
    kernel_basis, random_complement, solve_preimage, unit, vadd, vsub, zeros,
)


class NotAComplex(ValueError):
    pass


class NotAcyclic(ValueError):
    pass


class ChainComplex:
    """Degrees 0..max_degree; ``diff[n]`` is the matrix of l1: X_n -> X_{n-1}."""

    def __init__(self, dims, diff: Optional[Dict[int, Matrix]] = None):
        self.dims = tuple(int(d) for d in dims)
        if not self.dims:
            raise ValueError("a complex needs at least degree 0")
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension in %r" % (self.dims,))
        self.max_degree = len(self.dims) - 1
        diff = dict(diff or {})
        for n in diff:
            if not 1 <= n <= self.max_degree:
                raise ValueError("differential given for degree %d outside 1..%d"
                                 % (n, self.max_degree))
        self.diff = {}
        for n in range(1, self.max_degree + 1):
            m = diff.get(n, Matrix.zero(self.dims[n - 1], self.dims[n]))
            if m.shape != (self.dims[n - 1], self.dims[n]):
                raise ValueError("diff[%d] has shape %s, expected %s"
                                 % (n, m.shape, (self.dims[n - 1], self.dims[n])))
            self.diff[n] = m

    def dim(self, n: int) -> int:
        if 0 <= n <= self.max_degree:
            return self.dims[n]
        return 0

    def d(self, n: int, v: Vector) -> Vector:
        """Apply l1 to a vector of degree n (zero on X_0)."""
        if n == 0:
            return ()
        return self.diff[n].apply(v)

    def is_complex(self) -> bool:
        return all((self.diff[n - 1] @ self.diff[n]).is_zero()
                   for n in range(2, self.max_degree + 1))

    def __eq__(self, other):
        return isinstance(other, ChainComplex) and self.dims == other.dims \
            and self.diff == other.diff

    def __repr__(self):
        return "ChainComplex(dims=%r)" % (self.dims,)


@dataclass(frozen=True)
class HomologyData:
    cycles: Tuple[Subspace, ...]
    boundaries: Tuple[Subspace, ...]

    @property
    def h_dims(self) -> Tuple[int, ...]:
        return tuple(z.dim - b.dim for z, b in zip(self.cycles, self.boundaries))

    @property
    def acyclic(self) -> bool:
        """H_n = 0 for every n > 0."""
        return all(h == 0 for h in self.h_dims[1:])


def homology(cc: ChainComplex) -> HomologyData:
    if not cc.is_complex():
        bad = [n for n in range(2, cc.max_degree + 1)
               if not (cc.diff[n - 1] @ cc.diff[n]).is_zero()]
        raise NotAComplex("l1 . l1 != 0 out of degree %d" % bad[0])
    cycles, boundaries = [], []
    for n in range(cc.max_degree + 1):
        if n == 0:
            cycles.append(Subspace.full(cc.dims[0]))
        else:
            cycles.append(kernel_basis(cc.diff[n]))
        if n < cc.max_degree:
            boundaries.append(image_basis(cc.diff[n + 1]))
        else:
            boundaries.append(Subspace.zero(cc.dims[n]))
    return HomologyData(tuple(cycles), tuple(boundaries))


@dataclass(frozen=True)
class ContractionData:
    """Splittings X_n = W_n + B_n + C_n and the maps eta, lambda, s.

    ``s[n]`` maps X_n -> X_{n+1}; at the top degree its target is zero.
    """
    W: Tuple[Subspace, ...]
    C: Tuple[Subspace, ...]
    eta: Tuple[Matrix, ...]
    lam: Tuple[Matrix, ...]
    s: Tuple[Matrix, ...]
    boundary_proj: Tuple[Matrix, ...] = field(repr=False, default=())

    def apply_s(self, n: int, v: Vector) -> Vector:
        return self.s[n].apply(v)

    def with_s(self, n: int, matrix: Matrix) -> "ContractionData":
        s = list(self.s)
        s[n] = matrix
        return ContractionData(self.W, self.C, self.eta, self.lam, tuple(s), self.boundary_proj)


def build_contraction(cc: ChainComplex, h: Optional[HomologyData] = None,
                      rng=None) -> ContractionData:
    """Contraction data from echelon complements.

    With ``rng`` the complements W_n and C_n are drawn at random instead of
    greedily; the result still satisfies the homotopy identity exactly.
    """
    if h is None:
        h = homology(cc)
    if not h.acyclic:
        n = next(k for k, d in enumerate(h.h_dims) if k > 0 and d)
        raise NotAcyclic("H_%d has dimension %d" % (n, h.h_dims[n]))

    def complement(inner, outer):
        if rng is None:
            return complement_basis(inner, outer)
        return random_complement(inner, outer, rng)

    N = cc.max_degree
    W, C = [], []
    for n in range(N + 1):
        W.append(complement(h.boundaries[n], h.cycles[n]))
        C.append(complement(h.cycles[n], Subspace.full(cc.dims[n])))

    eta, lam, s, bproj = [], [], [], []
    for n in range(N + 1):
        dim = cc.dims[n]
        w, b, c = W[n].basis, h.boundaries[n].basis, C[n].basis
        frame = Matrix.from_columns(dim, w + b + c)
        coords = inverse(frame) if dim else Matrix.zero(0, 0)
        nw, nb = len(w), len(b)
        # rows of coords: w-coordinates, then b-coordinates, then c-coordinates
        eta.append(Matrix(nw, dim, coords.entries[:nw]))
        lam.append(Matrix.from_columns(dim, w))
        bcoords = Matrix(nb, dim, coords.entries[nw:nw + nb])
        bproj.append(Matrix.from_columns(dim, b) @ bcoords if nb else Matrix.zero(dim, dim))

        up = cc.dim(n + 1)
        if n == N or not b:
            s.append(Matrix.zero(up, dim))
            continue
        # sigma: B_n -> C_{n+1}, inverse of l1 restricted to C_{n+1}
        cbasis = C[n + 1].basis
        restricted = cc.diff[n + 1] @ Matrix.from_columns(up, cbasis)
        sigma_cols = []
        for bv in b:
            y = solve_preimage(restricted, bv)
            sigma_cols.append(Matrix.from_columns(up, cbasis).apply(y))
        sigma = Matrix.from_columns(up, sigma_cols)
        s.append(-(sigma @ bcoords))

    k = ContractionData(tuple(W), tuple(C), tuple(eta), tuple(lam), tuple(s), tuple(bproj))
    report = verify_contraction(cc, k)
    if not report.passed:
        raise AssertionError("constructed contraction fails the homotopy identity: %r"
                             % (report.first_failure,))
    return k


@dataclass
class ContractionReport:
    checked: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[dict]:
        return self.failures[0] if self.failures else None

    def to_json(self):
        return {"passed": self.passed, "checked": self.checked, "failures": self.failures}


def verify_contraction(cc: ChainComplex, k: ContractionData) -> ContractionReport:
    """Check lambda.eta - 1 = l1.s + s.l1 on every basis vector.

    In degree 0 the s.l1 term is absent, so this reads lambda.eta - 1 = l1.s.
    """
    from .exactlin import fstr

    report = ContractionReport()
    for n in range(cc.max_degree + 1):
        dim = cc.dims[n]
        for i in range(dim):
            x = unit(dim, i)
            lhs = vsub(k.lam[n].apply(k.eta[n].apply(x)), x)
            rhs = zeros(dim)
            if n < cc.max_degree:
                rhs = vadd(rhs, cc.diff[n + 1].apply(k.s[n].apply(x)))
            if n > 0:
                rhs = vadd(rhs, k.s[n - 1].apply(cc.diff[n].apply(x)))
            report.checked += 1
            defect = vsub(lhs, rhs)
            if not is_zero(defect):
                report.failures.append({
                    "degree": n, "basis_index": i,
                    "defect": [fstr(a) for a in defect],
                })
    return report


def contraction_invariants(cc: ChainComplex, h: HomologyData, k: ContractionData) -> List[str]:
    """Secondary identities of the canonical construction; returns violations."""
    bad = []
    for n in range(cc.max_degree + 1):
        hd = k.eta[n].rows
        if not (k.eta[n] @ k.lam[n] == Matrix.identity(hd)):
            bad.append("eta.lambda != 1 in degree %d" % n)
        if n + 1 <= cc.max_degree and not (k.s[n + 1] @ k.s[n]).is_zero():
            bad.append("s.s != 0 from degree %d" % n)
        if not (k.s[n] @ k.boundary_proj[n] == k.s[n]):
            bad.append("s does not factor through the boundary part in degree %d" % n)
    return bad
