"""
Graded skew-symmetric multilinear maps and the sh-Lie relations.

Sign bookkeeping follows the Lada-Markl convention: permuting the arguments
of l_k by sigma multiplies the value by e(sigma) * (-1)^sigma, where e(sigma)
is the Koszul sign (-1 for each transposed pair of odd elements) and
(-1)^sigma the plain parity. The relation of arity n is

    sum_{i+j=n+1} sum_{sigma in unsh(i, n-i)}
        e(sigma) (-1)^sigma (-1)^{i(j-1)} l_j(l_i(x_s1..x_si), x_s(i+1)..x_sn) = 0.

A basis argument is a pair (degree, index). An element is an ``Elem``: a
degree and a coefficient tuple in that degree's basis.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .exactlin import Vector, fstr, zeros

Basis = Tuple[int, int]


class DegreeOverflow(ValueError):
    """An argument or target lies outside the stored degree range."""


class Elem(NamedTuple):
    degree: int
    coeffs: Vector

    def __add__(self, other):
        if other is None:
            return self
        if other.degree != self.degree:
            raise ValueError("adding elements of degrees %d and %d" % (self.degree, other.degree))
        return Elem(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def scale(self, c) -> "Elem":
        return Elem(self.degree, tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if c]


def basis_elem(dims: Sequence[int], degree: int, index: int) -> Elem:
    v = [Fraction(0)] * dims[degree]
    v[index] = Fraction(1)
    return Elem(degree, tuple(v))


def koszul_sign(perm: Sequence[int], degrees: Sequence[int]) -> int:
    """Koszul sign e(sigma) of (x_0..x_{n-1}) -> (x_perm[0]..x_perm[n-1]).

    Computed by bubble-sorting perm back to the identity; every adjacent swap
    of x_a and x_b contributes (-1)^(deg_a * deg_b).
    """
    if len(perm) != len(degrees):
        raise ValueError("permutation and degree list differ in length")
    p = list(perm)
    sign = 1
    n = len(p)
    for end in range(n - 1, 0, -1):
        for k in range(end):
            if p[k] > p[k + 1]:
                if degrees[p[k]] & 1 and degrees[p[k + 1]] & 1:
                    sign = -sign
                p[k], p[k + 1] = p[k + 1], p[k]
    return sign


def parity(perm: Sequence[int]) -> int:
    inv = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inv & 1 else 1


def unshuffles(i: int, j: int) -> List[Tuple[Tuple[int, ...], int]]:
    """All (i, j)-unshuffles of range(i + j) with their parity.

    A permutation is listed as the sequence sigma(0..i+j-1); it increases on
    the first i and on the last j positions.
    """
    if i < 0 or j < 0:
        raise ValueError("negative block size")
    out = []
    for first in combinations(range(i + j), i):
        rest = tuple(k for k in range(i + j) if k not in first)
        perm = first + rest
        out.append((perm, parity(perm)))
    return out


_UNSH_CACHE: Dict[Tuple[int, int], list] = {}


def _unsh(i, j):
    key = (i, j)
    if key not in _UNSH_CACHE:
        _UNSH_CACHE[key] = unshuffles(i, j)
    return _UNSH_CACHE[key]


def chi(perm: Sequence[int], degrees: Sequence[int]) -> int:
    """Total sign e(sigma) * (-1)^sigma of a graded skew-symmetric permutation."""
    return koszul_sign(perm, degrees) * parity(perm)


def canonical_order(args: Sequence[Basis]) -> Tuple[int, Tuple[Basis, ...]]:
    """Sort basis arguments by (degree, index) tracking the skew sign.

    Returns (sign, canonical_tuple); sign is 0 when the value is forced to
    vanish by a repeated even-degree argument.
    """
    a = list(args)
    sign = 1
    n = len(a)
    for end in range(n - 1, 0, -1):
        for k in range(end):
            if a[k] > a[k + 1]:
                # swapping x, y: -(-1)^(|x||y|)
                if not (a[k][0] & 1 and a[k + 1][0] & 1):
                    sign = -sign
                a[k], a[k + 1] = a[k + 1], a[k]
    for k in range(n - 1):
        if a[k] == a[k + 1] and not a[k][0] & 1:
            return 0, tuple(a)
    return sign, tuple(a)


class SkewGradedMap:
    """A graded skew multilinear map l_k: X^{(x)k} -> X of degree k - 2.

    Values are stored on canonical basis tuples only (sorted by (degree,
    index)); tuples that are absent evaluate to zero. ``dims`` fixes the
    graded vector space.
    """

    def __init__(self, arity: int, dims: Sequence[int], values=None,
                 map_degree: Optional[int] = None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.arity = arity
        self.dims = tuple(dims)
        self.max_degree = len(self.dims) - 1
        self.map_degree = arity - 2 if map_degree is None else map_degree
        self.values: Dict[Tuple[Basis, ...], Vector] = {}
        self._multidegrees = set()
        for key, v in (values or {}).items():
            self._store(tuple(tuple(b) for b in key), tuple(v))

    def _store(self, key, v):
        sign, canon = canonical_order(key)
        if canon != key:
            raise ValueError("non-canonical key %r" % (key,))
        if sign == 0:
            if any(v):
                raise ValueError("nonzero value on a repeated even argument %r" % (key,))
            return
        t = self.target_degree(b[0] for b in key)
        if len(v) != self.dims_at(t):
            raise ValueError("value of length %d for target degree %d" % (len(v), t))
        if any(v):
            self.values[key] = v
            self._multidegrees.add(tuple(b[0] for b in key))

    def target_degree(self, degrees: Iterable[int]) -> int:
        return sum(degrees) + self.map_degree

    def dims_at(self, n: int) -> int:
        if 0 <= n <= self.max_degree:
            return self.dims[n]
        return 0

    def check_args(self, args: Sequence[Basis]):
        if len(args) != self.arity:
            raise ValueError("expected %d arguments, got %d" % (self.arity, len(args)))
        for deg, idx in args:
            if not 0 <= deg <= self.max_degree or not 0 <= idx < self.dims[deg]:
                raise DegreeOverflow("argument (%d, %d) outside the complex" % (deg, idx))

    def nonzero_on(self, degrees: Sequence[int]) -> bool:
        """False when the map is known to vanish on this multidegree."""
        return tuple(sorted(degrees)) in self._multidegrees

    def value(self, args: Sequence[Basis]) -> Optional[Elem]:
        """Value on basis arguments in any order; None when it is zero."""
        sign, canon = canonical_order(args)
        if not sign:
            return None
        v = self.values.get(canon)
        if v is None:
            return None
        t = self.target_degree(b[0] for b in canon)
        if sign == 1:
            return Elem(t, v)
        return Elem(t, tuple(-a for a in v))

    def __call__(self, *elems: Elem) -> Optional[Elem]:
        """Multilinear evaluation on arbitrary homogeneous elements."""
        if len(elems) != self.arity:
            raise ValueError("expected %d arguments, got %d" % (self.arity, len(elems)))
        degrees = [e.degree for e in elems]
        for d in degrees:
            if not 0 <= d <= self.max_degree:
                raise DegreeOverflow("argument of degree %d outside 0..%d" % (d, self.max_degree))
        if tuple(sorted(degrees)) not in self._multidegrees:
            return None
        t = self.target_degree(degrees)
        out = None
        supports = [e.support() for e in elems]
        for combo in _product(supports):
            c = Fraction(1)
            args = []
            for (idx, coef), d in zip(combo, degrees):
                c *= coef
                args.append((d, idx))
            val = self.value(args)
            if val is None:
                continue
            if out is None:
                out = [Fraction(0)] * len(val.coeffs)
            for k, a in enumerate(val.coeffs):
                if a:
                    out[k] += c * a
        if out is None or not any(out):
            return None
        return Elem(t, tuple(out))

    def canonical_tuples(self, max_target: Optional[int] = None):
        return canonical_tuples(self.dims, self.arity, self.map_degree, max_target)

    def is_identically_zero(self) -> bool:
        return not self.values

    def nonzero_multidegrees(self):
        return sorted(self._multidegrees)

    def replace(self, key: Sequence[Basis], value: Vector) -> "SkewGradedMap":
        values = dict(self.values)
        values.pop(tuple(key), None)
        new = SkewGradedMap(self.arity, self.dims, values, self.map_degree)
        new._store(tuple(key), tuple(value))
        return new

    def __eq__(self, other):
        return isinstance(other, SkewGradedMap) and self.arity == other.arity \
            and self.dims == other.dims and self.map_degree == other.map_degree \
            and self.values == other.values

    def __repr__(self):
        return "SkewGradedMap(arity=%d, nonzero=%d)" % (self.arity, len(self.values))

    def to_json(self):
        by_md: Dict[str, list] = {}
        for key in sorted(self.values):
            md = ",".join(str(b[0]) for b in key)
            by_md.setdefault(md, []).append({
                "args": [b[1] for b in key],
                "value": [fstr(a) for a in self.values[key]],
            })
        return by_md


def _product(supports):
    if not supports:
        yield ()
        return
    head, rest = supports[0], supports[1:]
    for item in head:
        for tail in _product(rest):
            yield (item,) + tail


def multidegrees(max_degree: int, arity: int, max_total: Optional[int] = None):
    """Non-decreasing degree tuples with entries in 0..max_degree."""
    def rec(start, k, total):
        if k == 0:
            yield ()
            return
        for d in range(start, max_degree + 1):
            if max_total is not None and total + d * k > max_total:
                break
            for tail in rec(d, k - 1, total + d):
                yield (d,) + tail
    return list(rec(0, arity, 0))


def tuples_of_multidegree(dims: Sequence[int], md: Sequence[int]):
    """Canonical basis tuples with the given sorted multidegree.

    Odd degrees allow repeated indices, even degrees do not.
    """
    groups = []
    k = 0
    while k < len(md):
        j = k
        while j < len(md) and md[j] == md[k]:
            j += 1
        groups.append((md[k], j - k))
        k = j
    pieces = []
    for deg, count in groups:
        n = dims[deg] if deg < len(dims) else 0
        if deg & 1:
            idx = list(combinations_with_replacement(range(n), count))
        else:
            idx = list(combinations(range(n), count))
        pieces.append([tuple((deg, i) for i in c) for c in idx])
    for combo in _product(pieces):
        yield tuple(b for part in combo for b in part)


def canonical_tuples(dims, arity, map_degree, max_target=None):
    """Canonical tuples whose output degree (sum + map_degree) is <= max_target."""
    max_degree = len(dims) - 1
    if max_target is None:
        max_target = max_degree
    for md in multidegrees(max_degree, arity, max_target - map_degree):
        t = sum(md) + map_degree
        if t < 0 or t > max_target:
            continue
        yield from tuples_of_multidegree(dims, md)


def differential_map(cc) -> SkewGradedMap:
    """l1 as an arity-1 map of degree -1."""
    values = {}
    for n in range(1, cc.max_degree + 1):
        m = cc.diff[n]
        for i in range(cc.dims[n]):
            col = m.column(i)
            if any(col):
                values[((n, i),)] = col
    return SkewGradedMap(1, cc.dims, values)


def composite(outer: SkewGradedMap, inner: SkewGradedMap, args: Sequence[Basis]) -> Optional[Elem]:
    """sum over unsh(i, n-i) of e(s)(-1)^s outer(inner(x_s1..x_si), x_s(i+1)..x_sn).

    The (-1)^{i(j-1)} factor of the sh-Lie relation is not included.
    """
    i = inner.arity
    n = len(args)
    if outer.arity != n - i + 1:
        raise ValueError("arities %d o %d do not fit %d arguments" % (outer.arity, i, n))
    degrees = [a[0] for a in args]
    out = None
    for perm, par in _unsh(i, n - i):
        head = [args[p] for p in perm[:i]]
        if not inner.nonzero_on([h[0] for h in head]):
            continue
        tail = [args[p] for p in perm[i:]]
        t = inner.target_degree(h[0] for h in head)
        if not outer.nonzero_on([t] + [b[0] for b in tail]):
            continue
        x = inner.value(head)
        if x is None:
            continue
        sign = koszul_sign(perm, degrees) * par
        acc = None
        for idx, c in x.support():
            y = outer.value([(t, idx)] + tail)
            if y is None:
                continue
            y = y.scale(c * sign)
            acc = y if acc is None else acc + y
        if acc is not None:
            out = acc if out is None else out + acc
    if out is None or out.is_zero():
        return None
    return out


def compose_unshuffled(outer: SkewGradedMap, inner: SkewGradedMap,
                       max_target: Optional[int] = None) -> SkewGradedMap:
    """The composite tabulated as a map of arity i + j - 1 and degree |l_i| + |l_j|."""
    arity = inner.arity + outer.arity - 1
    mdeg = inner.map_degree + outer.map_degree
    values = {}
    for key in canonical_tuples(inner.dims, arity, mdeg, max_target):
        v = composite(outer, inner, key)
        if v is not None:
            values[key] = v.coeffs
    return SkewGradedMap(arity, inner.dims, values, map_degree=mdeg)


class ShLieStructure:
    """The family {l_k}, k = 1..max_arity, on a chain complex."""

    def __init__(self, complex, maps: Dict[int, SkewGradedMap]):
        self.complex = complex
        self.maps = dict(maps)
        if 1 not in self.maps:
            self.maps[1] = differential_map(complex)
        elif self.maps[1] != differential_map(complex):
            raise ValueError("l1 disagrees with the complex differential")
        for k, m in self.maps.items():
            if m.arity != k or m.map_degree != k - 2:
                raise ValueError("map stored as l_%d has arity %d, degree %d"
                                 % (k, m.arity, m.map_degree))
            if m.dims != tuple(complex.dims):
                raise ValueError("l_%d lives on a different graded space" % k)
        self.max_arity = max(self.maps)
        if sorted(self.maps) != list(range(1, self.max_arity + 1)):
            raise ValueError("missing arities in %r" % sorted(self.maps))

    @property
    def dims(self):
        return self.complex.dims

    def __getitem__(self, k) -> SkewGradedMap:
        return self.maps[k]

    def with_map(self, k: int, m: SkewGradedMap) -> "ShLieStructure":
        maps = dict(self.maps)
        maps[k] = m
        return ShLieStructure(self.complex, maps)

    def __eq__(self, other):
        return isinstance(other, ShLieStructure) and self.complex == other.complex \
            and self.maps == other.maps


def relation_sign(i: int, j: int) -> int:
    return -1 if (i * (j - 1)) & 1 else 1


def linfty_defect(s: ShLieStructure, n: int, args: Sequence[Basis]) -> Elem:
    """Left side of the arity-n sh-Lie relation on basis arguments."""
    if n > s.max_arity:
        raise ValueError("arity %d exceeds the structure's %d" % (n, s.max_arity))
    if len(args) != n:
        raise ValueError("expected %d arguments" % n)
    for deg, idx in args:
        if not 0 <= deg <= s.complex.max_degree or not 0 <= idx < s.dims[deg]:
            raise DegreeOverflow("argument (%d, %d) outside the complex" % (deg, idx))
    t = sum(a[0] for a in args) + n - 3
    total = Elem(t, zeros(s.complex.dim(t)))
    for i in range(1, n + 1):
        j = n + 1 - i
        v = composite(s.maps[j], s.maps[i], args)
        if v is not None:
            total = total + v.scale(relation_sign(i, j))
    return total


def generic_composite(outer: Callable, inner: Callable, inner_arity: int,
                      args: Sequence[Tuple[int, object]]):
    """Unshuffle composite for maps on arbitrary graded values.

    ``args`` are (degree, value) pairs; the maps take and return such pairs
    and return None for zero. Values must support ``+`` and scalar ``*``.
    """
    n = len(args)
    degrees = [a[0] for a in args]
    out = None
    for perm, par in _unsh(inner_arity, n - inner_arity):
        x = inner(*[args[p] for p in perm[:inner_arity]])
        if x is None:
            continue
        y = outer(x, *[args[p] for p in perm[inner_arity:]])
        if y is None:
            continue
        sign = koszul_sign(perm, degrees) * par
        term = (y[0], sign * y[1])
        out = term if out is None else (out[0], out[1] + term[1])
    return out


def generic_defect(maps: Dict[int, Callable], n: int, args: Sequence[Tuple[int, object]]):
    """The arity-n relation for maps given as callables; None means zero."""
    total = None
    for i in range(1, n + 1):
        j = n + 1 - i
        if i not in maps or j not in maps:
            continue
        v = generic_composite(maps[j], maps[i], i, args)
        if v is None:
            continue
        v = (v[0], relation_sign(i, j) * v[1])
        total = v if total is None else (total[0], total[1] + v[1])
    return total


def all_permutations(n: int):
    return list(permutations(range(n)))
