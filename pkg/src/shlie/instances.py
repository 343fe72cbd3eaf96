"""
Generators of instances that satisfy the two bracket conditions.

The recipe: X_0 is a Lie algebra g with an ideal B, the differential out
of X_1 has image exactly B, and the bracket on X_0 is the Lie bracket plus
a skew perturbation mu with values in B. Then

  (i)  [c, b] + mu(c, b) lies in B, since B is an ideal and mu is B-valued;
  (ii) the Jacobiator of [.,.] + mu is the Lie Jacobiator (zero) plus terms
       each of which has an outermost [., B-valued] or mu(...), so it lies in B.

Random instances draw g as a direct sum of small Lie algebras from a fixed
catalog, B as a direct sum of ideals of the summands, and then apply random
unimodular changes of basis in every degree.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Optional, Sequence, Tuple

from .complex import ChainComplex
from .core import Instance
from .exactlin import Matrix, Subspace, inverse, unit, vlincomb
from .multilinear import Elem, SkewGradedMap, composite

Table = Dict[Tuple[int, int], Tuple[Fraction, ...]]


class SpecInvalid(ValueError):
    pass


def _table(dim, entries) -> Table:
    """entries: {(a, b): {c: coeff}} for a < b."""
    out = {}
    for (a, b), coeffs in entries.items():
        v = [Fraction(0)] * dim
        for c, x in coeffs.items():
            v[c] = Fraction(x)
        out[(a, b)] = tuple(v)
    return out


@dataclass(frozen=True)
class CatalogAlgebra:
    name: str
    dim: int
    brackets: dict
    ideals: Tuple[Tuple[int, ...], ...]


CATALOG = (
    CatalogAlgebra("abelian1", 1, {}, ((), (0,))),
    CatalogAlgebra("aff2", 2, {(0, 1): {1: 1}}, ((), (1,), (0, 1))),
    CatalogAlgebra("heisenberg3", 3, {(0, 1): {2: 1}},
                   ((), (2,), (1, 2), (0, 2), (0, 1, 2))),
    CatalogAlgebra("sl2", 3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
                   ((), (0, 1, 2))),
)


@dataclass
class LieIdealSpec:
    """Lie algebra g = Q^dim_g with ideal B, B-valued perturbation mu.

    ``fiber_dims`` are the dimensions of X_1, X_2, ...; by default X_1 has
    dimension dim B and nothing sits above it.
    """
    dim_g: int
    structure_constants: Table
    ideal: Subspace
    perturbation: Table = field(default_factory=dict)
    fiber_dims: Optional[Tuple[int, ...]] = None


def _bracket_map(dim, table) -> SkewGradedMap:
    values = {((0, a), (0, b)): v for (a, b), v in table.items() if a < b}
    for (a, b), v in table.items():
        if a >= b:
            raise SpecInvalid("bracket table keys must satisfy a < b, got %r" % ((a, b),))
        if len(v) != dim:
            raise SpecInvalid("bracket value of length %d in dimension %d" % (len(v), dim))
    return SkewGradedMap(2, (dim,), values)


def validate_spec(spec: LieIdealSpec):
    n = spec.dim_g
    lie = _bracket_map(n, spec.structure_constants)
    _bracket_map(n, spec.perturbation)  # shape check only
    if spec.ideal.ambient_dim != n:
        raise SpecInvalid("ideal lives in Q^%d, not Q^%d" % (spec.ideal.ambient_dim, n))
    for t in combinations(range(n), 3):
        j = composite(lie, lie, tuple((0, a) for a in t))
        if j is not None:
            raise SpecInvalid("structure constants violate Jacobi on %r" % (t,))
    for a in range(n):
        for b in spec.ideal.basis:
            v = lie(Elem(0, unit(n, a)), Elem(0, b))
            if v is not None and not spec.ideal.contains(v.coeffs):
                raise SpecInvalid("B is not an ideal: [e_%d, b] leaves B" % a)
    for key, v in spec.perturbation.items():
        if not spec.ideal.contains(v):
            raise SpecInvalid("perturbation value on %r is not in B" % (key,))
    fibers = spec.fiber_dims or (spec.ideal.dim,)
    _ranks(n, spec.ideal.dim, fibers)


def _ranks(d0, r1, fibers):
    """Ranks r_1..r_N of an exact-above-zero complex with the given dims."""
    ranks = [r1]
    for n, d in enumerate(fibers, start=1):
        r = ranks[-1]
        if r > d:
            raise SpecInvalid("X_%d (dim %d) cannot surject onto a %d-dim image" % (n, d, r))
        ranks.append(d - r)
    if ranks[-1] != 0:
        raise SpecInvalid("top degree %d is not exact (kernel of dim %d)"
                          % (len(fibers), ranks[-1]))
    return ranks[:-1]


def standard_complex(d0, image_basis, fibers) -> ChainComplex:
    """Exact-above-zero complex with im(X_1 -> X_0) spanned by ``image_basis``.

    In degree n >= 1 the first r_n basis vectors map onto the kernel of the
    next differential down, the rest span the kernel.
    """
    ranks = _ranks(d0, len(image_basis), fibers)
    dims = (d0,) + tuple(fibers)
    diff = {}
    if fibers:
        cols = list(image_basis) + [[0] * d0] * (fibers[0] - ranks[0])
        diff[1] = Matrix.from_columns(d0, cols)
    for n in range(2, len(dims)):
        below, r_below, r = dims[n - 1], ranks[n - 2], ranks[n - 1]
        cols = [unit(below, r_below + k) for k in range(r)]
        cols += [[0] * below] * (dims[n] - r)
        diff[n] = Matrix.from_columns(below, cols)
    return ChainComplex(dims, diff)


def gen_lie_ideal(spec: LieIdealSpec) -> Instance:
    validate_spec(spec)
    n = spec.dim_g
    fibers = tuple(spec.fiber_dims or (spec.ideal.dim,))
    if spec.ideal.dim == 0 and fibers == (0,):
        fibers = ()
    cc = standard_complex(n, spec.ideal.basis, fibers)
    table = {}
    for key in set(spec.structure_constants) | set(spec.perturbation):
        zero = (Fraction(0),) * n
        v = tuple(a + b for a, b in zip(spec.structure_constants.get(key, zero),
                                        spec.perturbation.get(key, zero)))
        if any(v):
            table[key] = v
    return Instance.from_table(cc, table)


def lie2_spec() -> LieIdealSpec:
    """[e1, e2] = e2 with B = span{e2}, X_1 = span{f1}, l1 f1 = e2."""
    return LieIdealSpec(2, _table(2, {(0, 1): {1: 1}}), Subspace(2, [(0, 1)]))


def perturbed4_spec() -> LieIdealSpec:
    """Abelian Q^4, B = span{e3, e4}, mu(e1,e2)=e3, mu(e2,e3)=e4, mu(e1,e4)=e4."""
    mu = _table(4, {(0, 1): {2: 1}, (1, 2): {3: 1}, (0, 3): {3: 1}})
    return LieIdealSpec(4, {}, Subspace(4, [(0, 0, 1, 0), (0, 0, 0, 1)]), mu)


def lie2() -> Instance:
    return gen_lie_ideal(lie2_spec())


def perturbed4() -> Instance:
    return gen_lie_ideal(perturbed4_spec())


def lie2_broken() -> Instance:
    """lie2 with l2~(e1, e2) = e1, which leaves the boundaries span{e2}."""
    return lie2().with_bracket(0, 1, (1, 0))


PRESETS = {"lie2": lie2, "perturbed4": perturbed4, "lie2_broken": lie2_broken}


@dataclass(frozen=True)
class GenSeed:
    seed: int
    dims: Tuple[int, ...]
    height: int = 9


def feasible_dims(dims: Sequence[int]) -> bool:
    try:
        _ranks_from_dims(dims)
    except SpecInvalid:
        return False
    return True


def _ranks_from_dims(dims):
    """Rank of l1 out of each degree n >= 1 forced by exactness above degree 0."""
    N = len(dims) - 1
    ranks = [0] * (N + 2)
    for n in range(N, 0, -1):
        ranks[n] = dims[n] - ranks[n + 1]
        if ranks[n] < 0:
            raise SpecInvalid("dims %r admit no complex exact above degree 0" % (tuple(dims),))
    if N >= 1 and ranks[1] > dims[0]:
        raise SpecInvalid("X_0 too small for a rank-%d differential" % ranks[1])
    return ranks[1:N + 1]


def random_dims(rng: random.Random, max_degree: int = 4, max_dim: int = 8, max_rank: int = 4,
                min_degree: int = 0):
    """Dimensions of a random complex exact above degree 0."""
    N = rng.randint(min_degree, max_degree)
    if N == 0:
        return (rng.randint(1, max_dim),)
    ranks = [rng.randint(0, max_rank) for _ in range(N)]
    ranks[-1] = max(ranks[-1], 1)
    dims = [0] * (N + 1)
    for n in range(1, N + 1):
        nxt = ranks[n] if n < N else 0
        dims[n] = ranks[n - 1] + nxt
    dims[0] = rng.randint(max(ranks[0], 1), max(max_dim, ranks[0]))
    return tuple(dims)


def _unimodular(rng, n):
    """Random integer matrix with determinant 1 and integer inverse."""
    lower = [[Fraction(1 if i == j else (rng.randint(-1, 1) if i > j else 0))
              for j in range(n)] for i in range(n)]
    upper = [[Fraction(1 if i == j else (rng.randint(-1, 1) if i < j else 0))
              for j in range(n)] for i in range(n)]
    return Matrix(n, n, lower) @ Matrix(n, n, upper)


def _pick_blocks(rng, d0, r1):
    """Catalog blocks filling dimension d0 with ideals of total dimension r1."""
    for _ in range(50):
        blocks, left = [], d0
        while left:
            choices = [a for a in CATALOG if a.dim <= left]
            a = rng.choice(choices)
            blocks.append(a)
            left -= a.dim
        # subset-sum over ideal dimensions, choose uniformly among feasible paths
        reach = [{0}]
        for a in blocks:
            reach.append({s + len(i) for s in reach[-1] for i in a.ideals})
        if r1 not in reach[-1]:
            continue
        ideals, need = [None] * len(blocks), r1
        for k in range(len(blocks) - 1, -1, -1):
            opts = [i for i in blocks[k].ideals if need - len(i) in reach[k]]
            ideals[k] = rng.choice(opts)
            need -= len(ideals[k])
        return list(zip(blocks, ideals))
    return [(CATALOG[0], (0,) if k < r1 else ()) for k in range(d0)]


def gen_random_acyclic(seed: GenSeed) -> Instance:
    """Deterministic random instance with the given dimensions.

    The complex is exact in positive degrees and the bracket on X_0 comes
    from the Lie-ideal recipe with B = im(l1), so the conditions hold.
    """
    rng = random.Random(seed.seed)
    dims = tuple(seed.dims)
    ranks = _ranks_from_dims(dims)
    d0 = dims[0]
    r1 = ranks[0] if ranks else 0
    h = seed.height

    blocks = _pick_blocks(rng, d0, r1)
    lie: Table = {}
    ideal_coords = []
    offset = 0
    for alg, ideal in blocks:
        scale = Fraction(rng.choice([k for k in range(-h, h + 1) if k]))
        if rng.random() < 0.25:
            scale = Fraction(0)
        for (a, b), coeffs in alg.brackets.items():
            v = [Fraction(0)] * d0
            for c, x in coeffs.items():
                v[offset + c] = scale * x
            if any(v):
                lie[(offset + a, offset + b)] = tuple(v)
        ideal_coords.extend(offset + i for i in ideal)
        offset += alg.dim
    ideal_coords.sort()
    B = [unit(d0, i) for i in ideal_coords]

    mu: Table = {}
    if B:
        for a, b in combinations(range(d0), 2):
            if rng.random() < 0.4:
                coeffs = [Fraction(rng.randint(-h, h)) for _ in B]
                v = vlincomb(coeffs, B, d0)
                if any(v):
                    mu[(a, b)] = v

    table = {}
    for key in set(lie) | set(mu):
        zero = (Fraction(0),) * d0
        v = tuple(x + y for x, y in zip(lie.get(key, zero), mu.get(key, zero)))
        if any(v):
            table[key] = v

    cc = standard_complex(d0, B, dims[1:])
    # change of basis in every degree: new basis = columns of G_n
    G = [_unimodular(rng, d) for d in dims]
    Ginv = [inverse(g) if g.rows else g for g in G]
    diff = {n: Ginv[n - 1] @ cc.diff[n] @ G[n] for n in range(1, len(dims))}
    cc = ChainComplex(dims, diff)

    old = Instance.from_table(ChainComplex((d0,)), table).l2tilde
    new_table = {}
    cols = G[0].columns()
    for a, b in combinations(range(d0), 2):
        v = old(Elem(0, cols[a]), Elem(0, cols[b]))
        if v is not None:
            w = Ginv[0].apply(v.coeffs)
            if any(w):
                new_table[(a, b)] = w
    return Instance.from_table(cc, new_table)


def corpus(count: int = 100, seed: int = 0, max_degree: int = 4, max_dim: int = 8,
           max_rank: int = 4, min_degree: int = 0):
    """A seeded list of (GenSeed, Instance) pairs."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        dims = random_dims(rng, max_degree, max_dim, max_rank, min_degree)
        gs = GenSeed(rng.getrandbits(64), dims)
        out.append((gs, gen_random_acyclic(gs)))
    return out
