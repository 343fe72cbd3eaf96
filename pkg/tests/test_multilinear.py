import random
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shlie.core import build_structure
from shlie.instances import GenSeed, gen_random_acyclic, lie2, perturbed4
from shlie.multilinear import (
    DegreeOverflow, Elem, SkewGradedMap, basis_elem, canonical_order, chi, composite,
    differential_map, generic_defect, koszul_sign, linfty_defect, parity, relation_sign,
    tuples_of_multidegree, unshuffles,
)


def koszul_by_inversions(perm, degrees):
    # each pair that ends up reversed contributes (-1)^(|x_a||x_b|)
    sign = 1
    for a, b in combinations(range(len(perm)), 2):
        if perm[a] > perm[b] and degrees[perm[a]] % 2 and degrees[perm[b]] % 2:
            sign = -sign
    return sign


def koszul_by_random_swaps(perm, degrees, rng):
    # sort by random adjacent transpositions instead of a fixed bubble order
    p = list(perm)
    sign = 1
    while p != sorted(p):
        k = rng.choice([k for k in range(len(p) - 1) if p[k] > p[k + 1]])
        if degrees[p[k]] % 2 and degrees[p[k + 1]] % 2:
            sign = -sign
        p[k], p[k + 1] = p[k + 1], p[k]
    return sign


def test_koszul_examples():
    assert koszul_sign((0, 1, 2), (1, 1, 3)) == 1
    assert koszul_sign((1, 0), (1, 1)) == -1
    assert koszul_sign((1, 0), (0, 1)) == 1


@given(st.permutations(range(6)), st.lists(st.integers(0, 3), min_size=6, max_size=6),
       st.integers(0, 10 ** 6))
def test_koszul_well_defined(perm, degrees, seed):
    k = koszul_sign(perm, degrees)
    assert k == koszul_by_inversions(perm, degrees)
    assert k == koszul_by_random_swaps(perm, degrees, random.Random(seed))


def test_unshuffle_examples():
    assert unshuffles(1, 1) == [((0, 1), 1), ((1, 0), -1)]
    assert unshuffles(2, 1) == [((0, 1, 2), 1), ((0, 2, 1), -1), ((1, 2, 0), 1)]
    assert len(unshuffles(2, 2)) == 6


@pytest.mark.parametrize("i,j", [(0, 0), (0, 3), (1, 4), (2, 3), (3, 3), (4, 1)])
def test_unshuffle_counts_and_shape(i, j):
    u = unshuffles(i, j)
    assert len(u) == comb(i + j, i)
    assert len({p for p, _ in u}) == len(u)
    for p, par in u:
        assert list(p[:i]) == sorted(p[:i]) and list(p[i:]) == sorted(p[i:])
        assert par == parity(p)


def test_relation_signs():
    # keys are (inner arity i, outer arity j); n = 3 is all +1 and
    # n = 4 reads l1l4 - l4l1 + l3l2 - l2l3
    assert [relation_sign(i, 4 - i) for i in (1, 2, 3)] == [1, 1, 1]
    assert {(i, 5 - i): relation_sign(i, 5 - i) for i in (1, 2, 3, 4)} == \
        {(4, 1): 1, (1, 4): -1, (2, 3): 1, (3, 2): -1}


def test_eval_skew_degree0():
    m = SkewGradedMap(2, (2,), {((0, 0), (0, 1)): (Fraction(1), Fraction(2))})
    assert m.value(((0, 0), (0, 1))).coeffs == (1, 2)
    assert m.value(((0, 1), (0, 0))).coeffs == (-1, -2)
    assert m.value(((0, 0), (0, 0))) is None


def test_repeated_odd_argument_is_allowed():
    sign, canon = canonical_order(((1, 0), (1, 0)))
    assert sign == 1 and canon == ((1, 0), (1, 0))
    assert canonical_order(((2, 1), (2, 1)))[0] == 0


def test_degree_overflow():
    m = SkewGradedMap(2, (2, 1))
    with pytest.raises(DegreeOverflow):
        m.check_args(((3, 0), (0, 0)))
    with pytest.raises(DegreeOverflow):
        m(Elem(0, (1, 0)), Elem(5, ()))


@st.composite
def random_map_and_args(draw):
    dims = tuple(draw(st.lists(st.integers(1, 3), min_size=2, max_size=4)))
    arity = draw(st.integers(1, 4))
    md = tuple(sorted(draw(st.lists(st.integers(0, len(dims) - 1), min_size=arity, max_size=arity))))
    target = sum(md) + arity - 2
    if not 0 <= target < len(dims):
        md = (0,) * arity
        target = arity - 2
    if not 0 <= target < len(dims):
        arity, md, target = 2, (0, 0), 0
    keys = list(tuples_of_multidegree(dims, md))
    values = {}
    for key in keys:
        values[key] = tuple(Fraction(draw(st.integers(-3, 3))) for _ in range(dims[target]))
    m = SkewGradedMap(arity, dims, values)
    key = draw(st.sampled_from(keys)) if keys else None
    perm = draw(st.permutations(range(arity)))
    return m, key, perm


@settings(max_examples=200)
@given(random_map_and_args())
def test_graded_skew_symmetry(data):
    m, key, perm = data
    if key is None:
        return
    permuted = [key[p] for p in perm]
    base = m.value(key)
    moved = m.value(permuted)
    sign = chi(perm, [b[0] for b in key])
    if base is None:
        assert moved is None
    else:
        assert moved.coeffs == tuple(sign * x for x in base.coeffs)


def test_l2l1_on_lie2():
    inst = lie2()
    l1 = differential_map(inst.complex)
    # l2 l1 (f1, e1) = l2(l1 f1, e1) = l2(e2, e1) = -e2
    v = composite(inst.l2tilde, l1, ((1, 0), (0, 0)))
    assert v == Elem(0, (0, -1))


def test_jacobiator_of_perturbed4():
    inst = perturbed4()
    v = composite(inst.l2tilde, inst.l2tilde, ((0, 0), (0, 1), (0, 2)))
    assert v == Elem(0, (0, 0, 0, -1))


def test_three_term_jacobiator_expansion():
    inst = perturbed4()
    l2 = inst.l2tilde
    e = [basis_elem((4,), 0, i) for i in range(4)]

    def br(x, y):
        r = l2(x, y)
        return r if r is not None else Elem(0, (0,) * 4)

    for a, b, c in combinations(range(4), 3):
        x, y, z = e[a], e[b], e[c]
        expected = br(br(x, y), z) + br(br(x, z), y).scale(-1) + br(br(y, z), x)
        got = composite(l2, l2, ((0, a), (0, b), (0, c)))
        assert (got or Elem(0, (0,) * 4)) == expected


SL2 = {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}


def lie_structure(table, dim):
    from shlie.complex import ChainComplex
    from shlie.multilinear import ShLieStructure

    cc = ChainComplex((dim,))
    l2 = SkewGradedMap(2, cc.dims, {((0, a), (0, b)): tuple(map(Fraction, v))
                                    for (a, b), v in table.items()})
    return ShLieStructure(cc, {2: l2, 3: SkewGradedMap(3, cc.dims)})


def test_defect_is_jacobiator_for_lie_tables():
    s = lie_structure(SL2, 3)
    assert linfty_defect(s, 3, ((0, 0), (0, 1), (0, 2))).is_zero()
    broken = dict(SL2)
    broken[(1, 2)] = (1, 1, 0)
    s = lie_structure(broken, 3)
    d = linfty_defect(s, 3, ((0, 0), (0, 1), (0, 2)))
    # brute force: [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1]
    l2 = s[2]
    e = [basis_elem((3,), 0, i) for i in range(3)]
    jac = Elem(0, (0, 0, 0))
    for x, y, z in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        inner = l2(e[x], e[y])
        if inner is not None:
            jac = jac + (l2(inner, e[z]) or Elem(0, (0, 0, 0)))
    assert d == jac and not d.is_zero()


class Vec:
    """Coefficient vector with the + and scalar * that generic_defect uses."""

    def __init__(self, coeffs):
        self.c = tuple(coeffs)

    def __add__(self, other):
        return Vec(a + b for a, b in zip(self.c, other.c))

    def __rmul__(self, k):
        return Vec(k * a for a in self.c)


def as_callable(m):
    def f(*args):
        v = m(*(Elem(d, x.c) for d, x in args))
        return None if v is None else (v.degree, Vec(v.coeffs))
    return f


@pytest.mark.parametrize("seed,dims", [(3, (3, 2, 1)), (4, (4, 2, 3, 1))])
def test_generic_defect_agrees_with_linfty_defect(seed, dims):
    s, _ = build_structure(gen_random_acyclic(GenSeed(seed, dims)))
    maps = {k: as_callable(m) for k, m in s.maps.items()}
    rng = random.Random(seed)
    N = len(dims) - 1
    for n in range(1, 5):
        for _ in range(15):
            degs = [rng.randint(0, N) for _ in range(n)]
            if not 0 <= sum(degs) + n - 3 <= N:
                continue
            args = [(d, Vec(Fraction(rng.randint(-2, 2)) for _ in range(dims[d]))) for d in degs]
            g = generic_defect(maps, n, args)
            assert g is None or not any(g[1].c)
            # and agreement term by term on basis tuples, including sign
            idx = [(d, rng.randrange(dims[d])) for d in degs if dims[d]]
            if len(idx) == n:
                basis_args = [(d, Vec(basis_elem(dims, d, i).coeffs)) for d, i in idx]
                g = generic_defect(maps, n, basis_args)
                f = linfty_defect(s, n, idx)
                assert (g is None and f.is_zero()) or tuple(g[1].c) == f.coeffs


def test_generic_defect_detects_a_bad_l2():
    s, _ = build_structure(perturbed4())
    maps = {k: as_callable(m) for k, m in s.maps.items()}
    maps[3] = lambda *a: None
    e = [(0, Vec(basis_elem((4, 2), 0, i).coeffs)) for i in range(4)]
    d = generic_defect(maps, 3, [e[0], e[1], e[2]])
    assert d is not None and d[1].c == (0, 0, 0, -1)


def test_all_permutations_skew_on_built_l3():
    s, _ = build_structure(perturbed4())
    key = ((0, 0), (0, 1), (0, 2))
    base = s[3].value(key).coeffs
    for perm in permutations(range(3)):
        v = s[3].value([key[p] for p in perm]).coeffs
        assert v == tuple(parity(perm) * x for x in base)
