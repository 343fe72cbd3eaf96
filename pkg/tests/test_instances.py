import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shlie import io
from shlie.complex import build_contraction, homology, verify_contraction
from shlie.core import build_structure, check_conditions
from shlie.exactlin import Subspace
from shlie.instances import (
    LieIdealSpec, SpecInvalid, GenSeed, corpus, feasible_dims, gen_lie_ideal, gen_random_acyclic,
    lie2, perturbed4, random_dims,
)


def test_lie2_and_perturbed4_shapes():
    assert lie2().complex.dims == (2, 1)
    assert perturbed4().complex.dims == (4, 2)
    assert perturbed4().bracket(0, 1) == (0, 0, 1, 0)
    assert perturbed4().bracket(1, 0) == (0, 0, -1, 0)


def test_lie_spec_validation():
    # not Jacobi: [e0,e1] = e0, [e1,e2] = e1, [e0,e2] = e1
    bad = LieIdealSpec(3, {(0, 1): (1, 0, 0), (1, 2): (0, 1, 0), (0, 2): (0, 1, 0)},
                       Subspace.zero(3))
    with pytest.raises(SpecInvalid):
        gen_lie_ideal(bad)
    # span{e1} is not an ideal of [e0, e1] = e0
    with pytest.raises(SpecInvalid):
        gen_lie_ideal(LieIdealSpec(2, {(0, 1): (1, 0)}, Subspace(2, [(0, 1)])))
    # mu must be B-valued
    with pytest.raises(SpecInvalid):
        gen_lie_ideal(LieIdealSpec(2, {}, Subspace(2, [(0, 1)]), {(0, 1): (1, 0)}))


def test_zero_ideal_is_the_strong_case():
    sl2 = {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}
    inst = gen_lie_ideal(LieIdealSpec(3, sl2, Subspace.zero(3)))
    assert inst.complex.dims == (3,)
    assert check_conditions(inst).passed


def test_random_instance_example():
    inst = gen_random_acyclic(GenSeed(1, (4, 2)))
    assert inst.complex.dims == (4, 2)
    s, rep = build_structure(inst)
    assert rep.passed


def test_random_instance_without_x1():
    inst = gen_random_acyclic(GenSeed(4, (3,)))
    assert homology(inst.complex).boundaries[0].dim == 0
    assert check_conditions(inst).passed


def test_same_seed_same_bytes():
    a = io.save_instance(gen_random_acyclic(GenSeed(123, (5, 3, 2))))
    b = io.save_instance(gen_random_acyclic(GenSeed(123, (5, 3, 2))))
    assert a == b
    assert io.save_instance(gen_random_acyclic(GenSeed(124, (5, 3, 2)))) != a


def test_infeasible_dims():
    assert not feasible_dims((1, 3))
    assert not feasible_dims((3, 1, 2))
    assert feasible_dims((3, 3, 2))
    with pytest.raises(SpecInvalid):
        gen_random_acyclic(GenSeed(0, (1, 3)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 64 - 1))
def test_generated_instances_pass_conditions_and_contraction(seed):
    dims = random_dims(random.Random(seed))
    inst = gen_random_acyclic(GenSeed(seed, dims))
    h = homology(inst.complex)
    assert h.acyclic
    assert check_conditions(inst, h).passed
    assert verify_contraction(inst.complex, build_contraction(inst.complex, h)).passed


def test_mu_zero_means_no_l3():
    s, _ = build_structure(lie2())
    assert s[3].is_identically_zero()
    sl2 = {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}
    s, rep = build_structure(gen_lie_ideal(LieIdealSpec(3, sl2, Subspace.full(3))))
    assert rep.passed and s[3].is_identically_zero()


def test_corpus_dims_in_range():
    for gs, inst in corpus(40, seed=1):
        assert len(gs.dims) <= 5 and max(gs.dims) <= 8
        assert inst.complex.dims == gs.dims


def test_instance_roundtrip():
    for inst in (lie2(), perturbed4(), gen_random_acyclic(GenSeed(3, (3, 3, 3, 1)))):
        assert io.load_instance(io.save_instance(inst)) == inst


def test_structure_roundtrip():
    s, _ = build_structure(gen_random_acyclic(GenSeed(9, (4, 2, 3, 1))))
    raw = io.save_structure(s)
    assert io.load_structure(raw) == s
    assert io.save_structure(io.load_structure(raw)) == raw


def test_schema_errors():
    good = io.instance_to_json(lie2())
    bad = dict(good, l2tilde=[{"i": 0, "j": 1, "value": ["1/0", "1"]}])
    with pytest.raises(io.SchemaError) as err:
        io.instance_from_json(bad)
    assert err.value.path == "$.l2tilde[0].value[0]"
    with pytest.raises(io.SchemaError) as err:
        io.instance_from_json(dict(good, extra=1))
    assert "extra" in str(err.value)
    with pytest.raises(io.SchemaError):
        io.load_instance(b"{not json")
    with pytest.raises(io.SchemaError):
        io.instance_from_json(dict(good, l2tilde=[{"i": 1, "j": 0, "value": ["0", "1"]}]))
    with pytest.raises(io.SchemaError):
        io.instance_from_json({"dims": {"0": -1}})


def test_missing_degree_has_dimension_zero():
    inst = io.instance_from_json({"dims": {"0": 2, "2": 0}})
    assert inst.complex.dims == (2, 0, 0)


def test_rationals_serialize_in_lowest_terms():
    inst = lie2().with_bracket(0, 1, (Fraction(0), Fraction(4, 6)))
    assert '"2/3"' in io.save_instance(inst).decode()
