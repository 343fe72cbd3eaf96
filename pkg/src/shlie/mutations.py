"""
Negative controls: single-entry mutations that the checkers must catch.

Three kinds, all stored in fixtures/mutations.json:

  l2tilde   replace one bracket entry l2~(e_i, e_j); check_conditions must fail
  s         add delta to one entry of the homotopy s in degree n;
            verify_contraction must fail
  built_l2  add delta to one coordinate of a built l_2 value;
            verify_theorem2 must report a nonzero defect
"""

import json
from fractions import Fraction
from importlib import resources
from typing import List, Optional

from . import io
from .complex import build_contraction, homology, verify_contraction
from .core import Instance, build_structure, check_conditions, verify_theorem2
from .exactlin import fstr, parse_rational
from .multilinear import ShLieStructure


def fixture_bytes(name: str) -> bytes:
    return resources.files("shlie").joinpath("fixtures", name).read_bytes()


def load_fixture(name: str) -> Instance:
    return io.load_instance(fixture_bytes(name))


def mutate_l2tilde(inst: Instance, i: int, j: int, value) -> Instance:
    return inst.with_bracket(i, j, [Fraction(x) for x in value])


def mutate_s(k, degree: int, row: int, col: int, delta):
    m = k.s[degree]
    return k.with_s(degree, m.replace(row, col, m.entries[row][col] + Fraction(delta)))


def mutate_built_l2(s: ShLieStructure, args, coordinate: int, delta) -> ShLieStructure:
    key = tuple(tuple(a) for a in args)
    old = s[2].value(key)
    target = sum(a[0] for a in key)
    coeffs = list(old.coeffs) if old is not None else [Fraction(0)] * s.complex.dim(target)
    coeffs[coordinate] += Fraction(delta)
    return s.with_map(2, s[2].replace(key, coeffs))


def _l2tilde_case(m):
    inst = mutate_l2tilde(load_fixture(m["fixture"]), m["i"], m["j"],
                          [parse_rational(x) for x in m["value"]])
    rep = check_conditions(inst)
    if rep.passed:
        return False, None
    name = rep.failed()[0]
    wit = (rep.witnesses_i if name == "i" else rep.witnesses_ii)[0]
    return True, dict(wit, condition=name)


def _s_case(m):
    inst = load_fixture(m["fixture"])
    k = build_contraction(inst.complex, homology(inst.complex))
    k = mutate_s(k, m["degree"], m["row"], m["col"], parse_rational(m["delta"]))
    rep = verify_contraction(inst.complex, k)
    return not rep.passed, rep.first_failure


def _built_l2_case(m):
    s, _ = build_structure(load_fixture(m["fixture"]), verify=False)
    s = mutate_built_l2(s, m["args"], m["coordinate"], parse_rational(m["delta"]))
    rep = verify_theorem2(s)
    if rep.defects_zero:
        return False, None
    return True, rep.defect_witnesses[0]


CASES = {"l2tilde": _l2tilde_case, "s": _s_case, "built_l2": _built_l2_case}


def load_mutation_set(raw: Optional[bytes] = None) -> dict:
    if raw is None:
        raw = fixture_bytes("mutations.json")
    return json.loads(raw)


def run_mutation_set(data: Optional[dict] = None) -> List[dict]:
    """One record per mutation: kind, index, detected flag and witness."""
    if data is None:
        data = load_mutation_set()
    out = []
    for kind in sorted(data):
        if kind not in CASES:
            raise ValueError("unknown mutation kind %r" % kind)
        for idx, m in enumerate(data[kind]):
            detected, witness = CASES[kind](m)
            out.append({"kind": kind, "index": idx, "mutation": m,
                        "detected": detected, "witness": witness})
    return out


def enumerate_s_mutations(fixture: str, delta=1):
    """Every single-entry mutation of s on a fixture (used to build the set)."""
    inst = load_fixture(fixture)
    k = build_contraction(inst.complex, homology(inst.complex))
    for n, m in enumerate(k.s):
        for r in range(m.rows):
            for c in range(m.cols):
                yield {"fixture": fixture, "degree": n, "row": r, "col": c, "delta": fstr(Fraction(delta))}
