"""
Seeded sampling checks for the symplectic and Courant examples.

Every individual identity is checked exactly; sampling only chooses the
inputs. Sample i of a run draws from its own generator seeded by
"<seed>/<i>", so a failing sample is replayable on its own.
"""

import random
from collections import OrderedDict
from fractions import Fraction
from typing import Callable, Dict

from ..multilinear import generic_defect, multidegrees
from . import courant as C
from . import symplectic as S
from .trig import OneForm, TrigPoly, VectorField, d, d_form, interior_2form, sharp

TOP_DEGREE = 2
MAX_RELATION = 4


def rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3)))


def rand_poly(rng: random.Random, max_freq: int, max_terms: int = 3) -> TrigPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        k, l = rng.randint(-max_freq, max_freq), rng.randint(-max_freq, max_freq)
        terms[(k, l)] = (rand_rational(rng), rand_rational(rng))
    return TrigPoly(terms)


def rand_closed(rng: random.Random, max_freq: int) -> OneForm:
    return OneForm(rand_rational(rng), rand_rational(rng)) + d(rand_poly(rng, max_freq))


def rand_field(rng: random.Random, max_freq: int) -> VectorField:
    return VectorField(rand_poly(rng, max_freq, 2), rand_poly(rng, max_freq, 2))


def rand_form(rng: random.Random, max_freq: int) -> OneForm:
    return OneForm(rand_poly(rng, max_freq, 2), rand_poly(rng, max_freq, 2))


def rand_section(rng: random.Random, max_freq: int) -> C.GSection:
    return C.GSection(rand_field(rng, max_freq), rand_form(rng, max_freq))


def is_zero(v) -> bool:
    if v is None:
        return True
    if isinstance(v, (int, Fraction)):
        return v == 0
    return v.is_zero()


class ExampleReport:
    """Per-check pass counts and the sample indices of failures."""

    def __init__(self, which, samples, seed, max_freq):
        self.which = which
        self.samples = samples
        self.seed = seed
        self.max_freq = max_freq
        self.checks: Dict[str, Dict] = OrderedDict()

    def record(self, name: str, ok: bool, sample: int, detail=None):
        entry = self.checks.setdefault(name, {"passed": 0, "failed": 0, "witnesses": []})
        if ok:
            entry["passed"] += 1
        else:
            entry["failed"] += 1
            if len(entry["witnesses"]) < 10:
                w = {"sample": sample}
                if detail is not None:
                    w["detail"] = detail
                entry["witnesses"].append(w)

    @property
    def passed(self) -> bool:
        return all(c["failed"] == 0 for c in self.checks.values())

    def failures(self):
        return {k: v for k, v in self.checks.items() if v["failed"]}

    def to_json(self):
        return {
            "example": self.which,
            "samples": self.samples,
            "seed": self.seed,
            "max_freq": self.max_freq,
            "passed": self.passed,
            "checks": {k: dict(v) for k, v in sorted(self.checks.items())},
        }


def relation_multidegrees(top=TOP_DEGREE, max_n=MAX_RELATION):
    """(n, multidegree) pairs whose relation lands in degrees 0..top."""
    out = []
    for n in range(1, max_n + 1):
        for md in multidegrees(top, n):
            t = sum(md) + n - 3
            if 0 <= t <= top:
                out.append((n, md))
    return out


def _check_relations(report, maps, draw: Dict[int, Callable], rng, sample):
    for n, md in relation_multidegrees():
        args = [(deg, draw[deg](rng)) for deg in md]
        v = generic_defect(maps, n, args)
        report.record("linfty_n%d_deg%s" % (n, "".join(map(str, md))),
                      v is None or is_zero(v[1]), sample)


def _symplectic_sample(report, rng, i, mf):
    f, g = rand_poly(rng, mf), rand_poly(rng, mf)
    alpha, beta, gamma = (rand_closed(rng, mf) for _ in range(3))
    k = rand_rational(rng)

    report.record("d_squared_zero", d_form(d(f)).is_zero(), i)
    report.record("sharp_inverts_omega", interior_2form(sharp(beta), TrigPoly.const(1)) == beta, i)
    ab = S.poisson_form(alpha, beta)
    report.record("bracket_closed", ab.is_closed(), i)
    report.record("bracket_skew", ab == -S.poisson_form(beta, alpha), i)
    report.record("bracket_exact_forms", S.poisson_form(d(f), d(g)) == d(S.poisson_fn(f, g)), i)
    jac = (S.poisson_form(S.poisson_form(alpha, beta), gamma)
           - S.poisson_form(S.poisson_form(alpha, gamma), beta)
           + S.poisson_form(S.poisson_form(beta, gamma), alpha))
    report.record("jacobi", jac.is_zero(), i)

    l2 = S.l2_mixed(f, beta)
    report.record("chain_map_l1_l2", d(l2) == S.poisson_form(d(f), beta), i)
    built = S.built_l2_mixed(f, beta)
    report.record("built_l2_matches_up_to_constant", built == l2.without_mean(), i)
    report.record("built_l2_same_differential", d(built) == d(l2), i)
    report.record("built_l2_vanishes_X1_X1", S.built_l2_functions(f, g) == 0, i)
    report.record("built_l2_vanishes_X2_X0", S.built_l2_const(k, beta) == 0, i)
    report.record("hamiltonian_l2_cancel",
                  (S.l2_mixed(g, d(f)) + S.l2_mixed(f, d(g))).is_zero(), i)

    # homotopy identity in each degree
    h = S.eta(alpha)
    report.record("contraction_deg0", S.lam(h) - alpha == d(S.symplectic_s(alpha)), i)
    report.record("contraction_deg1",
                  -f == S.include(S.symplectic_s1(f)) + S.symplectic_s(d(f)), i)
    report.record("contraction_deg2", -k == S.symplectic_s1(S.include(k)), i)

    draw = {0: lambda r: rand_closed(r, mf), 1: lambda r: rand_poly(r, mf),
            2: lambda r: rand_rational(r)}
    _check_relations(report, S.structure_maps(), draw, rng, i)


def _courant_sample(report, rng, i, mf):
    e1, e2, e3 = (rand_section(rng, mf) for _ in range(3))
    f = rand_poly(rng, mf)
    br, pair, D, rho = C.courant_bracket, C.courant_pair, C.courant_D, C.courant_rho

    report.record("bracket_skew", br(e1, e2) == -br(e2, e1), i)
    report.record("axiom1_J_eq_DT", C.jacobiator(e1, e2, e3) == D(C.courant_T(e1, e2, e3)), i)
    report.record("axiom2_anchor_morphism", rho(br(e1, e2)) == rho(e1).bracket(rho(e2)), i)
    lhs = br(e1, f * e2)
    rhs = f * br(e1, e2) + rho(e1)(f) * e2 - pair(e1, e2) * D(f)
    report.record("axiom3_leibniz", lhs == rhs, i)
    report.record("axiom4_rho_D", rho(D(f)).is_zero(), i)
    lhs = rho(e1)(pair(e2, e3))
    rhs = pair(br(e1, e2) + D(pair(e1, e2)), e3) + pair(e2, br(e1, e3) + D(pair(e1, e3)))
    report.record("axiom5_invariance", lhs == rhs, i)
    report.record("D_dual_to_anchor", pair(D(f), e1) == Fraction(1, 2) * rho(e1)(f), i)
    report.record("pairing_symmetric", pair(e1, e2) == pair(e2, e1), i)

    draw = {0: lambda r: rand_section(r, mf), 1: lambda r: rand_poly(r, mf),
            2: lambda r: rand_rational(r)}
    _check_relations(report, C.structure_maps(), draw, rng, i)


def verify_example_structures(which: str, samples: int = 50, seed: int = 0,
                              max_freq: int = 2) -> ExampleReport:
    if which not in ("symplectic", "courant"):
        raise ValueError("unknown example %r" % which)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    report = ExampleReport(which, samples, seed, max_freq)
    run = _symplectic_sample if which == "symplectic" else _courant_sample
    for i in range(samples):
        rng = random.Random("%d/%d" % (seed, i))
        run(report, rng, i, max_freq)
    return report
