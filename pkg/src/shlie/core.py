"""
Extending a bracket on X_0 to an sh-Lie structure on the whole complex.

Given a skew bracket l2~ on X_0 whose values on (cycle, boundary) pairs and
whose Jacobiator are boundaries, the maps l_2, l_3, ... are defined one
multidegree at a time by

    l_n = s( sum_{i+j=n+1, j>1} (-1)^{i(j-1)} l_j l_i ),

starting from l_2 = l2~ on X_0 (x) X_0. Before every application of s the
argument is checked to be a boundary.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .complex import ChainComplex, ContractionData, HomologyData, build_contraction, homology
from .exactlin import Matrix, fstr, kernel_basis, zeros
from .multilinear import (
    Elem, ShLieStructure, SkewGradedMap, composite, differential_map, linfty_defect,
    multidegrees, relation_sign, tuples_of_multidegree,
)

DEFAULT_MAX_ARITY = 5


class ConditionsFailed(ValueError):
    def __init__(self, report):
        super().__init__("bracket fails condition %s" % ",".join(report.failed()))
        self.report = report


class BoundaryClaimViolated(AssertionError):
    def __init__(self, arity, multidegree, witness, value):
        super().__init__("arity %d, multidegree %r: %r is not a boundary (witness %r)"
                         % (arity, multidegree, [fstr(a) for a in value], witness))
        self.arity = arity
        self.multidegree = multidegree
        self.witness = witness
        self.value = value


class Instance:
    """A chain complex together with a skew bracket on X_0."""

    def __init__(self, complex: ChainComplex, l2tilde: SkewGradedMap):
        if l2tilde.arity != 2 or l2tilde.dims != complex.dims:
            raise ValueError("l2tilde must be an arity-2 map on the complex")
        if any(md != (0, 0) for md in l2tilde.nonzero_multidegrees()):
            raise ValueError("l2tilde must be supported on X_0 (x) X_0")
        self.complex = complex
        self.l2tilde = l2tilde

    @classmethod
    def from_table(cls, complex: ChainComplex, table) -> "Instance":
        """``table`` maps index pairs (a, b), a < b, to vectors in X_0."""
        values = {}
        for (a, b), v in table.items():
            if a == b:
                if any(v):
                    raise ValueError("skew bracket must vanish on (%d, %d)" % (a, b))
                continue
            key = ((0, a), (0, b)) if a < b else ((0, b), (0, a))
            vv = tuple(Fraction(x) for x in v)
            if a > b:
                vv = tuple(-x for x in vv)
            values[key] = vv
        return cls(complex, SkewGradedMap(2, complex.dims, values))

    def bracket(self, a: int, b: int):
        """l2~(e_a, e_b) as a coefficient tuple."""
        v = self.l2tilde.value(((0, a), (0, b)))
        return v.coeffs if v is not None else zeros(self.complex.dims[0])

    def table(self):
        return {(k[0][1], k[1][1]): v for k, v in sorted(self.l2tilde.values.items())}

    def with_bracket(self, a: int, b: int, value) -> "Instance":
        table = self.table()
        table[(a, b)] = tuple(Fraction(x) for x in value)
        return Instance.from_table(self.complex, table)

    def __eq__(self, other):
        return isinstance(other, Instance) and self.complex == other.complex \
            and self.l2tilde == other.l2tilde

    def __repr__(self):
        return "Instance(dims=%r, brackets=%d)" % (self.complex.dims, len(self.l2tilde.values))


@dataclass
class ConditionReport:
    condition_i: bool = True
    condition_ii: bool = True
    witnesses_i: List[dict] = field(default_factory=list)
    witnesses_ii: List[dict] = field(default_factory=list)
    jacobiators: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.condition_i and self.condition_ii

    def failed(self):
        return [name for name, ok in (("i", self.condition_i), ("ii", self.condition_ii)) if not ok]

    def to_json(self):
        return {
            "passed": self.passed,
            "i": {"passed": self.condition_i, "witnesses": self.witnesses_i},
            "ii": {"passed": self.condition_ii, "witnesses": self.witnesses_ii,
                   "nonzero_jacobiators": self.jacobiators},
        }


def check_conditions(inst: Instance, h: Optional[HomologyData] = None) -> ConditionReport:
    """(i) l2~(c, b) is a boundary; (ii) the Jacobiator of cycles is a boundary.

    Every vector of X_0 is a cycle, so both are checked on basis vectors.
    """
    if h is None:
        h = homology(inst.complex)
    B = h.boundaries[0]
    n0 = inst.complex.dims[0]
    l2 = inst.l2tilde
    report = ConditionReport()
    for c in range(n0):
        ec = Elem(0, tuple(Fraction(int(k == c)) for k in range(n0)))
        for bi, b in enumerate(B.basis):
            v = l2(ec, Elem(0, b))
            if v is not None and not B.contains(v.coeffs):
                report.condition_i = False
                report.witnesses_i.append({
                    "cycle": c, "boundary": [fstr(x) for x in b],
                    "value": [fstr(x) for x in v.coeffs]})
    for triple in combinations(range(n0), 3):
        args = tuple((0, t) for t in triple)
        j = composite(l2, l2, args)
        if j is None:
            continue
        entry = {"args": list(triple), "value": [fstr(x) for x in j.coeffs]}
        report.jacobiators.append(entry)
        if not B.contains(j.coeffs):
            report.condition_ii = False
            report.witnesses_ii.append(entry)
    return report


@dataclass
class BuildReport:
    conditions: Optional[ConditionReport] = None
    lemma_checks: List[dict] = field(default_factory=list)
    theorem2: Optional["Theorem2Report"] = None
    max_arity: int = DEFAULT_MAX_ARITY

    @property
    def lemma_passed(self) -> bool:
        return all(c["pass"] for c in self.lemma_checks)

    @property
    def passed(self) -> bool:
        ok = self.lemma_passed and (self.conditions is None or self.conditions.passed)
        if self.theorem2 is not None:
            ok = ok and self.theorem2.passed
        return ok

    def to_json(self):
        out = {
            "conditions": self.conditions.to_json() if self.conditions else None,
            "lemma_checks": self.lemma_checks,
            "max_arity": self.max_arity,
        }
        if self.theorem2 is not None:
            out.update(self.theorem2.to_json())
        return out


def lemma_sum(maps: Dict[int, SkewGradedMap], n: int, key) -> Tuple[Optional[Elem], bool]:
    """sum_{i+j=n+1, j>1} (-1)^{i(j-1)} l_j l_i on a canonical tuple.

    Also reports whether every l_j l_1 term vanished (always expected in
    degree 0, where l_1 is zero).
    """
    total = None
    l1_terms_zero = True
    for i in range(1, n):
        j = n + 1 - i
        v = composite(maps[j], maps[i], key)
        if v is None:
            continue
        if i == 1:
            l1_terms_zero = False
        v = v.scale(relation_sign(i, j))
        total = v if total is None else total + v
    return total, l1_terms_zero


def extend(inst: Instance, k: ContractionData, max_arity: int = DEFAULT_MAX_ARITY,
           h: Optional[HomologyData] = None, conditions: Optional[ConditionReport] = None):
    """Build l_1..l_max_arity; returns (ShLieStructure, BuildReport).

    Maps are built in increasing arity, and within an arity in increasing
    total input degree, so each step only reads finished data.
    """
    cc = inst.complex
    if h is None:
        h = homology(cc)
    if conditions is None:
        conditions = check_conditions(inst, h)
    if not conditions.passed:
        raise ConditionsFailed(conditions)
    N = cc.max_degree
    report = BuildReport(conditions=conditions, max_arity=max_arity)
    maps: Dict[int, SkewGradedMap] = {1: differential_map(cc)}

    for n in range(2, max_arity + 1):
        if n == 2:
            ln = SkewGradedMap(2, cc.dims, inst.l2tilde.values)
        else:
            ln = SkewGradedMap(n, cc.dims)
        maps[n] = ln
        # the argument of s has degree sum(md) + n - 3, which must be <= N
        for md in sorted(multidegrees(N, n, N - n + 3), key=lambda m: (sum(m), m)):
            total = sum(md)
            if n == 2 and total == 0:
                continue
            ydeg = total + n - 3
            checked = 0
            for key in tuples_of_multidegree(cc.dims, md):
                y, l1_zero = lemma_sum(maps, n, key)
                checked += 1
                if total == 0 and not l1_zero:
                    raise AssertionError("l_j l_1 term nonzero in degree 0 at %r" % (key,))
                if y is None:
                    continue
                if not h.boundaries[ydeg].contains(y.coeffs):
                    report.lemma_checks.append(
                        {"arity": n, "multidegree": list(md), "tuples": checked, "pass": False,
                         "witness": [list(b) for b in key]})
                    raise BoundaryClaimViolated(n, md, key, y.coeffs)
                if ydeg < N:
                    ln._store(key, k.apply_s(ydeg, y.coeffs))
            if checked:
                report.lemma_checks.append(
                    {"arity": n, "multidegree": list(md), "tuples": checked, "pass": True})
    return ShLieStructure(cc, maps), report


@dataclass
class Theorem2Report:
    l2_high: bool = True
    l3_pos: bool = True
    l4: Optional[bool] = None
    l5: Optional[bool] = None
    max_defect_by_arity: Dict[int, Fraction] = field(default_factory=dict)
    defect_witnesses: List[dict] = field(default_factory=list)
    vanishing_witnesses: List[dict] = field(default_factory=list)
    nonzero: Dict[int, list] = field(default_factory=dict)
    tuples_checked: Dict[int, int] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    @property
    def vanishing_passed(self) -> bool:
        return self.l2_high and self.l3_pos and self.l4 is not False and self.l5 is not False

    @property
    def defects_zero(self) -> bool:
        return all(v == 0 for v in self.max_defect_by_arity.values())

    @property
    def passed(self) -> bool:
        return self.vanishing_passed and self.defects_zero

    def to_json(self):
        return {
            "theorem2": {"l2_high": self.l2_high, "l3_pos": self.l3_pos,
                         "l4": self.l4, "l5": self.l5},
            "max_defect_by_arity": {str(n): fstr(v)
                                    for n, v in sorted(self.max_defect_by_arity.items())},
            "tuples_checked": {str(n): c for n, c in sorted(self.tuples_checked.items())},
            "defect_witnesses": self.defect_witnesses,
            "vanishing_witnesses": self.vanishing_witnesses,
            "nonzero_multidegrees": {str(n): [list(md) for md in mds]
                                     for n, mds in sorted(self.nonzero.items())},
            "warnings": self.warnings,
        }


def verify_theorem2(s: ShLieStructure) -> Theorem2Report:
    """Vanishing claims plus an exhaustive sweep of the sh-Lie relations.

    l_2 must vanish in total degree > 1, l_3 in total degree > 0, and l_4,
    l_5 everywhere. The relation of arity n <= max_arity is evaluated on
    every canonical basis tuple whose output degree lies in the complex.
    """
    rep = Theorem2Report()
    for k in range(2, s.max_arity + 1):
        mds = s[k].nonzero_multidegrees()
        if mds:
            rep.nonzero[k] = mds
    for md in rep.nonzero.get(2, []):
        if sum(md) > 1:
            rep.l2_high = False
            rep.vanishing_witnesses.append({"arity": 2, "multidegree": list(md)})
    for md in rep.nonzero.get(3, []):
        if sum(md) > 0:
            rep.l3_pos = False
            rep.vanishing_witnesses.append({"arity": 3, "multidegree": list(md)})
    for k, attr in ((4, "l4"), (5, "l5")):
        if k <= s.max_arity:
            ok = s[k].is_identically_zero()
            setattr(rep, attr, ok)
            if not ok:
                rep.vanishing_witnesses.append({"arity": k, "multidegree": list(rep.nonzero[k][0])})
        else:
            rep.warnings.append("l%d not built (max_arity=%d); claim unchecked" % (k, s.max_arity))
    if s.max_arity < 3:
        rep.warnings.append("relations of arity > %d unchecked" % s.max_arity)

    N = s.complex.max_degree
    for n in range(1, s.max_arity + 1):
        worst = Fraction(0)
        count = 0
        # output degree sum + n - 3 must be in 0..N
        for md in multidegrees(N, n, N - n + 3):
            if sum(md) + n - 3 < 0:
                continue
            for key in tuples_of_multidegree(s.dims, md):
                count += 1
                d = linfty_defect(s, n, key)
                m = max((abs(x) for x in d.coeffs), default=Fraction(0))
                if m:
                    if m > worst:
                        worst = m
                    if len(rep.defect_witnesses) < 20:
                        rep.defect_witnesses.append({
                            "arity": n, "args": [list(b) for b in key],
                            "defect": [fstr(x) for x in d.coeffs]})
        rep.max_defect_by_arity[n] = worst
        rep.tuples_checked[n] = count
    return rep


def build_structure(inst: Instance, max_arity: int = DEFAULT_MAX_ARITY, rng=None,
                    verify: bool = True):
    """homology -> conditions -> contraction -> extension -> verification."""
    h = homology(inst.complex)
    cond = check_conditions(inst, h)
    if not cond.passed:
        raise ConditionsFailed(cond)
    k = build_contraction(inst.complex, h, rng=rng)
    structure, report = extend(inst, k, max_arity, h=h, conditions=cond)
    if verify:
        report.theorem2 = verify_theorem2(structure)
    return structure, report


def truncate(inst: Instance) -> Instance:
    """Replace everything above degree 1 by X_2 = ker(l_1: X_1 -> X_0) and the inclusion."""
    cc = inst.complex
    if cc.max_degree < 1:
        raise ValueError("truncation needs degrees 0 and 1")
    d1 = cc.diff[1]
    ker = kernel_basis(d1)
    incl = Matrix.from_columns(cc.dims[1], ker.basis)
    new = ChainComplex((cc.dims[0], cc.dims[1], ker.dim), {1: d1, 2: incl})
    return Instance(new, SkewGradedMap(2, new.dims, inst.l2tilde.values))
