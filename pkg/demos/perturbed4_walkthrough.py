"""Build the sh-Lie structure on the perturbed4 fixture and show where it
stops being a Lie algebra."""

from shlie.complex import build_contraction, homology
from shlie.core import build_structure, check_conditions
from shlie.exactlin import fstr
from shlie.instances import perturbed4
from shlie.multilinear import basis_elem, composite


def show(v):
    return "0" if v is None else "(%s) in X_%d" % (", ".join(fstr(x) for x in v.coeffs), v.degree)


inst = perturbed4()
cc = inst.complex
print("dims:", cc.dims)
print("homology:", homology(cc).h_dims)

rep = check_conditions(inst)
print("conditions (i), (ii):", rep.condition_i, rep.condition_ii)
for j in rep.jacobiators:
    print("  Jacobiator on", j["args"], "=", j["value"], "(a boundary, so allowed)")

k = build_contraction(cc)
print("s(e4) =", [fstr(x) for x in k.s[0].apply(basis_elem(cc.dims, 0, 3).coeffs)])

s, build = build_structure(inst)
print("l2l2(e1, e2, e3) =", show(composite(s[2], s[2], ((0, 0), (0, 1), (0, 2)))))
print("l3(e1, e2, e3) =", show(s[3].value(((0, 0), (0, 1), (0, 2)))))
t2 = build.theorem2
print("nonzero multidegrees:", {n: mds for n, mds in sorted(t2.nonzero.items())})
print("max defect by arity:", {n: fstr(v) for n, v in sorted(t2.max_defect_by_arity.items())})
print("l4, l5 vanish:", t2.l4, t2.l5)
