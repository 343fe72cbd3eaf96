"""The standard Courant algebroid on the torus and its three-term sh-Lie algebra."""

import sys

from shlie.geometry import OneForm, TrigPoly, verify_example_structures
from shlie.geometry import courant as C
from shlie.geometry.trig import D_X, D_Y, DY

e1 = C.GSection(D_X, OneForm(0, TrigPoly.sin(1, 0)))
e2 = C.GSection(D_Y, DY)
e3 = C.GSection(xi=OneForm(TrigPoly.cos(0, 1), 0))
print("[e1, e2] =", C.courant_bracket(e1, e2))
print("T(e1, e2, e3) =", C.courant_T(e1, e2, e3))
print("J(e1, e2, e3) == D T:", C.jacobiator(e1, e2, e3) == C.courant_D(C.courant_T(e1, e2, e3)))

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 10
rep = verify_example_structures("courant", samples=samples, seed=0, max_freq=2)
print("%d samples, all checks exact: %s" % (samples, rep.passed))
for name, c in sorted(rep.to_json()["checks"].items()):
    print("  %-34s %d/%d" % (name, c["passed"], c["passed"] + c["failed"]))
