"""The two-term sh-Lie algebra of functions and closed 1-forms on the torus."""

import sys

from shlie.geometry import OneForm, TrigPoly, d, verify_example_structures
from shlie.geometry import symplectic as S

f = TrigPoly.sin(1, 0)
beta = OneForm(0, TrigPoly.cos(0, 1)) + d(TrigPoly.cos(1, 1))
print("f =", f)
print("beta =", beta)
print("{df, beta} =", S.poisson_form(d(f), beta))
print("l2(f, beta) =", S.l2_mixed(f, beta))
print("d l2(f, beta) == {df, beta}:", d(S.l2_mixed(f, beta)) == S.poisson_form(d(f), beta))
print("harmonic part and primitive of beta:", S.split(beta))

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 20
rep = verify_example_structures("symplectic", samples=samples, seed=0, max_freq=3)
print("%d samples, all checks exact: %s" % (samples, rep.passed))
for name, c in sorted(rep.to_json()["checks"].items()):
    print("  %-34s %d/%d" % (name, c["passed"], c["passed"] + c["failed"]))
