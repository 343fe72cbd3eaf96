"""
The closed-one-form complex of the symplectic torus (T^2, dx ^ dy):

    X_2 = Q (constants)  --incl-->  X_1 = functions  --d-->  X_0 = closed 1-forms

with the bracket of closed one-forms on X_0 and its sh-Lie extension.
"""

from fractions import Fraction
from typing import Tuple

from .trig import (
    OneForm, TrigPoly, d, hamiltonian, interior_2form, lie_derivative, omega, sharp,
)


class NotClosed(ValueError):
    pass


def _require_closed(*forms):
    for a in forms:
        if not a.is_closed():
            raise NotClosed("one-form %r is not closed" % (a,))


def poisson_fn(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """{f, g} = omega(X_f, X_g) = f_x g_y - f_y g_x."""
    return omega(hamiltonian(f), hamiltonian(g))


def poisson_form(alpha: OneForm, beta: OneForm) -> OneForm:
    """{a, b} = L_{b#} a - L_{a#} b + d(i_{a#} i_{b#} omega)."""
    _require_closed(alpha, beta)
    a_s, b_s = sharp(alpha), sharp(beta)
    i_b_omega = interior_2form(b_s, TrigPoly.const(1))
    return lie_derivative(b_s, alpha) - lie_derivative(a_s, beta) + d(i_b_omega(a_s))


def l2_mixed(f: TrigPoly, beta: OneForm) -> TrigPoly:
    """l_2(f, beta) = L_{beta#} f, for f in X_1 and beta in X_0."""
    return sharp(beta)(f)


def split(alpha: OneForm) -> Tuple[Tuple[Fraction, Fraction], TrigPoly]:
    """alpha = a dx + b dy + d f0 with f0 of zero mean; returns ((a, b), f0).

    Each nonconstant Fourier mode of the primitive is recovered by dividing
    by k^2 + l^2.
    """
    _require_closed(alpha)
    harmonic = alpha.harmonic()
    terms = {}
    freqs = set(alpha.P.terms) | set(alpha.Q.terms)
    zero = (Fraction(0), Fraction(0))
    for (k, l) in freqs:
        if (k, l) == (0, 0):
            continue
        pc, ps = alpha.P.terms.get((k, l), zero)
        qc, qs = alpha.Q.terms.get((k, l), zero)
        n2 = k * k + l * l
        # f = c cos + s sin  =>  f_x = k s cos - k c sin,  f_y = l s cos - l c sin
        s = (k * pc + l * qc) / n2
        c = -(k * ps + l * qs) / n2
        terms[(k, l)] = (c, s)
    f0 = TrigPoly(terms)
    return harmonic, f0


def symplectic_s(alpha: OneForm) -> TrigPoly:
    """Homotopy X_0 -> X_1: minus the zero-mean primitive of alpha."""
    return -split(alpha)[1]


def symplectic_s1(f: TrigPoly) -> Fraction:
    """Homotopy X_1 -> X_2: minus the mean of f."""
    return -f.mean()


def eta(alpha: OneForm) -> Tuple[Fraction, Fraction]:
    """Projection X_0 -> H_0 = Q^2: the harmonic part."""
    return split(alpha)[0]


def lam(h: Tuple[Fraction, Fraction]) -> OneForm:
    return OneForm(h[0], h[1])


def include(k) -> TrigPoly:
    return TrigPoly.const(k)


def built_l2_mixed(f: TrigPoly, beta: OneForm) -> TrigPoly:
    """l_2(f, beta) from the inductive formula -s(l_2 l_1(f, beta)) = -s({df, beta})."""
    return -symplectic_s(poisson_form(d(f), beta))


def built_l2_functions(f: TrigPoly, g: TrigPoly) -> Fraction:
    """l_2 on X_1 (x) X_1 from the inductive formula; lands in X_2.

    l_2 l_1(f, g) = l_2(df, g) - l_2(f, dg) = -L_{X_f} g - L_{X_g} f.
    """
    inner = -l2_mixed(g, d(f)) - l2_mixed(f, d(g))
    return -symplectic_s1(inner)


def built_l2_const(k: Fraction, beta: OneForm) -> Fraction:
    """l_2 on X_2 (x) X_0 from the inductive formula: -s(l_2(incl k, beta))."""
    return -symplectic_s1(l2_mixed(include(k), beta))


def structure_maps():
    """The explicit maps l_1, l_2 (l_n = 0 for n > 2) on (degree, value) pairs."""

    def l1(x):
        deg, v = x
        if deg == 1:
            return (0, d(v))
        if deg == 2:
            return (1, include(v))
        return None

    def l2(x, y):
        degs = (x[0], y[0])
        if degs == (0, 0):
            return (0, poisson_form(x[1], y[1]))
        if degs == (1, 0):
            return (1, l2_mixed(x[1], y[1]))
        if degs == (0, 1):
            return (1, -l2_mixed(y[1], x[1]))
        return None

    return {1: l1, 2: l2, 3: lambda *a: None, 4: lambda *a: None}
