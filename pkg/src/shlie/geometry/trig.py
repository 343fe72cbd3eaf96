"""
Exact calculus on the flat 2-torus with coordinates (x, y).

Functions are trigonometric polynomials with rational coefficients,

    f = sum a_kl cos(kx + ly) + b_kl sin(kx + ly),

stored on canonical frequencies: (k, l) with k > 0, or k = 0 and l >= 0.
Products use the product-to-sum identities, so everything stays rational.
Vector fields are A d/dx + B d/dy, one-forms P dx + Q dy; the symplectic
form is dx ^ dy.
"""

import math
from fractions import Fraction
from typing import Dict, Tuple

Freq = Tuple[int, int]
HALF = Fraction(1, 2)


def _canonical(k: int, l: int) -> bool:
    return k > 0 or (k == 0 and l >= 0)


class TrigPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: Dict[Freq, Tuple[Fraction, Fraction]] = {}
        for (k, l), (c, s) in (terms or {}).items():
            if type(c) is not Fraction:
                c = Fraction(c)
            if type(s) is not Fraction:
                s = Fraction(s)
            self._add_term(k, l, c, s)

    def _add_term(self, k, l, c, s):
        if not _canonical(k, l):
            k, l, s = -k, -l, -s
        if k == 0 and l == 0:
            s = Fraction(0)
        if not c and not s:
            return
        c0, s0 = self.terms.get((k, l), (Fraction(0), Fraction(0)))
        c0, s0 = c0 + c, s0 + s
        if c0 or s0:
            self.terms[(k, l)] = (c0, s0)
        else:
            del self.terms[(k, l)]

    @classmethod
    def _raw(cls, terms) -> "TrigPoly":
        """Wrap terms that are already canonical, nonzero Fractions."""
        out = cls.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def const(cls, c) -> "TrigPoly":
        return cls({(0, 0): (c, 0)})

    @classmethod
    def cos(cls, k: int, l: int, c=1) -> "TrigPoly":
        return cls({(k, l): (c, 0)})

    @classmethod
    def sin(cls, k: int, l: int, c=1) -> "TrigPoly":
        return cls({(k, l): (0, c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def mean(self) -> Fraction:
        return self.terms.get((0, 0), (Fraction(0), Fraction(0)))[0]

    def without_mean(self) -> "TrigPoly":
        return TrigPoly({f: t for f, t in self.terms.items() if f != (0, 0)})

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.const(other)
        terms = dict(self.terms)
        for f, (c, s) in other.terms.items():
            t = terms.get(f)
            if t is None:
                terms[f] = (c, s)
                continue
            c, s = t[0] + c, t[1] + s
            if c or s:
                terms[f] = (c, s)
            else:
                del terms[f]
        return TrigPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly._raw({f: (-c, -s) for f, (c, s) in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Fraction(other)
            return TrigPoly({f: (other * c, other * s) for f, (c, s) in self.terms.items()})
        # accumulate doubled coefficients on raw frequencies, halve once
        acc = {}

        def put(k, l, c, s):
            if not _canonical(k, l):
                k, l, s = -k, -l, -s
            t = acc.get((k, l))
            if t is None:
                acc[(k, l)] = [c, s]
            else:
                t[0] += c
                t[1] += s

        for (k1, l1), (a1, b1) in self.terms.items():
            for (k2, l2), (a2, b2) in other.terms.items():
                aa = a1 * a2 if a1 and a2 else 0
                bb = b1 * b2 if b1 and b2 else 0
                ab = a1 * b2 if a1 and b2 else 0
                ba = b1 * a2 if b1 and a2 else 0
                put(k1 + k2, l1 + l2, aa - bb, ab + ba)
                put(k1 - k2, l1 - l2, aa + bb, ba - ab)
        out = TrigPoly()
        for (k, l), (c, s) in acc.items():
            if k == 0 and l == 0:
                s = 0
            if c or s:
                out.terms[(k, l)] = (Fraction(c) * HALF, Fraction(s) * HALF)
        return out

    def __rmul__(self, other):
        return self * other

    def dx(self) -> "TrigPoly":
        return TrigPoly({(k, l): (k * s, -k * c) for (k, l), (c, s) in self.terms.items()})

    def dy(self) -> "TrigPoly":
        return TrigPoly({(k, l): (l * s, -l * c) for (k, l), (c, s) in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            if isinstance(other, (int, Fraction)):
                return self == TrigPoly.const(other)
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def max_freq(self) -> int:
        return max((max(abs(k), abs(l)) for k, l in self.terms), default=0)

    def __call__(self, x: float, y: float) -> float:
        return sum(float(c) * math.cos(k * x + l * y) + float(s) * math.sin(k * x + l * y)
                   for (k, l), (c, s) in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, l), (c, s) in sorted(self.terms.items()):
            arg = "%dx%+dy" % (k, l)
            if c:
                parts.append("%s*cos(%s)" % (c, arg) if (k, l) != (0, 0) else str(c))
            if s:
                parts.append("%s*sin(%s)" % (s, arg))
        return " + ".join(parts)

    def to_json(self):
        from ..exactlin import fstr
        return [[k, l, fstr(c), fstr(s)] for (k, l), (c, s) in sorted(self.terms.items())]


ZERO = TrigPoly()


def _poly(x) -> TrigPoly:
    return x if isinstance(x, TrigPoly) else TrigPoly.const(x)


class VectorField:
    __slots__ = ("A", "B")

    def __init__(self, A=ZERO, B=ZERO):
        self.A = _poly(A)
        self.B = _poly(B)

    def __add__(self, other):
        return VectorField(self.A + other.A, self.B + other.B)

    def __neg__(self):
        return VectorField(-self.A, -self.B)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return VectorField(self.A * c, self.B * c)

    __rmul__ = __mul__

    def __call__(self, f: TrigPoly) -> TrigPoly:
        """Directional derivative V(f)."""
        return self.A * f.dx() + self.B * f.dy()

    def bracket(self, other: "VectorField") -> "VectorField":
        return VectorField(self(other.A) - other(self.A), self(other.B) - other(self.B))

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero()

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.A == other.A and self.B == other.B

    def __repr__(self):
        return "VectorField(%r, %r)" % (self.A, self.B)


class OneForm:
    __slots__ = ("P", "Q")

    def __init__(self, P=ZERO, Q=ZERO):
        self.P = _poly(P)
        self.Q = _poly(Q)

    def __add__(self, other):
        return OneForm(self.P + other.P, self.Q + other.Q)

    def __neg__(self):
        return OneForm(-self.P, -self.Q)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return OneForm(self.P * c, self.Q * c)

    __rmul__ = __mul__

    def __call__(self, V: VectorField) -> TrigPoly:
        """Pairing with a vector field (interior product i_V alpha)."""
        return V.A * self.P + V.B * self.Q

    def is_zero(self) -> bool:
        return self.P.is_zero() and self.Q.is_zero()

    def is_closed(self) -> bool:
        return d_form(self).is_zero()

    def harmonic(self) -> Tuple[Fraction, Fraction]:
        return (self.P.mean(), self.Q.mean())

    def __eq__(self, other):
        return isinstance(other, OneForm) and self.P == other.P and self.Q == other.Q

    def __repr__(self):
        return "OneForm(%r, %r)" % (self.P, self.Q)


DX = OneForm(1, 0)
DY = OneForm(0, 1)
D_X = VectorField(1, 0)
D_Y = VectorField(0, 1)


def d(f: TrigPoly) -> OneForm:
    return OneForm(f.dx(), f.dy())


def d_form(alpha: OneForm) -> TrigPoly:
    """Coefficient of dx ^ dy in d(alpha)."""
    return alpha.Q.dx() - alpha.P.dy()


def interior_2form(V: VectorField, g: TrigPoly) -> OneForm:
    """i_V (g dx ^ dy)."""
    return OneForm(-g * V.B, g * V.A)


def lie_derivative(V: VectorField, alpha: OneForm) -> OneForm:
    """L_V alpha = i_V d alpha + d i_V alpha."""
    return interior_2form(V, d_form(alpha)) + d(alpha(V))


def sharp(alpha: OneForm) -> VectorField:
    """The vector field V with i_V (dx ^ dy) = alpha."""
    return VectorField(alpha.Q, -alpha.P)


def omega(V: VectorField, W: VectorField) -> TrigPoly:
    """(dx ^ dy)(V, W)."""
    return V.A * W.B - V.B * W.A


def hamiltonian(f: TrigPoly) -> VectorField:
    return sharp(d(f))
