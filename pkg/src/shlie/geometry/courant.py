"""
The standard Courant algebroid E = TM + T*M over the flat 2-torus.

    [(X,a), (Y,b)] = ([X,Y], L_X b - L_Y a - 1/2 d(i_X b - i_Y a))
    <(X,a), (Y,b)> = 1/2 (i_X b + i_Y a)
    rho(X,a) = X,   D f = (0, df)

and the three-term sh-Lie complex  ker D -> C^oo(M) -> Gamma(E).
"""

from fractions import Fraction

from .trig import OneForm, TrigPoly, VectorField, d, lie_derivative

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


class GSection:
    """A section (X, xi) of TM + T*M."""

    __slots__ = ("X", "xi")

    def __init__(self, X=None, xi=None):
        self.X = X if X is not None else VectorField()
        self.xi = xi if xi is not None else OneForm()

    def __add__(self, other):
        return GSection(self.X + other.X, self.xi + other.xi)

    def __neg__(self):
        return GSection(-self.X, -self.xi)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        """Scaling by a rational or multiplication by a function."""
        return GSection(self.X * c, self.xi * c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.X.is_zero() and self.xi.is_zero()

    def __eq__(self, other):
        return isinstance(other, GSection) and self.X == other.X and self.xi == other.xi

    def __repr__(self):
        return "GSection(%r, %r)" % (self.X, self.xi)


def courant_rho(e: GSection) -> VectorField:
    return e.X


def courant_pair(e1: GSection, e2: GSection) -> TrigPoly:
    return HALF * (e2.xi(e1.X) + e1.xi(e2.X))


def courant_D(f: TrigPoly) -> GSection:
    return GSection(VectorField(), d(f))


def courant_bracket(e1: GSection, e2: GSection) -> GSection:
    X, a = e1.X, e1.xi
    Y, b = e2.X, e2.xi
    form = lie_derivative(X, b) - lie_derivative(Y, a) - d(b(X) - a(Y)) * HALF
    return GSection(X.bracket(Y), form)


def courant_T(e1: GSection, e2: GSection, e3: GSection) -> TrigPoly:
    """1/3 <[e1,e2],e3> + cyclic permutations."""
    return THIRD * (courant_pair(courant_bracket(e1, e2), e3)
                    + courant_pair(courant_bracket(e2, e3), e1)
                    + courant_pair(courant_bracket(e3, e1), e2))


def jacobiator(e1: GSection, e2: GSection, e3: GSection) -> GSection:
    br = courant_bracket
    return br(br(e1, e2), e3) + br(br(e2, e3), e1) + br(br(e3, e1), e2)


def structure_maps():
    """Explicit l_1, l_2, l_3 on (degree, value) pairs; l_n = 0 for n > 3.

    X_0 = sections, X_1 = functions, X_2 = ker D = constants.
    """

    def l1(x):
        deg, v = x
        if deg == 1:
            return (0, courant_D(v))
        if deg == 2:
            return (1, TrigPoly.const(v))
        return None

    def l2(x, y):
        degs = (x[0], y[0])
        if degs == (0, 0):
            return (0, courant_bracket(x[1], y[1]))
        if degs == (0, 1):
            return (1, courant_pair(x[1], courant_D(y[1])))
        if degs == (1, 0):
            return (1, -courant_pair(y[1], courant_D(x[1])))
        return None

    def l3(x, y, z):
        if (x[0], y[0], z[0]) == (0, 0, 0):
            return (1, -courant_T(x[1], y[1], z[1]))
        return None

    return {1: l1, 2: l2, 3: l3, 4: lambda *a: None}
