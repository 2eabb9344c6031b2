"""Two-parameter intersection ring, special geometry and sheaf-charge data.

Divisors are written in the Kahler basis {H, L} (J1 = H, J2 = L) and
curves in {h, l}. The exceptional divisor is E = H - 2L. Everything is
exact over the rationals unless floats are passed in.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .errors import ConstraintError
from .gepner import GepnerModel
from .monodromy import ChargeVector, as_fraction

T1, T2 = sympy.symbols("t1 t2")


@dataclass(frozen=True)
class DivisorClass:
    """a H + b L."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    @classmethod
    def from_LE(cls, l, e) -> "DivisorClass":
        """Class l L + e E, using H = 2L + E."""
        l, e = as_fraction(l), as_fraction(e)
        return cls(e, l - 2 * e)

    def to_LE(self) -> tuple[Fraction, Fraction]:
        """Coefficients (of L, of E)."""
        return 2 * self.a + self.b, self.a

    def __add__(self, o):
        return DivisorClass(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return DivisorClass(self.a - o.a, self.b - o.b)

    def __neg__(self):
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k):
        return DivisorClass(self.a * k, self.b * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __str__(self):
        return _linear_str(((self.a, "H"), (self.b, "L")))


@dataclass(frozen=True)
class CurveClass:
    """c h + d l."""

    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))
        object.__setattr__(self, "d", as_fraction(self.d))

    def __add__(self, o):
        return CurveClass(self.c + o.c, self.d + o.d)

    def __neg__(self):
        return CurveClass(-self.c, -self.d)

    def is_zero(self) -> bool:
        return not self.c and not self.d

    def __str__(self):
        return _linear_str(((self.c, "h"), (self.d, "l")))


def _linear_str(terms) -> str:
    parts = []
    for coeff, sym in terms:
        if coeff:
            parts.append(sym if coeff == 1 else f"-{sym}" if coeff == -1 else f"{coeff}{sym}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


H = DivisorClass(1, 0)
L = DivisorClass(0, 1)
E = DivisorClass(1, -2)
h = CurveClass(1, 0)
l = CurveClass(0, 1)


@dataclass(frozen=True)
class IntersectionRing:
    c111: int
    c112: int
    b1: int
    b2: int
    fiber: tuple[int, int, int] = (0, 0, 0)

    @classmethod
    def from_model(cls, model: GepnerModel) -> "IntersectionRing":
        return cls(*model.intersection_coeffs, fiber=tuple(model.fiber_lattice))

    def triple(self, d1: DivisorClass, d2: DivisorClass, d3: DivisorClass) -> Fraction:
        return triple_intersection(d1, d2, d3, self)

    def fiber_pairing(self, d1: DivisorClass, d2: DivisorClass) -> Fraction:
        """Intersection of two divisors restricted to the K3 fiber."""
        hh, hl, ll = self.fiber
        return d1.a * d2.a * hh + (d1.a * d2.b + d1.b * d2.a) * hl + d1.b * d2.b * ll


def triple_intersection(d1: DivisorClass, d2: DivisorClass, d3: DivisorClass,
                        ring: IntersectionRing) -> Fraction:
    """Trilinear form with H^3 = c111, H^2 L = c112, H L^2 = L^3 = 0."""
    # only the H^3 and H^2 L monomials survive
    hhh = d1.a * d2.a * d3.a
    hhl = d1.a * d2.a * d3.b + d1.a * d2.b * d3.a + d1.b * d2.a * d3.a
    return ring.c111 * hhh + ring.c112 * hhl


def divisor_curve_pairing(D: DivisorClass, C: CurveClass) -> Fraction:
    """H.h = L.l = 2, H.l = L.h = 0."""
    return 2 * (D.a * C.c + D.b * C.d)


# special geometry

def _sym(x):
    if isinstance(x, (float, complex)):
        return sympy.sympify(x)
    x = as_fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def _to_number(val):
    if val.is_Rational:
        return Fraction(int(val.p), int(val.q))
    z = complex(val)
    return z.real if z.imag == 0 else z


def prepotential_expr(ring: IntersectionRing, const=0):
    """Classical prepotential as a sympy expression in (t1, t2)."""
    return (-sympy.Rational(ring.c111, 6) * T1**3 - sympy.Rational(ring.c112, 2) * T1**2 * T2
            + sympy.Rational(1, 24) * (ring.b1 * T1 + ring.b2 * T2) + _sym(const))


@lru_cache(maxsize=None)
def period_polynomials(ring: IntersectionRing, const=0) -> tuple:
    """Pi = (2F - t_i dF/dt_i, F_1, F_2, 1, t1, t2) as sympy polynomials in (t1, t2)."""
    F = prepotential_expr(ring, const)
    F1, F2 = sympy.diff(F, T1), sympy.diff(F, T2)
    top = sympy.expand(2 * F - T1 * F1 - T2 * F2)
    return tuple(sympy.Poly(e, T1, T2) for e in (top, F1, F2, sympy.Integer(1), T1, T2))


def prepotential(ring: IntersectionRing, t1, t2, const=0):
    return _to_number(prepotential_expr(ring, const).subs({T1: _sym(t1), T2: _sym(t2)}))


def period_vector(ring: IntersectionRing, t1, t2, const=0) -> tuple:
    """Values of the period vector at (t1, t2); exact for rational input."""
    subs = {T1: _sym(t1), T2: _sym(t2)}
    return tuple(_to_number(p.as_expr().subs(subs)) for p in period_polynomials(ring, const))


def central_charge(ring: IntersectionRing, n: ChargeVector, t1, t2, const=0):
    """Z(n) = n . Pi(t1, t2)."""
    return sum(x * p for x, p in zip(n.as_tuple(), period_vector(ring, t1, t2, const)))


# charge dictionary

@dataclass(frozen=True)
class ChernData:
    r: Fraction
    c1: DivisorClass
    ch2: CurveClass
    ch3: Fraction

    @property
    def c1_LE(self) -> tuple[Fraction, Fraction]:
        return self.c1.to_LE()


def charge_to_chern(n: ChargeVector) -> ChernData:
    """r = n6, c1 = n41/2 J1 + (n42 - n41) J2, ch2 = n21 h + n22 l, ch3 = -n0 - n41/3 - 2 n42."""
    return ChernData(
        r=n.n6,
        c1=DivisorClass(n.n41 / 2, n.n42 - n.n41),
        ch2=CurveClass(n.n21, n.n22),
        ch3=-n.n0 - n.n41 / 3 - 2 * n.n42,
    )


def chern_to_charge(data: ChernData) -> ChargeVector:
    n41 = 2 * data.c1.a
    n42 = data.c1.b + n41
    return ChargeVector(data.r, n41, n42, -data.ch3 - n41 / 3 - 2 * n42, data.ch2.c, data.ch2.d)


@dataclass(frozen=True)
class MukaiVector:
    """Brane charge in H^0 + H^2 + H^4 + H^6 of the threefold."""

    rank: Fraction
    c1: DivisorClass
    ch2: CurveClass
    ch3: Fraction


def d4_charge(n: ChargeVector) -> MukaiVector:
    """Pure D4 charge (0, n42 J2, n21 h, -n0 - 2 n42)."""
    if n.n6:
        raise ConstraintError(f"D4 charge needs n6 = 0, got {n.n6}")
    return MukaiVector(Fraction(0), DivisorClass(0, n.n42), CurveClass(n.n21, 0), -n.n0 - 2 * n.n42)


def d2_charge(n: ChargeVector) -> MukaiVector:
    """D2 on the base curve: (0, 0, n22 l, -n0)."""
    if n.n6 or n.n41 or n.n42:
        raise ConstraintError("pure D2 charge needs n6 = n41 = n42 = 0")
    if not n.n22:
        raise ConstraintError("pure D2 charge needs n22 != 0")
    return MukaiVector(Fraction(0), DivisorClass(), CurveClass(0, n.n22), -n.n0)


@dataclass(frozen=True)
class FiberMukaiVector:
    """Mukai vector (r, c1, s) on the K3 fiber."""

    rank: Fraction
    c1: DivisorClass
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rank", as_fraction(self.rank))
        object.__setattr__(self, "s", as_fraction(self.s))


def mukai_vector(r, c1: DivisorClass, c2, ring: IntersectionRing) -> FiberMukaiVector:
    """v = (r, c1, c1^2/2 - c2 + r), c1^2 taken in the fiber lattice."""
    r, c2 = as_fraction(r), as_fraction(c2)
    return FiberMukaiVector(r, c1, ring.fiber_pairing(c1, c1) / 2 - c2 + r)


def mukai_pairing(v: FiberMukaiVector, w: FiberMukaiVector, ring: IntersectionRing) -> Fraction:
    """<(r,c,s),(r',c',s')> = c.c' - r s' - r' s."""
    return ring.fiber_pairing(v.c1, w.c1) - v.rank * w.s - w.rank * v.s


def moduli_dimension(v: FiberMukaiVector, ring: IntersectionRing) -> Fraction:
    return mukai_pairing(v, v, ring) + 2


# stability and BPS bookkeeping

def slope(ch0, c1: DivisorClass, omega: DivisorClass, d: int, ring: IntersectionRing) -> Fraction:
    """mu = (omega^{d-1} . c1) / ch0 on the threefold (d=3) or the K3 fiber (d=2)."""
    ch0 = as_fraction(ch0)
    if not ch0:
        raise ConstraintError("slope is undefined for rank 0")
    if d == 3:
        deg = triple_intersection(omega, omega, c1, ring)
    elif d == 2:
        deg = ring.fiber_pairing(omega, c1)
    else:
        raise ValueError(f"dimension must be 2 or 3, got {d}")
    return deg / ch0


def is_slope_semistable(sub: tuple, whole: tuple, omega: DivisorClass, d: int,
                        ring: IntersectionRing) -> bool:
    """True iff mu(sub) <= mu(whole); ``sub`` and ``whole`` are (ch0, c1) pairs."""
    return slope(*sub, omega, d, ring) <= slope(*whole, omega, d, ring)


class BPSClass(str, enum.Enum):
    BPS = "BPS"
    ANTI_BPS = "anti-BPS"
    OUTSIDE = "outside"


def _cone_sign(x, y) -> int:
    """+1 if in the effective cone (both coordinates >= 0, not both 0), -1 if minus that, else 0."""
    if x >= 0 and y >= 0 and (x or y):
        return 1
    if x <= 0 and y <= 0 and (x or y):
        return -1
    return 0


def bps_classify(r, c1: DivisorClass, ch2: CurveClass) -> BPSClass:
    """Lexicographic positivity: r > 0, else c1 > 0, else ch2 > 0."""
    r = as_fraction(r)
    if r:
        sign = 1 if r > 0 else -1
    elif not c1.is_zero():
        sign = _cone_sign(c1.a, c1.b)
    else:
        sign = _cone_sign(ch2.c, ch2.d)
    return {1: BPSClass.BPS, -1: BPSClass.ANTI_BPS, 0: BPSClass.OUTSIDE}[sign]


def dirac_check(e, g) -> bool:
    """e g in 2 pi Z, with the 2 pi factored out of both charges."""
    return (as_fraction(e) * as_fraction(g)).denominator == 1


def cy_fibration_check(K_sigma: int, c1_normal: int) -> bool:
    """Calabi-Yau condition c1(N) = K_Sigma."""
    return c1_normal == K_sigma
