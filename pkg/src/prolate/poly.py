"""Dense univariate polynomials and rational functions over Q.

These are deliberately small-scale exact types: all coefficient arithmetic
uses :class:`fractions.Fraction`, rational functions are kept reduced with a
monic denominator, and evaluation accepts any scalar type that supports
mixed arithmetic with Fraction (Fraction, GaussianRational, complex).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .scalars import as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Poly:
    """Polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------

    @staticmethod
    def of(value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return Poly([as_fraction(value)])

    @staticmethod
    def monomial(degree: int, coeff=1) -> "Poly":
        return Poly([0] * degree + [coeff])

    # -- basic structure -----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (_ONE,)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.of(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = Poly.of(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = Poly.of(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return Poly.of(other) - self

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return Poly([ci * c for ci in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly"):
        """Exact polynomial division with remainder."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [_ZERO] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            q = top / lead
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= q * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        q, _ = self.divmod(Poly.of(other))
        return q

    def __mod__(self, other):
        _, r = self.divmod(Poly.of(other))
        return r

    # -- calculus / substitution ----------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, point):
        """Horner evaluation; works for Fraction, GaussianRational, complex."""
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * point + c
        if out is None:
            return _ZERO if not isinstance(point, complex) else 0j
        return out

    def reflect(self) -> "Poly":
        """Substitute x -> -x."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def compose_monomial(self, power: int) -> "Poly":
        """Substitute x -> x^power (power >= 1)."""
        out = [_ZERO] * (self.degree * power + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * power] = c
        return Poly(out)

    @property
    def is_even(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 1)

    @property
    def is_odd(self) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % 2 == 0)

    # -- normalization helpers -------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        return Poly([c / lead for c in self.coeffs])

    def integerized(self):
        """Return (integer-coefficient Poly, scale) with self == poly / scale.

        The integer polynomial has coprime coefficients and positive leading
        coefficient; scale is a nonzero Fraction (negative when the leading
        coefficient of self is negative).
        """
        if self.is_zero:
            return Poly(), _ONE
        denom_lcm = 1
        for c in self.coeffs:
            denom_lcm = denom_lcm * c.denominator // int_gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        sign = 1 if ints[-1] > 0 else -1
        g *= sign
        return Poly([Fraction(v, g) for v in ints]), Fraction(denom_lcm, g)

    # -- printing ---------------------------------------------------------

    def text(self, var: str = "x") -> str:
        """Human/grammar form with integer-normalized ordering, high degree first."""
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeff(e)
            if c == 0:
                continue
            if e == 0:
                body = _frac_str(abs(c))
            else:
                mag = abs(c)
                stem = var if e == 1 else f"{var}^{e}"
                body = stem if mag == 1 else f"{_frac_str(mag)}*{stem}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.text()})"


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly()
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()


ONE_POLY = Poly([1])
ZERO_POLY = Poly()


class RatFun:
    """Reduced rational function num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE_POLY):
        num = Poly.of(num)
        den = Poly.of(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO_POLY, ONE_POLY
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFun is immutable")

    @staticmethod
    def of(value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        if isinstance(value, Poly):
            return RatFun(value)
        return RatFun(Poly.of(value))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_poly(self) -> Poly:
        if not self.is_polynomial:
            raise ValueError(f"not a polynomial: {self!r}")
        return self.num

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, (RatFun, Poly, int, Fraction)):
            o = RatFun.of(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = RatFun.of(other)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RatFun.of(other)
        return RatFun(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return RatFun.of(other) - self

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __mul__(self, other):
        o = RatFun.of(other)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFun.of(other)
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFun.of(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(self.den, self.num) ** (-n)
        return RatFun(self.num ** n, self.den ** n)

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def reflect(self) -> "RatFun":
        return RatFun(self.num.reflect(), self.den.reflect())

    # -- evaluation ------------------------------------------------------------

    def regular_at(self, point) -> bool:
        return bool(self.den(point))

    def __call__(self, point):
        d = self.den(point)
        if not d:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num(point) / d

    def text(self, var: str = "x") -> str:
        if self.is_zero:
            return f"(0)/({self.den.text(var)})"
        # joint integer normalization: one lcm clears every denominator,
        # one gcd makes the pair primitive (den is monic, so its scaled
        # leading coefficient stays positive)
        lcm = 1
        for c in self.num.coeffs + self.den.coeffs:
            lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
        num_ints = [int(c * lcm) for c in self.num.coeffs]
        den_ints = [int(c * lcm) for c in self.den.coeffs]
        g = 0
        for v in num_ints + den_ints:
            g = int_gcd(g, abs(v))
        p = Poly([Fraction(v, g) for v in num_ints])
        q = Poly([Fraction(v, g) for v in den_ints])
        return f"({p.text(var)})/({q.text(var)})"

    def __repr__(self):
        return f"RatFun({self.text()})"


ZERO_RAT = RatFun(0)
ONE_RAT = RatFun(1)
