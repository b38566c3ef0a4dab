"""Dense univariate polynomials and rational functions with exact rational
coefficients.

Values are immutable, equality is decidable: rational functions are kept as
reduced fractions with monic denominator.  Coefficients are stored as plain
``int`` whenever possible and as ``fractions.Fraction`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Polynomial in one formal variable, coefficients in ascending order."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "c", tuple(_canon(x) for x in coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        object.__setattr__(p, "c", tuple(coeffs))
        return p

    @classmethod
    def const(cls, value):
        return cls((value,))

    @classmethod
    def x_pow(cls, n, coeff=1):
        return cls([0] * n + [coeff])

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.c

    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.c) - 1

    def leading(self):
        return self.c[-1] if self.c else 0

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Poly(%r)" % (list(self.c),)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-v for v in self.c))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(v * other for v in self.c)
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    out[i + j] += av * bv
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k):
        """Multiply by x**k (k >= 0)."""
        if not self.c:
            return self
        return Poly._raw((0,) * k + self.c)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = other.degree()
        lead = other.c[-1]
        if len(rem) <= dq:
            return Poly(), self
        quo = [0] * (len(rem) - dq)
        inv = Fraction(1, 1) / lead
        for i in range(len(rem) - 1, dq - 1, -1):
            coef = rem[i]
            if coef == 0:
                continue
            q = _canon(coef * inv)
            quo[i - dq] = q
            for j, v in enumerate(other.c):
                rem[i - dq + j] -= q * v
        return Poly(quo), Poly(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def __call__(self, value):
        acc = 0
        for coef in reversed(self.c):
            acc = acc * value + coef
        return _canon(acc)

    def subst_pow(self, k):
        """Substitute x -> x**k."""
        if k == 1 or not self.c:
            return self
        out = [0] * ((len(self.c) - 1) * k + 1)
        for i, v in enumerate(self.c):
            out[i * k] = v
        return Poly(out)

    def monic(self):
        if self.is_zero() or self.c[-1] == 1:
            return self
        inv = Fraction(1, 1) / self.c[-1]
        return Poly(v * inv for v in self.c)

    def low_order(self):
        """Multiplicity of the root 0."""
        for i, v in enumerate(self.c):
            if v:
                return i
        return -1


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


ONE = Poly((1,))


class RationalFunction:
    """Quotient of two polynomials in normal form: reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        if isinstance(den, (int, Fraction)):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = ONE
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.c[-1]
            if lead != 1:
                inv = Fraction(1, 1) / lead
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def of(cls, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Poly):
            return cls(value)
        return cls(Poly.const(value))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == ONE

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %r" % (self,))
        return self.num

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.of(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RationalFunction.of(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunction)
        object.__setattr__(r, "num", -self.num)
        object.__setattr__(r, "den", self.den)
        return r

    def __sub__(self, other):
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other):
        return RationalFunction.of(other) + (-self)

    def __mul__(self, other):
        other = RationalFunction.of(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.of(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.of(other) / self

    def __pow__(self, n):
        if n < 0:
            return (RationalFunction.of(1) / self) ** (-n)
        r = RationalFunction.of(1)
        for _ in range(n):
            r = r * self
        return r

    def __call__(self, value):
        den = self.den(value)
        if den == 0:
            raise ZeroDivisionError("pole at %r" % (value,))
        return _canon(Fraction(1, 1) * self.num(value) / den)

    def __repr__(self):
        if self.is_polynomial():
            return "RationalFunction(%r)" % (list(self.num.c),)
        return "RationalFunction(%r, %r)" % (list(self.num.c), list(self.den.c))
