"""The exact coefficient field Q(u, v, w) = Q(q^(1/2), t^(1/2), T^(1/2)).

A Scalar is a fraction of two SparsePoly values.  Normalization removes the
monomial content common to numerator and denominator and the shared rational
content, and fixes the sign so the denominator's leading coefficient (in the
graded-lex order) is positive.  No multivariate gcd is ever computed:
equality is decided by cross-multiplication.

FactoredScalar is the workhorse for building the big tableau sums: it keeps a
product of binomial factors (1 - c*u^a v^b w^c) unexpanded, so that sums of
many q-shifted-factorial ratios can share a true least-common denominator
instead of the naive product of denominators.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import PoleError
from .poly import Mon, SparsePoly

_ZERO_P = SparsePoly.zero()
_ONE_P = SparsePoly.one()


def _coerce_poly(x) -> SparsePoly | None:
    if isinstance(x, SparsePoly):
        return x
    if isinstance(x, (int, Fraction)):
        return SparsePoly.const(x)
    if isinstance(x, Mon):
        return SparsePoly.from_mon(x)
    return None


class Scalar:
    """Element of the fraction field of Q[u, v, w]."""

    __slots__ = ("num", "den")

    def __init__(self, num: SparsePoly, den: SparsePoly = _ONE_P, *, _normalized=False):
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("Scalar with zero denominator")
        if num.is_zero():
            self.num = _ZERO_P
            self.den = _ONE_P
            return
        mu = tuple(min(a, b) for a, b in zip(num.min_exps(), den.min_exps()))
        if any(mu):
            num = num.shift(tuple(-e for e in mu))
            den = den.shift(tuple(-e for e in mu))
        s = den.content  # sign matches den's leading coefficient
        self.num = num.scaled(1 / s)
        self.den = den.scaled(1 / s)

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return cls(_ZERO_P, _ONE_P, _normalized=True)

    @classmethod
    def one(cls) -> "Scalar":
        return cls(_ONE_P, _ONE_P, _normalized=True)

    @classmethod
    def of(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        p = _coerce_poly(x)
        if p is None:
            raise TypeError(f"cannot coerce {x!r} to Scalar")
        return cls(p)

    @classmethod
    def from_mon(cls, m: Mon) -> "Scalar":
        pos = tuple(max(e, 0) for e in m.exp)
        neg = tuple(max(-e, 0) for e in m.exp)
        num = SparsePoly.from_mon(Mon(m.coef, pos))
        den = SparsePoly.from_mon(Mon(1, neg))
        return cls(num, den)

    # -- field operations ------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, Scalar):
            return other
        p = _coerce_poly(other)
        return None if p is None else Scalar(p)

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return Scalar(self.num + o.num, self.den)
        return Scalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return Scalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        return Scalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return Scalar.one() / self ** (-k)
        out = Scalar.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        # cross-multiplication, never a canonical-form comparison
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        raise TypeError("Scalar is not hashable (equality is by cross-multiplication)")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero Scalar")
        return Scalar(self.den, self.num)

    # -- extras -----------------------------------------------------------

    def sqrt(self) -> "Scalar":
        """Square root when num and den are perfect-square monomials."""
        if self.is_zero():
            return Scalar.zero()
        if not (self.num.is_monomial() and self.den.is_monomial()):
            raise ValueError("sqrt requires a monomial Scalar")
        mn, md = self.num.monomial(), self.den.monomial()
        m = Mon(mn.coef / md.coef, tuple(a - b for a, b in zip(mn.exp, md.exp)))
        if any(e % 2 for e in m.exp):
            raise ValueError("sqrt: odd generator exponent")
        c = m.coef
        if c < 0:
            raise ValueError("sqrt of a negative monomial")
        rn, rd = isqrt(c.numerator), isqrt(c.denominator)
        if rn * rn != c.numerator or rd * rd != c.denominator:
            raise ValueError("sqrt: coefficient is not a perfect square")
        return Scalar.from_mon(Mon(Fraction(rn, rd), tuple(e // 2 for e in m.exp)))

    def canonical(self) -> "Scalar":
        """The gcd-reduced representative, for serialization boundaries only.

        Arithmetic never calls this; values compare equal to their canonical
        form by cross-multiplication.
        """
        from .poly import poly_gcd
        if self.is_zero() or self.den == _ONE_P:
            return self
        g = poly_gcd(self.num, self.den)
        if g.is_monomial():
            return self
        num = _exact_poly_div(self.num, g)
        den = _exact_poly_div(self.den, g)
        return Scalar(num, den)

    def eval(self, u, v, w) -> Fraction:
        """Instantiate the generators at exact rationals."""
        d = self.den.eval(u, v, w)
        if d == 0:
            raise PoleError("denominator vanishes at the sample point")
        return self.num.eval(u, v, w) / d

    def __str__(self) -> str:
        if self.den == _ONE_P:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"Scalar({self})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        text = text.strip()
        if text.startswith("(") and ")/(" in text:
            ns, _, ds = text[1:-1].partition(")/(")
            return cls(SparsePoly.parse(ns), SparsePoly.parse(ds))
        return cls(SparsePoly.parse(text))


def _exact_poly_div(num: SparsePoly, den: SparsePoly) -> SparsePoly:
    from .poly import _dict_exact_div
    q = _dict_exact_div(num.prim, den.prim, 0)
    return SparsePoly(num.content / den.content, q)


def field_sqrt(x):
    """Exact square root, for Scalar and plain rational inputs alike."""
    if isinstance(x, Scalar):
        return x.sqrt()
    c = Fraction(x)
    if c < 0:
        raise ValueError("sqrt of a negative rational")
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        raise ValueError("not a perfect square")
    return Fraction(rn, rd)


# ---------------------------------------------------------------------------
# factored accumulation
# ---------------------------------------------------------------------------

def _binomial_parts(z: Mon):
    """Write (1 - z) as unit * primitive-polynomial.

    Returns (unit_coef, unit_exp, key, poly) with
    (1 - z) = unit_coef * X^unit_exp * poly  and poly a primitive integer
    SparsePoly with positive leading coefficient, or poly None when 1 - z == 1
    (z == 0), or ZERO when z == 1 exactly.
    """
    if z.coef == 0:
        return Fraction(1), (0, 0, 0), None, None
    if z.coef == 1 and z.exp == (0, 0, 0):
        return None, None, None, None  # the factor is identically zero
    s = tuple(max(-e, 0) for e in z.exp)
    one_term = Mon(1, s)
    z_term = Mon(-z.coef, tuple(a + b for a, b in zip(s, z.exp)))
    p = SparsePoly.from_mon(one_term) + SparsePoly.from_mon(z_term)
    unit = p.content
    prim = SparsePoly(Fraction(1), p.prim, _normalized=True)
    key = tuple(sorted(prim.prim.items()))
    return unit, tuple(-e for e in s), key, prim


class FactoredScalar:
    """Mutable accumulator for products of binomials (1 - monomial).

    Value = coef * u^a v^b w^c * prod factor^multiplicity, multiplicities in Z.
    Used to build q-shifted-factorial products and to sum them over a true
    least common denominator.  Not a public value type; confine instances to
    a single construction site.
    """

    __slots__ = ("coef", "mexp", "factors")

    def __init__(self):
        self.coef = Fraction(1)
        self.mexp = (0, 0, 0)
        self.factors: dict[tuple, list] = {}

    def clone(self) -> "FactoredScalar":
        c = FactoredScalar()
        c.coef = self.coef
        c.mexp = self.mexp
        c.factors = {k: [p, m] for k, (p, m) in self.factors.items()}
        return c

    def is_zero(self) -> bool:
        return self.coef == 0

    def times_frac(self, c) -> "FactoredScalar":
        self.coef *= Fraction(c)
        return self

    def times_mon(self, m: Mon) -> "FactoredScalar":
        self.coef *= m.coef
        self.mexp = tuple(a + b for a, b in zip(self.mexp, m.exp))
        return self

    def _factor(self, z: Mon, mult: int) -> "FactoredScalar":
        unit, uexp, key, prim = _binomial_parts(z)
        if unit is None:
            if mult > 0:
                self.coef = Fraction(0)
                return self
            raise PoleError(f"factor (1 - {z!r}) vanishes in a denominator")
        if key is None:
            return self
        self.coef *= unit ** mult
        self.mexp = tuple(a + mult * b for a, b in zip(self.mexp, uexp))
        slot = self.factors.get(key)
        if slot is None:
            self.factors[key] = [prim, mult]
        else:
            slot[1] += mult
            if slot[1] == 0:
                del self.factors[key]
        return self

    def times_poch(self, z: Mon, k: int, base: Mon | None = None) -> "FactoredScalar":
        """Multiply by the q-shifted factorial (z; base)_k, base defaulting to q."""
        if self.coef == 0:
            return self
        base = base or Mon.q()
        if k >= 0:
            for j in range(k):
                self._factor(base ** j * z, +1)
        else:
            for j in range(1, -k + 1):
                self._factor(z / base ** j, -1)
        return self

    def div_poch(self, z: Mon, k: int, base: Mon | None = None) -> "FactoredScalar":
        if self.coef == 0:
            return self
        base = base or Mon.q()
        if k >= 0:
            for j in range(k):
                self._factor(base ** j * z, -1)
        else:
            for j in range(1, -k + 1):
                self._factor(z / base ** j, +1)
        return self

    def times(self, other: "FactoredScalar") -> "FactoredScalar":
        self.coef *= other.coef
        self.mexp = tuple(a + b for a, b in zip(self.mexp, other.mexp))
        for key, (p, m) in other.factors.items():
            slot = self.factors.get(key)
            if slot is None:
                self.factors[key] = [p, m]
            else:
                slot[1] += m
                if slot[1] == 0:
                    del self.factors[key]
        return self

    def to_scalar(self) -> Scalar:
        return sum_factored([self])


def sum_factored(terms) -> Scalar:
    """Sum FactoredScalar terms over their least common denominator."""
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return Scalar.zero()
    lcm_den: dict[tuple, list] = {}
    for t in terms:
        for key, (p, m) in t.factors.items():
            need = -m
            if need > 0:
                slot = lcm_den.get(key)
                if slot is None:
                    lcm_den[key] = [p, need]
                elif need > slot[1]:
                    slot[1] = need
    shift = tuple(min(0, min(t.mexp[i] for t in terms)) for i in range(3))
    num = SparsePoly.zero()
    for t in terms:
        part = SparsePoly.const(t.coef).shift(tuple(a - b for a, b in zip(t.mexp, shift)))
        for key, (p, m) in t.factors.items():
            e = m + lcm_den.get(key, (None, 0))[1]
            for _ in range(e):
                part = part * p
        for key, (p, need) in lcm_den.items():
            if key not in t.factors:
                for _ in range(need):
                    part = part * p
        num = num + part
    den = SparsePoly.one().shift(tuple(-s for s in shift))
    for key, (p, need) in lcm_den.items():
        for _ in range(need):
            den = den * p
    return Scalar(num, den)
