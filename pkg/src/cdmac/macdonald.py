"""One-row Macdonald polynomials of types C and D.

Three independent constructions live here:

  * the tableau sums (one term per one-row tableau, with explicit
    q-shifted-factorial coefficients),
  * the inversion route through the generating series G_r, and
  * principal specializations with their closed product forms.

All symbolic output is a LaurentPoly over the Scalar field; coefficients are
accumulated through FactoredScalar so that each weight's sum is produced over
a least common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UsageError
from .laurent import LaurentPoly
from .poly import Mon
from .scalar import FactoredScalar, Scalar, sum_factored
from .tableaux import Alphabet, enumerate_tableaux

T_SPECIAL = "t^2/q"  # tag for the distinguished type-C parameter value


@dataclass(frozen=True)
class OneRowLabel:
    family: str
    rank: int
    row: int
    bigT: object = None  # None (family D), T_SPECIAL, Mon, Fraction, or Scalar

    def __post_init__(self):
        if self.family == "D" and self.bigT is not None:
            raise UsageError("family D carries no T parameter")


def _as_mon(T) -> Mon:
    if isinstance(T, Mon):
        return T
    if isinstance(T, (int, Fraction)):
        return Mon(Fraction(T))
    if T == T_SPECIAL:
        return Mon(1, (-2, 4, 0))  # t^2/q
    if isinstance(T, Scalar):
        num, den = T.num, T.den
        if num.is_monomial() and den.is_monomial():
            m, d = num.monomial(), den.monomial()
            return Mon(m.coef / d.coef, tuple(a - b for a, b in zip(m.exp, d.exp)))
        raise UsageError("T must be a monomial in the generators or a rational")
    raise UsageError(f"cannot interpret T value {T!r}")


def _mon_sqrt(m: Mon) -> Mon:
    from .scalar import field_sqrt
    if any(e % 2 for e in m.exp):
        raise UsageError("no square root in the generator field")
    return Mon(field_sqrt(m.coef), tuple(e // 2 for e in m.exp))


def _collect(n: int, parts) -> LaurentPoly:
    """Sum FactoredScalar terms grouped by weight into a Laurent polynomial."""
    out = {}
    for w, terms in parts.items():
        c = sum_factored(terms)
        if c:
            out[w] = c
    return LaurentPoly(n, out)


def _tq(a: int, b: int) -> Mon:
    return Mon(1, (2 * b, 2 * a, 0))  # t^a q^b


# ---------------------------------------------------------------------------
# generating series
# ---------------------------------------------------------------------------

def g_series(n: int, r: int) -> LaurentPoly:
    """The coefficient of u^r in prod_i ((t u x_i;q)oo (t u/x_i;q)oo) /
    ((u x_i;q)oo (u/x_i;q)oo): a sum over all weak compositions of r."""
    if n < 1 or r < 0:
        raise UsageError("need n >= 1, r >= 0")
    alpha = Alphabet("C", n)  # no occupancy constraint in G_r
    parts: dict[tuple, list] = {}
    for tab in enumerate_tableaux(alpha, r):
        fs = FactoredScalar()
        for k in range(2 * n):
            fs.times_poch(Mon.t(), tab.theta[k]).div_poch(Mon.q(), tab.theta[k])
        parts.setdefault(tab.weight(), []).append(fs)
    return _collect(n, parts)


def g_series_from_product(n: int, r: int, q, t) -> list[LaurentPoly]:
    """Independent oracle: G_0..G_r from the four Euler expansions of the
    generating product, as truncated power series in u (sampled q, t)."""
    def euler_num(y: LaurentPoly) -> list[LaurentPoly]:
        # (z u; q)oo = sum_j (-1)^j q^(j(j-1)/2) / (q;q)_j (z u)^j, z = t*y
        out = []
        for j in range(r + 1):
            c = Fraction(-1) ** j * q ** (j * (j - 1) // 2)
            den = q ** 0
            for i in range(1, j + 1):
                den = den * (1 - q ** i)
            zj = LaurentPoly.one(n)
            for _ in range(j):
                zj = zj * y.scale(t)
            out.append(zj.scale(c / den))
        return out

    def euler_den(y: LaurentPoly) -> list[LaurentPoly]:
        # 1/(z u; q)oo = sum_j (z u)^j / (q;q)_j, z = y
        out = []
        for j in range(r + 1):
            den = q ** 0
            for i in range(1, j + 1):
                den = den * (1 - q ** i)
            zj = LaurentPoly.one(n)
            for _ in range(j):
                zj = zj * y
            out.append(zj.scale(1 / den))
        return out

    def series_mul(a, b):
        out = [LaurentPoly.zero(n) for _ in range(r + 1)]
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j in range(r + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + ai * b[j]
        return out

    acc = [LaurentPoly.one(n)] + [LaurentPoly.zero(n) for _ in range(r)]
    for i in range(n):
        for sign in (1, -1):
            y = LaurentPoly.monomial(n, tuple(sign if j == i else 0 for j in range(n)),
                                     Fraction(1))
            acc = series_mul(acc, euler_num(y))
            acc = series_mul(acc, euler_den(y))
    return acc


# ---------------------------------------------------------------------------
# tableau sums
# ---------------------------------------------------------------------------

def _prefactor(fs: FactoredScalar, r: int) -> FactoredScalar:
    return fs.times_poch(Mon.q(), r).div_poch(Mon.t(), r)


def _terms_D(n: int, r: int):
    """(weight, coefficient) per type-D tableau."""
    for tab in enumerate_tableaux(Alphabet("D", n), r):
        th = tab.theta
        fs = _prefactor(FactoredScalar(), r)
        for k in range(2 * n):
            fs.times_poch(Mon.t(), th[k]).div_poch(Mon.q(), th[k])
        for l in range(1, n):
            S = sum(th[l - 1:2 * n - l])
            Sp = sum(th[l:2 * n - l])
            tl = th[2 * n - l]
            fs.times_poch(_tq(n - l, Sp), tl)
            fs.times_poch(_tq(n - l - 1, S + 1), tl)
            fs.div_poch(_tq(n - l - 1, Sp + 1), tl)
            fs.div_poch(_tq(n - l, S), tl)
        yield tab.weight(), fs


def _terms_C_special(n: int, r: int):
    """(weight, coefficient) per type-C tableau at T = t^2/q."""
    for tab in enumerate_tableaux(Alphabet("C", n), r):
        th = tab.theta
        fs = _prefactor(FactoredScalar(), r)
        for k in range(2 * n):
            fs.times_poch(Mon.t(), th[k]).div_poch(Mon.q(), th[k])
        for l in range(1, n + 1):
            S = sum(th[l - 1:2 * n - l])
            Sp = sum(th[l:2 * n - l])
            tl = th[2 * n - l]
            fs.times_poch(_tq(n - l + 1, S), tl)
            fs.times_poch(_tq(n - l + 2, Sp - 1), tl)
            fs.div_poch(_tq(n - l + 2, S - 1), tl)
            fs.div_poch(_tq(n - l + 1, Sp), tl)
        yield tab.weight(), fs


def _terms_C_general(n: int, r: int, Tm: Mon):
    """(weight, coefficient) per type-C tableau, free T."""
    for tab in enumerate_tableaux(Alphabet("C", n), r):
        th = tab.theta
        thn, thnb = th[n - 1], th[n]
        theta = min(thn, thnb)
        d = abs(thn - thnb)
        fs = _prefactor(FactoredScalar(), r)
        for k in range(2 * n):
            if k in (n - 1, n):
                continue
            fs.times_poch(Mon.t(), th[k]).div_poch(Mon.q(), th[k])
        fs.times_poch(Mon.t(), d).div_poch(Mon.q(), d)
        for l in range(1, n):
            S = sum(th[l - 1:n - 1]) + d + sum(th[n + 1:2 * n - l])
            Sp = sum(th[l:n - 1]) + d + sum(th[n + 1:2 * n - l])
            tl = th[2 * n - l]
            fs.times_poch(_tq(n - l - 1, S + 1), tl)
            fs.times_poch(_tq(n - l, Sp), tl)
            fs.div_poch(_tq(n - l, S), tl)
            fs.div_poch(_tq(n - l - 1, Sp + 1), tl)
        fs.times_poch(Tm, theta)
        fs.times_poch(_tq(n, r - 2 * theta), 2 * theta)
        fs.div_poch(Mon.q(), theta)
        fs.div_poch(Tm * _tq(n - 1, r - theta), theta)
        fs.div_poch(_tq(n - 1, r - 2 * theta + 1), theta)
        yield tab.weight(), fs


def _tableau_terms(family: str, n: int, r: int, T=None):
    if n < 1 or r < 0:
        raise UsageError("need n >= 1, r >= 0")
    if family == "D":
        if T is not None:
            raise UsageError("family D carries no T parameter")
        return _terms_D(n, r)
    if T is None or T == T_SPECIAL:
        return _terms_C_special(n, r)
    return _terms_C_general(n, r, _as_mon(T))


def _from_terms(n: int, terms) -> LaurentPoly:
    parts: dict[tuple, list] = {}
    for w, fs in terms:
        parts.setdefault(w, []).append(fs)
    return _collect(n, parts)


def tableau_poly_D(n: int, r: int) -> LaurentPoly:
    """Type D one-row polynomial as a sum over tableaux with theta_n*theta_nbar=0."""
    return _from_terms(n, _tableau_terms("D", n, r))


def tableau_poly_C_special(n: int, r: int) -> LaurentPoly:
    """Type C one-row polynomial at the distinguished value T = t^2/q."""
    return _from_terms(n, _tableau_terms("C", n, r))


def tableau_poly_C_general(n: int, r: int, T) -> LaurentPoly:
    """Type C one-row polynomial with a free parameter T.

    The degenerate-pair block carries (T;q)_theta with theta the smaller of
    the two middle occupancies; at T = t^2/q the value agrees with
    tableau_poly_C_special although the two sums differ term by term.
    """
    if n < 1 or r < 0:
        raise UsageError("need n >= 1, r >= 0")
    return _from_terms(n, _terms_C_general(n, r, _as_mon(T)))


def tableau_poly(family: str, n: int, r: int, T=None) -> LaurentPoly:
    if family == "D":
        if T is not None:
            raise UsageError("family D carries no T parameter")
        return tableau_poly_D(n, r)
    if T is None or T == T_SPECIAL:
        return tableau_poly_C_special(n, r)
    return tableau_poly_C_general(n, r, T)


# ---------------------------------------------------------------------------
# inversion route
# ---------------------------------------------------------------------------

def _expand_coeff(i: int, n: int, r: int, Tm: Mon) -> Scalar:
    """Coefficient of P_(r-2i) in the G_r expansion."""
    fs = FactoredScalar()
    fs.times_poch(Mon.t(), r - 2 * i).div_poch(Mon.q(), r - 2 * i)
    fs.times_mon(Tm ** i)
    fs.times_poch(Mon.t() / Tm, i)
    fs.times_poch(_tq(n, r - 2 * i), i)
    fs.div_poch(Mon.q(), i)
    fs.div_poch(Tm * _tq(n - 1, r - 2 * i + 1), i)
    return fs.to_scalar()


def _invert_coeff(i: int, n: int, r: int, Tm: Mon) -> Scalar:
    """Coefficient of G_(r-2i) in the inverse expansion (without prefactor)."""
    fs = FactoredScalar()
    fs.times_mon(Mon.t() ** i)
    fs.times_poch(Tm / Mon.t(), i)
    fs.times_poch(_tq(n, r - i), i)
    fs.div_poch(Mon.q(), i)
    fs.div_poch(Tm * _tq(n - 1, r - i), i)
    fs.times_poch(_tq(n, r - 2 * i), 1)  # (1 - t^n q^(r-2i))
    fs.div_poch(_tq(n, r - i), 1)        # (1 - t^n q^(r-i))
    return fs.to_scalar()


def _family_T(family: str, T) -> Mon:
    if family == "D":
        if T is not None:
            raise UsageError("family D carries no T parameter")
        return Mon(1)
    if T is None:
        raise UsageError("family C needs a T value (use T_SPECIAL for t^2/q)")
    return _as_mon(T)


def lassalle_invert(family: str, n: int, r: int, T=None) -> LaurentPoly:
    """P_(r) built from the generating-series coefficients, independently of
    the tableau sums."""
    Tm = _family_T(family, T)
    pref = _prefactor(FactoredScalar(), r).to_scalar()
    acc = LaurentPoly.zero(n)
    for i in range(r // 2 + 1):
        c = pref * _invert_coeff(i, n, r, Tm)
        acc = acc + g_series(n, r - 2 * i).scale(c)
    return acc


def lassalle_expand(family: str, n: int, r: int, p_family, T=None) -> LaurentPoly:
    """The G_r expansion assembled from supplied one-row polynomials.

    p_family maps each needed row r, r-2, ... to its polynomial; subtracting
    g_series(n, r) from the result gives the residual checked in acceptance.
    """
    Tm = _family_T(family, T)
    acc = LaurentPoly.zero(n)
    for i in range(r // 2 + 1):
        row = r - 2 * i
        if row not in p_family:
            raise UsageError(f"missing polynomial for row {row}")
        acc = acc + p_family[row].scale(_expand_coeff(i, n, r, Tm))
    return acc


# ---------------------------------------------------------------------------
# principal specialization
# ---------------------------------------------------------------------------

def principal_point(family: str, n: int, T=None) -> list[Scalar]:
    """The evaluation point (s t^(n-1), ..., s t, s), s = T^(1/2) (s = 1 for D)."""
    if family == "D":
        s = Mon(1)
    else:
        s = _mon_sqrt(_family_T("C", T if T is not None else T_SPECIAL))
    return [Scalar.from_mon(s * Mon.t(n - 1 - i)) for i in range(n)]


def principal_specialize(family: str, n: int, r: int, T=None) -> Scalar:
    """Evaluate the tableau polynomial at the principal point, exactly.

    Equal to substituting the point into tableau_poly, but the sum is taken
    term by term over a common factored denominator (the substituted values
    are monomials, so each tableau term stays a factored product).
    """
    if family == "D":
        s = Mon(1)
    else:
        s = _mon_sqrt(_family_T("C", T if T is not None else T_SPECIAL))
    points = [s * Mon.t(n - 1 - i) for i in range(n)]
    terms = []
    for w, fs in _tableau_terms(family, n, r, T):
        for i, wi in enumerate(w):
            if wi:
                fs.times_mon(points[i] ** wi)
        terms.append(fs)
    return sum_factored(terms)


def principal_closed_form(family: str, n: int, r: int, T=None) -> Scalar:
    """Closed product form of the principal specialization.

    Family D is the T = 1 case; n = 1 of family D is excluded (the product
    form degenerates to (1;q)_r in the denominator there, use x^r + x^-r
    directly instead).
    """
    if family == "D":
        if n == 1:
            raise UsageError("closed form degenerates at rank 1 of family D")
        Tm = Mon(1)
    else:
        Tm = _family_T("C", T if T is not None else T_SPECIAL)
    s = _mon_sqrt(Tm)
    fs = FactoredScalar()
    fs.times_mon((s * Mon.t(n - 1)).inv() ** r)
    fs.times_poch(_tq(n, 0), r)
    fs.times_poch(Tm ** 2 * _tq(2 * (n - 1), 0), r)
    fs.div_poch(Mon.t(), r)
    fs.div_poch(Tm * _tq(n - 1, 0), r)
    return fs.to_scalar()
