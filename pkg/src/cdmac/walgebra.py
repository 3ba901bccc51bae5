"""Correlation products of the deformed current algebras of types C and D.

The r-point correlation function reduces to a closed product over a pair
kernel gamma_{ij}(z_i, z_j) built from

    gamma(z) = (1 - t^2 z)(1 - z/q^2) / ((1 - z)(1 - z t^2/q^2)),

with five cases according to the relative position of the letters i, j in
the list 1, .., l, lbar, .., 1bar and whether they form a conjugate pair.
Principally specializing z_i = q^(r-i) and the base parameters
(q, t) -> (q^(1/2), q^(1/2) t^(-1/2)) collapses the sum to the one-row
tableau sums: exactly the terms indexed by weakly increasing letter tuples
survive.

The conjugate-pair entries of the kernel table are normative as validated:
the extra factor for i <= l paired with its bar is

    C:  gamma(q^(2i-2l)   t^(-2i+2l+2) w/z)
    D:  gamma(q^(2i-2l+2) t^(-2i+2l-2) w/z)

and the reversed order uses the same monomial against z/w (this, rather than
its reciprocal, is what makes the correlation z-symmetric).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import PoleError, UsageError
from .laurent import LaurentPoly
from .macdonald import tableau_poly_C_special, tableau_poly_D
from .poly import Mon
from .scalar import Scalar
from .tableaux import Alphabet, enumerate_tableaux


def gamma_base(z, q, t):
    """gamma(z) = (1 - t^2 z)(1 - z/q^2) / ((1 - z)(1 - z t^2/q^2))."""
    t2 = t * t
    q2 = q * q
    den = (1 - z) * (1 - z * t2 / q2)
    if den == 0:
        raise PoleError("gamma evaluated at a pole")
    return (1 - t2 * z) * (1 - z / q2) / den


@dataclass(frozen=True)
class GammaTable:
    """Pair kernel for one family at fixed base parameters q, t.

    Letters are signed integers: +k is the k-th unbarred letter, -k its bar.
    """
    family: str
    rank: int
    q: object
    t: object

    def _pos(self, a: int) -> int:
        return a - 1 if a > 0 else 2 * self.rank + a

    def _conj_extra(self, i: int):
        l = self.rank
        if self.family == "C":
            return self.q ** (2 * i - 2 * l) * self.t ** (-2 * i + 2 * l + 2)
        return self.q ** (2 * i - 2 * l + 2) * self.t ** (-2 * i + 2 * l - 2)

    def pair(self, a: int, b: int, za, zb):
        """gamma_{a,b}(za, zb) for list-order positions of a and b."""
        pa, pb = self._pos(a), self._pos(b)
        if pa == pb:
            return 1
        if pa < pb:
            ratio = zb / za
            if b == -a:
                return gamma_base(ratio, self.q, self.t) * \
                    gamma_base(self._conj_extra(a) * ratio, self.q, self.t)
            return gamma_base(ratio, self.q, self.t)
        ratio = za / zb
        if a == -b:
            return gamma_base(ratio, self.q, self.t) * \
                gamma_base(self._conj_extra(b) * ratio, self.q, self.t)
        return gamma_base(ratio, self.q, self.t)


@dataclass(frozen=True)
class CorrelationSpec:
    family: str
    rank: int
    z: tuple
    q: object
    t: object


def _letters(l: int) -> list[int]:
    return list(range(1, l + 1)) + [-k for k in range(l, 0, -1)]


def _weight(l: int, eps) -> tuple[int, ...]:
    w = [0] * l
    for e in eps:
        if e > 0:
            w[e - 1] += 1
        else:
            w[-e - 1] -= 1
    return tuple(w)


def correlation_F(spec: CorrelationSpec, budget: int = 50000) -> LaurentPoly:
    """The full (2l)^r-term correlation sum, collected by x-exponent."""
    l, r = spec.rank, len(spec.z)
    if (2 * l) ** r > budget:
        raise UsageError(f"(2l)^r = {(2 * l) ** r} exceeds the budget {budget}")
    table = GammaTable(spec.family, l, spec.q, spec.t)
    out: dict[tuple, object] = {}
    for eps in iproduct(_letters(l), repeat=r):
        coef = 1
        for i in range(r):
            for j in range(i + 1, r):
                coef = coef * table.pair(eps[i], eps[j], spec.z[i], spec.z[j])
        if not coef:
            continue
        w = _weight(l, eps)
        if w in out:
            s = out[w] + coef
            if s:
                out[w] = s
            else:
                del out[w]
        else:
            out[w] = coef
    return LaurentPoly(l, out)


def _principal_spec(family: str, l: int, r: int) -> CorrelationSpec:
    # z_i = q^(r-i), base parameters (q^(1/2), q^(1/2) t^(-1/2))
    zs = tuple(Scalar.from_mon(Mon.q(r - i)) for i in range(1, r + 1))
    qh = Scalar.from_mon(Mon.half(qh=1))
    th = Scalar.from_mon(Mon.half(qh=1, th=-1))
    return CorrelationSpec(family, l, zs, qh, th)


def _tableau_tuple(tab) -> tuple[int, ...]:
    n = tab.alphabet.rank
    eps = []
    for pos in range(2 * n):
        letter = pos + 1 if pos < n else pos - 2 * n
        eps.extend([letter] * tab.theta[pos])
    return tuple(eps)


def phi_principal(family: str, l: int, r: int, path: str = "tableau",
                  budget: int = 50000) -> LaurentPoly:
    """The principally specialized correlation sum.

    path 'full' runs the whole (2l)^r enumeration (the oracle); 'tableau'
    enumerates only the weakly increasing tuples that survive.
    """
    if path == "full":
        return correlation_F(_principal_spec(family, l, r), budget)
    if path != "tableau":
        raise UsageError(f"unknown path {path!r}")
    spec = _principal_spec(family, l, r)
    table = GammaTable(family, l, spec.q, spec.t)
    out: dict[tuple, object] = {}
    for tab in enumerate_tableaux(Alphabet(family, l), r):
        eps = _tableau_tuple(tab)
        coef = 1
        for i in range(r):
            for j in range(i + 1, r):
                coef = coef * table.pair(eps[i], eps[j], spec.z[i], spec.z[j])
        w = tab.weight()
        if w in out:
            s = out[w] + coef
            if s:
                out[w] = s
            else:
                del out[w]
        elif coef:
            out[w] = coef
    return LaurentPoly(l, out)


def surviving_tuples(family: str, l: int, r: int, budget: int = 50000) -> set:
    """Support of the oracle enumeration: tuples whose kernel product is nonzero."""
    spec = _principal_spec(family, l, r)
    if (2 * l) ** r > budget:
        raise UsageError("budget exceeded")
    table = GammaTable(family, l, spec.q, spec.t)
    out = set()
    for eps in iproduct(_letters(l), repeat=r):
        coef = 1
        for i in range(r):
            for j in range(i + 1, r):
                coef = coef * table.pair(eps[i], eps[j], spec.z[i], spec.z[j])
        if coef:
            out.add(eps)
    return out


def correlation_residual(family: str, l: int, r: int, path: str = "tableau",
                         budget: int = 50000) -> LaurentPoly:
    """phi minus the matching tableau polynomial; identically zero when the
    specialized correlation reproduces the one-row polynomial."""
    phi = phi_principal(family, l, r, path=path, budget=budget)
    ref = tableau_poly_D(l, r) if family == "D" else tableau_poly_C_special(l, r)
    return phi - ref
