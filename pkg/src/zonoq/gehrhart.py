"""Graded lattice-point counts, quantum Ehrhart polynomials and series.

The central formula: for unimodular Z with matroid M and dilate m >= 1,

    count(m; q) = q^((n-d)m) [m]_q^d T_M([m +- 1]_q / [m]_q, q^(-m)),

with + for all lattice points and - for interior ones.  Every rational-
function evaluation of T_M is performed by clearing denominators against its
degree bounds, so the whole module stays inside exact Laurent arithmetic.

The graded Ehrhart polynomial is a quantum integer-valued polynomial: it is
stored in the q-binomial-coefficient-polynomial basis, in which evaluation,
the bar involution q -> 1/q, t -> -qt, and rational generating functions all
have closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotUnimodular
from .exact import LaurentQ, PolyTQ, RatSeries, qbinom
from .matroid import RealizedMatroid


@dataclass(frozen=True)
class GradedCount:
    """The polynomial in q counting (interior) lattice points of mZ by
    orbit-harmonics degree."""

    value: LaurentQ
    m: int
    interior: bool


@dataclass(frozen=True)
class QIVP:
    """A quantum integer-valued polynomial, stored by its coefficients
    f_0(q), ..., f_degree(q) in the q-binomial-coefficient basis."""

    basis_coeffs: tuple[LaurentQ, ...]
    degree: int

    def __post_init__(self):
        if len(self.basis_coeffs) != self.degree + 1:
            raise ValueError("need exactly degree + 1 basis coefficients")


def graded_count(M: RealizedMatroid, m: int, interior: bool = False) -> GradedCount:
    """q-graded count of (interior) lattice points of the dilate mZ."""
    if not M.is_unimodular():
        raise NotUnimodular("graded counts require a unimodular realization")
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        if interior:
            raise ValueError("the interior count is undefined at m = 0")
        return GradedCount(LaurentQ.one(), 0, False)
    d, n = M.d, M.n
    qm = LaurentQ.q_int(m)
    qarg = LaurentQ.q_int(m - 1 if interior else m + 1)
    x_pow = [LaurentQ.one()]
    m_pow = [LaurentQ.one()]
    for _ in range(d):
        x_pow.append(x_pow[-1] * qarg)
        m_pow.append(m_pow[-1] * qm)
    total = LaurentQ.zero()
    for (a, b), c in M.tutte().items():
        total = total + (x_pow[a] * m_pow[d - a] * c).shift(-m * b)
    return GradedCount(total.shift((n - d) * m), m, interior)


def ehr_tpower(M: RealizedMatroid) -> PolyTQ:
    """The graded Ehrhart polynomial in plain t-power form.

    Built as sum_{a,b} c_ab (qt+1)^a t^(d-a) (1+(q-1)t)^(n-d-b); the degree
    bounds of the Tutte polynomial clear both denominators.
    """
    if not M.is_unimodular():
        raise NotUnimodular("the graded Ehrhart polynomial requires unimodularity")
    d, n = M.d, M.n
    qt1 = PolyTQ({1: LaurentQ.q_power(1), 0: LaurentQ.one()})
    w = PolyTQ({0: LaurentQ.one(), 1: LaurentQ({1: 1, 0: -1})})  # 1 + (q-1)t
    qt1_pow = [PolyTQ.one()]
    for _ in range(d):
        qt1_pow.append(qt1_pow[-1] * qt1)
    w_pow = [PolyTQ.one()]
    for _ in range(n - d):
        w_pow.append(w_pow[-1] * w)
    out = PolyTQ.zero()
    for (a, b), c in M.tutte().items():
        term = qt1_pow[a] * PolyTQ.t_power(d - a, c) * w_pow[n - d - b]
        out = out + term
    return out


def ehr_poly(M: RealizedMatroid) -> QIVP:
    """The graded Ehrhart polynomial in the q-binomial basis.

    Interpolates the t-power form at t = [0]_q, ..., [n]_q; the evaluation
    matrix qbinom(m, k) is triangular with unit diagonal, so the conversion
    never leaves Laurent arithmetic.
    """
    tp = ehr_tpower(M)
    n = M.n
    values = [tp.eval_t(LaurentQ.q_int(m)) for m in range(n + 1)]
    coeffs: list[LaurentQ] = []
    for m in range(n + 1):
        f = values[m]
        for k in range(m):
            f = f - coeffs[k] * qbinom(m, k)
        coeffs.append(f)
    return QIVP(tuple(coeffs), n)


def eval_qivp(P: QIVP, m: int) -> LaurentQ:
    """Value at t = [m]_q: sum_k f_k(q) binom(m, k)_q."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = LaurentQ.zero()
    for k, f in enumerate(P.basis_coeffs):
        out = out + f * qbinom(m, k)
    return out


def bar_eval(P: QIVP, m: int) -> LaurentQ:
    """Value of the bar-involuted polynomial at t = [m]_q, m >= 1.

    Uses bar(qbinom(t,k)) at [m]_q = (-1)^k q^(k(k+1)/2) binom(m+k-1, k)_q,
    staying inside Laurent arithmetic.
    """
    if m < 1:
        raise ValueError("bar_eval requires m >= 1")
    out = LaurentQ.zero()
    for k, f in enumerate(P.basis_coeffs):
        sign = -1 if k % 2 else 1
        out = out + f.bar() * qbinom(m + k - 1, k).shift(k * (k + 1) // 2) * sign
    return out


def qivp_series(P: QIVP) -> RatSeries:
    """Generating function sum_{m>=0} P([m]_q) t^m as a RatSeries of order
    equal to the degree of P."""
    D = P.degree
    # products prod_{i=k+1..D} (1 - t q^i), built from the top down
    tails = [PolyTQ.one()]
    for i in range(D, 0, -1):
        factor = PolyTQ({0: LaurentQ.one(), 1: LaurentQ.q_power(i, -1)})
        tails.append(tails[-1] * factor)
    tails.reverse()  # tails[k] = prod_{i=k+1}^{D}
    num = PolyTQ.zero()
    for k, f in enumerate(P.basis_coeffs):
        num = num + PolyTQ.t_power(k, f) * tails[k]
    return RatSeries(num, D)


def qivp_bar_series(P: QIVP) -> RatSeries:
    """Generating function sum_{m>=1} bar(P)([m]_q) t^m over the same
    denominator prod_{i=0}^{D} (1 - t q^i)."""
    D = P.degree
    tails = [PolyTQ.one()]
    for i in range(D, 0, -1):
        factor = PolyTQ({0: LaurentQ.one(), 1: LaurentQ.q_power(i, -1)})
        tails.append(tails[-1] * factor)
    tails.reverse()
    num = PolyTQ.zero()
    for k, f in enumerate(P.basis_coeffs):
        sign = -1 if k % 2 else 1
        coeff = f.bar().shift(k * (k + 1) // 2) * sign
        num = num + PolyTQ.t_power(1, coeff) * tails[k]
    return RatSeries(num, D, interior=True)


def series(M: RealizedMatroid) -> RatSeries:
    """The graded Ehrhart series: numerator over (1-t)...(1-tq^n)."""
    return qivp_series(ehr_poly(M))


def interior_series(M: RealizedMatroid) -> RatSeries:
    """The interior graded Ehrhart series.

    Numerator obtained by clearing the fixed denominator in the reciprocity
    identity:  (-1)^(n+d) q^(n(n+1)/2 - d) t^(n+1) N(1/t, 1/q).
    """
    n, d = M.n, M.d
    N = series(M).numerator
    flipped = N.t_reverse_bar(n + 1)
    sign = -1 if (n + d) % 2 else 1
    num = PolyTQ({k: g.shift(n * (n + 1) // 2 - d) * sign
                  for k, g in flipped.coeffs.items()})
    return RatSeries(num, n, interior=True)


def reciprocity_check(M: RealizedMatroid, m_max: int) -> bool:
    """Exact verification of graded Ehrhart-Macdonald reciprocity.

    (a) the interior numerator (denominator-clearing route) coincides with
        (-1)^d q^(-d) times the bar generating function of the Ehrhart
        polynomial (q-binomial route);
    (b) for 1 <= m <= m_max, (-1)^d q^(-d) bar_eval matches the interior
        graded count from the Tutte formula.
    """
    d = M.d
    sign = -1 if d % 2 else 1
    P = ehr_poly(M)
    bar_num = qivp_bar_series(P).numerator
    expected = PolyTQ({k: g.shift(-d) * sign for k, g in bar_num.coeffs.items()})
    if interior_series(M).numerator != expected:
        return False
    for m in range(1, m_max + 1):
        lhs = bar_eval(P, m).shift(-d) * sign
        if lhs != graded_count(M, m, interior=True).value:
            return False
    return True
