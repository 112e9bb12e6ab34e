"""Hilbert series of zonotopal algebras by exact linear algebra.

The external (resp. internal) zonotopal algebra is the quotient of the
polynomial ring on d variables by the powers v^(m(v)+1) (resp. v^(m(v)-1))
of the cocircuit linear forms.  Graded dimensions are computed degree by
degree as (number of monomials) - rank(span of monomial multiples of the
generators), with exact integer elimination.  This is the independent
algebraic oracle against the Tutte-evaluation formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import GuardExceeded
from .exact import LaurentQ
from .linalg import echelon_rank
from .matroid import RealizedMatroid

MONOMIAL_GUARD = 50_000


@dataclass(frozen=True)
class GradedIdealSpec:
    """Powers of integer linear forms generating a zero-dimensional ideal.

    generators: (c, e) pairs for the form (sum_i c_i x_i)^e.  An exponent-0
    generator marks the whole ring as the ideal (zero quotient).
    """

    variables: int
    generators: tuple[tuple[tuple[int, ...], int], ...]
    degree_cap: int


@dataclass(frozen=True)
class HilbertFunction:
    dims: tuple[int, ...]
    as_laurent: LaurentQ

    @property
    def total(self) -> int:
        return sum(self.dims)


def external_spec(M: RealizedMatroid) -> GradedIdealSpec:
    """Generators v^(m(v)+1), one per cocircuit vector, in the coordinates
    c of the row space."""
    return _spec(M, +1)


def internal_spec(M: RealizedMatroid) -> GradedIdealSpec:
    """Generators v^(m(v)-1); a coloop contributes exponent 0, which makes
    the quotient zero (flagged degenerate, not an error)."""
    return _spec(M, -1)


def _spec(M: RealizedMatroid, shift: int) -> GradedIdealSpec:
    if M.d < 1:
        raise ValueError("ideal specs require d >= 1")
    gens = tuple((cc.c, cc.support_size + shift) for cc in M.cocircuits)
    return GradedIdealSpec(M.d, gens, M.n + 1)


def _monomials(d: int, k: int) -> list[tuple[int, ...]]:
    """Exponent tuples of degree k in d variables, graded-lex order."""
    if d == 0:
        return [()] if k == 0 else []
    out = []

    def rec(prefix: list[int], rest: int, pos: int):
        if pos == d - 1:
            out.append(tuple(prefix + [rest]))
            return
        for e in range(rest, -1, -1):
            rec(prefix + [e], rest - e, pos + 1)

    rec([], k, 0)
    return out


def _form_power(c: tuple[int, ...], e: int) -> dict[tuple[int, ...], int]:
    """Expand (sum c_i x_i)^e as exponent-tuple -> coefficient."""
    d = len(c)
    poly = {(0,) * d: 1}
    lin = {}
    for i, ci in enumerate(c):
        if ci:
            key = tuple(1 if j == i else 0 for j in range(d))
            lin[key] = ci
    for _ in range(e):
        nxt: dict[tuple[int, ...], int] = {}
        for mono, co in poly.items():
            for lm, lc in lin.items():
                key = tuple(a + b for a, b in zip(mono, lm))
                nxt[key] = nxt.get(key, 0) + co * lc
        poly = nxt
    return poly


def hilbert(spec: GradedIdealSpec) -> HilbertFunction:
    """Graded dimensions of the quotient by the spanned ideal.

    dims[k] = C(d+k-1, k) - rank{monomial * generator in degree k}; the
    computation stops at the first zero dimension (the ideal then contains
    every higher degree) and must terminate by degree_cap.
    """
    d = spec.variables
    if any(e == 0 for _, e in spec.generators):
        return HilbertFunction((), LaurentQ.zero())
    expanded = [(_form_power(c, e), e) for c, e in spec.generators]
    dims: list[int] = []
    for k in range(spec.degree_cap + 1):
        ncols = comb(d + k - 1, k) if k else 1
        if ncols > MONOMIAL_GUARD:
            raise GuardExceeded(
                f"degree {k} has {ncols} monomials > {MONOMIAL_GUARD}")
        monos = _monomials(d, k)
        index = {mono: i for i, mono in enumerate(monos)}

        def rows():
            for poly, e in expanded:
                if e > k:
                    continue
                for shift_mono in _monomials(d, k - e):
                    row = [0] * ncols
                    for mono, co in poly.items():
                        key = tuple(a + b for a, b in zip(mono, shift_mono))
                        row[index[key]] = co
                    yield row

        rank = echelon_rank(rows(), stop_at=ncols)
        dim = ncols - rank
        if dim == 0:
            break
        dims.append(dim)
    else:
        raise ArithmeticError("quotient did not vanish by degree_cap")
    return HilbertFunction(tuple(dims),
                           LaurentQ({k: v for k, v in enumerate(dims)}))


def verify_zonotopal(M: RealizedMatroid) -> bool:
    """Check both zonotopal Hilbert series against their Tutte evaluations:
    external = q^(n-d) T(1+q, 1/q) and internal = q^(n-d) T(0, 1/q)."""
    d, n = M.d, M.n
    T = M.tutte()
    one_q = LaurentQ({0: 1, 1: 1})
    pow1q = [LaurentQ.one()]
    for _ in range(d):
        pow1q.append(pow1q[-1] * one_q)
    ext = LaurentQ.zero()
    intr = LaurentQ.zero()
    for (a, b), c in T.items():
        ext = ext + (pow1q[a] * c).shift(-b)
        if a == 0:
            intr = intr + LaurentQ.q_power(-b, c)
    ext = ext.shift(n - d)
    intr = intr.shift(n - d)
    return (hilbert(external_spec(M)).as_laurent == ext
            and hilbert(internal_spec(M)).as_laurent == intr)
