"""Geometry oracle: facet description and brute-force lattice-point counts.

The H-description of Z = A * [0,1]^n comes straight from the cocircuit
vectors: each one gives a pair of parallel facet inequalities whose width
equals its support size when A is unimodular.  Counting is plain enumeration
of the bounding box filtered through those inequalities, which is exact and
independent of every closed formula it is used to check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GuardExceeded, NotUnimodular
from .matroid import RealizedMatroid

BOX_GUARD = 10**7


@dataclass(frozen=True)
class Facet:
    """alpha_min <= <c, x> <= alpha_max is a facet-inequality pair of Z."""

    c: tuple[int, ...]
    alpha_min: int
    alpha_max: int


@dataclass(frozen=True)
class HRep:
    facets: tuple[Facet, ...]
    d: int


@dataclass(frozen=True)
class LatticePointSet:
    points: frozenset[tuple[int, ...]]
    dilate: int


def h_rep(M: RealizedMatroid) -> HRep:
    """Facet inequality pairs of Z, one per cocircuit vector.

    Raises NotUnimodular when some pair's width differs from the cocircuit
    support size (which certifies a maximal minor outside {-1, 0, 1}).
    """
    if M.d < 1:
        raise ValueError("h_rep requires d >= 1")
    facets = []
    for cc in M.cocircuits:
        amin = sum(min(0, x) for x in cc.v)
        amax = sum(max(0, x) for x in cc.v)
        if amax - amin != cc.support_size:
            raise NotUnimodular(
                f"facet width {amax - amin} != support size {cc.support_size} "
                f"for cocircuit {cc.v}")
        facets.append(Facet(cc.c, amin, amax))
    return HRep(tuple(facets), M.d)


def lattice_count(M: RealizedMatroid, m: int, interior: bool = False
                  ) -> tuple[LatticePointSet, int]:
    """Enumerate the (interior) lattice points of the dilate mZ.

    The point zonotope (d = 0) has one lattice point and one interior
    lattice point at every dilate.
    """
    if m < 1:
        raise ValueError("dilate m must be >= 1")
    if M.d == 0:
        pts = frozenset({()})
        return LatticePointSet(pts, m), 1
    rep = h_rep(M)
    entries = M.realization.entries
    ranges = []
    volume = 1
    for i in range(M.d):
        lo = m * sum(min(0, a) for a in entries[i])
        hi = m * sum(max(0, a) for a in entries[i])
        volume *= hi - lo + 1
        if volume > BOX_GUARD:
            raise GuardExceeded(f"bounding box volume exceeds {BOX_GUARD}")
        ranges.append(range(lo, hi + 1))
    pts = set()
    facets = rep.facets
    for x in itertools.product(*ranges):
        ok = True
        for f in facets:
            val = sum(ci * xi for ci, xi in zip(f.c, x))
            if interior:
                if not (m * f.alpha_min < val < m * f.alpha_max):
                    ok = False
                    break
            elif not (m * f.alpha_min <= val <= m * f.alpha_max):
                ok = False
                break
        if ok:
            pts.add(x)
    return LatticePointSet(frozenset(pts), m), len(pts)


def tutte_count(M: RealizedMatroid, m: int, interior: bool = False) -> int:
    """Stanley's count m^d * T_M((m -+ 1)/m, 1), cleared to integers.

    The rational argument is never formed: the x-degree bound of the Tutte
    polynomial clears m^d exactly.
    """
    if m < 1:
        raise ValueError("dilate m must be >= 1")
    num = m - 1 if interior else m + 1
    T = M.tutte()
    return sum(c * num**a * m**(M.d - a) for (a, b), c in T.items())
