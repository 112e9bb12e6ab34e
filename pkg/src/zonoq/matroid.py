"""Realized matroids from integer matrices.

A matroid is always carried by a full-row-rank integer matrix (columns are
the ground set, 0-based).  Construction eagerly enumerates circuits (with
their exact integer dependency coefficients) and cocircuit vectors, which the
geometry and algebra layers use as the single source of combinatorial truth.

Ground sets are capped at 16 elements: circuit/cocircuit search is by subset
enumeration, which is exact and fast at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GuardExceeded
from .exact import BiPolyXY
from .linalg import det_int, nullspace_primitive, primitive_vector, rank_int

GROUND_GUARD = 16


@dataclass(frozen=True)
class Realization:
    """A d x n integer matrix of full row rank d."""

    d: int
    n: int
    entries: tuple[tuple[int, ...], ...]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.d))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]


@dataclass(frozen=True)
class CircuitRep:
    """A circuit support with its fixed integer dependency.

    ``alpha`` is primitive with first nonzero entry positive and satisfies
    sum(alpha[i] * column(support[i])) = 0 exactly.
    """

    support: tuple[int, ...]
    alpha: tuple[int, ...]


@dataclass(frozen=True)
class CocircuitVector:
    """A support-minimal nonzero vector v of the row space, with c^T A = v.

    For unimodular A the stored v is primitive; in general it is the smallest
    rowspace multiple admitting an integral c.
    """

    v: tuple[int, ...]
    c: tuple[int, ...]
    support_size: int

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, x in enumerate(self.v) if x)


@dataclass(frozen=True)
class Component:
    elements: tuple[int, ...]
    is_circuit: bool


class RealizedMatroid:
    """Matroid of an integer matrix, with cached rank and Tutte queries.

    Immutable after construction; all caches are written once per key, so
    read-only sharing across workers is safe.
    """

    def __init__(self, realization: Realization,
                 circuits: tuple[CircuitRep, ...],
                 cocircuits: tuple[CocircuitVector, ...]):
        self.realization = realization
        self.circuits = circuits
        self.cocircuits = cocircuits
        self._rank_cache: dict[frozenset, int] = {}
        self._unimodular: bool | None = None
        self._tutte: BiPolyXY | None = None

    @property
    def d(self) -> int:
        return self.realization.d

    @property
    def n(self) -> int:
        return self.realization.n

    def __repr__(self) -> str:
        return f"RealizedMatroid(d={self.d}, n={self.n})"

    # -- rank ---------------------------------------------------------------

    def rank(self, subset: Iterable[int]) -> int:
        key = frozenset(subset)
        if not all(0 <= j < self.n for j in key):
            raise ValueError("subset out of range")
        cached = self._rank_cache.get(key)
        if cached is None:
            cached = rank_int([self.realization.column(j) for j in sorted(key)])
            self._rank_cache[key] = cached
        return cached

    def loops(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n)
                     if not any(self.realization.column(j)))

    def coloops(self) -> tuple[int, ...]:
        full = range(self.n)
        return tuple(j for j in full
                     if self.rank(set(full) - {j}) == self.d - 1)

    # -- unimodularity ------------------------------------------------------

    def is_unimodular(self) -> bool:
        """True iff every maximal (d x d) minor lies in {-1, 0, 1}."""
        if self._unimodular is None:
            ok = True
            for combo in itertools.combinations(range(self.n), self.d):
                sub = [[self.realization.entries[i][j] for j in combo]
                       for i in range(self.d)]
                if abs(det_int(sub)) > 1:
                    ok = False
                    break
            self._unimodular = ok
        return self._unimodular

    # -- minors ---------------------------------------------------------------

    def minor(self, op: str, i: int) -> "RealizedMatroid":
        if op == "delete":
            return self.delete(i)
        if op == "contract":
            return self.contract(i)
        raise ValueError(f"unknown minor operation {op!r}")

    def delete(self, i: int) -> "RealizedMatroid":
        if not 0 <= i < self.n:
            raise ValueError("element out of range")
        if i in self.coloops():
            raise ValueError(f"cannot delete coloop {i}")
        rows = tuple(r[:i] + r[i + 1:] for r in self.realization.entries)
        return _from_realization(Realization(self.d, self.n - 1, rows))

    def contract(self, i: int) -> "RealizedMatroid":
        if not 0 <= i < self.n:
            raise ValueError("element out of range")
        if not any(self.realization.column(i)):
            raise ValueError(f"cannot contract loop {i}")
        rows = _column_to_e1([list(r) for r in self.realization.entries], i)
        new = tuple(tuple(v for j, v in enumerate(r) if j != i)
                    for r in rows[1:])
        return _from_realization(Realization(self.d - 1, self.n - 1, new))

    # -- thickening ------------------------------------------------------------

    def thicken(self, m: int) -> "RealizedMatroid":
        """Matroid of the matrix repeating each column m times.

        Ground set ordered copy-major: columns of copy 1, then copy 2, ...
        """
        if m < 1:
            raise ValueError("thickening requires m >= 1")
        if m * self.n > GROUND_GUARD:
            raise GuardExceeded(
                f"thickening would have {m * self.n} > {GROUND_GUARD} elements")
        rows = tuple(r * m for r in self.realization.entries)
        return _from_realization(Realization(self.d, m * self.n, rows))

    # -- Tutte polynomial --------------------------------------------------------

    def tutte(self) -> BiPolyXY:
        if self._tutte is None:
            cols = tuple(self.realization.columns())
            self._tutte = _tutte_cols(cols, self.d)
        return self._tutte

    # -- connectivity ---------------------------------------------------------

    def connected_components(self) -> tuple[Component, ...]:
        """Partition by co-occurrence in a circuit; loops and coloops are
        singletons.  A component is flagged when its element set is itself a
        circuit (a loop counts as a size-1 circuit)."""
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for circ in self.circuits:
            root = find(circ.support[0])
            for j in circ.support[1:]:
                parent[find(j)] = root
        groups: dict[int, list[int]] = {}
        for j in range(self.n):
            groups.setdefault(find(j), []).append(j)
        circuit_supports = {frozenset(c.support) for c in self.circuits}
        comps = [Component(tuple(sorted(g)), frozenset(g) in circuit_supports)
                 for g in groups.values()]
        return tuple(sorted(comps, key=lambda c: c.elements))


# -- construction -----------------------------------------------------------


def from_matrix(entries: Sequence[Sequence[int]]) -> RealizedMatroid:
    """Build a RealizedMatroid from a full-row-rank integer matrix.

    An empty list gives the empty (0 x 0) matroid.
    """
    rows = tuple(tuple(int(v) for v in r) for r in entries)
    d = len(rows)
    n = len(rows[0]) if d else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    return _from_realization(Realization(d, n, rows))


def _from_realization(rz: Realization) -> RealizedMatroid:
    if rz.n > GROUND_GUARD:
        raise GuardExceeded(f"ground set {rz.n} exceeds guard {GROUND_GUARD}")
    if rank_int(rz.entries) != rz.d:
        raise ValueError("matrix must have full row rank")
    return RealizedMatroid(rz, _find_circuits(rz), _find_cocircuits(rz))


def _find_circuits(rz: Realization) -> tuple[CircuitRep, ...]:
    cols = rz.columns()
    circuits: list[CircuitRep] = []
    supports: list[frozenset] = []
    # every circuit has at most d+1 elements
    for size in range(1, rz.d + 2):
        for combo in itertools.combinations(range(rz.n), size):
            cset = set(combo)
            if any(s <= cset for s in supports):
                continue
            sub = [cols[j] for j in combo]
            if rank_int(sub) < size:
                kern = nullspace_primitive(
                    [[cols[j][i] for j in combo] for i in range(rz.d)], size)
                assert len(kern) == 1
                circuits.append(CircuitRep(combo, kern[0]))
                supports.append(frozenset(combo))
    return tuple(circuits)


def _find_cocircuits(rz: Realization) -> tuple[CocircuitVector, ...]:
    if rz.d == 0:
        return ()
    cols = rz.columns()
    seen: dict[tuple[int, ...], CocircuitVector] = {}
    for combo in itertools.combinations(range(rz.n), rz.d - 1):
        sub = [cols[j] for j in combo]
        if rank_int(sub) != rz.d - 1:
            continue
        kern = nullspace_primitive(sub, rz.d)
        if len(kern) != 1:  # defensive; rank d-1 forces nullity 1
            continue
        c = kern[0]
        v = tuple(sum(c[i] * rz.entries[i][j] for i in range(rz.d))
                  for j in range(rz.n))
        for x in v:
            if x:
                if x < 0:
                    v = tuple(-y for y in v)
                    c = tuple(-y for y in c)
                break
        if v not in seen:
            seen[v] = CocircuitVector(v, c, sum(1 for x in v if x))
    return tuple(sorted(seen.values(), key=lambda cc: cc.v))


# -- contraction transform ----------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _column_to_e1(rows: list[list[int]], j: int) -> list[list[int]]:
    """Apply determinant +-1 integer row operations so column j becomes
    (g, 0, ..., 0) with g = gcd of the column."""
    d = len(rows)
    for i in range(1, d):
        a, b = rows[0][j], rows[i][j]
        if b == 0:
            continue
        if a == 0:
            rows[0], rows[i] = rows[i], rows[0]
            continue
        g, s, t = _xgcd(a, b)
        r0 = [s * x + t * y for x, y in zip(rows[0], rows[i])]
        ri = [-(b // g) * x + (a // g) * y for x, y in zip(rows[0], rows[i])]
        rows[0], rows[i] = r0, ri
    if rows and rows[0][j] < 0:
        rows[0] = [-x for x in rows[0]]
    return rows


# -- Tutte via memoized deletion/contraction -----------------------------------

_TUTTE_MEMO: dict[tuple, BiPolyXY] = {}


def _canonical_signature(cols: tuple[tuple[int, ...], ...], d: int) -> tuple:
    """Memo key invariant under row operations and column scaling.

    Columns are rewritten in the greedy basis (so the basis columns become
    unit vectors), normalized to primitive sign-fixed integer tuples, and
    sorted; minors reached along different deletion/contraction orders then
    share an entry.  Equal keys always describe isomorphic column
    configurations, hence equal Tutte polynomials, so cross-matroid sharing
    is sound.
    """
    n = len(cols)
    if d == 0:
        return (0, n)
    basis: list[tuple[int, ...]] = []
    for col in cols:
        if len(basis) == d:
            break
        if rank_int(basis + [col]) > len(basis):
            basis.append(col)
    # solve B * X = A over Q, where B has the basis vectors as columns
    aug = [[Fraction(basis[k][i]) for k in range(d)] +
           [Fraction(cols[j][i]) for j in range(n)]
           for i in range(d)]
    for c in range(d):
        piv = next(i for i in range(c, d) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for i in range(d):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    sig = sorted(primitive_vector([aug[i][d + j] for i in range(d)])
                 for j in range(n))
    return (d, tuple(sig))


def _tutte_cols(cols: tuple[tuple[int, ...], ...], d: int) -> BiPolyXY:
    if not cols:
        return BiPolyXY.one()
    key = _canonical_signature(cols, d)
    hit = _TUTTE_MEMO.get(key)
    if hit is not None:
        return hit
    loop_count = 0
    coloop_count = 0
    pivot = None
    for j, col in enumerate(cols):
        if not any(col):
            loop_count += 1
        elif rank_int(cols[:j] + cols[j + 1:]) < d:
            coloop_count += 1
        else:
            pivot = j
            break
    if pivot is None:
        result = BiPolyXY.monomial(coloop_count, loop_count)
    else:
        deleted = cols[:pivot] + cols[pivot + 1:]
        result = _tutte_cols(deleted, d) + _tutte_cols(_contract_cols(cols, pivot), d - 1)
    _TUTTE_MEMO[key] = result
    return result


def _contract_cols(cols: tuple[tuple[int, ...], ...], j: int) -> tuple[tuple[int, ...], ...]:
    d = len(cols[0])
    rows = [[cols[k][i] for k in range(len(cols))] for i in range(d)]
    rows = _column_to_e1(rows, j)
    rest = rows[1:]
    return tuple(tuple(r[k] for r in rest)
                 for k in range(len(cols)) if k != j)


def tutte_thickened(T: BiPolyXY, d: int, m: int) -> BiPolyXY:
    """Tutte polynomial of the m-thickening, from T = T_M and the rank d.

    Evaluates the thickening substitution with the denominator
    (1 + y + ... + y^(m-1)) cleared against the x-degree bound d.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if T.x_degree() > d:
        raise ValueError("T has x-degree above the stated rank")
    P = BiPolyXY({(1, 0): 1, **{(0, b): 1 for b in range(1, m)}})
    Q = BiPolyXY({(0, b): 1 for b in range(m)})
    p_pow = [BiPolyXY.one()]
    q_pow = [BiPolyXY.one()]
    for _ in range(d):
        p_pow.append(p_pow[-1] * P)
        q_pow.append(q_pow[-1] * Q)
    out = BiPolyXY.zero()
    for (a, b), c in T.items():
        out = out + p_pow[a] * q_pow[d - a] * BiPolyXY.monomial(0, m * b, c)
    return out
