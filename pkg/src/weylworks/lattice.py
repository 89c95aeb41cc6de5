"""Shift-stable subspaces of a truncated loop space.

The ambient space is spanned by monomials z^k e_i with 0 <= k < D,
1 <= i <= n, and the shift operator X sends z^k e_i to z^{k-1} e_i
(degree zero maps to 0).  Coordinates are ordered by descending degree
and then by component, so reduced echelon bases are canonical.  The
Jordan type of X restricted to a stable subspace classifies which
stratum of shift-stable subspaces it belongs to; closures are governed
by dominance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .characters import DEFAULT_SIZE_GUARD, character
from .linalg import EchelonBasis, rref
from .weights import Partition, as_partition, conjugate, dominance_leq, pad


class StratumLocation(enum.Enum):
    IN_STRATUM = "in-stratum"
    IN_CLOSURE_ONLY = "in-closure-only"
    OUTSIDE = "outside"


def coordinate_index(degree: int, component: int, n: int, D: int) -> int:
    """Index of the monomial z^degree e_component (component 0-indexed)."""
    if not 0 <= degree < D or not 0 <= component < n:
        raise ValueError(f"monomial z^{degree} e_{component} outside the D={D} window")
    return (D - 1 - degree) * n + component


def shift_vector(vec: dict[int, Fraction], n: int, D: int) -> dict[int, Fraction]:
    """Apply the shift operator to a sparse coordinate vector."""
    out = {}
    top = (D - 1) * n
    for idx, v in vec.items():
        if idx < top:  # degree >= 1, drop the degree-zero block
            out[idx + n] = v
    return out


@dataclass(frozen=True)
class LatticeSubspace:
    """A shift-stable subspace, stored as a reduced echelon basis.

    Rows are dense coordinate tuples of length n*D in the monomial
    ordering above.  Instances built by the constructors here are always
    shift-stable; jordan_type re-validates in case a basis arrived from
    outside (deserialization).
    """

    n: int
    D: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "D": self.D,
            "basis": [[str(Fraction(x)) for x in row] for row in self.basis],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LatticeSubspace":
        n = int(data["n"])
        D = int(data["D"])
        if n < 1 or D < 1:
            raise ValueError("n and D must be at least 1")
        rows = []
        for row in data["basis"]:
            if len(row) != n * D:
                raise ValueError(
                    f"basis row has length {len(row)}, expected n*D = {n * D}"
                )
            rows.append([Fraction(str(x)) for x in row])
        reduced, _ = rref(rows)
        sub = cls(n=n, D=D, basis=tuple(tuple(r) for r in reduced))
        _require_shift_stable(sub)
        return sub


def _sparse(row) -> dict[int, Fraction]:
    return {i: v for i, v in enumerate(row) if v}


def _require_shift_stable(sub: LatticeSubspace) -> None:
    eb = EchelonBasis()
    for row in sub.basis:
        eb.insert(_sparse(row))
    for row in sub.basis:
        if eb.residual(shift_vector(_sparse(row), sub.n, sub.D)):
            raise ValueError("subspace is not stable under the shift operator")


def fixed_point(mu, n: int) -> LatticeSubspace:
    """The monomial subspace spanned by z^j e_i for j < mu_i.

    mu is a nonnegative integer vector of length n.  These are exactly
    the shift-stable subspaces spanned by monomials.
    """
    mu = tuple(int(x) for x in mu)
    if len(mu) != n:
        raise ValueError(f"mu must have length n={n}, got {mu}")
    if any(x < 0 for x in mu):
        raise ValueError(f"mu must be nonnegative, got {mu}")
    D = max(mu, default=0) + 1
    rows = []
    for i in range(n):
        for j in range(mu[i]):
            row = [Fraction(0)] * (n * D)
            row[coordinate_index(j, i, n, D)] = Fraction(1)
            rows.append(row)
    reduced, _ = rref(rows)
    return LatticeSubspace(n=n, D=D, basis=tuple(tuple(r) for r in reduced))


def close_under_shift(n: int, D: int, vectors) -> LatticeSubspace:
    """Smallest shift-stable subspace containing the given dense vectors."""
    eb = EchelonBasis()
    queue = []
    for vec in vectors:
        if len(vec) != n * D:
            raise ValueError(f"vector length {len(vec)} does not match n*D={n * D}")
        stored = eb.insert(_sparse([Fraction(x) for x in vec]))
        if stored is not None:
            queue.append(stored)
    while queue:
        vec = queue.pop()
        stored = eb.insert(shift_vector(vec, n, D))
        if stored is not None:
            queue.append(stored)
    dense = []
    for ri in eb.sorted_order():
        row = [Fraction(0)] * (n * D)
        for c, v in eb.rows[ri].items():
            row[c] = v
        dense.append(tuple(row))
    return LatticeSubspace(n=n, D=D, basis=tuple(dense))


def jordan_type(sub: LatticeSubspace) -> Partition:
    """Jordan type of the shift operator restricted to the subspace.

    Computed from the rank sequence of shift powers: the multiset of
    block sizes is the conjugate of the successive rank drops.  Raises
    ValueError if the subspace is not shift-stable.
    """
    _require_shift_stable(sub)
    current = [_sparse(row) for row in sub.basis]
    ranks = [len(current)]
    while ranks[-1] > 0:
        eb = EchelonBasis()
        nxt = []
        for vec in current:
            img = shift_vector(vec, sub.n, sub.D)
            if eb.insert(img) is not None:
                nxt.append(img)
        ranks.append(eb.dim)
        current = nxt
    drops = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    return conjugate(as_partition(drops))


def stratum_membership(sub: LatticeSubspace, lam) -> StratumLocation:
    """Locate the subspace relative to the stratum labeled by lam.

    IN_STRATUM when the Jordan type equals lam, IN_CLOSURE_ONLY when it
    is strictly below lam in dominance order, OUTSIDE otherwise.
    """
    lam = as_partition(lam)
    jt = jordan_type(sub)
    if jt == lam:
        return StratumLocation.IN_STRATUM
    if sum(jt) == sum(lam):
        width = max(len(jt), len(lam))
        if dominance_leq(pad(jt, width), pad(lam, width)):
            return StratumLocation.IN_CLOSURE_ONLY
    return StratumLocation.OUTSIDE


def mv_cycle_count(lam, mu, n: int, *, size_guard: int | None = DEFAULT_SIZE_GUARD) -> int:
    """Number of cycle components of weight mu for the stratum closure of lam.

    Derived from character data: the count equals the dimension of the
    mu weight space of the irreducible with highest weight lam.  No
    cycle geometry is constructed here.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than n={n} parts")
    return character(pad(lam, n), mu, size_guard=size_guard)
