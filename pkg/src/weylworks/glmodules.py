"""Explicit gl(n) modules with exact rational generator matrices.

A module is a finite basis, one weight per basis vector, and sparse
matrices for the Chevalley raising and lowering generators (E_i has a 1
in entry (i, i+1) on the standard module; F_i is its transpose).  All
constructors act by derivations on symmetric, exterior, and tensor
products, so the defining commutation relations hold exactly over the
rationals, not just numerically.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .characters import DEFAULT_SIZE_GUARD, dim_irrep
from .errors import InvariantViolation, check_dimension
from .linalg import EchelonBasis, RatMat, kernel
from .weights import (
    WeightVec,
    as_partition,
    compositions,
    conjugate,
    is_dominant,
    pad,
    simple_root,
    weight_diff,
    weight_sum,
)


@dataclass(frozen=True)
class ExplicitModule:
    """A gl(n) module given by basis weights and generator matrices.

    E[i] and F[i] are the matrices of the i-th raising and lowering
    generators, 0-indexed, acting on column vectors in the stored basis.
    """

    n: int
    dim: int
    basis_weights: tuple[WeightVec, ...]
    E: tuple[RatMat, ...]
    F: tuple[RatMat, ...]


@dataclass(frozen=True)
class Decomposition:
    """Multiset of highest weights with multiplicities, keyed by weight."""

    n: int
    multiplicities: dict[WeightVec, int]


def standard_module(n: int) -> ExplicitModule:
    """The vector representation on C^n."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    weights = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    E = tuple(RatMat.from_entries(n, n, [(i, i + 1, 1)]) for i in range(n - 1))
    F = tuple(RatMat.from_entries(n, n, [(i + 1, i, 1)]) for i in range(n - 1))
    return ExplicitModule(n, n, weights, E, F)


def sym_power(k: int, n: int, *, max_dim: int | None = None) -> ExplicitModule:
    """Sym^k(C^n) on the monomial basis, generators acting as derivations."""
    if k < 0 or n < 1:
        raise ValueError(f"bad symmetric power parameters k={k}, n={n}")
    check_dimension(comb(k + n - 1, n - 1), max_dim)
    basis = list(compositions(k, n))
    index = {a: t for t, a in enumerate(basis)}
    dim = len(basis)
    E, F = [], []
    for i in range(n - 1):
        e_entries, f_entries = [], []
        for t, a in enumerate(basis):
            if a[i + 1] > 0:
                target = weight_sum(a, simple_root(i, n))
                e_entries.append((index[target], t, a[i + 1]))
            if a[i] > 0:
                target = weight_diff(a, simple_root(i, n))
                f_entries.append((index[target], t, a[i]))
        E.append(RatMat.from_entries(dim, dim, e_entries))
        F.append(RatMat.from_entries(dim, dim, f_entries))
    return ExplicitModule(n, dim, tuple(basis), tuple(E), tuple(F))


def wedge_replace(
    subset: tuple[int, ...], old: int, new: int
) -> tuple[int, tuple[int, ...]] | None:
    """Replace one wedge factor and re-sort, tracking the parity sign.

    Returns (sign, sorted subset), or None when the substitution collides
    with an existing factor.  The sign is the parity of the number of
    factors strictly between old and new.
    """
    if new in subset:
        return None
    others = [x for x in subset if x != old]
    lo, hi = min(old, new), max(old, new)
    crossings = sum(1 for x in others if lo < x < hi)
    sign = -1 if crossings % 2 else 1
    return sign, tuple(sorted(others + [new]))


def ext_power(k: int, n: int, *, max_dim: int | None = None) -> ExplicitModule:
    """Lambda^k(C^n) on sorted k-subsets of {0, ..., n-1}."""
    if not 0 <= k <= n:
        raise ValueError(f"bad exterior power parameters k={k}, n={n}")
    check_dimension(comb(n, k), max_dim)
    basis = list(itertools.combinations(range(n), k))
    index = {s: t for t, s in enumerate(basis)}
    dim = len(basis)
    weights = tuple(
        tuple(1 if j in s else 0 for j in range(n)) for s in basis
    )
    E, F = [], []
    for i in range(n - 1):
        e_entries, f_entries = [], []
        for t, s in enumerate(basis):
            if i + 1 in s:
                hit = wedge_replace(s, i + 1, i)
                if hit is not None:
                    sign, target = hit
                    e_entries.append((index[target], t, sign))
            if i in s:
                hit = wedge_replace(s, i, i + 1)
                if hit is not None:
                    sign, target = hit
                    f_entries.append((index[target], t, sign))
        E.append(RatMat.from_entries(dim, dim, e_entries))
        F.append(RatMat.from_entries(dim, dim, f_entries))
    return ExplicitModule(n, dim, weights, tuple(E), tuple(F))


def tensor(a: ExplicitModule, b: ExplicitModule, *, max_dim: int | None = None) -> ExplicitModule:
    """Tensor product; generators act as g (x) 1 + 1 (x) g."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    check_dimension(a.dim * b.dim, max_dim)
    dim = a.dim * b.dim
    weights = tuple(
        weight_sum(wa, wb) for wa in a.basis_weights for wb in b.basis_weights
    )
    E, F = [], []
    for i in range(a.n - 1):
        e_entries, f_entries = [], []
        for mats, out in ((a.E[i], e_entries), (a.F[i], f_entries)):
            for r, c, v in mats.entries():
                for j in range(b.dim):
                    out.append((r * b.dim + j, c * b.dim + j, v))
        for mats, out in ((b.E[i], e_entries), (b.F[i], f_entries)):
            for r, c, v in mats.entries():
                for j in range(a.dim):
                    out.append((j * b.dim + r, j * b.dim + c, v))
        E.append(RatMat.from_entries(dim, dim, e_entries))
        F.append(RatMat.from_entries(dim, dim, f_entries))
    return ExplicitModule(a.n, dim, weights, tuple(E), tuple(F))


def _matmul_int(a, b, n):
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


def adjoint_module(n: int) -> ExplicitModule:
    """sl(n) under the commutator action, inside gl(n) matrices.

    Basis: off-diagonal matrix units (weight e_a - e_b), then the n-1
    diagonal differences H_i = E_ii - E_{i+1,i+1} (weight zero).
    """
    if n < 2:
        raise ValueError("adjoint module needs rank at least 2")
    basis_mats = []
    weights = []
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            mat = [[0] * n for _ in range(n)]
            mat[a][b] = 1
            basis_mats.append(mat)
            weights.append(tuple(1 if j == a else -1 if j == b else 0 for j in range(n)))
    for i in range(n - 1):
        mat = [[0] * n for _ in range(n)]
        mat[i][i] = 1
        mat[i + 1][i + 1] = -1
        basis_mats.append(mat)
        weights.append((0,) * n)
    dim = len(basis_mats)

    def coords_of(mat) -> dict[int, int]:
        # off-diagonal entries map to matrix units; the diagonal (trace 0)
        # expands in the H_i with coefficients given by partial sums
        out = {}
        t = 0
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                if mat[a][b]:
                    out[t] = mat[a][b]
                t += 1
        running = 0
        for i in range(n - 1):
            running += mat[i][i]
            if running:
                out[dim - (n - 1) + i] = running
        return out

    E, F = [], []
    for i in range(n - 1):
        gen_e = [[0] * n for _ in range(n)]
        gen_e[i][i + 1] = 1
        gen_f = [[0] * n for _ in range(n)]
        gen_f[i + 1][i] = 1
        e_entries, f_entries = [], []
        for t, mat in enumerate(basis_mats):
            for gen, out in ((gen_e, e_entries), (gen_f, f_entries)):
                bracket = [
                    [x - y for x, y in zip(row1, row2)]
                    for row1, row2 in zip(_matmul_int(gen, mat, n), _matmul_int(mat, gen, n))
                ]
                for r, v in coords_of(bracket).items():
                    out.append((r, t, v))
        E.append(RatMat.from_entries(dim, dim, e_entries))
        F.append(RatMat.from_entries(dim, dim, f_entries))
    return ExplicitModule(n, dim, tuple(weights), tuple(E), tuple(F))


def weight_decompose(mod: ExplicitModule) -> dict[WeightVec, tuple[int, ...]]:
    """Basis indices grouped by weight, weights in descending order."""
    groups: dict[WeightVec, list[int]] = {}
    for idx, w in enumerate(mod.basis_weights):
        groups.setdefault(w, []).append(idx)
    return {w: tuple(groups[w]) for w in sorted(groups, reverse=True)}


def highest_weight_vectors(
    mod: ExplicitModule,
) -> list[tuple[WeightVec, list[dict[int, Fraction]]]]:
    """Joint kernel of all raising generators, listed weight by weight.

    Returns (weight, kernel basis vectors) pairs, weights descending,
    kernel vectors as sparse dicts in the module's basis coordinates.
    Only weights with a nonzero kernel appear.
    """
    result = []
    for w, idxs in weight_decompose(mod).items():
        rows_by_key: dict[tuple[int, int], list] = {}
        for pos, idx in enumerate(idxs):
            for i, mat in enumerate(mod.E):
                for r, v in mat.column(idx).items():
                    row = rows_by_key.setdefault((i, r), [Fraction(0)] * len(idxs))
                    row[pos] = Fraction(v)
        basis, _ = kernel(list(rows_by_key.values()), len(idxs))
        if basis:
            vectors = [
                {idxs[t]: val for t, val in enumerate(vec) if val} for vec in basis
            ]
            result.append((w, vectors))
    return result


def decompose(
    mod: ExplicitModule, *, size_guard: int | None = DEFAULT_SIZE_GUARD
) -> Decomposition:
    """Multiplicities of irreducibles, from highest-weight vector counts.

    Cross-checks that the multiplicities account for the full dimension;
    failure raises InvariantViolation since it means the input matrices
    do not define a genuine module.
    """
    mults: dict[WeightVec, int] = {}
    for w, vectors in highest_weight_vectors(mod):
        if not is_dominant(w):
            raise InvariantViolation(
                f"highest-weight vector found at non-dominant weight {w}"
            )
        mults[w] = len(vectors)
    total = sum(m * dim_irrep(w, mod.n, size_guard=size_guard) for w, m in mults.items())
    if total != mod.dim:
        raise InvariantViolation(
            f"multiplicities account for dimension {total}, module has {mod.dim}"
        )
    return Decomposition(n=mod.n, multiplicities=mults)


def verify_chevalley_relations(mod: ExplicitModule) -> None:
    """Check weight shifts and the [E_i, F_i] = H_i relation on every basis
    vector, exactly.  Raises InvariantViolation on any failure."""
    n = mod.n
    for i in range(n - 1):
        alpha = simple_root(i, n)
        for idx in range(mod.dim):
            w = mod.basis_weights[idx]
            up = weight_sum(w, alpha)
            down = weight_diff(w, alpha)
            for r in mod.E[i].column(idx):
                if mod.basis_weights[r] != up:
                    raise InvariantViolation(
                        f"E_{i} maps weight {w} outside weight {up}"
                    )
            for r in mod.F[i].column(idx):
                if mod.basis_weights[r] != down:
                    raise InvariantViolation(
                        f"F_{i} maps weight {w} outside weight {down}"
                    )
            commutator = mod.E[i].apply(mod.F[i].column(idx))
            ef = mod.F[i].apply(mod.E[i].column(idx))
            for r, v in ef.items():
                nv = commutator.get(r, 0) - v
                if nv:
                    commutator[r] = nv
                else:
                    commutator.pop(r, None)
            expected = w[i] - w[i + 1]
            want = {idx: expected} if expected else {}
            if {k: v for k, v in commutator.items() if v} != {
                k: v for k, v in want.items()
            }:
                raise InvariantViolation(
                    f"[E_{i}, F_{i}] fails on basis vector {idx} of weight {w}"
                )


def irrep_plucker(lam, n: int, *, max_dim: int | None = None) -> ExplicitModule:
    """The irreducible with highest weight lam (a partition), constructed
    inside a tensor product of exterior powers.

    One exterior-power factor per column of the diagram of lam; the
    highest vector is the tensor of top wedges e_1 ^ ... ^ e_h over the
    columns.  Its closure under the lowering generators is computed with
    exact echelon reduction, one weight space at a time; the resulting
    reduced echelon bases are canonical, so the output is deterministic.
    """
    shape = as_partition(lam)
    if len(shape) > n:
        raise ValueError(f"partition {shape} has more than n={n} parts")
    heights = conjugate(shape)
    if not heights:
        return sym_power(0, n)
    factors = [ext_power(h, n, max_dim=max_dim) for h in heights]
    ambient = functools.reduce(
        lambda acc, nxt: tensor(acc, nxt, max_dim=max_dim), factors
    )
    top_weight = pad(shape, n)
    bases: dict[WeightVec, EchelonBasis] = {}
    start = bases.setdefault(top_weight, EchelonBasis()).insert({0: Fraction(1)})
    queue: deque[tuple[WeightVec, dict]] = deque([(top_weight, start)])
    while queue:
        w, vec = queue.popleft()
        for i in range(n - 1):
            image = ambient.F[i].apply(vec)
            if not image:
                continue
            tw = weight_diff(w, simple_root(i, n))
            stored = bases.setdefault(tw, EchelonBasis()).insert(image)
            if stored is not None:
                queue.append((tw, stored))

    order = sorted((w for w in bases if bases[w].dim), reverse=True)
    offsets: dict[WeightVec, tuple[int, dict[int, int]]] = {}
    vectors: list[dict] = []
    weights: list[WeightVec] = []
    pos = 0
    for w in order:
        eb = bases[w]
        row_order = eb.sorted_order()
        offsets[w] = (pos, {ri: p for p, ri in enumerate(row_order)})
        for ri in row_order:
            vectors.append(eb.rows[ri])
            weights.append(w)
        pos += eb.dim
    dim = pos

    def restricted(ambient_mats, direction: int) -> list[RatMat]:
        mats = []
        for i in range(n - 1):
            alpha = simple_root(i, n)
            entries = []
            for col, (w, vec) in enumerate(zip(weights, vectors)):
                image = ambient_mats[i].apply(vec)
                if not image:
                    continue
                tw = weight_sum(w, alpha) if direction > 0 else weight_diff(w, alpha)
                if tw not in bases or not bases[tw].dim:
                    raise InvariantViolation(
                        "generator image escapes the cyclic submodule"
                    )
                base, placement = offsets[tw]
                for ri, coeff in bases[tw].coords(image).items():
                    entries.append((base + placement[ri], col, coeff))
            mats.append(RatMat.from_entries(dim, dim, entries))
        return mats

    E = restricted(ambient.E, +1)
    F = restricted(ambient.F, -1)
    return ExplicitModule(n, dim, tuple(weights), tuple(E), tuple(F))
