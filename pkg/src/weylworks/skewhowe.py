"""Commuting gl(n) x gl(m) actions on Lambda^N(C^n (x) C^m).

The wedge basis is indexed by N-subsets of the nm pairs (i, a), ordered
lexicographically; both generator families act by derivations with the
same wedge sign convention as glmodules.ext_power.  The joint kernel of
the gl(m) raising operators inside a bi-weight slice realizes weight
spaces of one gl(n) irreducible, and stitching those slices together
yields the whole irreducible with restricted generator matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .characters import dim_irrep
from .errors import InvariantViolation, check_dimension
from .glmodules import ExplicitModule, wedge_replace
from .linalg import RatMat, kernel, vec_add_scaled
from .weights import (
    WeightVec,
    as_partition,
    conjugate,
    pad,
    partitions,
    simple_root,
    weight_diff,
    weight_sum,
)


@dataclass
class BiModule:
    """Lambda^N(C^n (x) C^m) with both generator families materialized.

    basis holds sorted N-subsets of pair indices (i*m + a for the pair
    (i, a)).  The slice map is built lazily on first use and then only
    read, so sharing a BiModule between threads after a warm-up call is
    safe.
    """

    n: int
    m: int
    N: int
    dim: int
    basis: tuple[tuple[int, ...], ...]
    gln_weights: tuple[WeightVec, ...]
    glm_weights: tuple[WeightVec, ...]
    En: tuple[RatMat, ...]
    Fn: tuple[RatMat, ...]
    Em: tuple[RatMat, ...]
    Fm: tuple[RatMat, ...]
    _slices: dict[tuple[WeightVec, WeightVec], tuple[int, ...]] | None = field(
        default=None, repr=False, compare=False
    )

    def slice_indices(self, wn: WeightVec, wm: WeightVec) -> tuple[int, ...]:
        """Basis indices with gl(n) weight wn and gl(m) weight wm."""
        if self._slices is None:
            groups: dict[tuple[WeightVec, WeightVec], list[int]] = {}
            for idx in range(self.dim):
                key = (self.gln_weights[idx], self.glm_weights[idx])
                groups.setdefault(key, []).append(idx)
            self._slices = {k: tuple(v) for k, v in groups.items()}
        return self._slices.get((tuple(wn), tuple(wm)), ())

    def biweights(self) -> list[tuple[WeightVec, WeightVec]]:
        """All occurring (gl(n) weight, gl(m) weight) pairs, descending."""
        self.slice_indices((0,) * self.n, (0,) * self.m)  # ensure cache
        assert self._slices is not None
        return sorted(self._slices, reverse=True)

    def gln_module(self) -> ExplicitModule:
        return ExplicitModule(self.n, self.dim, self.gln_weights, self.En, self.Fn)

    def glm_module(self) -> ExplicitModule:
        return ExplicitModule(self.m, self.dim, self.glm_weights, self.Em, self.Fm)


@dataclass(frozen=True)
class HomSpace:
    """Joint kernel of the gl(m) raising operators in one bi-weight slice.

    vectors are sparse dicts in the ambient wedge basis.  free_positions
    are positions within slice_indices where each kernel vector carries
    its defining 1, so coordinates of any vector in the span can be read
    off directly.
    """

    lam: tuple[int, ...]
    mu: WeightVec
    dim: int
    vectors: tuple[dict[int, Fraction], ...]
    slice_indices: tuple[int, ...]
    free_positions: tuple[int, ...]


def build_bimodule(n: int, m: int, N: int, *, max_dim: int | None = None) -> BiModule:
    """Construct Lambda^N(C^n (x) C^m) with all four generator families."""
    if n < 1 or m < 1:
        raise ValueError("both ranks must be at least 1")
    if not 0 <= N <= n * m:
        raise ValueError(f"N={N} outside 0..{n * m}")
    dim = comb(n * m, N)
    check_dimension(dim, max_dim)
    basis = tuple(itertools.combinations(range(n * m), N))
    index = {s: t for t, s in enumerate(basis)}
    gln_weights, glm_weights = [], []
    for s in basis:
        wn = [0] * n
        wm = [0] * m
        for p in s:
            wn[p // m] += 1
            wm[p % m] += 1
        gln_weights.append(tuple(wn))
        glm_weights.append(tuple(wm))

    def substitution_family(count: int, source, target) -> tuple[list[RatMat], list[RatMat]]:
        raising, lowering = [], []
        for i in range(count - 1):
            r_entries, l_entries = [], []
            for t, s in enumerate(basis):
                for pair in s:
                    if source(pair) == i + 1:
                        hit = wedge_replace(s, pair, target(pair, i))
                        if hit is not None:
                            sign, new = hit
                            r_entries.append((index[new], t, sign))
                    if source(pair) == i:
                        hit = wedge_replace(s, pair, target(pair, i + 1))
                        if hit is not None:
                            sign, new = hit
                            l_entries.append((index[new], t, sign))
            raising.append(RatMat.from_entries(dim, dim, r_entries))
            lowering.append(RatMat.from_entries(dim, dim, l_entries))
        return raising, lowering

    En, Fn = substitution_family(n, lambda p: p // m, lambda p, row: row * m + p % m)
    Em, Fm = substitution_family(m, lambda p: p % m, lambda p, col: (p // m) * m + col)
    return BiModule(
        n=n,
        m=m,
        N=N,
        dim=dim,
        basis=basis,
        gln_weights=tuple(gln_weights),
        glm_weights=tuple(glm_weights),
        En=tuple(En),
        Fn=tuple(Fn),
        Em=tuple(Em),
        Fm=tuple(Fm),
    )


def verify_commuting_actions(bim: BiModule) -> None:
    """Check that every gl(n) generator commutes with every gl(m) generator,
    as exact matrices.  Raises InvariantViolation on failure."""
    for label_x, x in [("En", g) for g in bim.En] + [("Fn", g) for g in bim.Fn]:
        for label_y, y in [("Em", g) for g in bim.Em] + [("Fm", g) for g in bim.Fm]:
            if not (x @ y - y @ x).is_zero():
                raise InvariantViolation(
                    f"{label_x} and {label_y} fail to commute on the wedge module"
                )


def _joint_kernel(
    bim: BiModule, slice_idx: tuple[int, ...], operators: list[RatMat]
) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Kernel of the stacked operators restricted to the given slice."""
    rows_by_key: dict[tuple[int, int], list] = {}
    for pos, idx in enumerate(slice_idx):
        for op_no, op in enumerate(operators):
            for r, v in op.column(idx).items():
                row = rows_by_key.setdefault((op_no, r), [Fraction(0)] * len(slice_idx))
                row[pos] = Fraction(v)
    basis, free = kernel(list(rows_by_key.values()), len(slice_idx))
    vectors = [
        {slice_idx[t]: val for t, val in enumerate(vec) if val} for vec in basis
    ]
    return vectors, free


def decompose_howe(
    n: int, m: int, N: int, *, check: bool = False
) -> list[tuple[WeightVec, WeightVec]]:
    """Summands of Lambda^N(C^n (x) C^m) as (gl(n) weight, gl(m) weight) pairs.

    One pair per partition lam of N with at most m parts, each part at
    most n; the gl(n) side is the conjugate.  The dimension identity
    against binomial(nm, N) is always verified.  With check=True the
    bimodule is built and each pair is confirmed to carry exactly one
    joint highest-weight line.
    """
    if n < 1 or m < 1 or not 0 <= N <= n * m:
        raise ValueError(f"bad decomposition parameters n={n}, m={m}, N={N}")
    pairs = [
        (pad(conjugate(lam), n), pad(lam, m))
        for lam in partitions(N, max_parts=m, max_part=n)
    ]
    pairs.sort(key=lambda p: p[1], reverse=True)
    total = sum(dim_irrep(wn, n) * dim_irrep(wm, m) for wn, wm in pairs)
    if total != comb(n * m, N):
        raise InvariantViolation(
            f"summand dimensions add to {total}, wedge has {comb(n * m, N)}"
        )
    if check:
        bim = build_bimodule(n, m, N)
        for wn, wm in pairs:
            vectors, _ = _joint_kernel(
                bim,
                bim.slice_indices(wn, wm),
                list(bim.En) + list(bim.Em),
            )
            if len(vectors) != 1:
                raise InvariantViolation(
                    f"expected one joint highest-weight line at {(wn, wm)}, "
                    f"found {len(vectors)}"
                )
    return pairs


def joint_highest_weight_dim(bim: BiModule, wn, wm) -> int:
    """Dimension of the space of vectors of bi-weight (wn, wm) killed by all
    raising operators of both families."""
    vectors, _ = _joint_kernel(
        bim, bim.slice_indices(tuple(wn), tuple(wm)), list(bim.En) + list(bim.Em)
    )
    return len(vectors)


def hom_space(bim: BiModule, lam, mu) -> HomSpace:
    """Vectors of gl(m) weight lam and gl(n) weight mu killed by the gl(m)
    raising operators.

    lam must be a partition of N with at most m parts; mu a nonnegative
    integer vector of length n summing to N.
    """
    shape = as_partition(lam)
    mu = tuple(int(x) for x in mu)
    if len(mu) != bim.n:
        raise ValueError(f"mu must have length n={bim.n}, got {mu}")
    if any(x < 0 for x in mu):
        raise ValueError(f"mu must be nonnegative, got {mu}")
    if sum(shape) != bim.N or sum(mu) != bim.N:
        raise ValueError(
            f"|lam| and |mu| must both equal N={bim.N}, got {sum(shape)} and {sum(mu)}"
        )
    if len(shape) > bim.m:
        raise ValueError(f"partition {shape} has more than m={bim.m} parts")
    wm = pad(shape, bim.m)
    slice_idx = bim.slice_indices(mu, wm)
    vectors, free = _joint_kernel(bim, slice_idx, list(bim.Em))
    return HomSpace(
        lam=shape,
        mu=mu,
        dim=len(vectors),
        vectors=tuple(vectors),
        slice_indices=slice_idx,
        free_positions=tuple(free),
    )


def induced_gln_module(bim: BiModule, lam) -> ExplicitModule:
    """The gl(n) module carried by all hom spaces of one gl(m) weight lam.

    Its basis is the union of the hom-space kernels over the gl(n)
    weights mu, and the restricted raising and lowering matrices are
    computed exactly; the result is the irreducible with highest weight
    conjugate(lam).
    """
    shape = as_partition(lam)
    if sum(shape) != bim.N:
        raise ValueError(f"|lam| must equal N={bim.N}, got {sum(shape)}")
    if len(shape) > bim.m:
        raise ValueError(f"partition {shape} has more than m={bim.m} parts")
    wm = pad(shape, bim.m)
    mus = sorted(
        {wn for wn, w in bim.biweights() if w == wm},
        reverse=True,
    )
    spaces: dict[WeightVec, HomSpace] = {}
    offsets: dict[WeightVec, int] = {}
    weights: list[WeightVec] = []
    pos = 0
    for mu in mus:
        hs = hom_space(bim, shape, mu)
        if hs.dim == 0:
            continue
        spaces[mu] = hs
        offsets[mu] = pos
        weights.extend([mu] * hs.dim)
        pos += hs.dim
    dim = pos

    def restricted(ambient_mats: tuple[RatMat, ...], direction: int) -> list[RatMat]:
        mats = []
        for i in range(bim.n - 1):
            alpha = simple_root(i, bim.n)
            entries = []
            col = 0
            for mu in mus:
                hs = spaces.get(mu)
                if hs is None:
                    continue
                target = (
                    weight_sum(mu, alpha) if direction > 0 else weight_diff(mu, alpha)
                )
                for vec in hs.vectors:
                    image = ambient_mats[i].apply(vec)
                    if image:
                        ths = spaces.get(target)
                        if ths is None:
                            raise InvariantViolation(
                                "generator image leaves the induced module"
                            )
                        coeffs = _express_in_hom_basis(image, ths)
                        base = offsets[target]
                        for t, coeff in enumerate(coeffs):
                            if coeff:
                                entries.append((base + t, col, coeff))
                    col += 1
            mats.append(RatMat.from_entries(dim, dim, entries))
        return mats

    E = restricted(bim.En, +1)
    F = restricted(bim.Fn, -1)
    return ExplicitModule(bim.n, dim, tuple(weights), tuple(E), tuple(F))


def _express_in_hom_basis(image: dict, hs: HomSpace) -> list[Fraction]:
    """Coordinates of image in the kernel basis of hs, verified exactly.

    Each kernel vector owns one free position, so the candidate
    coordinates can be read off; the residual check then proves the
    expansion is exact (it also catches support outside the slice).
    """
    coeffs = [
        image.get(hs.slice_indices[f], Fraction(0)) for f in hs.free_positions
    ]
    residual = dict(image)
    for coeff, vec in zip(coeffs, hs.vectors):
        vec_add_scaled(residual, vec, -coeff)
    if residual:
        raise InvariantViolation("image is not a combination of hom-space vectors")
    return coeffs
