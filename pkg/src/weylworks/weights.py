"""Weight-vector and partition combinatorics for gl(n).

Weight vectors are plain tuples of integers of some fixed length n.
Partitions are weakly decreasing tuples of nonnegative integers stored
without trailing zeros; any operation that needs a fixed rank takes n
explicitly and pads.  Permutations use one-line notation and are
0-indexed: ``w[i]`` is the image of position ``i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

WeightVec = tuple[int, ...]
Partition = tuple[int, ...]


def as_weight(entries: Iterable[int]) -> WeightVec:
    """Coerce a sequence of integers to a weight vector."""
    w = tuple(int(x) for x in entries)
    if not w:
        raise ValueError("a weight vector must have length at least 1")
    return w


def as_partition(entries: Iterable[int]) -> Partition:
    """Validate and normalize a partition, stripping trailing zeros.

    >>> as_partition([3, 1, 0, 0])
    (3, 1)
    """
    p = tuple(int(x) for x in entries)
    if any(x < 0 for x in p):
        raise ValueError(f"partition entries must be nonnegative, got {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition entries must be weakly decreasing, got {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def is_dominant(mu: Sequence[int]) -> bool:
    """True iff the entries are weakly decreasing (negative entries allowed)."""
    return all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1))


def pad(mu: Sequence[int], n: int) -> WeightVec:
    """Extend with trailing zeros to length n."""
    if len(mu) > n:
        raise ValueError(f"cannot pad length-{len(mu)} vector to length {n}")
    return tuple(mu) + (0,) * (n - len(mu))


def weight_sum(a: Sequence[int], b: Sequence[int]) -> WeightVec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def weight_diff(a: Sequence[int], b: Sequence[int]) -> WeightVec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def simple_root(i: int, n: int) -> WeightVec:
    """The i-th simple root e_i - e_{i+1} of gl(n), with 0 <= i <= n-2."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"simple root index {i} out of range for n={n}")
    return tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff lam - mu is a nonnegative integer sum of simple roots.

    Equivalently, every partial sum of lam - mu is nonnegative and the
    total is zero.

    >>> dominance_leq((1, 1, 1), (2, 1, 0))
    True
    >>> dominance_leq((2, 1), (1, 2))
    False
    """
    if len(mu) != len(lam):
        raise ValueError(f"length mismatch: {len(mu)} vs {len(lam)}")
    run = 0
    for a, b in zip(lam, mu):
        run += a - b
        if run < 0:
            return False
    return run == 0


def height(diff: Sequence[int]) -> int:
    """Total number of simple roots in diff, counted with multiplicity.

    The argument must lie in the nonnegative root cone (all partial sums
    nonnegative, total zero), else ValueError.
    """
    partial = 0
    total = 0
    for x in diff[:-1]:
        partial += x
        if partial < 0:
            raise ValueError(f"{tuple(diff)} is not a nonnegative sum of simple roots")
    # recompute accumulating the height; the loop above only validates
    partial = 0
    for x in diff[:-1]:
        partial += x
        total += partial
    if partial + diff[-1] != 0:
        raise ValueError(f"{tuple(diff)} is not a nonnegative sum of simple roots")
    return total


def conjugate(nu: Iterable[int]) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(())
    ()
    """
    p = as_partition(nu)
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def weyl_permute(w: Sequence[int], mu: Sequence[int]) -> WeightVec:
    """Permute entries: result[i] = mu[w[i]].

    >>> weyl_permute((1, 2, 0), (2, 1, 0))
    (1, 0, 2)
    """
    n = len(mu)
    if len(w) != n or sorted(w) != list(range(n)):
        raise ValueError(f"{tuple(w)} is not a 0-indexed permutation of length {n}")
    return tuple(mu[w[i]] for i in range(n))


def partitions(
    total: int, max_parts: int | None = None, max_part: int | None = None
) -> Iterator[Partition]:
    """Yield partitions of ``total`` in descending lexicographic order."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    cap = total if max_part is None else min(max_part, total)
    nparts = total if max_parts is None else max_parts

    def rec(remaining: int, largest: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or largest == 0:
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(total, cap, nparts)


def compositions(total: int, parts: int) -> Iterator[WeightVec]:
    """Yield all length-``parts`` tuples of nonnegative integers summing to
    ``total``, in descending lexicographic order."""
    if parts < 0 or total < 0:
        raise ValueError("arguments must be nonnegative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
