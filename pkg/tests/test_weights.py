import itertools

import pytest
from hypothesis import given, strategies as st

from weylworks.weights import (
    as_partition,
    compositions,
    conjugate,
    dominance_leq,
    height,
    is_dominant,
    pad,
    partitions,
    weyl_permute,
)


@st.composite
def partition_strategy(draw, max_size=10):
    total = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    cap = total
    while total > 0:
        p = draw(st.integers(min_value=1, max_value=cap))
        parts.append(p)
        cap = min(cap, p)
        total -= p
    return tuple(parts)


def test_dominance_basic():
    assert dominance_leq((1, 1, 1), (2, 1, 0))
    assert dominance_leq((2, 1, 0), (2, 1, 0))
    assert not dominance_leq((2, 1), (1, 2))
    assert not dominance_leq((3, 0), (2, 0))  # different total


def test_dominance_length_mismatch():
    with pytest.raises(ValueError):
        dominance_leq((1, 1), (2, 1, 0))


def test_dominance_is_partial_order_on_small_partitions():
    for total in range(7):
        parts = [pad(p, total) for p in partitions(total)]
        for a in parts:
            assert dominance_leq(a, a)
        for a, b in itertools.permutations(parts, 2):
            if dominance_leq(a, b) and dominance_leq(b, a):
                assert a == b
        for a, b, c in itertools.product(parts, repeat=3):
            if dominance_leq(a, b) and dominance_leq(b, c):
                assert dominance_leq(a, c)


def test_height_values():
    assert height((1, 0, -1)) == 2
    assert height((0, 0, 0)) == 0
    assert height((2, -2)) == 2


def test_height_rejects_outside_cone():
    with pytest.raises(ValueError):
        height((-1, 1))
    with pytest.raises(ValueError):
        height((1, 0))  # nonzero total


def test_height_positive_and_additive():
    parts = [pad(p, 4) for p in partitions(4)]
    for mu, lam in itertools.permutations(parts, 2):
        if dominance_leq(mu, lam):
            diff = tuple(a - b for a, b in zip(lam, mu))
            assert height(diff) >= 1
    # additivity along a chain (1,1,1,1) <= (2,1,1,0) <= (4,0,0,0)
    a, b, c = (1, 1, 1, 1), (2, 1, 1, 0), (4, 0, 0, 0)
    d1 = tuple(x - y for x, y in zip(b, a))
    d2 = tuple(x - y for x, y in zip(c, b))
    d3 = tuple(x - y for x, y in zip(c, a))
    assert height(d1) + height(d2) == height(d3)


def test_conjugate_values():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


@given(partition_strategy())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_weyl_permute():
    assert weyl_permute((0, 1), (3, 0)) == (3, 0)
    assert weyl_permute((1, 0), (3, 0)) == (0, 3)
    assert weyl_permute((1, 2, 0), (2, 1, 0)) == (1, 0, 2)


def test_weyl_permute_rejects_bad_input():
    with pytest.raises(ValueError):
        weyl_permute((0, 1), (1, 2, 3))
    with pytest.raises(ValueError):
        weyl_permute((0, 0), (1, 2))


def test_partitions_enumeration():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(3, max_parts=2)) == [(3,), (2, 1)]
    assert list(partitions(4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_compositions_enumeration():
    out = list(compositions(3, 2))
    assert out == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert all(sum(c) == 3 for c in out)
    assert len(list(compositions(4, 3))) == 15


def test_as_partition_validation():
    assert as_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        as_partition((1, 2))
    with pytest.raises(ValueError):
        as_partition((2, -1))


def test_pad_and_is_dominant():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    assert is_dominant((3, 1, 0))
    assert is_dominant((1, 0, -2))
    assert not is_dominant((0, 1))
    with pytest.raises(ValueError):
        pad((2, 1, 1), 2)


@given(partition_strategy(), st.permutations(range(4)))
def test_weyl_orbit_preserves_multiset(lam, perm):
    mu = (lam + (0, 0, 0, 0))[:4]
    assert sorted(weyl_permute(tuple(perm), mu)) == sorted(mu)
