import itertools
import random

import pytest

from kohtrees.errors import (DegreeMismatchError, ParityViolationError,
                             PreconditionViolationError)
from kohtrees.marking import (DifferenceProfile, count_marked_trees,
                              count_markings, enumerate_markings,
                              marking_target, product_difference,
                              region_contains)
from kohtrees.qpoly import ONE, QPoly, q_int


def product_of_q_ints(a):
    poly = ONE
    for x in a:
        poly = poly * q_int(x)
    return poly


def brute_force_markings(a, target):
    """Direct filter over all weakly increasing vectors, for cross-checking."""
    t = len(a)
    found = []
    for ks in itertools.product(range(target + 1), repeat=t):
        if ks[0] != 0 or ks[-1] != target:
            continue
        ok = True
        prefix = 0
        for i in range(t - 1):
            prefix += a[i]
            if not 0 <= ks[i + 1] - ks[i] <= min(prefix - 2 * ks[i], a[i + 1]):
                ok = False
                break
        if ok:
            found.append(ks)
    return found


def test_profile_validates_length():
    DifferenceProfile(4, (1, 0, 0))
    with pytest.raises(DegreeMismatchError):
        DifferenceProfile(4, (1, 0))
    with pytest.raises(DegreeMismatchError):
        DifferenceProfile(-1, (1,))


def test_profile_of_q_int():
    assert DifferenceProfile.of_q_int(5).diffs == (1, 0, 0)
    assert DifferenceProfile.of_q_int(0) == DifferenceProfile(0, (1,))
    with pytest.raises(PreconditionViolationError):
        DifferenceProfile.of_q_int(-1)


def test_profile_of_poly():
    p = QPoly([1, 2, 4, 2, 1])
    assert DifferenceProfile.of_poly(p) == DifferenceProfile(4, (1, 1, 2))
    assert DifferenceProfile.of_poly(QPoly()) == DifferenceProfile(0, (0,))


def test_region_membership():
    assert region_contains(4, 2, 1, 0, 0)
    assert region_contains(4, 2, 3, 1, 0)
    assert not region_contains(4, 2, 3, 1, 1)
    assert not region_contains(4, 2, 1, 3, 0)
    assert not region_contains(4, 2, 5, 0, 0)
    assert not region_contains(4, 2, 1, -1, 0)


def test_product_difference_matches_polynomial_expansion():
    vectors = [(1,), (3,), (2, 2), (1, 1, 1, 1), (4, 1, 3), (2, 6, 2, 4)]
    for a in vectors:
        poly = product_of_q_ints(a)
        profiles = [DifferenceProfile.of_q_int(x) for x in a]
        for k in range(sum(a) // 2 + 1):
            want = poly.coeff(k) - poly.coeff(k - 1)
            assert product_difference(profiles, k) == want
        assert product_difference(profiles, -1) == 0


def test_product_difference_rejects_past_center():
    profiles = [DifferenceProfile.of_q_int(2)]
    with pytest.raises(PreconditionViolationError):
        product_difference(profiles, 2)


def test_count_markings_small_cases():
    assert count_markings((1, 1, 1, 1), 1) == 3
    assert count_markings((4,), 0) == 1
    assert count_markings((4,), 1) == 0
    assert count_markings((2, 2), 2) == 1
    assert count_markings((0, 0), 0) == 1
    assert count_markings((3, 1), -2) == 0


def test_count_markings_validates_leaves():
    with pytest.raises(PreconditionViolationError):
        count_markings((), 0)
    with pytest.raises(PreconditionViolationError):
        count_markings((1, -1), 0)


def test_count_matches_enumeration_and_brute_force():
    rng = random.Random(7)
    for _ in range(120):
        t = rng.randint(1, 4)
        a = tuple(rng.randint(0, 6) for _ in range(t))
        for target in range(sum(a) // 2 + 1):
            listed = enumerate_markings(a, target)
            assert len(listed) == count_markings(a, target)
            assert sorted(listed) == sorted(brute_force_markings(a, target))
            for ks in listed:
                assert ks[0] == 0 and ks[-1] == target
                assert all(x <= y for x, y in zip(ks, ks[1:]))


def test_markings_match_coefficient_differences():
    vectors = [(2, 2), (1, 1, 1, 1), (4, 1, 3), (0, 14, 22), (5, 5)]
    for a in vectors:
        poly = product_of_q_ints(a)
        for k in range(sum(a) // 2 + 1):
            assert count_markings(a, k) == poly.coeff(k) - poly.coeff(k - 1)


def test_marking_count_is_leaf_order_independent():
    a = (4, 1, 3, 2)
    for perm in itertools.permutations(a):
        for k in range(sum(a) // 2 + 1):
            assert count_markings(perm, k) == count_markings(a, k)


def test_marking_target():
    assert marking_target(36, 72, 18) == 0
    assert marking_target(64, 204, 81) == 11
    with pytest.raises(ParityViolationError):
        marking_target(3, 6, 1)


def test_count_marked_trees_range_checked():
    with pytest.raises(PreconditionViolationError):
        count_marked_trees([(1, 1)], 4, 3)
    # the two leaf lists of the (2, 2) tree family
    assert count_marked_trees([(4,), (0,)], 4, 2) == 1
    assert count_marked_trees([(4,), (0,)], 4, 1) == 0
