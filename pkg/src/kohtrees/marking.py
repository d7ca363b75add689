"""Markings: picking single coefficients out of products of q-integers.

A marking of a leaf sequence (a_1, ..., a_t) is a weakly increasing
vector k_1 <= ... <= k_t with k_1 = 0 whose steps obey

    k_{i+1} - k_i  <=  min(a_1 + ... + a_i - 2 k_i,  a_{i+1}).

The number of markings ending at k_t = k equals c_k - c_{k-1}, where
c_r is the coefficient of q^r in the product of the [a_i + 1]_q, valid
up to the symmetry center k <= (a_1 + ... + a_t) / 2.  The same
difference can be computed without polynomials by folding difference
profiles through a two-dimensional index region; both routes live here
so they can be played against each other.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Sequence

from .errors import (DegreeMismatchError, ParityViolationError,
                     PreconditionViolationError)
from .qpoly import QPoly


@dataclasses.dataclass(frozen=True)
class DifferenceProfile:
    """Successive coefficient differences of a symmetric unimodal polynomial.

    diffs[i] = c_i - c_{i-1} for 0 <= i <= degree // 2; the upper half
    is determined by symmetry and never stored.
    """

    degree: int
    diffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 0 or len(self.diffs) != self.degree // 2 + 1:
            raise DegreeMismatchError(
                f"degree {self.degree} needs {max(self.degree, 0) // 2 + 1} "
                f"differences, got {len(self.diffs)}")

    @classmethod
    def of_q_int(cls, a: int) -> DifferenceProfile:
        """Profile of [a+1]_q: a single rise at index 0.

        >>> DifferenceProfile.of_q_int(5).diffs
        (1, 0, 0)
        """
        if a < 0:
            raise PreconditionViolationError(f"q-integer index must be >= 0, got {a}")
        return cls(a, (1,) + (0,) * (a // 2))

    @classmethod
    def of_poly(cls, p: QPoly, degree: int | None = None) -> DifferenceProfile:
        d = p.degree if degree is None else degree
        if d < 0:
            d = 0
        return cls(d, tuple(p.coeff(i) - p.coeff(i - 1) for i in range(d // 2 + 1)))


def region_contains(r: int, s: int, k: int, i: int, j: int) -> bool:
    """Whether (i, j) lies in the index region feeding difference k of a
    product of symmetric unimodal polynomials of degrees r and s."""
    if i < 0 or j < 0 or 2 * i > r or 2 * j > s:
        return False
    rem = k - i - j
    return 0 <= rem <= min(r - 2 * i, s - 2 * j)


def _combine(p1: DifferenceProfile, p2: DifferenceProfile) -> DifferenceProfile:
    r, s = p1.degree, p2.degree
    mid = (r + s) // 2
    out = [0] * (mid + 1)
    for i, da in enumerate(p1.diffs):
        if not da:
            continue
        for j, db in enumerate(p2.diffs):
            if not db:
                continue
            # contributes to every k with 0 <= k-i-j <= min(r-2i, s-2j)
            lo = i + j
            hi = min(lo + min(r - 2 * i, s - 2 * j), mid)
            for k in range(lo, hi + 1):
                out[k] += da * db
    return DifferenceProfile(r + s, tuple(out))


def product_difference(profiles: Sequence[DifferenceProfile], k: int) -> int:
    """c_k - c_{k-1} for the product of the profiled polynomials.

    Folds the profiles pairwise through the index region, never touching
    the upper coefficient halves.  k must not exceed half the total
    degree; negative k gives 0.
    """
    acc = DifferenceProfile(0, (1,))
    for p in profiles:
        acc = _combine(acc, p)
    if k < 0:
        return 0
    if 2 * k > acc.degree:
        raise PreconditionViolationError(
            f"difference index {k} lies past the symmetry center {acc.degree}/2")
    return acc.diffs[k]


def _check_leaves(a: Sequence[int]) -> None:
    if not a:
        raise PreconditionViolationError("marking needs a nonempty leaf sequence")
    if any(x < 0 for x in a):
        raise PreconditionViolationError(f"leaf labels must be nonnegative, got {tuple(a)}")


def count_markings(a: Sequence[int], target: int) -> int:
    """Number of markings of a with final value target.

    Infeasible targets (negative, unreachable, or nonzero with a single
    leaf) simply count 0.

    >>> count_markings((1, 1, 1, 1), 1)
    3
    """
    _check_leaves(a)
    if target < 0:
        return 0
    dp = {0: 1}
    prefix = a[0]
    for nxt in a[1:]:
        step: dict[int, int] = {}
        for v, ways in dp.items():
            hi = min(v + min(prefix - 2 * v, nxt), target)
            for w in range(v, hi + 1):
                step[w] = step.get(w, 0) + ways
        dp = step
        prefix += nxt
    return dp.get(target, 0)


def enumerate_markings(a: Sequence[int], target: int) -> tuple[tuple[int, ...], ...]:
    """All markings with final value target, lexicographically increasing."""
    _check_leaves(a)
    if target < 0:
        return ()
    t = len(a)
    found: list[tuple[int, ...]] = []

    def extend(ks: list[int], prefix: int) -> None:
        i = len(ks)
        if i == t:
            if ks[-1] == target:
                found.append(tuple(ks))
            return
        v = ks[-1]
        hi = min(v + min(prefix - 2 * v, a[i]), target)
        for w in range(v, hi + 1):
            ks.append(w)
            extend(ks, prefix + a[i])
            ks.pop()

    extend([0], a[0])
    return tuple(found)


def marking_target(leaf_sum: int, total: int, r: int) -> int:
    """Final marking value that singles out coefficient r.

    total is the degree a*b of the tree type; the defect total - leaf_sum
    must be even (it is twice the power shift of the tree's term).
    """
    if (total - leaf_sum) % 2:
        raise ParityViolationError(
            f"defect {total} - {leaf_sum} is odd; no marking target exists")
    return r - (total - leaf_sum) // 2


def count_marked_trees(leaf_lists: Iterable[Sequence[int]], total: int, r: int) -> int:
    """Total number of (tree, marking) pairs selecting coefficient r.

    Valid for 0 <= r <= total/2.  Each tree contributes the markings of
    its leaf sequence at the tree's own target.
    """
    if r < 0 or 2 * r > total:
        raise PreconditionViolationError(
            f"coefficient index {r} outside 0..{total}/2")
    return sum(count_markings(ls, marking_target(sum(ls), total, r))
               for ls in leaf_lists)
