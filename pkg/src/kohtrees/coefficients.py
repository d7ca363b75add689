"""Two-row Kronecker and plethysm coefficients, two independent ways.

Both coefficient families sit inside a symmetric unimodal polynomial:
the Gaussian binomial for Kronecker, a principal Schur specialization
for plethysm.  The coefficient indexed by r is the difference between
the q^r and q^(r-1) coefficients, and it also counts marked expansion
trees whose marking total works out to r.  Running both routes and
comparing them catches implementation drift in either one.
"""

from __future__ import annotations

import dataclasses

from .errors import (CrossCheckFailedError, BudgetExceededError,
                     PreconditionViolationError, SizeMismatchError)
from .goh import enumerate_goh_trees, goh_leaves
from .koh import enumerate_koh_trees, leaves
from .marking import count_markings, marking_target
from .partitions import Partition, count_in_rectangle
from .qpoly import ONE, ZERO, QPoly, q_int

METHOD_MARKED = "marked_trees"
METHOD_DIFFERENCE = "difference_formula"
METHOD_BOTH = "both"

DEFAULT_TREE_BUDGET = 10 ** 7
DEFAULT_FILLING_BUDGET = 10 ** 6


@dataclasses.dataclass(frozen=True)
class CoefficientReport:
    """A computed coefficient plus how it was obtained.

    witness_counts lists the marked-tree count per expansion tree, in
    enumeration order, when the marked route ran; otherwise None.
    """

    value: int
    method: str
    witness_counts: tuple[int, ...] | None = None


def _check_method(method: str) -> None:
    if method not in (METHOD_MARKED, METHOD_DIFFERENCE, METHOD_BOTH):
        raise PreconditionViolationError(f"unknown method {method!r}")


def hook_content(mu: Partition, k: int) -> QPoly:
    """s_mu(1, q, ..., q^k) as a polynomial in q.

    Shift q^b(mu) times the ratio, over the cells of mu, of
    (1 - q^(k + 1 + col - row)) to (1 - q^hook).  Zero as soon as mu
    has more than k + 1 rows.

    >>> hook_content(Partition((2, 1)), 2).coeffs
    (0, 1, 2, 2, 2, 1)
    """
    if k < 0:
        raise PreconditionViolationError(f"k must be nonnegative, got {k}")
    if not mu:
        return ONE
    if len(mu) > k + 1:
        return ZERO
    conj = mu.conjugate()
    num, den = ONE, ONE
    for i, row_len in enumerate(mu.parts, start=1):
        for j in range(1, row_len + 1):
            num = num * q_int(k + j - i)
            hook = mu.parts[i - 1] + conj.parts[j - 1] - i - j + 1
            den = den * q_int(hook - 1)
    return num.exact_div(den).shift(mu.b_stat())


def schur_specialization_oracle(mu: Partition, k: int,
                                max_fillings: int = DEFAULT_FILLING_BUDGET) -> QPoly:
    """s_mu(1, q, ..., q^k) by summing q^|T| over semistandard fillings.

    Fillings use entries 0..k, weakly increasing along rows and strictly
    increasing down columns.  Slow but assumption-free; stops with
    BudgetExceededError past max_fillings fillings.
    """
    if k < 0:
        raise PreconditionViolationError(f"k must be nonnegative, got {k}")
    if not mu:
        return ONE
    rows = mu.parts
    coeffs = [0] * (mu.size * k + 1)
    filling = [[0] * r for r in rows]
    seen = 0

    def fill(i: int, j: int, total: int) -> None:
        nonlocal seen
        if i == len(rows):
            seen += 1
            if seen > max_fillings:
                raise BudgetExceededError(
                    f"more than {max_fillings} fillings of {mu!r}")
            coeffs[total] += 1
            return
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = filling[i][j - 1] if j else 0
        if i and j < rows[i - 1]:
            lo = max(lo, filling[i - 1][j] + 1)
        for v in range(lo, k + 1):
            filling[i][j] = v
            fill(ni, nj, total + v)

    fill(0, 0, 0)
    return QPoly(coeffs)


def _marked_counts(leaf_lists, total: int, r: int) -> tuple[int, ...]:
    return tuple(count_markings(a, marking_target(sum(a), total, r))
                 for a in leaf_lists)


def kronecker_two_row(n: int, k: int, r: int, method: str = METHOD_BOTH,
                      max_trees: int | None = None) -> CoefficientReport:
    """Kronecker coefficient of (nk - r, r) with two copies of the
    k by n rectangle.

    >>> kronecker_two_row(3, 4, 6).value
    1
    """
    _check_method(method)
    if n < 1 or k < 1:
        raise PreconditionViolationError(
            f"rectangle sides must be positive, got n={n}, k={k}")
    if r < 0 or 2 * r > n * k:
        raise PreconditionViolationError(
            f"need 0 <= 2r <= nk, got r={r} with nk={n * k}")
    witness = None
    if method in (METHOD_MARKED, METHOD_BOTH):
        budget = DEFAULT_TREE_BUDGET if max_trees is None else max_trees
        trees = enumerate_koh_trees(n, k, max_trees=budget)
        witness = _marked_counts((leaves(t) for t in trees), n * k, r)
        marked = sum(witness)
    if method in (METHOD_DIFFERENCE, METHOD_BOTH):
        diff = count_in_rectangle(n, k, r) - count_in_rectangle(n, k, r - 1)
    if method == METHOD_MARKED:
        return CoefficientReport(marked, method, witness)
    if method == METHOD_DIFFERENCE:
        return CoefficientReport(diff, method)
    if marked != diff:
        raise CrossCheckFailedError(
            f"marked trees give {marked} but the rectangle difference gives "
            f"{diff} for n={n}, k={k}, r={r}")
    return CoefficientReport(marked, METHOD_BOTH, witness)


def plethysm_two_row(mu: Partition, k: int, r: int, method: str = METHOD_BOTH,
                     max_trees: int | None = None) -> CoefficientReport:
    """Coefficient of the two-row Schur function (|mu|k - r, r) in the
    plethysm of mu with a single row of length k.

    >>> plethysm_two_row(Partition((2, 1)), 2, 2).value
    1
    """
    _check_method(method)
    if not mu:
        raise PreconditionViolationError("the outer partition must be nonempty")
    if k < 1:
        raise PreconditionViolationError(f"the row length k must be positive, got {k}")
    total = mu.size * k
    if r < 0 or 2 * r > total:
        raise PreconditionViolationError(
            f"need 0 <= 2r <= |mu|k, got r={r} with |mu|k={total}")
    witness = None
    if method in (METHOD_MARKED, METHOD_BOTH):
        budget = DEFAULT_TREE_BUDGET if max_trees is None else max_trees
        trees = enumerate_goh_trees(mu, k, max_trees=budget)
        witness = _marked_counts((goh_leaves(t) for t in trees), total, r)
        marked = sum(witness)
    if method in (METHOD_DIFFERENCE, METHOD_BOTH):
        poly = hook_content(mu, k)
        diff = poly.coeff(r) - poly.coeff(r - 1)
    if method == METHOD_MARKED:
        return CoefficientReport(marked, method, witness)
    if method == METHOD_DIFFERENCE:
        return CoefficientReport(diff, method)
    if marked != diff:
        raise CrossCheckFailedError(
            f"marked trees give {marked} but the specialization difference "
            f"gives {diff} for mu={mu!r}, k={k}, r={r}")
    return CoefficientReport(marked, METHOD_BOTH, witness)


def plethysm_two_row_general(lam: Partition, mu: Partition, nu: Partition,
                             method: str = METHOD_DIFFERENCE,
                             max_trees: int | None = None) -> CoefficientReport:
    """Coefficient of s_lam in the plethysm of mu with nu, for lam with
    at most two rows.

    Reduces to the single-row case: zero when nu has three or more rows
    or when the second row of lam cannot absorb |mu| copies of nu's
    second row; otherwise strip those copies and compute the two-row
    coefficient for the row difference of nu.

    >>> plethysm_two_row_general(Partition((4, 2)), Partition((2,)), Partition((2, 1))).value
    1
    """
    _check_method(method)
    if len(lam) > 2:
        raise PreconditionViolationError(
            f"the target partition must have at most two rows, got {lam!r}")
    if lam.size != mu.size * nu.size:
        raise SizeMismatchError(
            f"|lam| = {lam.size} must equal |mu| * |nu| = {mu.size * nu.size}")
    if not mu:
        return CoefficientReport(1, method)
    if len(nu) >= 3:
        return CoefficientReport(0, method)
    nu2 = nu[1] if len(nu) >= 2 else 0
    k = (nu[0] if nu else 0) - nu2
    lam2 = lam[1] if len(lam) >= 2 else 0
    if lam2 < mu.size * nu2:
        return CoefficientReport(0, method)
    theta2 = lam2 - mu.size * nu2
    if k == 0:
        theta1 = (lam[0] if lam else 0) - mu.size * nu2
        value = 1 if theta1 == 0 and theta2 == 0 and len(mu) <= 1 else 0
        return CoefficientReport(value, method)
    return plethysm_two_row(mu, k, theta2, method=method, max_trees=max_trees)
