"""Trees that expand a Gaussian binomial into shifted products of q-integers.

Every node carries a label (mu, a, b) with mu a partition of b.  A node
with b == 1 is a leaf and must look like ((1), a, 1).  A node with
b >= 2 has exactly one child per distinct row length j of mu; the child
along edge j carries

    a' = (a + 2) j - 2 (mu.q_stat(j)),    b' = mu.mult(j).

Branches where a' would go negative produce no trees at all.  Summing
q^(sigma/2) times the product of [leaf + 1]_q over all trees of type
(n, k) recovers q_binomial(n, k); sigma is nk minus the leaf sum.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools

from .errors import (BudgetExceededError, InvalidRowLengthError,
                     ParityViolationError, PreconditionViolationError,
                     StructureViolationError)
from .partitions import Partition, enumerate_partitions
from .qpoly import ONE, ZERO, QPoly, q_binomial, q_int

_LEAF_MU = Partition((1,))


@dataclasses.dataclass(frozen=True)
class KohTree:
    """Tree node; children are (edge label, subtree) pairs, edges ascending."""

    mu: Partition
    a: int
    b: int
    children: tuple[tuple[int, KohTree], ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.b == 1


def koh_child_type(mu: Partition, a: int, j: int) -> tuple[int, int]:
    """Type (a', b') of the child along edge j of a node labeled (mu, a, b).

    j must be a row length occurring in mu.  a' may come out negative;
    callers treat that as a pruned branch.

    >>> koh_child_type(Partition((4, 3, 1, 1)), 8, 1)
    (2, 2)
    """
    m = mu.mult(j)
    if m == 0:
        raise InvalidRowLengthError(f"no row of length {j} in {mu!r}")
    return (a + 2) * j - 2 * mu.q_stat(j), m


def _check_type(n: int, k: int) -> None:
    if n < 0 or k < 1:
        raise PreconditionViolationError(
            f"tree type needs n >= 0 and k >= 1, got ({n}, {k})")


@functools.cache
def count_koh_trees(n: int, k: int) -> int:
    """Number of trees of type (n, k), computed without materializing them."""
    _check_type(n, k)
    if k == 1:
        return 1
    total = 0
    for mu in enumerate_partitions(k):
        prod = 1
        for j in mu.distinct_parts():
            ca, cb = koh_child_type(mu, n, j)
            if ca < 0:
                prod = 0
                break
            prod *= count_koh_trees(ca, cb)
        total += prod
    return total


@functools.cache
def _tree_table(n: int, k: int) -> tuple[KohTree, ...]:
    if k == 1:
        return (KohTree(_LEAF_MU, n, 1),)
    out: list[KohTree] = []
    for mu in enumerate_partitions(k):
        slots: list[tuple[tuple[int, KohTree], ...]] = []
        for j in mu.distinct_parts():
            ca, cb = koh_child_type(mu, n, j)
            if ca < 0:
                break
            slots.append(tuple((j, t) for t in _tree_table(ca, cb)))
        else:
            for combo in itertools.product(*slots):
                out.append(KohTree(mu, n, k, combo))
    return tuple(out)


def enumerate_koh_trees(n: int, k: int, max_trees: int | None = None) -> tuple[KohTree, ...]:
    """All trees of type (n, k) in a fixed canonical order.

    Root partitions run lexicographically decreasing and subtree choices
    at later edges vary fastest, so the order is deterministic.  Results
    are cached and subtrees are shared, which is safe because trees are
    immutable.  With max_trees set, the (cheap) count is checked first
    and BudgetExceededError raised before anything is built.
    """
    _check_type(n, k)
    if max_trees is not None:
        total = count_koh_trees(n, k)
        if total > max_trees:
            raise BudgetExceededError(
                f"{total} trees of type ({n}, {k}) exceed the budget {max_trees}")
    return _tree_table(n, k)


def leaves(tree: KohTree) -> tuple[int, ...]:
    """Leaf labels in depth-first order, children taken by ascending edge."""
    if tree.is_leaf:
        return (tree.a,)
    out: tuple[int, ...] = ()
    for _, child in tree.children:
        out += leaves(child)
    return out


def sigma(tree: KohTree) -> int:
    """a*b minus the leaf sum; even and nonnegative on valid trees."""
    s = tree.a * tree.b - sum(leaves(tree))
    if s < 0:
        raise StructureViolationError(
            f"leaf sum exceeds {tree.a}*{tree.b} for root {tree.mu!r}")
    if s % 2:
        raise ParityViolationError(
            f"odd defect {s} for tree of type ({tree.a}, {tree.b})")
    return s


def koh_term(tree: KohTree) -> QPoly:
    """q^(sigma/2) times the product of [leaf + 1]_q over the leaves."""
    prod = ONE
    for a in leaves(tree):
        prod = prod * q_int(a)
    return prod.shift(sigma(tree) // 2)


def koh_rhs_closed(n: int, k: int) -> QPoly:
    """Closed-form partition sum equal to q_binomial(n, k).

    For each partition lam of k: q^(2 b_stat) times the product over the
    distinct row lengths of q_binomial at the child type.  A negative
    child width kills the summand, matching the pruned trees.
    """
    if n < 0 or k < 0:
        raise PreconditionViolationError(
            f"closed form needs n >= 0 and k >= 0, got ({n}, {k})")
    total = ZERO
    for lam in enumerate_partitions(k):
        term = ONE.shift(2 * lam.b_stat())
        for j in lam.distinct_parts():
            ca, cb = koh_child_type(lam, n, j)
            if ca < 0:
                term = ZERO
                break
            term = term * q_binomial(ca, cb)
        total = total + term
    return total


def validate_koh_tree(tree: KohTree, expected_type: tuple[int, int] | None = None) -> None:
    """Check every structural constraint, raising StructureViolationError.

    Passing expected_type additionally pins down (tree.a, tree.b).
    """
    if expected_type is not None and (tree.a, tree.b) != expected_type:
        raise StructureViolationError(
            f"root type ({tree.a}, {tree.b}) != expected {expected_type}")
    if tree.a < 0 or tree.b < 1:
        raise StructureViolationError(
            f"node type ({tree.a}, {tree.b}) out of range")
    if tree.mu.size != tree.b:
        raise StructureViolationError(
            f"label partition {tree.mu!r} does not sum to b = {tree.b}")
    if tree.is_leaf:
        if tree.mu != _LEAF_MU or tree.children:
            raise StructureViolationError(f"malformed leaf {tree!r}")
        return
    edges = tuple(j for j, _ in tree.children)
    if edges != tree.mu.distinct_parts():
        raise StructureViolationError(
            f"edges {edges} do not match distinct rows of {tree.mu!r}")
    for j, child in tree.children:
        if (child.a, child.b) != koh_child_type(tree.mu, tree.a, j):
            raise StructureViolationError(
                f"child type ({child.a}, {child.b}) wrong along edge {j} "
                f"of ({tree.mu!r}, {tree.a}, {tree.b})")
        validate_koh_tree(child)


# --- serialization ---

def tree_to_dict(tree: KohTree, marks: tuple[int, ...] | None = None,
                 r: int | None = None) -> dict:
    """JSON-ready dict; marks/r attach a marking to the whole tree."""
    d: dict = {
        "mu": list(tree.mu.parts),
        "a": tree.a,
        "b": tree.b,
        "children": [{"edge": j, "tree": tree_to_dict(c)} for j, c in tree.children],
    }
    if marks is not None:
        d["marks"] = list(marks)
        d["r"] = r
    return d


def _tree_from_dict(data: dict) -> KohTree:
    try:
        mu = Partition(data["mu"])
        a, b = data["a"], data["b"]
        children = tuple((entry["edge"], _tree_from_dict(entry["tree"]))
                         for entry in data["children"])
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureViolationError(f"malformed tree payload: {exc}") from exc
    return KohTree(mu, a, b, children)


def tree_from_dict(data: dict) -> KohTree:
    """Parse the dict form back into a validated tree."""
    tree = _tree_from_dict(data)
    validate_koh_tree(tree)
    return tree


def _fmt_parts(parts) -> str:
    return "[" + ",".join(str(p) for p in parts) + "]"


def _emit_dot_node(tree: KohTree, ids: itertools.count, lines: list[str],
                   marks: list[int] | None) -> str:
    nid = f"n{next(ids)}"
    if tree.is_leaf:
        lines.append(f'  {nid} [label="{tree.a}"];')
        if marks is not None:
            k = marks.pop(0)
            mid = f"n{next(ids)}"
            lines.append(f'  {mid} [label="{k}", shape=circle];')
            lines.append(f"  {nid} -> {mid} [style=dashed, arrowhead=none];")
        return nid
    label = f"({_fmt_parts(tree.mu.parts)}, {tree.a}, {tree.b})"
    lines.append(f'  {nid} [label="{label}"];')
    for j, child in tree.children:
        cid = _emit_dot_node(child, ids, lines, marks)
        lines.append(f'  {nid} -> {cid} [label="{j}"];')
    return nid


def tree_to_dot(tree: KohTree, marks: tuple[int, ...] | None = None,
                r: int | None = None, graph_name: str = "koh") -> str:
    """DOT rendering; leaves abbreviate to their a value, marks get circles."""
    lines = [f"digraph {graph_name} {{", "  node [shape=plaintext];"]
    if r is not None:
        lines.append(f'  label="r = {r}";')
        lines.append("  labelloc=top;")
    _emit_dot_node(tree, itertools.count(), lines, list(marks) if marks is not None else None)
    lines.append("}")
    return "\n".join(lines) + "\n"
