"""Configurations and trees expanding a principal Schur specialization.

A configuration for a partition lam of n with l rows is a chain of
partitions nu^0, ..., nu^l where nu^0 = (1^n), each |nu^i| equals the
sum of the rows of lam strictly below row i (so nu^l is empty), and
the mixed second difference

    P^i_j = Q_j(nu^{i+1}) - 2 Q_j(nu^i) + Q_j(nu^{i-1})

is nonnegative for 1 <= i < l and 1 <= j <= n, with Q_j the sum of the
first j conjugate parts.  A tree for (lam, k) hangs one q-binomial
expansion tree of type (P^i_j, mult_j(nu^i)) on each (i, j) with
mult_j(nu^i) > 0, plus, when m = len(nu^1) < k, one extra unlabeled
subtree of type (n, k - m).  Summing q^(sigma/2) times the product of
[leaf + 1]_q over all trees gives s_lam(1, q, ..., q^k).
"""

from __future__ import annotations

import dataclasses
import functools
import itertools

from .errors import (BudgetExceededError, ParityViolationError,
                     PreconditionViolationError, StructureViolationError)
from .koh import (KohTree, count_koh_trees, enumerate_koh_trees, leaves,
                  tree_to_dict as _koh_to_dict, tree_from_dict as _koh_from_dict,
                  validate_koh_tree, _emit_dot_node, _fmt_parts)
from .partitions import Partition, enumerate_partitions
from .qpoly import ONE, ZERO, QPoly, q_binomial, q_int


@dataclasses.dataclass(frozen=True)
class Configuration:
    """An admissible chain of partitions below a fixed shape."""

    lam: Partition
    nus: tuple[Partition, ...]

    def p_stat(self, i: int, j: int) -> int:
        """Mixed second difference at level i, column j.

        Defined for 1 <= i < len(lam) and 1 <= j <= |lam|.
        """
        ell, n = len(self.lam), self.lam.size
        if not (1 <= i < ell) or not (1 <= j <= n):
            raise IndexError(
                f"p_stat index (i={i}, j={j}) outside 1..{ell - 1} x 1..{n}")
        return (self.nus[i + 1].q_stat(j) - 2 * self.nus[i].q_stat(j)
                + self.nus[i - 1].q_stat(j))

    def m_stat(self) -> int:
        """Number of parts of nu^1 (first entry of its conjugate)."""
        return len(self.nus[1])

    def tau_stat(self) -> int:
        """Power shift of the configuration.

        Sum over 1 <= i < len(lam) and columns j up to |lam| of
        alpha^i_j (alpha^i_j - alpha^{i+1}_j), with alpha^i the
        conjugate of nu^i padded with zeros.
        """
        n = self.lam.size
        alphas = [nu.conjugate().parts for nu in self.nus]

        def col(i: int, j: int) -> int:
            row = alphas[i]
            return row[j - 1] if j <= len(row) else 0

        return sum(col(i, j) * (col(i, j) - col(i + 1, j))
                   for i in range(1, len(self.lam))
                   for j in range(1, n + 1))


def _check_shape(lam: Partition) -> None:
    if not lam:
        raise PreconditionViolationError("the shape partition must be nonempty")


def validate_configuration(config: Configuration) -> None:
    """Check chain admissibility, raising StructureViolationError."""
    lam, nus = config.lam, config.nus
    _check_shape(lam)
    ell, n = len(lam), lam.size
    if len(nus) != ell + 1:
        raise StructureViolationError(
            f"expected {ell + 1} chain levels, got {len(nus)}")
    if nus[0] != Partition((1,) * n):
        raise StructureViolationError(f"level 0 must be (1^{n}), got {nus[0]!r}")
    for i in range(ell + 1):
        want = sum(lam.parts[i:])
        if nus[i].size != want:
            raise StructureViolationError(
                f"level {i} must have size {want}, got {nus[i]!r}")
    for i in range(1, ell):
        for j in range(1, n + 1):
            if config.p_stat(i, j) < 0:
                raise StructureViolationError(
                    f"negative second difference at (i={i}, j={j})")


@functools.cache
def enumerate_configurations(lam: Partition) -> tuple[Configuration, ...]:
    """All admissible chains for lam, levels filled in canonical partition
    order, with the nonnegativity filter applied incrementally."""
    _check_shape(lam)
    ell, n = len(lam), lam.size
    level_sizes = [sum(lam.parts[i:]) for i in range(1, ell)]
    found: list[Configuration] = []

    def newest_level_ok(chain: list[Partition]) -> bool:
        i = len(chain) - 2  # the level whose second difference is now fixed
        return all(chain[i + 1].q_stat(j) - 2 * chain[i].q_stat(j)
                   + chain[i - 1].q_stat(j) >= 0
                   for j in range(1, n + 1))

    def extend(chain: list[Partition]) -> None:
        depth = len(chain)
        if depth == ell + 1:
            found.append(Configuration(lam, tuple(chain)))
            return
        options = ([Partition()] if depth == ell
                   else enumerate_partitions(level_sizes[depth - 1]))
        for nu in options:
            chain.append(nu)
            if depth < 2 or newest_level_ok(chain):
                extend(chain)
            chain.pop()

    extend([Partition((1,) * n)])
    return tuple(found)


def goh_rhs_closed(lam: Partition, k: int) -> QPoly:
    """Configuration sum equal to s_lam(1, q, ..., q^k).

    Each chain with m_stat <= k contributes q^tau times
    q_binomial(|lam|, k - m) times the product of q_binomial(P^i_j, m_j)
    over the occupied slots.
    """
    _check_shape(lam)
    if k < 0:
        raise PreconditionViolationError(f"k must be nonnegative, got {k}")
    ell, n = len(lam), lam.size
    total = ZERO
    for config in enumerate_configurations(lam):
        m = config.m_stat()
        if m > k:
            continue
        term = q_binomial(n, k - m).shift(config.tau_stat())
        for i in range(1, ell):
            for j in range(1, n + 1):
                mj = config.nus[i].mult(j)
                if mj:
                    term = term * q_binomial(config.p_stat(i, j), mj)
        total = total + term
    return total


@dataclasses.dataclass(frozen=True)
class GohTree:
    """Root configuration with one expansion subtree per occupied slot.

    labeled holds ((i, j), subtree) pairs in lexicographic edge order;
    extra is the unlabeled subtree, present exactly when m_stat < k.
    """

    config: Configuration
    k: int
    labeled: tuple[tuple[tuple[int, int], KohTree], ...]
    extra: KohTree | None

    @property
    def lam(self) -> Partition:
        return self.config.lam


def _slots(config: Configuration) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """(edge, child type) pairs in lexicographic edge order."""
    ell, n = len(config.lam), config.lam.size
    out = []
    for i in range(1, ell):
        for j in range(1, n + 1):
            mj = config.nus[i].mult(j)
            if mj:
                out.append(((i, j), (config.p_stat(i, j), mj)))
    return out


def count_goh_trees(lam: Partition, k: int) -> int:
    """Number of trees for (lam, k), without materializing them."""
    _check_shape(lam)
    if k < 0:
        raise PreconditionViolationError(f"k must be nonnegative, got {k}")
    n = lam.size
    total = 0
    for config in enumerate_configurations(lam):
        m = config.m_stat()
        if m > k:
            continue
        prod = 1
        for _, (ca, cb) in _slots(config):
            prod *= count_koh_trees(ca, cb)
        if m < k:
            prod *= count_koh_trees(n, k - m)
        total += prod
    return total


def enumerate_goh_trees(lam: Partition, k: int, max_trees: int | None = None) -> tuple[GohTree, ...]:
    """All trees for (lam, k): configurations in canonical order, then the
    product of subtree choices with later slots varying fastest and the
    unlabeled slot varying last."""
    _check_shape(lam)
    if k < 0:
        raise PreconditionViolationError(f"k must be nonnegative, got {k}")
    if max_trees is not None:
        total = count_goh_trees(lam, k)
        if total > max_trees:
            raise BudgetExceededError(
                f"{total} trees for ({lam!r}, {k}) exceed the budget {max_trees}")
    n = lam.size
    out: list[GohTree] = []
    for config in enumerate_configurations(lam):
        m = config.m_stat()
        if m > k:
            continue
        choice_sets = [tuple((edge, t) for t in enumerate_koh_trees(ca, cb))
                       for edge, (ca, cb) in _slots(config)]
        extras: tuple[KohTree | None, ...]
        extras = enumerate_koh_trees(n, k - m) if m < k else (None,)
        for combo in itertools.product(*choice_sets):
            for extra in extras:
                out.append(GohTree(config, k, combo, extra))
    return tuple(out)


def goh_leaves(tree: GohTree) -> tuple[int, ...]:
    """Leaf labels: labeled subtrees in edge order, then the unlabeled one."""
    out: tuple[int, ...] = ()
    for _, sub in tree.labeled:
        out += leaves(sub)
    if tree.extra is not None:
        out += leaves(tree.extra)
    return out


def goh_sigma(tree: GohTree) -> int:
    """|lam| * k minus the leaf sum; even and nonnegative on valid trees."""
    s = tree.lam.size * tree.k - sum(goh_leaves(tree))
    if s < 0:
        raise StructureViolationError(
            f"leaf sum exceeds {tree.lam.size}*{tree.k}")
    if s % 2:
        raise ParityViolationError(
            f"odd defect {s} for shape {tree.lam!r} with k={tree.k}")
    return s


def goh_term(tree: GohTree) -> QPoly:
    """q^(sigma/2) times the product of [leaf + 1]_q over all leaves."""
    prod = ONE
    for a in goh_leaves(tree):
        prod = prod * q_int(a)
    return prod.shift(goh_sigma(tree) // 2)


def validate_goh_tree(tree: GohTree) -> None:
    """Check the root and every subtree, raising StructureViolationError."""
    validate_configuration(tree.config)
    if tree.k < 0:
        raise StructureViolationError(f"k must be nonnegative, got {tree.k}")
    m = tree.config.m_stat()
    if m > tree.k:
        raise StructureViolationError(
            f"m_stat {m} exceeds k = {tree.k}; no such tree exists")
    slots = _slots(tree.config)
    if tuple(edge for edge, _ in tree.labeled) != tuple(edge for edge, _ in slots):
        raise StructureViolationError(
            f"labeled edges {[e for e, _ in tree.labeled]} do not match the "
            f"occupied slots {[e for e, _ in slots]}")
    for (edge, sub), (_, ctype) in zip(tree.labeled, slots):
        validate_koh_tree(sub, expected_type=ctype)
    if m < tree.k:
        if tree.extra is None:
            raise StructureViolationError("missing unlabeled subtree")
        validate_koh_tree(tree.extra,
                          expected_type=(tree.lam.size, tree.k - m))
    elif tree.extra is not None:
        raise StructureViolationError("unexpected unlabeled subtree")


# --- serialization ---

def tree_to_dict(tree: GohTree, marks: tuple[int, ...] | None = None,
                 r: int | None = None) -> dict:
    """JSON-ready dict; the unlabeled child carries edge null."""
    children = [{"edge": [i, j], "koh": _koh_to_dict(sub)}
                for (i, j), sub in tree.labeled]
    if tree.extra is not None:
        children.append({"edge": None, "koh": _koh_to_dict(tree.extra)})
    d: dict = {
        "lambda": list(tree.lam.parts),
        "config": [list(nu.parts) for nu in tree.config.nus],
        "k": tree.k,
        "children": children,
    }
    if marks is not None:
        d["marks"] = list(marks)
        d["r"] = r
    return d


def tree_from_dict(data: dict) -> GohTree:
    """Parse the dict form back into a validated tree."""
    try:
        lam = Partition(data["lambda"])
        nus = tuple(Partition(p) for p in data["config"])
        k = data["k"]
        labeled = []
        extra = None
        for entry in data["children"]:
            sub = _koh_from_dict(entry["koh"])
            if entry["edge"] is None:
                if extra is not None:
                    raise StructureViolationError("two unlabeled children")
                extra = sub
            else:
                i, j = entry["edge"]
                labeled.append(((i, j), sub))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StructureViolationError):
            raise
        raise StructureViolationError(f"malformed tree payload: {exc}") from exc
    tree = GohTree(Configuration(lam, nus), k, tuple(labeled), extra)
    validate_goh_tree(tree)
    return tree


def tree_to_dot(tree: GohTree, marks: tuple[int, ...] | None = None,
                r: int | None = None, graph_name: str = "goh") -> str:
    """DOT rendering; subtree edges keep their (i, j) labels, the
    unlabeled edge stays bare."""
    lines = [f"digraph {graph_name} {{", "  node [shape=plaintext];"]
    if r is not None:
        lines.append(f'  label="r = {r}";')
        lines.append("  labelloc=top;")
    ids = itertools.count()
    root = f"n{next(ids)}"
    chain = "[" + ",".join(_fmt_parts(nu.parts) for nu in tree.config.nus) + "]"
    lines.append(f'  {root} [label="({_fmt_parts(tree.lam.parts)}, {chain}, {tree.k})"];')
    remaining = list(marks) if marks is not None else None
    for (i, j), sub in tree.labeled:
        cid = _emit_dot_node(sub, ids, lines, remaining)
        lines.append(f'  {root} -> {cid} [label="{i},{j}"];')
    if tree.extra is not None:
        cid = _emit_dot_node(tree.extra, ids, lines, remaining)
        lines.append(f"  {root} -> {cid};")
    lines.append("}")
    return "\n".join(lines) + "\n"
