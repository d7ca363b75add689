"""Command-line front end: coefficients, tree listings, identity sweeps.

Subcommands
    kronecker --n N --k K --r R [--method M]
    plethysm --mu P --k K --r R [--method M]
    plethysm-general --lambda L --mu P --nu V
    trees koh --n N --k K [--r R] [--format text|json|dot]
    trees goh --mu P --k K [--r R] [--format text|json|dot]
    verify koh --max-n A --max-k B [--workers W]
    verify goh --max-size A --max-k B [--workers W]

Exit status: 0 on success, 1 on a verification, cross-check, or budget
failure, 2 on a usage error.  The budget and worker flags fall back to
the environment variables KOHTREES_MAX_TREES, KOHTREES_MAX_FILLINGS
and KOHTREES_WORKERS before their defaults.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import dataclasses
import json
import os
import sys

from . import goh, koh
from .coefficients import (DEFAULT_FILLING_BUDGET, DEFAULT_TREE_BUDGET,
                           METHOD_BOTH, METHOD_DIFFERENCE, METHOD_MARKED,
                           hook_content, kronecker_two_row, plethysm_two_row,
                           plethysm_two_row_general,
                           schur_specialization_oracle)
from .errors import (BudgetExceededError, CrossCheckFailedError,
                     InvalidRowLengthError, PreconditionViolationError,
                     SizeMismatchError)
from .koh import _fmt_parts
from .marking import count_markings, enumerate_markings, marking_target
from .partitions import Partition, count_in_rectangle, enumerate_partitions
from .qpoly import ZERO, q_binomial

DEFAULT_WORKERS = 1

_METHODS = {
    "marked_trees": METHOD_MARKED,
    "difference": METHOD_DIFFERENCE,
    "difference_formula": METHOD_DIFFERENCE,
    "both": METHOD_BOTH,
}


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: a single command plus its options."""

    command: str
    options: dict
    method: str = METHOD_BOTH
    output_format: str = "text"
    workers: int = DEFAULT_WORKERS
    max_trees: int = DEFAULT_TREE_BUDGET
    max_fillings: int = DEFAULT_FILLING_BUDGET


def _parse_partition(text: str) -> Partition:
    body = text.strip().strip("[]")
    try:
        parts = tuple(int(p) for p in body.split(",") if p.strip())
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a partition: {exc}") from exc


def _parse_method(text: str) -> str:
    try:
        return _METHODS[text.lower().replace("-", "_")]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown method {text!r}; choose marked-trees, difference or both")


def _resolve(flag_value: int | None, env_name: str, default: int) -> int:
    """Flag beats environment beats default; the result must be positive."""
    if flag_value is not None:
        value = flag_value
    else:
        raw = os.environ.get(env_name)
        if raw is None:
            value = default
        else:
            try:
                value = int(raw)
            except ValueError:
                raise PreconditionViolationError(
                    f"{env_name} must be an integer, got {raw!r}")
    if value < 1:
        raise PreconditionViolationError(
            f"{env_name.replace('KOHTREES_', '').lower()} must be positive, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kohtrees",
        description="Two-row Kronecker and plethysm coefficients via "
                    "marked expansion trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--max-trees", type=int, default=None,
                        help="enumeration budget (env KOHTREES_MAX_TREES)")
    limits.add_argument("--max-fillings", type=int, default=None,
                        help="tableau oracle budget (env KOHTREES_MAX_FILLINGS)")

    kron = sub.add_parser("kronecker", parents=[limits],
                          help="two-row rectangular Kronecker coefficient")
    kron.add_argument("--n", type=int, required=True, help="rectangle width")
    kron.add_argument("--k", type=int, required=True, help="rectangle height")
    kron.add_argument("--r", type=int, required=True, help="second-row length")
    kron.add_argument("--method", type=_parse_method, default=METHOD_BOTH,
                      metavar="{marked-trees,difference,both}")
    kron.add_argument("--format", dest="output_format", default="text",
                      choices=("text", "json"))

    plet = sub.add_parser("plethysm", parents=[limits],
                          help="two-row coefficient of s_mu plethysm a row")
    plet.add_argument("--mu", type=_parse_partition, required=True,
                      help="outer partition, e.g. 3,3,2,1")
    plet.add_argument("--k", type=int, required=True, help="inner row length")
    plet.add_argument("--r", type=int, required=True, help="second-row length")
    plet.add_argument("--method", type=_parse_method, default=METHOD_BOTH,
                      metavar="{marked-trees,difference,both}")
    plet.add_argument("--format", dest="output_format", default="text",
                      choices=("text", "json"))

    gen = sub.add_parser("plethysm-general", parents=[limits],
                         help="coefficient of s_lambda in s_mu plethysm s_nu")
    gen.add_argument("--lambda", dest="lam", type=_parse_partition,
                     required=True, help="target partition, at most two rows")
    gen.add_argument("--mu", type=_parse_partition, required=True)
    gen.add_argument("--nu", type=_parse_partition, required=True)
    gen.add_argument("--method", type=_parse_method, default=METHOD_DIFFERENCE,
                     metavar="{marked-trees,difference,both}")
    gen.add_argument("--format", dest="output_format", default="text",
                     choices=("text", "json"))

    trees = sub.add_parser("trees", help="list expansion trees")
    tsub = trees.add_subparsers(dest="family", required=True)
    tkoh = tsub.add_parser("koh", parents=[limits])
    tkoh.add_argument("--n", type=int, required=True)
    tkoh.add_argument("--k", type=int, required=True)
    tkoh.add_argument("--r", type=int, default=None,
                      help="list marked trees for this coefficient")
    tkoh.add_argument("--format", dest="output_format", default="text",
                      choices=("text", "json", "dot"))
    tgoh = tsub.add_parser("goh", parents=[limits])
    tgoh.add_argument("--mu", type=_parse_partition, required=True)
    tgoh.add_argument("--k", type=int, required=True)
    tgoh.add_argument("--r", type=int, default=None,
                      help="list marked trees for this coefficient")
    tgoh.add_argument("--format", dest="output_format", default="text",
                      choices=("text", "json", "dot"))

    verify = sub.add_parser("verify", help="run an identity sweep")
    vsub = verify.add_subparsers(dest="family", required=True)
    vkoh = vsub.add_parser("koh", parents=[limits])
    vkoh.add_argument("--max-n", type=int, required=True)
    vkoh.add_argument("--max-k", type=int, required=True)
    vkoh.add_argument("--workers", type=int, default=None,
                      help="worker processes (env KOHTREES_WORKERS)")
    vgoh = vsub.add_parser("goh", parents=[limits])
    vgoh.add_argument("--max-size", type=int, required=True)
    vgoh.add_argument("--max-k", type=int, required=True)
    vgoh.add_argument("--workers", type=int, default=None,
                      help="worker processes (env KOHTREES_WORKERS)")
    return parser


def _build_config(args: argparse.Namespace) -> RunConfig:
    options = {key: value for key, value in vars(args).items()
               if key not in ("command", "method", "output_format",
                              "max_trees", "max_fillings", "workers")}
    return RunConfig(
        command=args.command,
        options=options,
        method=getattr(args, "method", METHOD_BOTH),
        output_format=getattr(args, "output_format", "text"),
        workers=_resolve(getattr(args, "workers", None),
                         "KOHTREES_WORKERS", DEFAULT_WORKERS),
        max_trees=_resolve(getattr(args, "max_trees", None),
                           "KOHTREES_MAX_TREES", DEFAULT_TREE_BUDGET),
        max_fillings=_resolve(getattr(args, "max_fillings", None),
                              "KOHTREES_MAX_FILLINGS", DEFAULT_FILLING_BUDGET),
    )


def _print_report(report, fmt: str) -> None:
    if fmt == "json":
        payload = {"coefficient": report.value, "method": report.method,
                   "witness_counts": list(report.witness_counts)
                   if report.witness_counts is not None else None}
        print(json.dumps(payload))
    else:
        print(f"coefficient: {report.value}")
        print(f"method: {report.method}")


def _term_text(shift: int, leaf_values: tuple[int, ...]) -> str:
    factors = [f"[{a + 1}]" for a in leaf_values]
    if shift == 1:
        factors.insert(0, "q")
    elif shift:
        factors.insert(0, f"q^{shift}")
    return "*".join(factors)


def _koh_root_text(tree: koh.KohTree) -> str:
    return f"({_fmt_parts(tree.mu.parts)},{tree.a},{tree.b})"


def _goh_root_text(tree: goh.GohTree) -> str:
    chain = "[" + ",".join(_fmt_parts(nu.parts) for nu in tree.config.nus) + "]"
    return f"({_fmt_parts(tree.lam.parts)},{chain},{tree.k})"


def _run_trees(config: RunConfig) -> int:
    opts = config.options
    if config.command == "koh":
        n, k = opts["n"], opts["k"]
        items = koh.enumerate_koh_trees(n, k, max_trees=config.max_trees)
        total = n * k
        mod = koh
        leaves_of = koh.leaves
        sigma_of = koh.sigma
        root_text = _koh_root_text
    else:
        mu, k = opts["mu"], opts["k"]
        items = goh.enumerate_goh_trees(mu, k, max_trees=config.max_trees)
        total = mu.size * k
        mod = goh
        leaves_of = goh.goh_leaves
        sigma_of = goh.goh_sigma
        root_text = _goh_root_text

    r = opts.get("r")
    if r is not None and (r < 0 or 2 * r > total):
        raise PreconditionViolationError(
            f"need 0 <= 2r <= {total}, got r={r}")

    if r is None:
        entries = [(tree, None) for tree in items]
    else:
        entries = [(tree, marks) for tree in items
                   for marks in enumerate_markings(
                       leaves_of(tree),
                       marking_target(sum(leaves_of(tree)), total, r))]

    fmt = config.output_format
    if fmt == "json":
        print(json.dumps([mod.tree_to_dict(tree, marks, r)
                          if marks is not None else mod.tree_to_dict(tree)
                          for tree, marks in entries]))
    elif fmt == "dot":
        blocks = [mod.tree_to_dot(tree, marks, r, graph_name=f"tree_{i}")
                  if marks is not None
                  else mod.tree_to_dot(tree, graph_name=f"tree_{i}")
                  for i, (tree, marks) in enumerate(entries)]
        sys.stdout.write("".join(blocks))
    else:
        for i, (tree, marks) in enumerate(entries):
            lv = leaves_of(tree)
            line = (f"tree {i}: root={root_text(tree)} "
                    f"leaves=({','.join(str(a) for a in lv)}) "
                    f"sigma={sigma_of(tree)} "
                    f"term={_term_text(sigma_of(tree) // 2, lv)}")
            if marks is not None:
                line += f" marks=({','.join(str(m) for m in marks)})"
            print(line)
        label = "marked trees" if r is not None else "trees"
        print(f"total {label}: {len(entries)}")
    return 0


def _verify_koh_cell(cell: tuple) -> tuple[str, bool, str]:
    """Check one (n, k): tree sum, closed form, and every marked count."""
    n, k, max_trees = cell
    label = f"koh n={n} k={k}"
    trees = koh.enumerate_koh_trees(n, k, max_trees=max_trees)
    tree_sum = sum((koh.koh_term(t) for t in trees), start=ZERO)
    reference = q_binomial(n, k)
    closed = koh.koh_rhs_closed(n, k)
    if tree_sum != reference or closed != reference:
        detail = (f"{label}\n  tree sum: {tree_sum}\n  reference: {reference}\n"
                  f"  closed form: {closed}\n  witness trees: "
                  + json.dumps([koh.tree_to_dict(t) for t in trees]))
        return label, False, detail
    for r in range(n * k // 2 + 1):
        marked = sum(count_markings(koh.leaves(t),
                                    marking_target(sum(koh.leaves(t)), n * k, r))
                     for t in trees)
        diff = count_in_rectangle(n, k, r) - count_in_rectangle(n, k, r - 1)
        if marked != diff:
            detail = (f"{label} r={r}\n  marked trees: {marked}\n"
                      f"  rectangle difference: {diff}\n  witness trees: "
                      + json.dumps([koh.tree_to_dict(t) for t in trees]))
            return label, False, detail
    return label, True, ""


def _verify_goh_cell(cell: tuple) -> tuple[str, bool, str]:
    """Check one (mu, k): tree sum, closed form, oracle, marked counts."""
    mu_parts, k, max_trees, max_fillings = cell
    mu = Partition(mu_parts)
    label = f"goh mu={_fmt_parts(mu_parts)} k={k}"
    trees = goh.enumerate_goh_trees(mu, k, max_trees=max_trees)
    tree_sum = sum((goh.goh_term(t) for t in trees), start=ZERO)
    reference = hook_content(mu, k)
    closed = goh.goh_rhs_closed(mu, k)
    oracle = schur_specialization_oracle(mu, k, max_fillings=max_fillings)
    if tree_sum != reference or closed != reference or oracle != reference:
        detail = (f"{label}\n  tree sum: {tree_sum}\n  hook content: {reference}\n"
                  f"  closed form: {closed}\n  tableau oracle: {oracle}\n"
                  f"  witness trees: "
                  + json.dumps([goh.tree_to_dict(t) for t in trees]))
        return label, False, detail
    total = mu.size * k
    for r in range(total // 2 + 1):
        marked = sum(count_markings(goh.goh_leaves(t),
                                    marking_target(sum(goh.goh_leaves(t)), total, r))
                     for t in trees)
        diff = reference.coeff(r) - reference.coeff(r - 1)
        if marked != diff:
            detail = (f"{label} r={r}\n  marked trees: {marked}\n"
                      f"  specialization difference: {diff}\n  witness trees: "
                      + json.dumps([goh.tree_to_dict(t) for t in trees]))
            return label, False, detail
    return label, True, ""


def _run_verify(config: RunConfig) -> int:
    opts = config.options
    if config.command == "koh":
        if opts["max_n"] < 0 or opts["max_k"] < 1:
            raise PreconditionViolationError(
                f"need max-n >= 0 and max-k >= 1, got {opts['max_n']}, {opts['max_k']}")
        cells = [(n, k, config.max_trees)
                 for n in range(opts["max_n"] + 1)
                 for k in range(1, opts["max_k"] + 1)]
        worker = _verify_koh_cell
    else:
        if opts["max_size"] < 1 or opts["max_k"] < 1:
            raise PreconditionViolationError(
                f"need max-size >= 1 and max-k >= 1, got {opts['max_size']}, {opts['max_k']}")
        cells = [(mu.parts, k, config.max_trees, config.max_fillings)
                 for size in range(1, opts["max_size"] + 1)
                 for mu in enumerate_partitions(size)
                 for k in range(1, opts["max_k"] + 1)]
        worker = _verify_goh_cell

    if config.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(config.workers) as pool:
            results = list(pool.map(worker, cells))
    else:
        results = [worker(cell) for cell in cells]

    failures = [detail for _, ok, detail in results if not ok]
    for label, ok, _ in results:
        print(f"{'PASS' if ok else 'FAIL'} {label}")
    print(f"checked {len(results)} cells: {len(results) - len(failures)} "
          f"passed, {len(failures)} failed")
    if failures:
        print("first counterexample:")
        print(failures[0])
        return 1
    return 0


def run(config: RunConfig) -> int:
    """Execute one resolved invocation, writing to stdout."""
    opts = config.options
    if config.command == "kronecker":
        report = kronecker_two_row(opts["n"], opts["k"], opts["r"],
                                   method=config.method,
                                   max_trees=config.max_trees)
        _print_report(report, config.output_format)
        return 0
    if config.command == "plethysm":
        report = plethysm_two_row(opts["mu"], opts["k"], opts["r"],
                                  method=config.method,
                                  max_trees=config.max_trees)
        _print_report(report, config.output_format)
        return 0
    if config.command == "plethysm-general":
        report = plethysm_two_row_general(opts["lam"], opts["mu"], opts["nu"],
                                          method=config.method,
                                          max_trees=config.max_trees)
        _print_report(report, config.output_format)
        return 0
    if config.command in ("trees", "verify"):
        inner = dataclasses.replace(config, command=opts["family"])
        return (_run_trees if config.command == "trees" else _run_verify)(inner)
    raise PreconditionViolationError(f"unknown command {config.command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    try:
        config = _build_config(args)
        return run(config)
    except BudgetExceededError as exc:
        print(f"BUDGET_EXCEEDED: {exc}", file=sys.stderr)
        return 1
    except CrossCheckFailedError as exc:
        print(f"CROSS_CHECK_FAILED: {exc}", file=sys.stderr)
        return 1
    except (PreconditionViolationError, SizeMismatchError,
            InvalidRowLengthError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
