"""Command-line interface.

Exit codes: 0 success, 1 identity mismatch, 2 bad input, 3 contract or
resource-guard failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .errors import AmttError, ContractError, DimensionError, ResourceGuardError
from .forests import DEFAULT_ENUMERATION_CAP, OrientedForest, enumerate_forests, induced_bijection, is_valid_forest
from .linalg import ExactMatrix, VertexSubset, det_exact, format_rational, minor, parse_rational
from .signs import epsilon, epsilon_double_prime, epsilon_prime, sgn_bijection
from .theorem import (
    DEFAULT_SYMBOLIC_CAP,
    FuzzConfig,
    forest_monomial,
    fuzz_campaign,
    graph_semi_laplacian,
    subset_pairs,
    symbolic_verify,
    verify_identity,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CONTRACT = 0, 1, 2, 3

COMMANDS = ("verify", "enumerate", "sign", "symbolic", "fuzz", "count-trees")


class InputError(Exception):
    """Unparseable or inconsistent command-line input (exit 2)."""


@dataclass
class CliConfig:
    command: str
    input: Optional[str] = None
    inline: Optional[str] = None
    u: Optional[str] = None
    w: Optional[str] = None
    n: Optional[int] = None
    n_max: int = 4
    seed: int = 0
    trials: int = 25
    cap: int = DEFAULT_ENUMERATION_CAP
    format: str = "json"
    signs: bool = False
    root: int = 1
    i: Optional[int] = None
    j: Optional[int] = None

    def load_json(self):
        if self.input and self.inline:
            raise InputError("give only one of --input and --inline")
        try:
            if self.input:
                return json.loads(Path(self.input).read_text())
            if self.inline:
                return json.loads(self.inline)
        except OSError as exc:
            raise InputError(f"cannot read {self.input}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        raise InputError("need --input PATH or --inline JSON")

    def subsets(self, n: int) -> tuple[VertexSubset, VertexSubset]:
        if self.u is None or self.w is None:
            raise InputError("need both --u and --w")
        U, W = parse_subset(self.u, n), parse_subset(self.w, n)
        if len(U) != len(W):
            raise InputError(f"|U| = {len(U)} but |W| = {len(W)}")
        return U, W


def parse_subset(text: str, n: int) -> VertexSubset:
    text = text.strip()
    try:
        members = [int(t) for t in text.split(",") if t.strip()] if text else []
        return VertexSubset(n, tuple(members))
    except (ValueError, IndexError) as exc:
        raise InputError(f"bad vertex list {text!r} for n = {n}: {exc}") from exc


def _emit(cfg: CliConfig, obj: dict, table_lines: list[str]) -> None:
    if cfg.format == "json":
        print(json.dumps(obj))
    else:
        print("\n".join(table_lines))


def _load_matrix(cfg: CliConfig) -> ExactMatrix:
    try:
        return ExactMatrix.from_json_obj(cfg.load_json())
    except (ValueError, TypeError, DimensionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad matrix: {exc}") from exc


def cmd_verify(cfg: CliConfig) -> int:
    M = _load_matrix(cfg)
    U, W = cfg.subsets(M.rows)
    if len(U) < 1:
        raise InputError("need |U| = |W| >= 1")
    report = verify_identity(M, U, W, cap=cfg.cap)
    _emit(cfg, report.to_json_obj(), [
        f"n={report.n} U={U} W={W}",
        f"det M(W,U)  = {format_rational(report.lhs)}",
        f"forest sum  = {format_rational(report.rhs)}",
        f"forests     = {report.forest_count}",
        f"match       = {report.match}",
    ])
    return EXIT_OK if report.match else EXIT_MISMATCH


def cmd_enumerate(cfg: CliConfig) -> int:
    if cfg.n is None:
        raise InputError("enumerate needs --n")
    U, W = cfg.subsets(cfg.n)
    forests = enumerate_forests(cfg.n, U, W, cap=cfg.cap)
    if cfg.format == "json":
        print(len(forests))
        for F in forests:
            edges = [list(e) for e in F.sorted_edges()]
            if cfg.signs:
                print(json.dumps({"edges": edges, "epsilon": epsilon(U, W, F)}))
            else:
                print(json.dumps(edges))
    else:
        print(f"count: {len(forests)}")
        for k, F in enumerate(forests, 1):
            line = f"{k:>5}  {F}"
            if cfg.signs:
                line += f"  eps={epsilon(U, W, F):+d}"
            print(line)
    return EXIT_OK


def cmd_sign(cfg: CliConfig) -> int:
    try:
        F = OrientedForest.from_json_obj(cfg.load_json())
    except (ValueError, TypeError, IndexError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad forest: {exc}") from exc
    U, W = cfg.subsets(F.n)
    if not is_valid_forest(F, U, W):
        raise ContractError(f"{F} is not a forest from {U} to {W}")
    pi = induced_bijection(F, U, W)
    obj = {
        "n": F.n, "U": list(U), "W": list(W), "edges": F.to_json_obj()["edges"],
        "pi": {str(u): w for u, w in sorted(pi.items())},
        "sgn_pi": sgn_bijection(U, pi),
        "epsilon": epsilon(U, W, F),
    }
    if cfg.i is not None and cfg.j is not None:
        obj["epsilon_double_prime"] = epsilon_double_prime(F, cfg.i, cfg.j)
        if cfg.i not in W and cfg.j not in U:
            obj["epsilon_prime"] = epsilon_prime(cfg.i, cfg.j, U, W)
    _emit(cfg, obj, [f"{k}: {v}" for k, v in obj.items()])
    return EXIT_OK


def cmd_symbolic(cfg: CliConfig) -> int:
    if cfg.n is None:
        raise InputError("symbolic needs --n")
    if cfg.n > DEFAULT_SYMBOLIC_CAP:
        raise ResourceGuardError(f"n = {cfg.n} exceeds the symbolic cap {DEFAULT_SYMBOLIC_CAP}")
    if cfg.u is None and cfg.w is None:
        pairs = list(subset_pairs(cfg.n))
    else:
        pairs = [cfg.subsets(cfg.n)]
    reports = [symbolic_verify(cfg.n, U, W) for U, W in pairs]
    ok = all(r.match for r in reports)
    if cfg.format == "json":
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps({"checks": len(reports), "mismatches": sum(not r.match for r in reports),
                              "reports": [r.to_json_obj() for r in reports]}))
    else:
        for r in reports:
            print(f"U={r.U} W={r.W} forests={r.forest_count} match={r.match}  lhs = {r.lhs}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_fuzz(cfg: CliConfig) -> int:
    summary = fuzz_campaign(FuzzConfig(n_max=cfg.n_max, trials=cfg.trials, seed=cfg.seed, cap=cfg.cap))
    obj = summary.to_json_obj()
    _emit(cfg, obj, [
        f"n_max={cfg.n_max} trials={cfg.trials} seed={cfg.seed}",
        *(f"  n={k}: {v} checks" for k, v in summary.per_n.items()),
        f"total checks: {summary.checks}",
        f"failures:     {len(summary.failures)}",
    ])
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def _load_graph(cfg: CliConfig):
    obj = cfg.load_json()
    try:
        n = obj["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad vertex count {n!r}")
        edges = []
        for e in obj.get("edges", []):
            u, v = int(e[0]), int(e[1])
            w = parse_rational(e[2]) if len(e) > 2 else parse_rational(1)
            edges.append((u, v, w))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"bad graph: {exc}") from exc
    return n, edges


def cmd_count_trees(cfg: CliConfig) -> int:
    n, edges = _load_graph(cfg)
    if not 1 <= cfg.root <= n:
        raise InputError(f"root {cfg.root} outside 1..{n}")
    M = graph_semi_laplacian(n, edges)
    det = det_exact(minor(M, [cfg.root], [cfg.root]))
    # forests from {r} to {r} all carry the sign (-1)^(n+1)
    tree_weight = det if n % 2 else -det
    obj = {"n": n, "root": cfg.root, "determinant": format_rational(det),
           "tree_weight": format_rational(tree_weight)}
    agree = True
    if n <= cfg.cap:
        R = VertexSubset(n, (cfg.root,))
        forests = enumerate_forests(n, R, R, cap=cfg.cap)
        weights = [forest_monomial(F, M) for F in forests]
        enumerated = sum(weights, Fraction(0))
        obj["enumerated_weight"] = format_rational(enumerated)
        obj["spanning_trees"] = sum(1 for x in weights if x != 0)
        agree = enumerated == tree_weight
        obj["agree"] = agree
    _emit(cfg, obj, [f"{k}: {v}" for k, v in obj.items()])
    return EXIT_OK if agree else EXIT_MISMATCH


HANDLERS = {
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "sign": cmd_sign,
    "symbolic": cmd_symbolic,
    "fuzz": cmd_fuzz,
    "count-trees": cmd_count_trees,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="JSON input file")
    src.add_argument("--inline", metavar="JSON", help="JSON input given inline")
    common.add_argument("--u", help="comma-separated 1-based vertices of U")
    common.add_argument("--w", help="comma-separated 1-based vertices of W")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=25)
    common.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="largest n for forest enumeration")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--signs", action="store_true", help="print epsilon next to each forest")

    parser = argparse.ArgumentParser(prog="amtt", description="All-minors matrix tree theorem toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="check det M(W,U) against the forest sum")
    p = sub.add_parser("enumerate", parents=[common], help="list the forests from U to W")
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("sign", parents=[common], help="signs attached to a forest")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p = sub.add_parser("symbolic", parents=[common], help="polynomial identity at the generic matrix")
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("fuzz", parents=[common], help="seeded random verification campaign")
    p.add_argument("--n-max", type=int, default=4)
    p = sub.add_parser("count-trees", parents=[common], help="spanning-tree weight of a weighted digraph")
    p.add_argument("--root", type=int, default=1)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(**{k: v for k, v in vars(args).items() if k in CliConfig.__dataclass_fields__})
    try:
        return HANDLERS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AmttError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
