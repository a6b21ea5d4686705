"""Command-line interface: recognize, gamma, mmm, reduce, verify-reduction.

Exit codes are a stable contract: 0 success, 2 parse or usage failure,
3 class or precondition mismatch, 4 resource guard exceeded.  JSON output
is the machine interface; text output is for humans and may change.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .domset import solve_gamma
from .errors import (
    ClassMismatchError,
    ContractViolationError,
    InputError,
    ParseError,
    ResourceLimitError,
)
from .gadgets import (
    ReductionInstance,
    reduce_cubic_clawfree,
    reduce_split_trianglefree,
    reduce_vc_k14,
    verify_reduction,
)
from .graphs import Graph, parse_graph, to_edge_list
from .mmm import minimum_maximal_matching
from .recognition import classify, find_split_partition

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CLASS = 3
EXIT_RESOURCE = 4

_FORMATS = {"edge-list": "edge_list", "dimacs": "dimacs"}
_KINDS = {
    "cubic-clawfree": "cubic_clawfree_d",
    "vc-k14": "vc_k14_diam2",
    "split-trianglefree": "split_trianglefree_diam2",
}


@dataclass
class CliConfig:
    command: str
    path: Path | None
    fmt: str
    method: str | None
    budget: int | None
    k: int | None
    d: int | None
    output: str
    out_base: Path | None
    cap: int | None
    node_limit: int | None
    seed: int | None
    kind_cli: str | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domkit",
        description="Graph domination toolkit: recognition, solvers, reductions.",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized corpora (reserved)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("path", type=Path, help="input graph file")
        p.add_argument("--format", choices=sorted(_FORMATS), default="edge-list")

    p_rec = sub.add_parser("recognize", help="class flags, diameter, girth")
    add_input(p_rec)

    p_gamma = sub.add_parser("gamma", help="minimum dominating set")
    add_input(p_gamma)
    p_gamma.add_argument(
        "--method",
        choices=["auto", "exact", "clawfree-diam2", "line-diam2",
                 "girth5-diam2", "bounded"],
        default="auto",
    )
    p_gamma.add_argument("--budget", type=int, help="size cap for --method bounded")
    p_gamma.add_argument("--node-limit", type=int, dest="node_limit",
                         help="branch-and-bound node budget")

    p_mmm = sub.add_parser("mmm", help="minimum maximal matching")
    add_input(p_mmm)
    p_mmm.add_argument("--cap", type=int, help="maximal-stable-set enumeration cap")

    p_red = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p_red.add_argument("kind", choices=sorted(_KINDS))
    add_input(p_red)
    p_red.add_argument("-k", type=int, required=True, help="source budget")
    p_red.add_argument("-d", type=int, help="target diameter (cubic-clawfree)")
    p_red.add_argument("-o", "--out", type=Path, dest="out_base",
                       help="output base path (writes BASE.el and BASE.json)")

    p_ver = sub.add_parser("verify-reduction",
                           help="build an instance and verify it against oracles")
    p_ver.add_argument("kind", choices=sorted(_KINDS))
    add_input(p_ver)
    p_ver.add_argument("-k", type=int, required=True)
    p_ver.add_argument("-d", type=int)
    p_ver.add_argument("--node-limit", type=int, dest="node_limit")
    p_ver.add_argument("--output", choices=["text", "json"], default="text")
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=ns.command,
        path=getattr(ns, "path", None),
        fmt=_FORMATS[getattr(ns, "format", "edge-list")],
        method=getattr(ns, "method", None),
        budget=getattr(ns, "budget", None),
        k=getattr(ns, "k", None),
        d=getattr(ns, "d", None),
        output=getattr(ns, "output", "json"),
        out_base=getattr(ns, "out_base", None),
        cap=getattr(ns, "cap", None),
        node_limit=getattr(ns, "node_limit", None),
        seed=ns.seed,
        kind_cli=getattr(ns, "kind", None),
    )


def _load_graph(cfg: CliConfig) -> Graph:
    try:
        text = cfg.path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {cfg.path}: {exc}") from exc
    return parse_graph(text, cfg.fmt)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _build_reduction(cfg: CliConfig, g: Graph) -> ReductionInstance:
    kind = _KINDS[cfg.kind_cli]  # set by caller
    if kind == "cubic_clawfree_d":
        if cfg.d is None:
            raise InputError("cubic-clawfree needs -d")
        return reduce_cubic_clawfree(g, cfg.k, cfg.d)
    if kind == "vc_k14_diam2":
        return reduce_vc_k14(g, cfg.k)
    partition = find_split_partition(g)
    if partition is None:
        raise ClassMismatchError("input is not a split graph")
    return reduce_split_trianglefree(g, partition, cfg.k)


def _cmd_recognize(cfg: CliConfig) -> int:
    g = _load_graph(cfg)
    _emit(classify(g).to_json_obj())
    return EXIT_OK


def _cmd_gamma(cfg: CliConfig) -> int:
    g = _load_graph(cfg)
    cert = solve_gamma(g, method=cfg.method, budget=cfg.budget,
                       node_limit=cfg.node_limit)
    _emit(cert.to_json_obj())
    return EXIT_OK


def _cmd_mmm(cfg: CliConfig) -> int:
    g = _load_graph(cfg)
    m = minimum_maximal_matching(g, cap=cfg.cap)
    _emit({"size": len(m), "edges": m.to_json_obj()})
    return EXIT_OK


def _cmd_reduce(cfg: CliConfig) -> int:
    g = _load_graph(cfg)
    inst = _build_reduction(cfg, g)
    base = cfg.out_base
    if base is None:
        base = cfg.path.with_name(f"{cfg.path.stem}.{cfg.kind_cli}")
    graph_file = base.with_suffix(base.suffix + ".el")
    sidecar_file = base.with_suffix(base.suffix + ".json")
    graph_file.write_text(to_edge_list(inst.graph), encoding="utf-8")
    sidecar_file.write_text(
        json.dumps(inst.sidecar_json_obj(), indent=2) + "\n", encoding="utf-8"
    )
    _emit({
        "kind": inst.kind,
        "kprime": inst.kprime,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "graph_file": str(graph_file),
        "sidecar_file": str(sidecar_file),
    })
    return EXIT_OK


def _cmd_verify(cfg: CliConfig) -> int:
    g = _load_graph(cfg)
    inst = _build_reduction(cfg, g)
    report = verify_reduction(inst, g, cfg.k, node_limit=cfg.node_limit)
    if cfg.output == "json":
        _emit(report.to_json_obj())
    else:
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            detail = f"  ({c.detail})" if c.detail else ""
            print(f"[{status}] {c.name}{detail}")
        if not report.complete:
            print("[WARN] oracle budget exhausted; report incomplete")
    if not report.complete:
        return EXIT_RESOURCE
    return EXIT_OK if report.all_passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = _config(ns)
    try:
        if cfg.command == "recognize":
            return _cmd_recognize(cfg)
        if cfg.command == "gamma":
            return _cmd_gamma(cfg)
        if cfg.command == "mmm":
            return _cmd_mmm(cfg)
        if cfg.command == "reduce":
            return _cmd_reduce(cfg)
        if cfg.command == "verify-reduction":
            return _cmd_verify(cfg)
        parser.error(f"unknown command {cfg.command}")
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ClassMismatchError, InputError, ContractViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())
