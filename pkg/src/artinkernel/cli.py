"""Command-line front end. Reports go to stdout as JSON unless ``--format`` says otherwise."""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys

from . import __version__
from .blockgraph import (
    bounded_divergence_family,
    minimal_rank,
    rank_formula,
    unbounded_family,
)
from .character import Character, classify, image_on
from .chordal import VGBSDecomposition, chordal_dichotomy
from .errors import ArtinKernelError, InputError
from .graph import (
    Graph,
    blocks,
    connected_components,
    cut_vertices,
    is_block_graph,
    is_chordal,
    is_connected,
    maximal_cliques,
    minimal_vertex_separators,
    splits_over_abelian,
)
from .splitting import FiniteSplitting, SplittingTriple, decompose_once
from .witness import nonchordal_witness

log = logging.getLogger("artinkernel")

DEFAULT_SEED = 20240101
LOG_ENV = "ARTINKERNEL_LOG"


def _sets(sets) -> list:
    return [sorted(s) for s in sets]


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> Graph:
    return Graph.from_json(_read(path))


def load_character(path: str, g: Graph) -> Character:
    return Character.from_json(_read(path)).check_graph(g)


def _vertex_list(text: str) -> frozenset:
    return frozenset(x.strip() for x in text.split(",") if x.strip())


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


# subcommands: each returns (report dict, dot text or None)


def cmd_analyze(args):
    g = load_graph(args.graph)
    connected = is_connected(g)
    chordal = is_chordal(g)
    report = {
        "vertices": len(g),
        "edges": len(g.edges),
        "connected": connected,
        "components": _sets(connected_components(g)),
        "maximal_cliques": _sets(maximal_cliques(g)),
        "chordal": {
            "chordal": bool(chordal),
            "ordering": list(chordal.ordering) if chordal else None,
            "chordless_cycle": None if chordal else list(chordal.cycle),
        },
        "splits_over_abelian": _abelian(g),
    }
    if connected:
        report["blocks"] = _sets(blocks(g))
        report["cut_vertices"] = sorted(cut_vertices(g))
        report["block_graph"] = is_block_graph(g)
        report["minimal_separators"] = _sets(minimal_vertex_separators(g))
    return report, g.to_dot()


def _abelian(g):
    a = splits_over_abelian(g)
    return {"splits": a.splits, "reason": a.reason, "clique": None if a.clique is None else sorted(a.clique)}


def cmd_classify(args):
    g = load_graph(args.graph)
    f = load_character(args.character, g)
    return classify(f, g).to_dict(), None


def cmd_split(args):
    g = load_graph(args.graph)
    f = load_character(args.character, g)
    split = SplittingTriple.from_sides(_vertex_list(args.gamma1), _vertex_list(args.gamma2))
    out = decompose_once(g, f, split)
    dot = out.graph_of_groups.to_dot() if isinstance(out, FiniteSplitting) else None
    return out.to_dict(), dot


def cmd_decompose(args):
    g = load_graph(args.graph)
    f = load_character(args.character, g)
    out = chordal_dichotomy(g, f, rng=random.Random(args.seed) if args.shuffle else None)
    dot = out.graph_of_groups.to_dot() if isinstance(out, (VGBSDecomposition, FiniteSplitting)) else None
    return out.to_dict(), dot


def cmd_rank(args):
    g = load_graph(args.graph)
    f = load_character(args.character, g)
    return rank_formula(g, f).to_dict(), None


def cmd_minrank(args):
    g = load_graph(args.graph)
    mu, attains = minimal_rank(g)
    report = {"mu": mu, "cut_vertices": sorted(cut_vertices(g))}
    if args.character:
        f = load_character(args.character, g)
        report["character"] = dict(f)
        report["index"] = image_on(f, g.vertices)
        report["attains"] = attains(f)
    return report, None


def cmd_family(args):
    g = load_graph(args.graph)
    if args.kind == "unbounded":
        f = unbounded_family(g, args.n)
        r = rank_formula(g, f, with_decomposition=False)
        return {"family": "unbounded", "n": args.n, "character": dict(f), "rank": r.rank, "m": r.m}, None
    out = bounded_divergence_family(g, args.q, _int_list(args.p))
    return {"family": "bounded-div", "q": args.q, **out.to_dict()}, None


def cmd_witness(args):
    g = load_graph(args.graph)
    return nonchordal_witness(g).to_dict(), None


def cmd_selftest(args):
    from .selftest import run_selftest

    report = run_selftest(args.max_vertices, args.count, args.seed, args.csv)
    return report, None


# output


def _table(report) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}\t{value}")
    return "\n".join(lines) + "\n"


def _emit(report, dot, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif fmt == "table":
        out.write(_table(report))
    elif dot is None:
        raise InputError("this report has no DOT rendering")
    else:
        out.write(dot)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artinkernel", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "table"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, char=False):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name == "family":
            sp.add_argument("kind", choices=("unbounded", "bounded-div"))
        if name != "selftest":
            sp.add_argument("graph", help="graph JSON file, or - for stdin")
        if char:
            sp.add_argument("character", help="character JSON file")
        sp.set_defaults(func=func)
        return sp

    add("analyze", cmd_analyze, "graph structure report")
    add("classify", cmd_classify, "finitely generated or wild kernel", char=True)
    sp = add("split", cmd_split, "decompose along one splitting", char=True)
    sp.add_argument("--gamma1", required=True, help="comma-separated vertices")
    sp.add_argument("--gamma2", required=True, help="comma-separated vertices")
    sp = add("decompose", cmd_decompose, "chordal graph-of-groups decomposition", char=True)
    sp.add_argument("--shuffle", action="store_true", help="seeded random separator choices")
    add("rank", cmd_rank, "kernel rank on a block graph", char=True)
    sp = add("minrank", cmd_minrank, "minimal kernel rank on a block graph")
    sp.add_argument("--character", help="also test whether this character attains it")
    sp = add("family", cmd_family, "character families on a block graph")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--q", type=int, default=1)
    sp.add_argument("--p", default="2,3,5")
    add("witness", cmd_witness, "character neither wild nor tame on a non-chordal graph")
    sp = add("selftest", cmd_selftest, "run the invariant sweeps")
    sp.add_argument("--max-vertices", type=int, default=6)
    sp.add_argument("--count", type=int, default=200, help="random instances per sweep")
    sp.add_argument("--csv", help="write the rank table to this path")
    return p


def _configure_logging() -> None:
    level = os.environ.get(LOG_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    log.debug("command %s", args.command)
    try:
        report, dot = args.func(args)
        _emit(report, dot, args.format, out)
    except ArtinKernelError as exc:
        _error(out, exc, exc.exit_code)
        return exc.exit_code
    code = 0
    if args.command == "selftest" and not report["ok"]:
        code = 4
    return code


def _error(out, exc, code) -> None:
    body = {"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}
    for attr in ("violations", "cycle", "vertices"):
        if hasattr(exc, attr):
            body["error"][attr] = list(getattr(exc, attr))
    out.write(json.dumps(body, sort_keys=True) + "\n")


def main() -> None:
    sys.exit(run())
