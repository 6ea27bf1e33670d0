"""Invariant sweeps shared by the ``selftest`` command and the acceptance suite.

Each sweep takes its instances as an iterable, so callers decide where the
graphs come from (an atlas, random generators, exhaustive enumeration), and
returns a :class:`SweepResult` that counts instances and keeps failures.
"""

from __future__ import annotations

import csv
import itertools
import time
from dataclasses import dataclass, field

from .blockgraph import m_value, minimal_rank, rank_formula, split_blocks
from .character import Character, classify, image_on, index_of, living_connected_dominating
from .chordal import VGBSDecomposition, chordal_dichotomy
from .errors import NoWitnessError
from .graph import (
    Graph,
    blocks,
    cut_vertices,
    full_subgraph,
    is_chordal,
    is_clique,
    is_perfect_elimination_ordering,
    minimal_vertex_separators,
)
from .groups import free_product_form
from .oracles import (
    MaskGraph,
    has_separating_dead_subset,
    minimal_separators_bruteforce,
    orbit_count,
    witness_exists_bruteforce,
)
from .splitting import FiniteSplitting, decompose_once
from .witness import nonchordal_witness

MAX_KEPT_FAILURES = 20


@dataclass
class SweepResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def fail(self, detail) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_KEPT_FAILURES:
            self.failures.append(detail)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in self.notes.items())
        return (
            f"{status} {self.name}: instances={self.instances}, "
            f"failures={self.failure_count}{extra}, {self.seconds:.1f}s"
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "instances": self.instances,
            "failures": self.failure_count,
            "examples": [str(x) for x in self.failures],
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


class _timed:
    def __init__(self, result: SweepResult):
        self.result = result

    def __enter__(self):
        self.start = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        self.result.seconds = time.perf_counter() - self.start
        return False


def _describe(g: Graph, f=None) -> str:
    out = g.to_json()
    if f is not None:
        out += " f=" + str(dict(f))
    return out


def dirac_sweep(graphs) -> SweepResult:
    """MCS recognition against 'every minimal separator is a clique'."""
    res = SweepResult("dirac")
    with _timed(res):
        for g in graphs:
            res.instances += 1
            seps = minimal_separators_bruteforce(g)
            oracle = all(is_clique(g, s) for s in seps)
            verdict = is_chordal(g)
            if bool(verdict) != oracle:
                res.fail(("verdict", _describe(g)))
                continue
            if verdict and not is_perfect_elimination_ordering(g, verdict.ordering):
                res.fail(("ordering", _describe(g)))
            if not verdict and not _is_chordless_cycle(g, verdict.cycle):
                res.fail(("cycle", _describe(g)))
            if minimal_vertex_separators(g) != seps:
                res.fail(("separators", _describe(g)))
    return res


def _is_chordless_cycle(g: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def trichotomy_sweep(pairs) -> SweepResult:
    """Separating dead subset exists iff the living subgraph fails connected-dominating."""
    res = SweepResult("trichotomy")
    masks = {}
    with _timed(res):
        for g, f in pairs:
            res.instances += 1
            mg = masks.get(g)
            if mg is None:
                mg = masks[g] = MaskGraph(g)
            wild = has_separating_dead_subset(g, f, mg)
            if wild == living_connected_dominating(g, f):
                res.fail(_describe(g, f))
            elif wild == classify(f, g).finitely_generated:
                res.fail(("classify", _describe(g, f)))
    return res


@dataclass(frozen=True)
class RankRow:
    graph_id: str
    character: str
    m: int
    rank: int
    kernel_class: str


def rank_identity_sweep(pairs, rows: list | None = None, rng=None) -> tuple:
    """Closed form, leaf-peeling recursion and flattened chordal vGBS agree in rank.

    Returns the identity result and the peel bookkeeping result; when ``rows``
    is a list it receives one :class:`RankRow` per instance.
    """
    ident = SweepResult("rank-identity")
    book = SweepResult("peel-bookkeeping")
    with _timed(ident):
        for graph_id, g, f in pairs:
            ident.instances += 1
            report = rank_formula(g, f)
            recursion = report.decomposition.rank
            dich = chordal_dichotomy(g, f, rng=rng)
            if not isinstance(dich, VGBSDecomposition):
                ident.fail(("not vgbs", _describe(g, f)))
                continue
            gog = dich.graph_of_groups
            if not (gog.is_connected() and gog.is_bipartite()):
                ident.fail(("malformed gog", _describe(g, f)))
            # block graphs split over cut vertices only, so every edge group is trivial
            chordal_rank = free_product_form(gog).rank
            if not (report.rank == recursion == chordal_rank):
                ident.fail((report.rank, recursion, chordal_rank, _describe(g, f)))
            book.instances += 1
            for problem in peel_bookkeeping(g, f):
                book.fail((problem, _describe(g, f)))
            if rows is not None:
                rows.append(RankRow(graph_id, _char_text(g, f), report.m, report.rank, "fg"))
    book.seconds = ident.seconds
    return ident, book


def _char_text(g: Graph, f) -> str:
    return " ".join(str(f[v]) for v in g.vertices)


def peel_bookkeeping(g: Graph, f) -> list:
    """Problems found in the b1 and index bookkeeping of every peel step."""
    problems = []
    for step in split_blocks(g, f).steps:
        gamma = full_subgraph(g, step.gamma)
        rest = full_subgraph(g, step.rest)
        f_gamma, f_rest = f.restrict(step.gamma), f.restrict(step.rest)
        d_gamma = image_on(f, step.gamma)
        i_rest = index_of(d_gamma, image_on(f, step.rest))
        if step.betti + i_rest * m_value(rest, f_rest) != m_value(gamma, f_gamma):
            problems.append(f"b1 at cut vertex {step.cut_vertex}")
        d_rest = image_on(f, step.rest)
        for b in blocks(rest):
            lhs = i_rest * index_of(d_rest, image_on(f, b))
            if lhs != index_of(d_gamma, image_on(f, b)):
                problems.append(f"index product for block {sorted(b)}")
    return problems


def tree_sweep(trees) -> SweepResult:
    """On a tree the all-ones kernel is free on the edges."""
    res = SweepResult("trees")
    with _timed(res):
        for g in trees:
            res.instances += 1
            f = Character({v: 1 for v in g.vertices})
            report = rank_formula(g, f)
            if not (report.rank == report.decomposition.rank == len(g.edges)):
                res.fail(_describe(g))
    return res


def orbit_sweep(instances, length: int = 6) -> SweepResult:
    """Vertex and edge multiplicities of one splitting against word enumeration."""
    res = SweepResult("orbit-count")
    with _timed(res):
        for g, f, split in instances:
            res.instances += 1
            out = decompose_once(g, f, split)
            if not isinstance(out, FiniteSplitting):
                res.fail(("wild", _describe(g, f)))
                continue
            gog = out.graph_of_groups
            weights = [f[v] for v in g.vertices]
            counts = []
            for piece in split.pieces():
                counts.append(orbit_count(weights, [f[v] for v in piece], length))
            sides = (
                sum(1 for v in gog.vertices if v.side == 1),
                sum(1 for v in gog.vertices if v.side == 2),
                len(gog.edges),
            )
            if tuple(counts) != sides or tuple(counts) != out.indices:
                res.fail((counts, sides, _describe(g, f)))
            i1, i2, i3 = out.indices
            if len(gog.edges) - len(gog.vertices) + 1 != i3 - i1 - i2 + 1:
                res.fail(("betti", _describe(g, f)))
            for e in gog.edges:
                if gog.vertex(e.source).side != 1 or gog.vertex(e.target).side != 2:
                    res.fail(("incidence", _describe(g, f)))
    return res


def witness_sweep(graphs) -> tuple:
    """Certificates of returned witnesses; graphs without one are re-checked by oracle.

    Returns (result, counterexamples): the graphs where no character is
    neither wild nor tame, each confirmed by the exhaustive oracle.
    """
    res = SweepResult("witness")
    counterexamples = []
    methods = {"construction": 0, "search": 0}
    with _timed(res):
        for g in graphs:
            res.instances += 1
            try:
                w = nonchordal_witness(g)
            except NoWitnessError:
                if witness_exists_bruteforce(g):
                    res.fail(("missed witness", _describe(g)))
                else:
                    counterexamples.append(g)
                continue
            methods[w.method] += 1
            if not classify(w.character, g).finitely_generated:
                res.fail(("wild", _describe(g, w.character)))
            gamma3 = w.splitting.gamma3
            sub = full_subgraph(g, gamma3)
            f3 = {v: w.character[v] for v in gamma3}
            if not any(f3.values()) or has_separating_dead_subset(g, w.character):
                res.fail(("certificate", _describe(g, w.character)))
            elif _kernel_fg_oracle(sub, f3):
                res.fail(("edge kernel f.g.", _describe(g, w.character)))
    res.notes.update(methods)
    res.notes["certified"] = methods["construction"] + methods["search"]
    res.notes["no_witness"] = len(counterexamples)
    return res, counterexamples


def _kernel_fg_oracle(sub: Graph, weights: dict) -> bool:
    """Brute force on a piece: f.g. iff no separating set (the empty one included) is dead."""
    mg = MaskGraph(sub)
    dead = mg.mask(v for v, x in weights.items() if x == 0)
    s = dead
    while True:
        if s != mg.full and mg.is_separating(s):
            return False
        if s == 0:
            return True
        s = (s - 1) & dead


def minimal_rank_sweep(graphs, bound: int = 3) -> SweepResult:
    """Exhaustive over entries in [-bound, bound]: the minimum and where it is attained."""
    res = SweepResult("minimal-rank")
    characters = 0
    with _timed(res):
        for g in graphs:
            res.instances += 1
            mu, attains = minimal_rank(g)
            cuts = cut_vertices(g)
            ranges = [range(1, bound + 1) if v in cuts else range(0, bound + 1) for v in g.vertices]
            best = None
            for vals in itertools.product(*(_signed(r) for r in ranges)):
                if not any(vals):
                    continue
                f = Character(dict(zip(g.vertices, vals)))
                rank = rank_formula(g, f, with_decomposition=False).rank
                characters += 1
                best = rank if best is None else min(best, rank)
                if (rank == mu) != attains(f):
                    res.fail(("characterization", _describe(g, f)))
                    break
            if best != mu:
                res.fail(("minimum", best, mu, _describe(g)))
    res.notes["characters"] = characters
    return res


def _signed(r):
    out = []
    for x in r:
        out.append(x)
        if x:
            out.append(-x)
    return out


def write_rank_table(rows, fh) -> None:
    """CSV with columns graph_id, character, m, rank, class."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["graph_id", "character", "m", "rank", "class"])
    for r in rows:
        w.writerow([r.graph_id, r.character, r.m, r.rank, r.kernel_class])
