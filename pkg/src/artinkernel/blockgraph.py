"""Rank computations for Artin kernels over block graphs.

Notation: for a vertex set S, d_S generates f(A_S) = d_S Z. For a connected
graph G with f nonzero on its cut vertices,

    m(G, f) = 1 - sum_B d_B/d_G + sum_v (bldeg(v) - 1) |f(v)| / d_G

and ker(f) = F_m * (free product over blocks B of d_B/d_G copies of ker f_B).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Callable, NamedTuple

from .character import Character, classify, image_on
from .errors import InputError, InvariantError, NotBlockGraphError, WildInputError
from .graph import (
    Graph,
    biconnected_structure,
    full_subgraph,
    is_block_graph,
    require_connected,
    set_key,
)
from .groups import Free, FreeAbelian, UnresolvedKernel, free_product
from .splitting import FiniteSplitting, SplittingTriple, decompose_once


def _structure(g: Graph):
    require_connected(g)
    return biconnected_structure(g)


@lru_cache(maxsize=4096)
def _block_degrees(g: Graph) -> tuple:
    """((cut vertex, block degree), ...) for a connected graph."""
    cuts, blks = biconnected_structure(g)
    return tuple((v, sum(1 for b in blks if v in b)) for v in sorted(cuts))


def _check_cut_values(g: Graph, f, cuts) -> None:
    dead = [v for v in cuts if f[v] == 0]
    if dead:
        raise WildInputError(dead)


def m_value(g: Graph, f: Character) -> int:
    """Free-rank term m(G, f) of the block decomposition."""
    f.check_graph(g)
    cuts, blks = _structure(g)
    _check_cut_values(g, f, cuts)
    return _m_value(g, f, cuts, blks)


def _m_value(g, f, cuts, blks, d=None, block_images=None) -> int:
    d = image_on(f, g.vertices) if d is None else d
    if block_images is None:
        block_images = [image_on(f, b) for b in blks]
    total = 1 - sum(x // d for x in block_images)
    for v, deg in _block_degrees(g):
        total += (deg - 1) * abs(f[v]) // d
    return total


@dataclass(frozen=True)
class PeelStep:
    """One leaf-block peel: split ``gamma`` as (rest, leaf_block, {cut_vertex})."""

    gamma: frozenset
    rest: frozenset
    leaf_block: frozenset
    cut_vertex: str
    betti: int
    index_rest: int  # I_{gamma, rest}
    index_leaf: int  # I_{gamma, leaf_block}
    edge_count: int  # I_{gamma, cut_vertex}

    def to_dict(self) -> dict:
        return {
            "gamma": sorted(self.gamma),
            "rest": sorted(self.rest),
            "leaf_block": sorted(self.leaf_block),
            "cut_vertex": self.cut_vertex,
            "betti": self.betti,
            "index_rest": self.index_rest,
            "index_leaf": self.index_leaf,
            "edges": self.edge_count,
        }


@dataclass(frozen=True)
class BlockSplitting:
    descriptor: object
    free_rank: int
    block_copies: tuple  # ((block, copies), ...) in canonical block order
    steps: tuple = field(default=())

    def resolved(self, g: Graph):
        """Descriptor with each clique block kernel replaced by Z^(|B|-1)."""
        factors = [Free(self.free_rank)]
        for b, copies in self.block_copies:
            if not is_clique_block(g, b):
                raise NotBlockGraphError("block " + ",".join(sorted(b)) + " is not complete")
            factors += [FreeAbelian(len(b) - 1)] * copies
        return free_product(*factors)


def is_clique_block(g: Graph, b) -> bool:
    n = len(b)
    return all(len(g.neighbors(v) & b) == n - 1 for v in b)


def split_blocks(g: Graph, f: Character) -> BlockSplitting:
    """Decompose ker(f) by repeatedly peeling a leaf block at its cut vertex.

    Each peel applies decompose_once to (rest, leaf, {cut vertex}); the
    graph of groups has trivial edge groups, so its Betti number feeds the
    free factor and the rest is decomposed recursively.
    """
    f.check_graph(g)
    cuts, _ = _structure(g)
    _check_cut_values(g, f, cuts)
    free_rank, copies, steps = _peel(g, f)
    block_copies = tuple(sorted(copies.items(), key=lambda kv: set_key(kv[0])))
    factors = [Free(free_rank)]
    for b, k in block_copies:
        factors += [UnresolvedKernel(b, f.restrict(b))] * k
    return BlockSplitting(free_product(*factors), free_rank, block_copies, tuple(steps))


def _peel(g: Graph, f):
    cuts, blks = biconnected_structure(g)
    if len(blks) == 1:
        return 0, {blks[0]: 1}, []
    leaf = min((b for b in blks if len(b & cuts) == 1), key=set_key)
    (v0,) = leaf & cuts
    rest = g.vertex_set() - (leaf - {v0})
    report = decompose_once(g, f, SplittingTriple(rest, leaf, frozenset([v0])))
    if not isinstance(report, FiniteSplitting):
        raise InvariantError("peel along a live cut vertex produced a wild splitting")
    gog = report.graph_of_groups
    n_rest = sum(1 for v in gog.vertices if v.side == 1)
    n_leaf = sum(1 for v in gog.vertices if v.side == 2)
    betti = len(gog.edges) - len(gog.vertices) + 1
    sub = full_subgraph(g, rest)
    sub_rank, sub_copies, sub_steps = _peel(sub, f.restrict(rest))
    copies = {b: n_rest * k for b, k in sub_copies.items()}
    copies[leaf] = copies.get(leaf, 0) + n_leaf
    step = PeelStep(g.vertex_set(), rest, leaf, v0, betti, n_rest, n_leaf, len(gog.edges))
    return betti + n_rest * sub_rank, copies, [step] + sub_steps


@dataclass(frozen=True)
class RankReport:
    m: int
    block_terms: tuple  # ((block, I_{G,B}, |B|), ...)
    rank: int
    decomposition: object

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "rank": self.rank,
            "block_terms": [
                {"block": sorted(b), "index": i, "size": n} for b, i, n in self.block_terms
            ],
            "decomposition": None if self.decomposition is None else self.decomposition.to_dict(),
        }


def rank_formula(g: Graph, f: Character, with_decomposition: bool = True) -> RankReport:
    """Closed-form rank of ker(f) on a connected block graph."""
    f.check_graph(g)
    cuts, blks = _structure(g)
    if not is_block_graph(g):
        raise NotBlockGraphError("rank formula needs a block graph")
    _check_cut_values(g, f, cuts)
    d = image_on(f, g.vertices)
    images = [image_on(f, b) for b in blks]
    terms = tuple((b, x // d, len(b)) for b, x in zip(blks, images))
    rank = 1 + sum(i * (n - 2) for _, i, n in terms)
    for v, deg in _block_degrees(g):
        rank += (deg - 1) * abs(f[v]) // d
    m = _m_value(g, f, cuts, blks, d, images)
    if m < 0:
        raise InvariantError(f"negative free rank m = {m}")
    if rank != m + sum(i * (n - 1) for _, i, n in terms):
        raise InvariantError("rank formula disagrees with m + block contributions")
    decomposition = split_blocks(g, f).resolved(g) if with_decomposition else None
    return RankReport(m, terms, rank, decomposition)


class MinimalRank(NamedTuple):
    mu: int
    attains: Callable  # f -> bool


def minimal_rank(g: Graph) -> MinimalRank:
    """Least kernel rank over all tame characters, and the test for attaining it.

    The rank is minimal exactly when |f(v)| = I_G on every cut vertex.
    """
    cuts, blks = _structure(g)
    if not is_block_graph(g):
        raise NotBlockGraphError("minimal rank needs a block graph")
    mu = 1 + sum(len(b) - 2 for b in blks)
    mu += sum(sum(1 for b in blks if v in b) - 1 for v in cuts)

    def attains(f) -> bool:
        d = image_on(f, g.vertices)
        return d != 0 and all(abs(f[v]) == d for v in cuts)

    return MinimalRank(mu, attains)


def _require_family_graph(g: Graph):
    cuts, blks = _structure(g)
    if not is_block_graph(g):
        raise NotBlockGraphError("character families need a block graph")
    if not cuts:
        raise InputError("graph has no cut vertex")
    return cuts, blks


def unbounded_family(g: Graph, n: int) -> Character:
    """Cut vertices to n, every other vertex to 1; the kernel rank grows linearly in n."""
    if not isinstance(n, int) or n < 1:
        raise InputError("n must be a positive integer")
    cuts, _ = _require_family_graph(g)
    return Character({v: n if v in cuts else 1 for v in g.vertices})


@dataclass(frozen=True)
class BoundedDivergence:
    characters: tuple
    ranks: tuple
    expected_rank: int
    limit: Character
    limit_class: str
    rays: tuple  # f_n / p_n as exact fractions, vertex order
    distances: tuple  # max entrywise distance from each ray to the limit

    def to_dict(self) -> dict:
        return {
            "characters": [dict(c) for c in self.characters],
            "ranks": list(self.ranks),
            "expected_rank": self.expected_rank,
            "limit": dict(self.limit),
            "limit_class": self.limit_class,
            "rays": [[str(x) for x in r] for r in self.rays],
            "distances": [str(x) for x in self.distances],
        }


def bounded_divergence_family(g: Graph, q: int, ps) -> BoundedDivergence:
    """Tame characters of constant kernel rank converging to a wild one.

    f_n sends cut vertices to q and all other vertices to p_n; rescaled by
    1/p_n they converge to the character killing exactly the cut vertices.
    """
    cuts, blks = _require_family_graph(g)
    if any(not (b - cuts) for b in blks):
        raise InputError("every block must contain a vertex that is not a cut vertex")
    if not isinstance(q, int) or q == 0:
        raise InputError("q must be a nonzero integer")
    ps = list(ps)
    if not ps:
        raise InputError("need at least one p")
    for p in ps:
        if not isinstance(p, int) or p == 0 or math.gcd(p, q) != 1:
            raise InputError(f"p = {p!r} must be a nonzero integer coprime to q = {q}")
    expected = 1 + sum(len(b) - 2 for b in blks)
    expected += abs(q) * sum(sum(1 for b in blks if v in b) - 1 for v in cuts)
    chars, ranks, rays, dists = [], [], [], []
    limit = Character({v: 0 if v in cuts else 1 for v in g.vertices})
    for p in ps:
        raw = {v: q if v in cuts else p for v in g.vertices}
        f = Character(raw)
        chars.append(f)
        ranks.append(rank_formula(g, f, with_decomposition=False).rank)
        ray = tuple(Fraction(raw[v], p) for v in g.vertices)
        rays.append(ray)
        dists.append(max(abs(x - limit[v]) for x, v in zip(ray, g.vertices)))
    if any(r != expected for r in ranks):
        raise InvariantError("kernel rank is not constant along the family")
    limit_class = classify(limit, g)
    if limit_class.finitely_generated:
        raise InvariantError("limit character has a finitely generated kernel")
    return BoundedDivergence(
        tuple(chars), tuple(ranks), expected, limit, limit_class.kernel_class.value,
        tuple(rays), tuple(dists),
    )
