"""Tame/wild dichotomy on chordal graphs and the resulting vGBS graph of groups.

A tame kernel is split along minimal separators (cliques, by Dirac) until
every piece is a maximal clique. The nested decomposition is then flattened
into one graph of groups: a vertex for each (maximal clique C, residue mod
I_C) and an edge for each (separator use S, residue mod I_S). An edge with
residue j attaches, on each side, to the leaf clique hosting S with residue
j reduced mod that clique's index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .character import Character, classify, image_on, index_of
from .errors import InvariantError, NotChordalError
from .graph import (
    Graph,
    full_components,
    full_subgraph,
    is_chordal,
    is_clique,
    minimal_vertex_separators,
    require_connected,
    set_key,
)
from .groups import (
    FreeAbelian,
    GoGEdge,
    GoGVertex,
    GraphOfGroups,
    sort_key_vertex,
    two_colour,
)
from .splitting import SplittingTriple, decompose_once, splitting_along


@dataclass(frozen=True)
class DecompositionNode:
    """A piece of the graph, either a clique leaf or split along ``separator``."""

    vertices: frozenset
    separator: frozenset | None = None
    left: "DecompositionNode | None" = None
    right: "DecompositionNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.separator is None

    def leaves(self):
        if self.is_leaf:
            yield self
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def internal_nodes(self):
        if not self.is_leaf:
            yield self
            yield from self.left.internal_nodes()
            yield from self.right.internal_nodes()

    def host(self, s) -> "DecompositionNode":
        """Leaf containing the clique ``s``; left side wins when both qualify."""
        node = self
        while not node.is_leaf:
            node = node.left if s <= node.left.vertices else node.right
        if not s <= node.vertices:
            raise InvariantError("separator is not contained in any leaf clique")
        return node


@dataclass(frozen=True)
class VGBSDecomposition:
    graph_of_groups: GraphOfGroups
    tree: DecompositionNode
    trace: tuple  # SplittingTriple per separator use, in pre-order

    kind = "vgbs"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "graph_of_groups": self.graph_of_groups.to_dict(),
            "trace": [s.to_dict() for s in self.trace],
        }


def decomposition_tree(g: Graph, f: Character, vertices=None, rng=None) -> DecompositionNode:
    """Recursively split along minimal clique separators down to maximal cliques.

    Side one is the separator plus a full component (one whose neighbourhood
    is the whole separator). Without ``rng`` the lexicographically smallest
    separator and full component are used; with ``rng`` both are random.
    """
    vertices = g.vertex_set() if vertices is None else frozenset(vertices)
    if is_clique(g, vertices):
        if f.vanishes_on(vertices):
            raise InvariantError("character vanishes on a leaf clique")
        return DecompositionNode(vertices)
    sub = full_subgraph(g, vertices)
    seps = minimal_vertex_separators(sub)
    sep = seps[0] if rng is None else rng.choice(seps)
    if not is_clique(g, sep):
        raise InvariantError("minimal separator of a chordal graph is not a clique")
    if f.vanishes_on(sep):
        raise InvariantError("f.g. kernel but f vanishes on a separator")
    # a full component keeps S inside a larger clique on both sides, so every
    # leaf of the recursion is a maximal clique of g
    comps = full_components(sub, sep)
    chosen = comps[0] if rng is None else rng.choice(comps)
    gamma1 = sep | chosen
    gamma2 = vertices - chosen
    return DecompositionNode(
        vertices,
        sep,
        decomposition_tree(g, f, gamma1, rng),
        decomposition_tree(g, f, gamma2, rng),
    )


def flatten(tree: DecompositionNode, g: Graph, f: Character) -> GraphOfGroups:
    """Splice every nested splitting into a single graph of groups."""
    d = image_on(f, tree.vertices)

    def idx(s):
        i = index_of(d, image_on(f, s))
        if not isinstance(i, int):
            raise InvariantError("unresolved leaf: character vanishes on a piece")
        return i

    def vid(clique, j):
        return ",".join(sorted(clique)) + f"#{j}"

    vertices = []
    for leaf in tree.leaves():
        c = leaf.vertices
        for j in range(idx(c)):
            vertices.append((c, j))
    edges = []
    for node in tree.internal_nodes():
        s = node.separator
        left = node.left.host(s).vertices
        right = node.right.host(s).vertices
        i_left, i_right = idx(left), idx(right)
        for j in range(idx(s)):
            edges.append((s, j, vid(left, j % i_left), vid(right, j % i_right)))
    colour = two_colour([vid(c, j) for c, j in vertices], [(a, b) for _, _, a, b in edges])
    gog_vertices = sorted(
        (GoGVertex(vid(c, j), FreeAbelian(len(c) - 1), colour[vid(c, j)], c, j) for c, j in vertices),
        key=sort_key_vertex,
    )
    gog_edges = []
    for s, j, a, b in edges:
        a, b = min(a, b), max(a, b)
        gog_edges.append(GoGEdge("", FreeAbelian(len(s) - 1), a, b, s, j))
    gog_edges.sort(key=lambda e: (e.group.rank, e.source, e.target, set_key(e.subgraph), e.residue))
    gog_edges = [
        GoGEdge(f"{','.join(sorted(e.subgraph))}#{e.residue}@{k}", e.group, e.source, e.target, e.subgraph, e.residue)
        for k, e in enumerate(gog_edges)
    ]
    return GraphOfGroups(tuple(gog_vertices), tuple(gog_edges))


def trace_of(tree: DecompositionNode) -> tuple:
    return tuple(
        SplittingTriple(node.left.vertices, node.right.vertices, node.separator)
        for node in tree.internal_nodes()
    )


def chordal_dichotomy(g: Graph, f: Character, rng: random.Random | None = None):
    """WildSurjection, or the vGBS decomposition of a tame kernel on a chordal graph."""
    require_connected(g)
    f.check_graph(g)
    chordality = is_chordal(g)
    if not chordality:
        raise NotChordalError(chordality.cycle)
    cls = classify(f, g)
    if not cls.finitely_generated:
        return decompose_once(g, f, splitting_along(g, cls.witness))
    tree = decomposition_tree(g, f, rng=rng)
    return VGBSDecomposition(flatten(tree, g, f), tree, trace_of(tree))
