"""Small named and random graphs for tests, sweeps and the CLI self-test."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_connected


def names(n: int) -> list:
    width = len(str(max(n - 1, 0)))
    return [f"v{i:0{width}d}" for i in range(n)]


def path_graph(vs) -> Graph:
    vs = list(vs)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(vs) -> Graph:
    vs = list(vs)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete_graph(vs) -> Graph:
    vs = list(vs)
    return Graph(vs, combinations(vs, 2))


def star_graph(center: str, leaves) -> Graph:
    leaves = list(leaves)
    return Graph([center] + leaves, [(center, x) for x in leaves])


def cone(g: Graph, apex: str) -> Graph:
    return Graph(list(g.vertices) + [apex], list(g.edges) + [(apex, v) for v in g.vertices])


def suspension(g: Graph, north: str = "n", south: str = "s") -> Graph:
    edges = list(g.edges) + [(p, v) for p in (north, south) for v in g.vertices]
    return Graph(list(g.vertices) + [north, south], edges)


def from_edge_list(n: int, edges) -> Graph:
    """Graph on ``names(n)`` from integer edges."""
    vs = names(n)
    return Graph(vs, [(vs[i], vs[j]) for i, j in edges])


def random_tree(n: int, rng: random.Random) -> Graph:
    vs = names(n)
    return Graph(vs, [(vs[i], vs[rng.randrange(i)]) for i in range(1, n)])


def random_block_graph(n: int, rng: random.Random, max_block: int = 4) -> Graph:
    """Glue cliques of random size at random existing vertices until ``n`` vertices."""
    vs = names(n)
    first = min(n, rng.randint(1, max_block))
    edges = list(combinations(range(first), 2))
    used = first
    while used < n:
        size = min(n - used, rng.randint(1, max_block - 1))
        anchor = rng.randrange(used)
        members = [anchor] + list(range(used, used + size))
        edges += list(combinations(members, 2))
        used += size
    return Graph(vs, [(vs[i], vs[j]) for i, j in edges])


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Erdos-Renyi graph conditioned on being connected (rejection sampling)."""
    vs = names(n)
    pairs = list(combinations(range(n), 2))
    while True:
        prob = rng.uniform(0.2, 0.8) if p is None else p
        edges = [(vs[i], vs[j]) for i, j in pairs if rng.random() < prob]
        g = Graph(vs, edges)
        if is_connected(g):
            return g


def all_graphs(n: int):
    """Every labelled graph on ``names(n)``; 2^(n(n-1)/2) of them."""
    vs = names(n)
    pairs = list(combinations(vs, 2))
    for bits in range(1 << len(pairs)):
        yield Graph(vs, [e for k, e in enumerate(pairs) if bits >> k & 1])


def random_character(g: Graph, rng: random.Random, bound: int = 3, nonzero=()):
    """Integer weights in [-bound, bound], nonzero on ``nonzero`` and not all zero."""
    from .character import Character

    nonzero = frozenset(nonzero)
    choices = [x for x in range(-bound, bound + 1) if x]
    while True:
        raw = {
            v: rng.choice(choices) if v in nonzero else rng.randint(-bound, bound)
            for v in g.vertices
        }
        if any(raw.values()):
            return Character(raw)


def random_splitting(g: Graph, rng: random.Random):
    """Split along a random separating set, grouping its complement's components randomly."""
    from .graph import components_within
    from .splitting import SplittingTriple

    vs = list(g.vertices)
    while True:
        s = frozenset(v for v in vs if rng.random() < 0.4)
        if len(s) == len(vs):
            continue
        comps = components_within(g, g.vertex_set() - s)
        if len(comps) < 2:
            continue
        rng.shuffle(comps)
        k = rng.randint(1, len(comps) - 1)
        left = frozenset().union(*comps[:k])
        return SplittingTriple(s | left, g.vertex_set() - left, s)


def random_chordal_graph(n: int, rng: random.Random) -> Graph:
    """Connected chordal graph: each new vertex joins a nonempty clique of its predecessors."""
    vs = names(n)
    adj = {0: set()}
    edges = []
    for i in range(1, n):
        clique = [rng.randrange(i)]
        for j in rng.sample(range(i), i):
            if j not in clique and all(j in adj[c] for c in clique) and rng.random() < 0.6:
                clique.append(j)
        adj[i] = set(clique)
        for c in clique:
            adj[c].add(i)
            edges.append((vs[c], vs[i]))
    return Graph(vs, edges)
