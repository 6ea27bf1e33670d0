"""Finite simplicial graphs and the graph-theoretic procedures built on them.

Vertex sets are ``frozenset`` objects and always stand for the full
(induced) subgraph they span. Every list of vertex sets returned here is in
canonical order: sets are compared by their sorted tuple of names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, InputError

VertexSet = frozenset


def set_key(s) -> tuple:
    return tuple(sorted(s))


def canonical(sets) -> list:
    """Deduplicate and sort a collection of vertex sets."""
    return sorted({frozenset(s) for s in sets}, key=set_key)


class Graph:
    """Immutable finite simplicial graph with string vertex names.

    >>> g = Graph("abc", [("a", "b"), ("b", "c")])
    >>> g.vertices, g.edges
    (('a', 'b', 'c'), (('a', 'b'), ('b', 'c')))
    """

    __slots__ = ("_vertices", "_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable = ()):
        vertices = list(vertices)
        for v in vertices:
            if not isinstance(v, str):
                raise InputError(f"vertex names must be strings, got {v!r}")
        if len(set(vertices)) != len(vertices):
            raise InputError("duplicate vertices")
        adj = {v: set() for v in vertices}
        seen = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"malformed edge {e!r}") from None
            if u not in adj or v not in adj:
                raise InputError(f"edge {u!r}-{v!r} has an endpoint outside the vertex list")
            if u == v:
                raise InputError(f"self-loop at {u!r}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge {key[0]!r}-{key[1]!r}")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(sorted(vertices))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._edges = tuple(sorted(seen))
        self._hash = None

    @classmethod
    def _from_adjacency(cls, adj: dict) -> "Graph":
        g = cls.__new__(cls)
        g._vertices = tuple(sorted(adj))
        g._adj = {v: frozenset(adj[v]) for v in g._vertices}
        g._edges = tuple(sorted((u, v) for u in g._vertices for v in g._adj[u] if u < v))
        g._hash = None
        return g

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    def vertex_set(self) -> frozenset:
        return frozenset(self._vertices)

    def neighbors(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)!r}, edges={[list(e) for e in self._edges]!r})"

    def check_subset(self, s) -> frozenset:
        s = frozenset(s)
        unknown = s - self._adj.keys()
        if unknown:
            raise InputError("unknown vertices: " + ", ".join(sorted(unknown)))
        return s

    # serialization

    def to_dict(self) -> dict:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self._edges]}

    @classmethod
    def from_dict(cls, data) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise InputError('graph JSON must be an object with a "vertices" list')
        return cls(data["vertices"], data.get("edges", []))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed graph JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {_dot_id(name)} {{"]
        lines += [f"  {_dot_id(v)};" for v in self._vertices]
        lines += [f"  {_dot_id(u)} -- {_dot_id(v)};" for u, v in self._edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


# subgraphs and connectivity


def full_subgraph(g: Graph, s) -> Graph:
    """Induced subgraph of ``g`` on the vertex set ``s``."""
    s = g.check_subset(s)
    return Graph._from_adjacency({v: g.neighbors(v) & s for v in s})


def complement_subgraph(g: Graph, s) -> Graph:
    s = g.check_subset(s)
    return full_subgraph(g, g.vertex_set() - s)


def components_within(g: Graph, within) -> list:
    """Connected components of the full subgraph on ``within``, no validation."""
    remaining = set(within)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        remaining.discard(start)
        while stack:
            for w in g.neighbors(stack.pop()):
                if w in remaining:
                    remaining.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return sorted(comps, key=set_key)


def connected_components(g: Graph) -> list:
    return components_within(g, g.vertices)


@lru_cache(maxsize=4096)
def is_connected(g: Graph) -> bool:
    """True for a graph with exactly one component; the empty graph is not connected."""
    return len(g) > 0 and len(components_within(g, g.vertices)) == 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected and nonempty")


def is_clique(g: Graph, s) -> bool:
    s = list(s)
    for i, u in enumerate(s):
        nbrs = g.neighbors(u)
        for v in s[i + 1:]:
            if v not in nbrs:
                return False
    return True


def is_complete(g: Graph) -> bool:
    n = len(g)
    return all(len(g.neighbors(v)) == n - 1 for v in g)


def neighborhood(g: Graph, s) -> frozenset:
    """Open neighbourhood of a vertex set: vertices outside ``s`` adjacent to it."""
    out = set()
    for v in s:
        out |= g.neighbors(v)
    return frozenset(out.difference(s))


def is_separating(g: Graph, s) -> bool:
    """Whether removing ``s`` disconnects the connected graph ``g``."""
    require_connected(g)
    s = g.check_subset(s)
    if len(g) < 2:
        raise InputError("separation is undefined on graphs with fewer than two vertices")
    if s == g.vertex_set():
        raise InputError("a separating set must be a proper subset")
    return len(components_within(g, g.vertex_set() - s)) > 1


# articulation points and blocks


@lru_cache(maxsize=4096)
def biconnected_structure(g: Graph):
    """Hopcroft-Tarjan on an iterative DFS; returns (cut vertices, blocks)."""
    disc = {}
    low = {}
    cuts = set()
    blocks = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not g.neighbors(root):
            blocks.append(frozenset([root]))
            continue
        root_children = 0
        edge_stack = []
        stack = [(root, None, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                block = set()
                while True:
                    e = edge_stack.pop()
                    block.update(e)
                    if e == (parent, v):
                        break
                blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    return frozenset(cuts), tuple(sorted(blocks, key=set_key))


def cut_vertices(g: Graph) -> frozenset:
    require_connected(g)
    return biconnected_structure(g)[0]


def blocks(g: Graph) -> list:
    """Maximal biconnected full subgraphs (biconnected components)."""
    require_connected(g)
    return list(biconnected_structure(g)[1])


def block_degree(g: Graph, v: str) -> int:
    require_connected(g)
    g.neighbors(v)
    return sum(1 for b in biconnected_structure(g)[1] if v in b)


def is_block_graph(g: Graph) -> bool:
    require_connected(g)
    return _all_blocks_complete(g)


@lru_cache(maxsize=4096)
def _all_blocks_complete(g: Graph) -> bool:
    return all(is_clique(g, b) for b in biconnected_structure(g)[1])


# chordality


@dataclass(frozen=True)
class Chordality:
    """Outcome of a chordality test.

    ``ordering`` is a perfect elimination ordering when the graph is chordal;
    ``cycle`` is a chordless cycle of length at least four otherwise.
    """

    chordal: bool
    ordering: tuple | None = None
    cycle: tuple | None = None

    def __bool__(self) -> bool:
        return self.chordal


def maximum_cardinality_search(g: Graph) -> list:
    """Visit order of MCS; ties go to the smallest name. Its reverse is a PEO iff chordal."""
    weight = {v: 0 for v in g}
    unvisited = set(g.vertices)
    order = []
    while unvisited:
        v = min(unvisited, key=lambda x: (-weight[x], x))
        unvisited.discard(v)
        order.append(v)
        for w in g.neighbors(v):
            if w in unvisited:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, ordering) -> bool:
    position = {v: i for i, v in enumerate(ordering)}
    if len(position) != len(g) or set(position) != g.vertex_set():
        return False
    for v in ordering:
        later = [w for w in g.neighbors(v) if position[w] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        pn = g.neighbors(parent)
        if any(w != parent and w not in pn for w in later):
            return False
    return True


def find_chordless_cycle(g: Graph):
    """A chordless cycle of length >= 4, or None if ``g`` is chordal.

    For a vertex v with nonadjacent neighbours u, w, a shortest u-w path
    avoiding the rest of N[v] closes up with v into a chordless cycle.
    """
    for v in g.vertices:
        nbrs = sorted(g.neighbors(v))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if g.has_edge(u, w):
                    continue
                blocked = (g.neighbors(v) | {v}) - {u, w}
                path = _shortest_path(g, u, w, blocked)
                if path is not None:
                    return (v,) + tuple(path)
    return None


def _shortest_path(g: Graph, source: str, target: str, blocked):
    prev = {source: None}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in sorted(g.neighbors(x)):
                if y in prev or y in blocked:
                    continue
                prev[y] = x
                if y == target:
                    path = [y]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                nxt.append(y)
        frontier = nxt
    return None


def is_chordal(g: Graph) -> Chordality:
    peo = maximum_cardinality_search(g)[::-1]
    if is_perfect_elimination_ordering(g, peo):
        return Chordality(True, ordering=tuple(peo))
    cycle = find_chordless_cycle(g)
    if cycle is None:
        raise AssertionError("MCS rejected a graph with no chordless cycle")
    return Chordality(False, cycle=cycle)


# separators and cliques


def minimal_vertex_separators(g: Graph) -> list:
    """All minimal vertex separators, by close-neighbourhood generation.

    Seeds are N(C) for components C of G - N[v]; each separator S then
    spawns N(C) for the components C of G - (S u N(x)), x in S. Every
    minimal separator is reached (Berry, Bordat and Cogis).
    """
    require_connected(g)
    everything = g.vertex_set()

    def close(removed):
        out = []
        for comp in components_within(g, everything - removed):
            sep = neighborhood(g, comp)
            if sep:
                out.append(sep)
        return out

    found = set()
    queue = []
    for v in g.vertices:
        for sep in close(g.neighbors(v) | {v}):
            if sep not in found:
                found.add(sep)
                queue.append(sep)
    while queue:
        sep = queue.pop()
        for x in sep:
            for new in close(sep | g.neighbors(x)):
                if new not in found:
                    found.add(new)
                    queue.append(new)
    return canonical(found)


def full_components(g: Graph, sep) -> list:
    """Components of G - sep whose neighbourhood is all of ``sep``."""
    sep = frozenset(sep)
    return [c for c in components_within(g, g.vertex_set() - sep) if neighborhood(g, c) == sep]


def maximal_cliques(g: Graph) -> list:
    """Bron-Kerbosch with Tomita pivoting."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & g.neighbors(u)), u))
        for v in sorted(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            expand(r | {v}, p & nv, x & nv)
            p = p - {v}
            x = x | {v}

    if len(g):
        expand(frozenset(), frozenset(g.vertices), frozenset())
    return sorted(out, key=set_key)


@dataclass(frozen=True)
class AbelianSplitting:
    """Whether the RAAG splits over an abelian subgroup, and which clause fired."""

    splits: bool
    reason: str | None = None
    clique: frozenset | None = None

    def __bool__(self) -> bool:
        return self.splits


def splits_over_abelian(g: Graph) -> AbelianSplitting:
    if len(g) == 0:
        return AbelianSplitting(False)
    if not is_connected(g):
        return AbelianSplitting(True, "disconnected")
    if is_complete(g):
        return AbelianSplitting(True, "complete")
    # any separating clique contains a minimal separator, itself a clique
    for sep in minimal_vertex_separators(g):
        if is_clique(g, sep):
            return AbelianSplitting(True, "separating-clique", sep)
    return AbelianSplitting(False)
