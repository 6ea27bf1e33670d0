"""Brute-force oracles, independent of the algorithms they check.

Vertex sets are handled as bitmasks over ``g.vertices``; everything here is
exponential in the number of vertices and meant for graphs of at most about
twelve vertices.
"""

from __future__ import annotations

import math
from itertools import combinations

from .graph import Graph

MAX_ORACLE_VERTICES = 12


class MaskGraph:
    """Bitmask view of a graph with a per-subset component cache."""

    def __init__(self, g: Graph):
        if len(g) > MAX_ORACLE_VERTICES:
            raise ValueError(f"oracles are limited to {MAX_ORACLE_VERTICES} vertices")
        self.graph = g
        self.names = g.vertices
        self.n = len(self.names)
        self.full = (1 << self.n) - 1
        pos = {v: i for i, v in enumerate(self.names)}
        self.pos = pos
        self.adj = [0] * self.n
        for u, v in g.edges:
            self.adj[pos[u]] |= 1 << pos[v]
            self.adj[pos[v]] |= 1 << pos[u]
        self._components = {}

    def mask(self, s) -> int:
        m = 0
        for v in s:
            m |= 1 << self.pos[v]
        return m

    def names_of(self, m: int) -> frozenset:
        return frozenset(self.names[i] for i in range(self.n) if m >> i & 1)

    def components(self, within: int) -> tuple:
        """Component masks of the induced subgraph on ``within``."""
        cached = self._components.get(within)
        if cached is not None:
            return cached
        comps = []
        rest = within
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = self.adj[b.bit_length() - 1] & within & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        out = tuple(comps)
        self._components[within] = out
        return out

    def is_separating(self, s: int) -> bool:
        return len(self.components(self.full & ~s)) > 1

    def neighbours(self, s: int) -> int:
        out = 0
        rest = s
        while rest:
            b = rest & -rest
            rest ^= b
            out |= self.adj[b.bit_length() - 1]
        return out & ~s

    def is_clique(self, s: int) -> bool:
        rest = s
        while rest:
            b = rest & -rest
            rest ^= b
            if (s & ~b) & ~self.adj[b.bit_length() - 1]:
                return False
        return True


def all_subsets(n: int):
    return range(1 << n)


def separating_sets(g: Graph) -> list:
    """Every vertex set whose complement is disconnected."""
    mg = MaskGraph(g)
    return [mg.names_of(s) for s in all_subsets(mg.n) if s != mg.full and mg.is_separating(s)]


def minimal_separators_bruteforce(g: Graph) -> list:
    """Minimal ab-separators over all pairs, straight from the definition.

    S separates a from b when they lie in different components of G - S. It
    is minimal for (a, b) when no S - {x} still separates them; a and b are
    joined in G - (S - {x}) exactly when their components of G - S end up
    in the same component once x is put back.
    """
    mg = MaskGraph(g)
    found = set()
    for s in all_subsets(mg.n):
        if s == mg.full:
            continue
        comps = mg.components(mg.full & ~s)
        if len(comps) < 2:
            continue
        xs = [1 << i for i in range(mg.n) if s >> i & 1]
        regrown = [mg.components(mg.full & ~(s & ~x)) for x in xs]
        for ca, cb in combinations(comps, 2):
            minimal = True
            for comps_x in regrown:
                joined = any(c & ca and c & cb for c in comps_x)
                if not joined:
                    minimal = False
                    break
            if minimal:
                found.add(s)
                break
    return sorted((mg.names_of(s) for s in found), key=lambda x: tuple(sorted(x)))


def maximal_cliques_bruteforce(g: Graph) -> list:
    mg = MaskGraph(g)
    cliques = [s for s in all_subsets(mg.n) if s and mg.is_clique(s)]
    maximal = [s for s in cliques if not any(t != s and t & s == s for t in cliques)]
    return sorted((mg.names_of(s) for s in maximal), key=lambda x: tuple(sorted(x)))


def cut_vertices_bruteforce(g: Graph) -> frozenset:
    mg = MaskGraph(g)
    return frozenset(mg.names[i] for i in range(mg.n) if mg.n > 1 and mg.is_separating(1 << i))


def has_separating_dead_subset(g: Graph, f, mg: MaskGraph | None = None) -> bool:
    """Whether some separating vertex set lies inside the dead subgraph of ``f``."""
    mg = mg or MaskGraph(g)
    dead = mg.mask(v for v in g.vertices if f[v] == 0)
    sub = dead
    while sub:
        if mg.is_separating(sub):
            return True
        sub = (sub - 1) & dead
    return False


def is_chordal_bruteforce(g: Graph) -> bool:
    """Dirac: chordal iff every minimal vertex separator is a clique."""
    return all(_clique(g, s) for s in minimal_separators_bruteforce(g))


def _clique(g: Graph, s) -> bool:
    s = list(s)
    return all(g.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1:])


def reachable_residues(weights, modulus: int, length: int = 6) -> set:
    """Classes mod ``modulus`` of f(w) over all words w of length <= ``length``.

    f is a homomorphism, so f(w) only depends on the letters used; the search
    walks word length one letter (a generator or its inverse) at a time.
    """
    letters = set()
    for w in weights:
        letters.add(w % modulus)
        letters.add(-w % modulus)
    reached = {0}
    frontier = {0}
    for _ in range(length):
        frontier = {(r + a) % modulus for r in frontier for a in letters} - reached
        reached |= frontier
        if not frontier:
            break
    return reached


def orbit_count(weights_all, weights_piece, length: int = 6) -> int:
    """Number of ker(f)-orbits of cosets of a piece, by word enumeration.

    Cosets gA_k up to ker(f) are determined by f(g) modulo f(A_k); count the
    classes reached inside f(A) by words of bounded length.
    """
    d_piece = 0
    for w in weights_piece:
        d_piece = math.gcd(d_piece, w)
    if d_piece == 0:
        raise ValueError("character vanishes on the piece")
    return len(reachable_residues(weights_all, d_piece, length))


def witness_exists_bruteforce(g: Graph) -> bool:
    """Whether some character has f.g. kernel and a splitting with non-f.g. edge kernel.

    Only the dead set matters for finite generation, so the search runs over
    dead sets D with no separating subset and over separating sets S meeting
    the living part, asking for a set inside D ∩ S that separates S (the
    empty set counts when S is disconnected).
    """
    mg = MaskGraph(g)
    separating = [s for s in all_subsets(mg.n) if s != mg.full and mg.is_separating(s)]
    for dead in all_subsets(mg.n):
        if dead == mg.full or any(s & dead == s for s in separating):
            continue
        for s in separating:
            if s & ~dead == 0:
                continue
            t = dead & s
            while True:
                rest = s & ~t
                if len(mg.components(rest)) > 1:
                    return True
                if t == 0:
                    break
                t = (t - 1) & dead & s
    return False
