"""Group descriptors and finite graphs of groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .character import INFINITE, Character
from .errors import NotApplicableError
from .graph import set_key


@dataclass(frozen=True)
class FreeAbelian:
    rank: int

    @property
    def trivial(self) -> bool:
        return self.rank == 0

    def label(self) -> str:
        return "1" if self.rank == 0 else ("Z" if self.rank == 1 else f"Z^{self.rank}")

    def to_dict(self) -> dict:
        return {"type": "FreeAbelian", "rank": self.rank}


@dataclass(frozen=True)
class Free:
    rank: object  # int or INFINITE

    @property
    def trivial(self) -> bool:
        return self.rank == 0

    def label(self) -> str:
        return f"F_{self.rank}"

    def to_dict(self) -> dict:
        return {"type": "Free", "rank": "inf" if self.rank is INFINITE else self.rank}


@dataclass(frozen=True)
class FreeProduct:
    factors: tuple

    @property
    def trivial(self) -> bool:
        return all(f.trivial for f in self.factors)

    @property
    def rank(self):
        total = 0
        for f in self.factors:
            r = f.rank
            if r is None or r is INFINITE:
                return r
            total += r
        return total

    def label(self) -> str:
        return " * ".join(f.label() for f in self.factors)

    def to_dict(self) -> dict:
        return {"type": "FreeProduct", "factors": [f.to_dict() for f in self.factors]}


@dataclass(frozen=True)
class UnresolvedKernel:
    """ker of a nonzero character on a subgraph, finitely generated but not yet decomposed."""

    subgraph: frozenset
    character: Character

    trivial = False
    rank = None

    def label(self) -> str:
        return "ker(" + ",".join(sorted(self.subgraph)) + ")"

    def to_dict(self) -> dict:
        return {
            "type": "UnresolvedKernel",
            "subgraph": sorted(self.subgraph),
            "character": dict(self.character),
        }


@dataclass(frozen=True)
class WildKernel:
    """ker of a nonzero character on a subgraph that is not finitely generated."""

    subgraph: frozenset
    character: Character

    trivial = False
    rank = INFINITE

    def label(self) -> str:
        return "wild(" + ",".join(sorted(self.subgraph)) + ")"

    def to_dict(self) -> dict:
        return {
            "type": "WildKernel",
            "subgraph": sorted(self.subgraph),
            "character": dict(self.character),
            "finitely_generated": False,
        }


def free_product(*factors):
    """Free product with nested products flattened and trivial factors dropped."""
    flat = []
    for f in factors:
        if isinstance(f, FreeProduct):
            flat.extend(f.factors)
        elif not f.trivial:
            flat.append(f)
    flat = [f for f in flat if not f.trivial]
    if not flat:
        return Free(0)
    if len(flat) == 1:
        return flat[0]
    return FreeProduct(tuple(flat))


def descriptor_from_dict(data):
    kind = data["type"]
    if kind == "FreeAbelian":
        return FreeAbelian(data["rank"])
    if kind == "Free":
        return Free(INFINITE if data["rank"] == "inf" else data["rank"])
    if kind == "FreeProduct":
        return FreeProduct(tuple(descriptor_from_dict(x) for x in data["factors"]))
    cls = {"UnresolvedKernel": UnresolvedKernel, "WildKernel": WildKernel}[kind]
    return cls(frozenset(data["subgraph"]), Character(data["character"]))


@dataclass(frozen=True)
class GoGVertex:
    id: str
    group: object
    side: int
    subgraph: frozenset
    residue: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "group": self.group.to_dict(),
            "side": self.side,
            "subgraph": sorted(self.subgraph),
            "residue": self.residue,
        }


@dataclass(frozen=True)
class GoGEdge:
    id: str
    group: object
    source: str
    target: str
    subgraph: frozenset
    residue: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "group": self.group.to_dict(),
            "endpoints": [self.source, self.target],
            "subgraph": sorted(self.subgraph),
            "residue": self.residue,
        }


@dataclass(frozen=True)
class GraphOfGroups:
    """A finite connected multigraph decorated with vertex and edge groups.

    ``residue`` records which coset class of the image subgroup a vertex or
    edge stands for: residue j on a piece with index I means f-values
    congruent to j*d modulo d*I, where d generates the ambient image.
    """

    vertices: tuple
    edges: tuple

    def vertex(self, vid: str) -> GoGVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v.id: set() for v in self.vertices}
        for e in self.edges:
            adj[e.source].add(e.target)
            adj[e.target].add(e.source)
        start = self.vertices[0].id
        seen = {start}
        queue = deque([start])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(adj)

    def has_loops(self) -> bool:
        return any(e.source == e.target for e in self.edges)

    def is_bipartite(self) -> bool:
        side = {v.id: v.side for v in self.vertices}
        return all(side[e.source] != side[e.target] for e in self.edges)

    def to_dict(self) -> dict:
        return {
            "vertices": [v.to_dict() for v in self.vertices],
            "edges": [e.to_dict() for e in self.edges],
            "betti_number": betti_number(self),
        }

    def to_dot(self, name: str = "GoG") -> str:
        q = _quote
        lines = [f"graph {q(name)} {{"]
        for v in self.vertices:
            lines.append(f"  {q(v.id)} [label={q(v.id + chr(10) + v.group.label())}];")
        for e in self.edges:
            lines.append(f"  {q(e.source)} -- {q(e.target)} [label={q(e.group.label())}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def betti_number(gog: GraphOfGroups) -> int:
    """First Betti number |E| - |V| + 1 of the underlying connected graph."""
    return len(gog.edges) - len(gog.vertices) + 1


def free_product_form(gog: GraphOfGroups):
    """With trivial edge groups the fundamental group is F_b1 * (vertex groups)."""
    for e in gog.edges:
        if not (isinstance(e.group, FreeAbelian) and e.group.rank == 0):
            raise NotApplicableError(f"edge {e.id} has nontrivial group {e.group.label()}")
    return free_product(Free(betti_number(gog)), *(v.group for v in gog.vertices))


def two_colour(vertices, edges) -> dict:
    """Proper 2-colouring (sides 1 and 2) of a connected bipartite multigraph."""
    adj = {v: [] for v in vertices}
    for s, t in edges:
        adj[s].append(t)
        adj[t].append(s)
    colour = {}
    for root in sorted(adj):
        if root in colour:
            continue
        colour[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = 3 - colour[x]
                    queue.append(y)
    return colour


def sort_key_vertex(v: GoGVertex):
    return (_rank_key(v.group), set_key(v.subgraph), v.residue)


def _rank_key(group):
    r = group.rank
    return (1, 0) if r is None or r is INFINITE else (0, r)
