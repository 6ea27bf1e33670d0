"""Graph-of-groups decomposition of ker(f) induced by one splitting of the graph.

A splitting (G1, G2, G3) of the graph gives an amalgam A = A1 *_{A3} A2 and
a Bass-Serre tree. Cosets g.A_k map to f(g) + f(A_k), so modulo ker(f) the
cosets of A_k are the classes of f(A) / f(A_k), a cyclic group of order
I_k = [f(A) : f(A_k)]. The quotient graph therefore has residues mod I_1 and
mod I_2 as vertices and residues mod I_3 as edges, edge j joining j mod I_1
to j mod I_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .character import (
    INFINITE,
    Character,
    image_on,
    index_of,
    living_connected_dominating,
)
from .errors import InvalidSplittingError, InputError
from .graph import (
    Graph,
    components_within,
    is_clique,
    require_connected,
)
from .groups import (
    FreeAbelian,
    GoGEdge,
    GoGVertex,
    GraphOfGroups,
    UnresolvedKernel,
    WildKernel,
)


@dataclass(frozen=True)
class SplittingTriple:
    gamma1: frozenset
    gamma2: frozenset
    gamma3: frozenset

    def __post_init__(self):
        for name in ("gamma1", "gamma2", "gamma3"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @classmethod
    def from_sides(cls, gamma1, gamma2) -> "SplittingTriple":
        gamma1, gamma2 = frozenset(gamma1), frozenset(gamma2)
        return cls(gamma1, gamma2, gamma1 & gamma2)

    def pieces(self) -> tuple:
        return (self.gamma1, self.gamma2, self.gamma3)

    def to_dict(self) -> dict:
        return {f"gamma{k}": sorted(s) for k, s in enumerate(self.pieces(), 1)}


@dataclass(frozen=True)
class CheckedSplitting:
    splitting: SplittingTriple
    connected: bool


def splitting_violations(g: Graph, split: SplittingTriple) -> list:
    everything = g.vertex_set()
    g1, g2, g3 = split.pieces()
    out = []
    if any(not (s <= everything) for s in (g1, g2, g3)):
        return ["unknown-vertices"]
    if not (g1 and g2 and g3):
        out.append("nonempty")
    if len({g1, g2, g3}) < 3:
        out.append("pairwise-distinct")
    if g1 | g2 != everything:
        out.append("vertex-union")
    if g1 & g2 != g3:
        out.append("vertex-intersection")
    # full subgraphs cover E(G) exactly when no edge crosses between the two sides
    only1, only2 = g1 - g2, g2 - g1
    if any(g.neighbors(v) & only2 for v in only1):
        out.append("edge-union")
    if any(
        (u in g1 and v in g1 and u in g2 and v in g2) != (u in g3 and v in g3)
        for u, v in g.edges
    ):
        out.append("edge-intersection")
    return out


def validate_splitting(g: Graph, split: SplittingTriple) -> CheckedSplitting:
    violations = splitting_violations(g, split)
    if violations:
        raise InvalidSplittingError(violations)
    return CheckedSplitting(split, len(components_within(g, split.gamma3)) == 1)


def splitting_along(g: Graph, separator, component=None) -> SplittingTriple:
    """Splitting with G3 = separator, G1 = separator plus one component of the rest."""
    separator = g.check_subset(separator)
    comps = components_within(g, g.vertex_set() - separator)
    if len(comps) < 2:
        raise InputError("vertex set does not separate the graph")
    chosen = comps[0] if component is None else frozenset(component)
    if chosen not in comps:
        raise InputError("chosen component is not a component of the complement")
    gamma1 = separator | chosen
    gamma2 = g.vertex_set() - chosen
    return SplittingTriple(gamma1, gamma2, separator)


def kernel_descriptor(g: Graph, f: Character, s):
    """Descriptor for ker(f|s); f must not vanish on ``s``."""
    s = frozenset(s)
    if is_clique(g, s):
        return FreeAbelian(len(s) - 1)
    restricted = f.restrict(s)
    if living_connected_dominating(g, f, s):
        return UnresolvedKernel(s, restricted)
    return WildKernel(s, restricted)


@dataclass(frozen=True)
class FiniteSplitting:
    """Tame outcome: ker(f) is the fundamental group of a finite graph of groups."""

    splitting: SplittingTriple
    graph_of_groups: GraphOfGroups
    indices: tuple  # (I_1, I_2, I_3)

    kind = "finite"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "splitting": self.splitting.to_dict(),
            "indices": dict(zip(("I1", "I2", "I3"), self.indices)),
            "graph_of_groups": self.graph_of_groups.to_dict(),
        }


@dataclass(frozen=True)
class WildSurjection:
    """ker(f) surjects onto F_inf.

    ``case`` is "2a" when f vanishes only on the separating piece (infinitely
    many bigons) and "2b" when it also vanishes on a side (an infinite star).
    The surjection itself is not constructed.
    """

    case: str
    witness: frozenset
    zero_sides: tuple = ()
    splitting: SplittingTriple | None = None
    reason: str = field(default="")

    kind = "wild"

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "case": self.case,
            "witness": sorted(self.witness),
            "zero_sides": list(self.zero_sides),
            "reason": self.reason,
        }
        if self.splitting is not None:
            out["splitting"] = self.splitting.to_dict()
        return out


def decompose_once(g: Graph, f: Character, split: SplittingTriple):
    """Decompose ker(f) along one splitting: FiniteSplitting or WildSurjection."""
    require_connected(g)
    f.check_graph(g)
    validate_splitting(g, split)
    g1, g2, g3 = split.pieces()
    if f.vanishes_on(g3):
        zero_sides = tuple(k for k, s in ((1, g1), (2, g2)) if f.vanishes_on(s))
        if zero_sides:
            return WildSurjection(
                "2b", g3, zero_sides, split,
                "f vanishes on a side: infinitely many vertices of that side form a star",
            )
        return WildSurjection(
            "2a", g3, (), split,
            "f vanishes on the separating piece: finitely many vertices, infinitely many bigons",
        )
    d = image_on(f, g.vertices)
    i1, i2, i3 = (index_of(d, image_on(f, s)) for s in (g1, g2, g3))
    assert INFINITE not in (i1, i2, i3)
    group1 = kernel_descriptor(g, f, g1)
    group2 = kernel_descriptor(g, f, g2)
    group3 = kernel_descriptor(g, f, g3)
    vertices = [GoGVertex(f"1:{j}", group1, 1, g1, j) for j in range(i1)]
    vertices += [GoGVertex(f"2:{j}", group2, 2, g2, j) for j in range(i2)]
    edges = [
        GoGEdge(f"e:{j}", group3, f"1:{j % i1}", f"2:{j % i2}", g3, j)
        for j in range(i3)
    ]
    return FiniteSplitting(split, GraphOfGroups(tuple(vertices), tuple(edges)), (i1, i2, i3))

