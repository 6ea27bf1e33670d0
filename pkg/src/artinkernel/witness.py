"""Characters on non-chordal graphs that are neither wild nor tame."""

from __future__ import annotations

from dataclasses import dataclass

from .character import Character, RestrictionStatus, classify, restriction_status
from .errors import InputError, InvariantError, NotApplicableError, NoWitnessError
from .graph import (
    Graph,
    components_within,
    full_subgraph,
    is_chordal,
    is_clique,
    minimal_vertex_separators,
    require_connected,
    set_key,
)
from .oracles import MAX_ORACLE_VERTICES, MaskGraph
from .splitting import SplittingTriple, splitting_along, validate_splitting


def minimal_separating_sets(g: Graph) -> list:
    """Separating vertex sets with no separating proper subset.

    Any separating set contains a minimal vertex separator, so these are the
    inclusion-minimal members of the minimal vertex separators.
    """
    seps = minimal_vertex_separators(g)
    return [s for s in seps if not any(t < s for t in seps)]


@dataclass(frozen=True)
class NonChordalWitness:
    character: Character
    splitting: SplittingTriple
    dead: frozenset
    separator_connected: bool
    kernel_class: str
    edge_kernel: str
    method: str = "construction"

    def to_dict(self) -> dict:
        return {
            "character": dict(self.character),
            "splitting": self.splitting.to_dict(),
            "dead": sorted(self.dead),
            "separator_connected": self.separator_connected,
            "kernel_class": self.kernel_class,
            "edge_kernel": self.edge_kernel,
            "method": self.method,
        }


def nonchordal_witness(g: Graph) -> NonChordalWitness:
    """A character with f.g. kernel and a splitting whose edge group is not f.g.

    Built from a non-complete minimal separating set G3: f vanishes on one
    component of G3 if it is disconnected, otherwise on a minimal separating
    set of G3. Some non-chordal graphs have no such G3 (a wheel over a
    four-cycle with a pendant vertex on its hub); those fall back to
    exhaustive search, which raises NoWitnessError when no witness exists.
    """
    require_connected(g)
    if is_chordal(g):
        raise InputError("graph is chordal")
    candidates = [s for s in minimal_separating_sets(g) if not is_clique(g, s)]
    if not candidates:
        return search_witness(g)
    gamma3 = candidates[0]
    comps = components_within(g, gamma3)
    connected = len(comps) == 1
    if connected:
        inner = full_subgraph(g, gamma3)
        seps = minimal_separating_sets(inner)
        if not seps:
            raise InvariantError("non-complete connected piece without a separating set")
        dead = min(seps, key=set_key)
    else:
        dead = comps[0]
    f = Character({v: 0 if v in dead else 1 for v in g.vertices})
    split = splitting_along(g, gamma3)
    validate_splitting(g, split)
    cls = classify(f, g)
    edge = restriction_status(g, f, gamma3)
    if not cls.finitely_generated or edge is not RestrictionStatus.NOT_FG:
        raise InvariantError("witness construction failed its certificate")
    return NonChordalWitness(f, split, dead, connected, cls.kernel_class.value, edge.value)


def search_witness(g: Graph) -> NonChordalWitness:
    """Exhaustive search over dead sets and separating sets (small graphs only).

    Dead sets are tried by size, then name; a dead set D works when no
    separating set lies inside D and some separating G3 carries a
    non-f.g. restricted kernel.
    """
    if len(g) > MAX_ORACLE_VERTICES:
        raise NotApplicableError(f"exhaustive search is limited to {MAX_ORACLE_VERTICES} vertices")
    mg = MaskGraph(g)
    separating = [s for s in range(1 << mg.n) if s != mg.full and mg.is_separating(s)]
    everything = mg.full
    dead_sets = sorted(range(everything), key=lambda m: (bin(m).count("1"), set_key(mg.names_of(m))))
    for dead in dead_sets:
        if any(s & dead == s for s in separating):
            continue
        f = Character({v: 0 if mg.mask([v]) & dead else 1 for v in g.vertices})
        for s in sorted(separating, key=lambda m: (bin(m).count("1"), set_key(mg.names_of(m)))):
            gamma3 = mg.names_of(s)
            if restriction_status(g, f, gamma3) is RestrictionStatus.NOT_FG:
                cls = classify(f, g)
                if not cls.finitely_generated:
                    raise InvariantError("dead set without separating subsets but wild kernel")
                split = splitting_along(g, gamma3)
                return NonChordalWitness(
                    f, split, mg.names_of(dead), len(components_within(g, gamma3)) == 1,
                    cls.kernel_class.value, RestrictionStatus.NOT_FG.value, "search",
                )
    raise NoWitnessError("every character is wild or has f.g. edge groups on every splitting")
