import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkernel import (
    INFINITE,
    Character,
    Free,
    FreeAbelian,
    FreeProduct,
    GraphOfGroups,
    InvalidSplittingError,
    NotApplicableError,
    SplittingTriple,
    UnresolvedKernel,
    WildKernel,
    betti_number,
    classify,
    decompose_once,
    free_product_form,
    validate_splitting,
)
from artinkernel.generators import random_character, random_connected_graph, random_splitting
from artinkernel.groups import GoGEdge, GoGVertex, descriptor_from_dict, free_product
from artinkernel.oracles import orbit_count
from artinkernel.splitting import splitting_along, splitting_violations

from .conftest import char


def gog(n1, n2, n_edges):
    vs = [GoGVertex(f"1:{j}", FreeAbelian(0), 1, frozenset("a"), j) for j in range(n1)]
    vs += [GoGVertex(f"2:{j}", FreeAbelian(0), 2, frozenset("b"), j) for j in range(n2)]
    es = [GoGEdge(f"e:{j}", FreeAbelian(0), f"1:{j % n1}", f"2:{j % n2}", frozenset(), j) for j in range(n_edges)]
    return GraphOfGroups(tuple(vs), tuple(es))


class TestValidate:
    def test_c4_disconnected_separator(self, c4):
        checked = validate_splitting(c4, SplittingTriple.from_sides("abd", "bcd"))
        assert not checked.connected

    def test_path_connected(self, path3):
        assert validate_splitting(path3, SplittingTriple.from_sides("ab", "bc")).connected

    def test_degenerate(self, path3):
        with pytest.raises(InvalidSplittingError) as err:
            validate_splitting(path3, SplittingTriple(path3.vertex_set(), frozenset("bc"), frozenset("bc")))
        assert "pairwise-distinct" in err.value.violations

    @pytest.mark.parametrize(
        "triple, name",
        [
            (("ab", "cd", ""), "nonempty"),
            (("abc", "bcd", "b"), "vertex-intersection"),
            (("ab", "bc", "b"), "vertex-union"),
            (("abc", "acd", "ac"), None),
            (("ab", "bcd", "b"), "edge-union"),
            (("abz", "bcd", "b"), "unknown-vertices"),
        ],
    )
    def test_named_violations(self, c4, triple, name):
        found = splitting_violations(c4, SplittingTriple(*triple))
        assert (name in found) if name else not found

    def test_edge_intersection(self):
        from artinkernel import Graph

        # the edge a-c lies in both sides but the separator is only {a}
        g = Graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])
        assert "edge-intersection" in splitting_violations(g, SplittingTriple("abc", "ac", "a"))

    def test_splitting_along(self, c4):
        s = splitting_along(c4, "ac")
        assert s == SplittingTriple("abc", "acd", "ac")
        assert splitting_along(c4, "ac", "d").gamma1 == set("acd")


class TestDecomposeOnce:
    def test_path_all_ones(self, path3):
        out = decompose_once(path3, char(path3, (1, 1, 1)), SplittingTriple.from_sides("ab", "bc"))
        assert out.indices == (1, 1, 1)
        g = out.graph_of_groups
        assert [v.group for v in g.vertices] == [FreeAbelian(1), FreeAbelian(1)]
        assert [e.group for e in g.edges] == [FreeAbelian(0)]
        assert free_product_form(g) == FreeProduct((FreeAbelian(1), FreeAbelian(1)))
        assert free_product_form(g).rank == 2

    def test_path_double_edge(self, path3):
        out = decompose_once(path3, char(path3, (1, 2, 1)), SplittingTriple.from_sides("ab", "bc"))
        g = out.graph_of_groups
        assert out.indices == (1, 1, 2) and len(g.edges) == 2 and betti_number(g) == 1
        fp = free_product_form(g)
        assert fp == FreeProduct((Free(1), FreeAbelian(1), FreeAbelian(1)))
        assert fp.rank == 3

    def test_fig2_left_right(self, c4):
        out = decompose_once(c4, char(c4, (1, 1, 0, 1)), splitting_along(c4, "ac"))
        (edge,) = out.graph_of_groups.edges
        assert isinstance(edge.group, WildKernel) and edge.group.rank is INFINITE
        assert isinstance(out.graph_of_groups.vertices[0].group, UnresolvedKernel)

    def test_wild_2a(self, c4):
        out = decompose_once(c4, char(c4, (1, 0, 1, 0)), splitting_along(c4, "bd"))
        assert out.kind == "wild" and out.case == "2a" and out.zero_sides == ()

    def test_wild_2b(self, path3):
        out = decompose_once(path3, char(path3, (1, 0, 0)), SplittingTriple.from_sides("ab", "bc"))
        assert out.case == "2b" and out.zero_sides == (2,)

    def test_fg_kernel_is_finite_along_every_separator(self, c4):
        f = char(c4, (0, 1, 1, 1))
        assert classify(f, c4).finitely_generated
        for sep in ("ac", "bd"):
            assert decompose_once(c4, f, splitting_along(c4, sep)).kind == "finite"

    def test_report_json(self, path3):
        out = decompose_once(path3, char(path3, (1, 2, 1)), SplittingTriple.from_sides("ab", "bc"))
        data = json.loads(json.dumps(out.to_dict()))
        assert data["indices"] == {"I1": 1, "I2": 1, "I3": 2}
        assert data["graph_of_groups"]["betti_number"] == 1

    @settings(max_examples=300, deadline=None)
    @given(st.integers(0, 10**6))
    def test_structure_and_orbits(self, seed):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(3, 7), rng)
        if len(g.edges) == len(g) * (len(g) - 1) // 2:
            return
        split = random_splitting(g, rng)
        f = random_character(g, rng, 4, split.gamma3)
        out = decompose_once(g, f, split)
        gg = out.graph_of_groups
        assert gg.is_connected() and gg.is_bipartite() and not gg.has_loops()
        i1, i2, i3 = out.indices
        assert betti_number(gg) == i3 - i1 - i2 + 1
        weights = [f[v] for v in g.vertices]
        for k, piece in enumerate(split.pieces()):
            assert orbit_count(weights, [f[v] for v in piece]) == out.indices[k]
        for e in gg.edges:
            assert gg.vertex(e.source).residue == e.residue % i1
            assert gg.vertex(e.target).residue == e.residue % i2


class TestGroups:
    @pytest.mark.parametrize("n_edges, b1", [(1, 0), (2, 1), (5, 4)])
    def test_betti(self, n_edges, b1):
        assert betti_number(gog(1, 1, n_edges)) == b1

    def test_single_vertex(self):
        g = GraphOfGroups((GoGVertex("x", FreeAbelian(3), 1, frozenset("abcd"), 0),), ())
        assert free_product_form(g) == FreeAbelian(3)

    def test_nontrivial_edge(self):
        g = GraphOfGroups(
            (GoGVertex("x", FreeAbelian(2), 1, frozenset("abc"), 0), GoGVertex("y", FreeAbelian(2), 2, frozenset("bcd"), 0)),
            (GoGEdge("e", FreeAbelian(1), "x", "y", frozenset("bc"), 0),),
        )
        with pytest.raises(NotApplicableError):
            free_product_form(g)

    def test_free_product_flattens(self):
        inner = free_product(Free(1), FreeAbelian(2))
        out = free_product(inner, Free(0), FreeAbelian(0), FreeAbelian(1))
        assert out == FreeProduct((Free(1), FreeAbelian(2), FreeAbelian(1)))
        assert out.rank == 4
        assert free_product(Free(0)) == Free(0)
        assert free_product(FreeAbelian(2)) == FreeAbelian(2)

    @pytest.mark.parametrize(
        "desc",
        [
            FreeAbelian(3),
            Free(2),
            Free(INFINITE),
            FreeProduct((Free(1), FreeAbelian(2))),
            UnresolvedKernel(frozenset("ab"), Character({"a": 1, "b": 2})),
            WildKernel(frozenset("ac"), Character({"a": 1, "c": 0})),
        ],
    )
    def test_descriptor_round_trip(self, desc):
        assert descriptor_from_dict(json.loads(json.dumps(desc.to_dict()))) == desc

    def test_dot(self, path3):
        out = decompose_once(path3, char(path3, (1, 2, 1)), SplittingTriple.from_sides("ab", "bc"))
        dot = out.graph_of_groups.to_dot()
        assert dot.startswith("graph ") and dot.count(" -- ") == 2
