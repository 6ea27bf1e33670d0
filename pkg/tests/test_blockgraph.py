import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkernel import (
    Character,
    Free,
    FreeAbelian,
    FreeProduct,
    InputError,
    NotBlockGraphError,
    UnresolvedKernel,
    WildInputError,
    bounded_divergence_family,
    chordal_dichotomy,
    cut_vertices,
    free_product_form,
    m_value,
    minimal_rank,
    rank_formula,
    split_blocks,
    unbounded_family,
)
from artinkernel.generators import (
    complete_graph,
    path_graph,
    random_block_graph,
    random_character,
    random_tree,
    star_graph,
)
from artinkernel.sweeps import peel_bookkeeping

from .conftest import char


class TestM:
    def test_examples(self, path3, c4):
        assert m_value(path3, char(path3, (1, 1, 1))) == 0
        assert m_value(path3, char(path3, (1, 2, 1))) == 1
        assert m_value(c4, char(c4, (1, 2, 3, 4))) == 0

    def test_wild_input(self, path3):
        with pytest.raises(WildInputError) as err:
            m_value(path3, char(path3, (1, 0, 1)))
        assert err.value.vertices == ("b",)


class TestSplitBlocks:
    def test_two_triangles(self, two_triangles):
        f = char(two_triangles, (1, 1, 1, 1, 2))
        out = split_blocks(two_triangles, f)
        assert out.free_rank == 1
        assert out.resolved(two_triangles) == FreeProduct((Free(1), FreeAbelian(2), FreeAbelian(2)))

    def test_tree(self):
        t = random_tree(9, random.Random(2))
        out = split_blocks(t, Character({v: 1 for v in t.vertices})).resolved(t)
        assert out.rank == len(t.edges)

    def test_single_block(self, c4):
        f = char(c4, (1, 1, 0, 1))
        out = split_blocks(c4, f)
        assert out.descriptor == UnresolvedKernel(c4.vertex_set(), f)
        with pytest.raises(NotBlockGraphError):
            out.resolved(c4)

    def test_steps_bookkeeping(self, two_triangles):
        (step,) = split_blocks(two_triangles, char(two_triangles, (1, 1, 1, 1, 2))).steps
        assert step.cut_vertex == "v" and step.leaf_block == set("abv")
        assert step.edge_count == 2 and step.betti == 1
        assert peel_bookkeeping(two_triangles, char(two_triangles, (1, 1, 1, 1, 2))) == []


class TestRankFormula:
    def test_examples(self, path3, two_triangles):
        r = rank_formula(path3, char(path3, (1, 2, 1)))
        assert (r.rank, r.m) == (3, 1)
        assert rank_formula(two_triangles, char(two_triangles, (1, 1, 1, 1, 2))).rank == 5
        assert rank_formula(two_triangles, char(two_triangles, (1, 1, 1, 1, 1))).rank == 4

    def test_report_fields(self, two_triangles):
        r = rank_formula(two_triangles, char(two_triangles, (2, 2, 2, 2, 4)))
        assert r.block_terms == ((frozenset("abv"), 1, 3), (frozenset("cdv"), 1, 3))
        assert r.rank == r.m + sum(i * (n - 1) for _, i, n in r.block_terms)
        assert r.decomposition.rank == r.rank
        assert r.to_dict()["rank"] == 5

    def test_rejects(self, c4, path3):
        with pytest.raises(NotBlockGraphError):
            rank_formula(c4, char(c4, (1, 1, 1, 1)))
        with pytest.raises(WildInputError):
            rank_formula(path3, char(path3, (1, 0, 1)))

    def test_index_above_one(self):
        # the block {a, b} has image 2Z inside the full image Z
        p = path_graph("abc")
        r = rank_formula(p, char(p, (2, 2, 3)))
        assert [i for _, i, _ in r.block_terms] == [2, 1]

    @settings(max_examples=300, deadline=None)
    @given(st.integers(0, 10**6))
    def test_three_way_identity(self, seed):
        rng = random.Random(seed)
        g = random_block_graph(rng.randint(1, 10), rng)
        f = random_character(g, rng, 3, cut_vertices(g))
        r = rank_formula(g, f)
        assert r.m >= 0
        assert r.decomposition.rank == r.rank
        assert free_product_form(chordal_dichotomy(g, f).graph_of_groups).rank == r.rank
        assert peel_bookkeeping(g, f) == []

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10**6))
    def test_tree_rank_is_edge_count(self, seed):
        rng = random.Random(seed)
        t = random_tree(rng.randint(1, 12), rng)
        assert rank_formula(t, Character({v: 1 for v in t.vertices})).rank == len(t.edges)


class TestMinimalRank:
    def test_examples(self, path3, two_triangles):
        assert minimal_rank(path3).mu == 2
        assert minimal_rank(two_triangles).mu == 4
        assert minimal_rank(complete_graph("abcde")).mu == 4

    def test_sign_blind(self, path3):
        mu, attains = minimal_rank(path3)
        f = char(path3, (5, -1, 7))
        assert attains(f) and rank_formula(path3, f).rank == mu
        assert not attains(char(path3, (1, 2, 1)))

    def test_exhaustive_small(self, two_triangles):
        mu, attains = minimal_rank(two_triangles)
        ranks = []
        for vals in itertools.product(range(-2, 3), repeat=5):
            if vals[4] == 0:
                continue
            f = char(two_triangles, vals)
            r = rank_formula(two_triangles, f, with_decomposition=False).rank
            assert (r == mu) == attains(f)
            ranks.append(r)
        assert min(ranks) == mu


class TestFamilies:
    def test_unbounded(self, two_triangles, path3):
        f3 = unbounded_family(two_triangles, 3)
        assert rank_formula(two_triangles, f3).rank == 6
        f1 = unbounded_family(two_triangles, 1)
        assert dict(f1) == {v: 1 for v in two_triangles.vertices}
        assert rank_formula(two_triangles, f1).rank == minimal_rank(two_triangles).mu
        assert rank_formula(path3, unbounded_family(path3, 5)).rank == 6
        ranks = [rank_formula(path3, unbounded_family(path3, n)).rank for n in range(1, 8)]
        assert ranks == sorted(set(ranks))

    def test_unbounded_rejects(self, path3):
        with pytest.raises(InputError):
            unbounded_family(complete_graph("abc"), 2)
        with pytest.raises(InputError):
            unbounded_family(path3, 0)

    def test_bounded_divergence(self, two_triangles):
        out = bounded_divergence_family(two_triangles, 1, [2, 3, 5])
        assert out.ranks == (4, 4, 4)
        assert dict(out.limit) == {"a": 1, "b": 1, "c": 1, "d": 1, "v": 0}
        assert out.limit_class == "wild"
        assert list(out.distances) == sorted(out.distances, reverse=True)
        assert bounded_divergence_family(two_triangles, 2, [3, 5, 7]).ranks == (5, 5, 5)

    @pytest.mark.parametrize("q, ps", [(2, [4]), (0, [3]), (1, []), (3, [0])])
    def test_bounded_divergence_rejects(self, two_triangles, q, ps):
        with pytest.raises(InputError):
            bounded_divergence_family(two_triangles, q, ps)

    def test_needs_non_cut_vertex_per_block(self):
        with pytest.raises(InputError):
            bounded_divergence_family(path_graph("abcd"), 1, [2])

    def test_star_limit(self):
        out = bounded_divergence_family(star_graph("c", "xyz"), 1, [2, 3])
        assert out.limit_class == "wild" and out.ranks == (3, 3)
