import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkernel import (
    INFINITE,
    Character,
    DisconnectedGraphError,
    Graph,
    InputError,
    InvalidSplittingError,
    KernelClass,
    SplittingTriple,
    ZeroCharacterError,
    classify,
    dead_subgraph,
    free_factors,
    image_on,
    index,
    kernel_is_fg,
    living_subgraph,
    normalize,
    restriction_classification,
)
from artinkernel.generators import (
    complete_graph,
    random_character,
    random_connected_graph,
    random_splitting,
    star_graph,
)
from artinkernel.graph import is_separating
from artinkernel.oracles import has_separating_dead_subset

from .conftest import char


class TestNormalize:
    def test_examples(self):
        assert dict(normalize({"a": Fraction(1, 2), "b": Fraction(3, 2)})) == {"a": 1, "b": 3}
        assert dict(normalize({"a": 2, "b": 4, "c": 6})) == {"a": 1, "b": 2, "c": 3}
        assert dict(normalize({"a": -3})) == {"a": -1}

    def test_string_rationals(self):
        assert dict(Character({"a": "3/2", "b": "1/3", "c": 0})) == {"a": 9, "b": 2, "c": 0}

    @pytest.mark.parametrize("raw", [{"a": 0}, {"a": 0, "b": "0/5"}, {}])
    def test_zero(self, raw):
        with pytest.raises(ZeroCharacterError):
            Character(raw)

    @pytest.mark.parametrize("raw", [{"a": "x"}, {"a": "1/0"}, {"a": float("nan")}, {1: 1}])
    def test_malformed(self, raw):
        with pytest.raises(InputError):
            Character(raw)

    def test_json(self):
        f = Character.from_json('{"weights": {"a": "3/2", "b": 3}}')
        assert dict(f) == {"a": 1, "b": 2}
        assert Character.from_dict(f.to_dict()) == f
        with pytest.raises(InputError):
            Character.from_json('{"a": 1}')

    def test_check_graph(self, c4):
        with pytest.raises(InputError):
            Character({"a": 1, "b": 1}).check_graph(c4)
        with pytest.raises(InputError):
            Character({v: 1 for v in "abcdz"}).check_graph(c4)

    @given(st.dictionaries(st.sampled_from("abcde"), st.fractions(max_denominator=12), min_size=1),
           st.fractions(min_value=Fraction(1, 50), max_value=50))
    def test_positive_rescaling(self, raw, lam):
        if not any(raw.values()):
            return
        assert Character(raw) == Character({v: lam * x for v, x in raw.items()})


class TestImageAndIndex:
    def test_image_examples(self):
        f = Character({"a": 2, "b": 4, "c": 6})
        assert image_on(f, "bc") == 1
        assert image_on(Character({"a": 1, "b": 0}), "b") == 0
        assert image_on(Character({"a": 2, "b": 4, "c": 1}), "ab") == 2

    def test_index_examples(self, path3):
        f = char(path3, (1, 2, 1))
        assert index(f, path3.vertices, "b") == 2
        assert index(f, path3.vertices, path3.vertices) == 1
        assert index(char(path3, (1, 0, 1)), path3.vertices, "b") is INFINITE

    def test_index_trivial_ambient(self):
        with pytest.raises(InputError):
            index(Character({"a": 1, "b": 0, "c": 0}), "bc", "b")

    @settings(max_examples=100)
    @given(st.lists(st.integers(-9, 9), min_size=3, max_size=6), st.integers(1, 7))
    def test_index_rescaling(self, values, lam):
        if not any(values):
            return
        vs = [f"v{i}" for i in range(len(values))]
        f = Character(dict(zip(vs, values)))
        g = Character({v: Fraction(lam * x, 3) for v, x in zip(vs, values)})
        assert index(f, vs, vs[:2]) == index(g, vs, vs[:2])


class TestLivingDead:
    def test_examples(self, c4):
        f = char(c4, (1, 1, 0, 1))
        assert living_subgraph(f, c4) == set("abd")
        assert dead_subgraph(f, c4) == {"c"}
        assert living_subgraph(char(c4, (1, 1, 1, 1)), c4) == set("abcd")
        g = char(c4, (1, 0, 1, 0))
        assert living_subgraph(g, c4) == set("ac") and dead_subgraph(g, c4) == set("bd")

    def test_kernel_is_fg_examples(self, c4):
        assert kernel_is_fg(char(c4, (1, 1, 0, 1)), c4)
        assert not kernel_is_fg(char(c4, (1, 0, 1, 0)), c4)
        star = star_graph("c", "xyz")
        assert not kernel_is_fg(Character({"c": 0, "x": 1, "y": 1, "z": 1}), star)

    def test_requires_connected(self):
        g = Graph("ab")
        with pytest.raises(DisconnectedGraphError):
            kernel_is_fg(Character({"a": 1, "b": 1}), g)

    def test_free_factors(self):
        g = Graph("abcd", [("a", "b")])
        parts = free_factors(Character({"a": 1, "b": 2, "c": 0, "d": 3}), g)
        assert [p for p, _ in parts] == [frozenset("ab"), frozenset("c"), frozenset("d")]
        assert parts[1][1] is None and dict(parts[2][1]) == {"d": 1}


class TestClassify:
    def test_examples(self, c4):
        cls = classify(char(c4, (1, 0, 1, 0)), c4)
        assert cls.kernel_class is KernelClass.WILD and cls.witness == set("bd")
        tri = complete_graph("abc")
        assert classify(Character({"a": 0, "b": 0, "c": 5}), tri).finitely_generated
        assert classify(char(c4, (1, 1, 0, 1)), c4).to_dict()["class"] == "fg"

    def test_link_witness(self):
        # living {x, y} is connected but misses the leaf z, whose link {c} is dead
        g = Graph("cxyz", [("c", "x"), ("c", "y"), ("x", "y"), ("c", "z")])
        cls = classify(Character({"c": 0, "x": 1, "y": 1, "z": 0}), g)
        assert cls.witness == {"c"}

    @settings(max_examples=300, deadline=None)
    @given(st.integers(0, 10**6))
    def test_witness_sound_and_partition(self, seed):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(2, 7), rng)
        f = random_character(g, rng, bound=2)
        cls = classify(f, g)
        assert cls.living | cls.dead == g.vertex_set() and not cls.living & cls.dead
        assert cls.finitely_generated != has_separating_dead_subset(g, f)
        if not cls.finitely_generated:
            assert cls.witness <= cls.dead and is_separating(g, cls.witness)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 6))
    def test_rescaling_invariance(self, seed, lam):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(2, 7), rng)
        f = random_character(g, rng, bound=3)
        scaled = Character({v: Fraction(lam * f[v], 7) for v in g.vertices})
        assert classify(f, g) == classify(scaled, g)


class TestRestrictions:
    def test_fig2_first(self, c4):
        rep = restriction_classification(char(c4, (1, 1, 0, 1)), c4, SplittingTriple.from_sides("abd", "bcd"))
        assert rep.to_dict()["restrictions"] == {"f1": "fg", "f2": "not-fg", "f3": "not-fg"}
        assert rep.kernel_fg and not rep.connected_splitting

    def test_path(self, path3):
        rep = restriction_classification(char(path3, (1, 1, 1)), path3, SplittingTriple.from_sides("ab", "bc"))
        assert [s.value for s in rep.statuses] == ["fg", "fg", "fg"]

    def test_zero_on_separator(self, c4):
        rep = restriction_classification(char(c4, (1, 0, 1, 0)), c4, SplittingTriple.from_sides("abd", "bcd"))
        assert rep.statuses[2].value == "zero" and not rep.kernel_fg

    def test_invalid_splitting(self, c4):
        with pytest.raises(InvalidSplittingError):
            restriction_classification(char(c4, (1, 1, 1, 1)), c4, SplittingTriple.from_sides("ab", "cd"))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 10**6))
    def test_lemma_holds_on_random_splittings(self, seed):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(3, 7), rng)
        if len(g.edges) == len(g) * (len(g) - 1) // 2:
            return
        restriction_classification(random_character(g, rng, 2), g, random_splitting(g, rng))
