"""Discrete characters of a RAAG and the finite-generation test for their kernels."""

from __future__ import annotations

import enum
import json
import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InvariantError, ZeroCharacterError
from .graph import (
    Graph,
    components_within,
    require_connected,
    set_key,
)


class _Infinite:
    """Index of a trivial subgroup in a nontrivial one."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"not a rational number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {value!r}") from None
    raise InputError(f"not a rational number: {value!r}")


class Character(Mapping):
    """A nonzero character, stored as its primitive integral representative.

    Construction accepts rational weights (ints, ``Fraction``, or strings
    like ``"3/2"``) and rescales by a positive factor.

    >>> dict(Character({"a": "1/2", "b": "3/2"}))
    {'a': 1, 'b': 3}
    """

    __slots__ = ("_weights", "_hash")

    def __init__(self, weights):
        if isinstance(weights, Character):
            self._weights = dict(weights._weights)
            self._hash = None
            return
        weights = dict(weights)
        if all(type(x) is int for x in weights.values()) and all(type(v) is str for v in weights):
            g = 0
            for x in weights.values():
                g = math.gcd(g, x)
            if g == 0:
                raise ZeroCharacterError("the zero character is not allowed")
            self._weights = {v: weights[v] // g for v in sorted(weights)}
            self._hash = None
            return
        raw = {}
        for v, value in weights.items():
            if not isinstance(v, str):
                raise InputError(f"vertex names must be strings, got {v!r}")
            raw[v] = _to_fraction(value)
        if not any(raw.values()):
            raise ZeroCharacterError("the zero character is not allowed")
        lcm = 1
        for q in raw.values():
            lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
        ints = {v: int(q * lcm) for v, q in raw.items()}
        g = 0
        for x in ints.values():
            g = math.gcd(g, x)
        self._weights = {v: ints[v] // g for v in sorted(ints)}
        self._hash = None

    def __getitem__(self, v):
        return self._weights[v]

    def __iter__(self):
        return iter(self._weights)

    def __len__(self):
        return len(self._weights)

    def __eq__(self, other):
        if isinstance(other, Character):
            return self._weights == other._weights
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._weights.items()))
        return self._hash

    def __repr__(self):
        return f"Character({self._weights!r})"

    def values_on(self, s) -> list:
        return [self._weights[v] for v in s]

    def vanishes_on(self, s) -> bool:
        return not any(self._weights[v] for v in s)

    def restrict(self, s) -> "Character":
        """Restriction to ``s``, renormalized; raises if it vanishes there."""
        return Character({v: self._weights[v] for v in s})

    def check_graph(self, g: Graph) -> "Character":
        if tuple(self._weights) == g.vertices:
            return self
        if set(self._weights) != set(g.vertices):
            missing = sorted(set(g.vertices) - set(self._weights))
            extra = sorted(set(self._weights) - set(g.vertices))
            parts = []
            if missing:
                parts.append("missing weights for " + ", ".join(missing))
            if extra:
                parts.append("weights on unknown vertices " + ", ".join(extra))
            raise InputError("character does not match graph: " + "; ".join(parts))
        return self

    def to_dict(self) -> dict:
        return {"weights": dict(self._weights)}

    @classmethod
    def from_dict(cls, data) -> "Character":
        if not isinstance(data, dict) or not isinstance(data.get("weights"), dict):
            raise InputError('character JSON must be an object with a "weights" map')
        return cls(data["weights"])

    @classmethod
    def from_json(cls, text: str) -> "Character":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed character JSON: {exc}") from None
        return cls.from_dict(data)


def normalize(raw) -> Character:
    return Character(raw)


def image_on(f, s) -> int:
    """Generator ``d`` of the image subgroup dZ of the subgroup spanned by ``s``."""
    return math.gcd(*(f[v] for v in s))


def index_of(d_ambient: int, d_sub: int):
    if d_ambient == 0:
        raise InputError("ambient image is trivial")
    if d_sub == 0:
        return INFINITE
    if d_sub % d_ambient:
        raise InputError("subgroup image is not contained in ambient image")
    return d_sub // d_ambient


def index(f, ambient, sub):
    """Index [f(A_ambient) : f(A_sub)], possibly INFINITE."""
    ambient = frozenset(ambient)
    sub = frozenset(sub)
    if not sub <= ambient:
        raise InputError("sub must be contained in ambient")
    return index_of(image_on(f, ambient), image_on(f, sub))


def living_subgraph(f, g: Graph) -> frozenset:
    return frozenset(v for v in g.vertices if f[v] != 0)


def dead_subgraph(f, g: Graph) -> frozenset:
    return frozenset(v for v in g.vertices if f[v] == 0)


def living_connected_dominating(g: Graph, f, within=None) -> bool:
    """Living subgraph of ``f`` on the full subgraph ``within`` is connected and dominating.

    Valid on disconnected subgraphs too, where it is always false once
    there are two components.
    """
    within = frozenset(g.vertices if within is None else within)
    living = frozenset(v for v in within if f[v] != 0)
    if not living:
        return False
    if len(components_within(g, living)) != 1:
        return False
    return all(f[v] != 0 or g.neighbors(v) & living for v in within)


def kernel_is_fg(f, g: Graph) -> bool:
    require_connected(g)
    if not isinstance(f, Character):
        f = Character(f)
    f.check_graph(g)
    return living_connected_dominating(g, f)


class KernelClass(enum.Enum):
    FINITELY_GENERATED = "fg"
    WILD = "wild"


@dataclass(frozen=True)
class Classification:
    kernel_class: KernelClass
    witness: frozenset | None
    living: frozenset
    dead: frozenset

    @property
    def finitely_generated(self) -> bool:
        return self.kernel_class is KernelClass.FINITELY_GENERATED

    def to_dict(self) -> dict:
        return {
            "class": self.kernel_class.value,
            "witness": None if self.witness is None else sorted(self.witness),
            "living": sorted(self.living),
            "dead": sorted(self.dead),
        }


def classify(f: Character, g: Graph) -> Classification:
    """Finitely generated, or wild with a separating subgraph on which f vanishes."""
    fg = kernel_is_fg(f, g)
    living = living_subgraph(f, g)
    dead = dead_subgraph(f, g)
    if fg:
        return Classification(KernelClass.FINITELY_GENERATED, None, living, dead)
    if len(components_within(g, living)) > 1:
        witness = dead
    else:
        links = [
            g.neighbors(v)
            for v in sorted(dead)
            if g.neighbors(v) and g.neighbors(v) <= dead
        ]
        if not links:
            raise InvariantError("non-f.g. kernel without a dead separating subgraph")
        witness = min(links, key=set_key)
    return Classification(KernelClass.WILD, witness, living, dead)


def free_factors(f: Character, g: Graph) -> list:
    """Connected components with their restricted characters (None where f vanishes).

    The RAAG of a disconnected graph is the free product of the RAAGs of its
    components; this reports that structure instead of classifying.
    """
    f.check_graph(g)
    out = []
    for comp in components_within(g, g.vertices):
        out.append((comp, None if f.vanishes_on(comp) else f.restrict(comp)))
    return out


class RestrictionStatus(enum.Enum):
    ZERO = "zero"
    FG = "fg"
    NOT_FG = "not-fg"


def restriction_status(g: Graph, f, s) -> RestrictionStatus:
    if f.vanishes_on(s):
        return RestrictionStatus.ZERO
    if living_connected_dominating(g, f, s):
        return RestrictionStatus.FG
    return RestrictionStatus.NOT_FG


@dataclass(frozen=True)
class RestrictionReport:
    statuses: tuple  # (f1, f2, f3)
    kernel_fg: bool
    connected_splitting: bool

    def to_dict(self) -> dict:
        return {
            "kernel": "fg" if self.kernel_fg else "not-fg",
            "restrictions": {f"f{k}": s.value for k, s in enumerate(self.statuses, 1)},
            "connected_splitting": self.connected_splitting,
        }


def restriction_classification(f: Character, g: Graph, split) -> RestrictionReport:
    """Classify f restricted to each piece of a splitting and check the restriction lemma."""
    from .splitting import validate_splitting

    checked = validate_splitting(g, split)
    fg = kernel_is_fg(f, g)
    statuses = tuple(restriction_status(g, f, s) for s in (split.gamma1, split.gamma2, split.gamma3))
    if fg and statuses[2] is RestrictionStatus.ZERO:
        raise InvariantError("f.g. kernel but f vanishes on the separating piece")
    if fg and statuses[2] is RestrictionStatus.FG and checked.connected:
        if statuses[0] is not RestrictionStatus.FG or statuses[1] is not RestrictionStatus.FG:
            raise InvariantError("f.g. kernel and edge kernel, but a vertex kernel is not f.g.")
    return RestrictionReport(statuses, fg, checked.connected)

