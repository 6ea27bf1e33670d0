"""Seeded, desk-sized run of every invariant sweep."""

from __future__ import annotations

import random

from .graph import cut_vertices, is_chordal
from .generators import (
    random_block_graph,
    random_character,
    random_connected_graph,
    random_splitting,
    random_tree,
)
from .sweeps import (
    dirac_sweep,
    minimal_rank_sweep,
    orbit_sweep,
    rank_identity_sweep,
    tree_sweep,
    trichotomy_sweep,
    witness_sweep,
    write_rank_table,
)


def run_selftest(max_vertices: int = 6, count: int = 200, seed: int = 0, csv_path=None) -> dict:
    if max_vertices < 4 or max_vertices > 12:
        from .errors import InputError

        raise InputError("--max-vertices must lie between 4 and 12")
    rng = random.Random(seed)
    sizes = range(2, max_vertices + 1)

    def connected():
        return random_connected_graph(rng.choice(sizes), rng)

    results = [dirac_sweep(connected() for _ in range(count))]

    pairs = []
    for _ in range(count):
        g = connected()
        pairs += [(g, random_character(g, rng, bound=2)) for _ in range(5)]
    results.append(trichotomy_sweep(pairs))

    rows = []
    instances = []
    for k in range(count):
        g = random_block_graph(rng.choice(sizes), rng)
        instances.append((f"b{k}", g, random_character(g, rng, 3, cut_vertices(g))))
    results += rank_identity_sweep(instances, rows, rng)

    results.append(tree_sweep(random_tree(rng.choice(sizes), rng) for _ in range(count)))

    orbit = []
    while len(orbit) < count:
        g = random_connected_graph(rng.choice(range(3, max_vertices + 1)), rng)
        if len(g.edges) == len(g) * (len(g) - 1) // 2:
            continue
        split = random_splitting(g, rng)
        orbit.append((g, random_character(g, rng, 3, split.gamma3), split))
    results.append(orbit_sweep(orbit))

    nonchordal = []
    while len(nonchordal) < max(count // 4, 1):
        g = random_connected_graph(rng.choice(range(4, max_vertices + 1)), rng)
        if not is_chordal(g):
            nonchordal.append(g)
    wit, counterexamples = witness_sweep(nonchordal)
    results.append(wit)

    small = [random_block_graph(rng.randint(2, 4), rng) for _ in range(max(count // 20, 1))]
    results.append(minimal_rank_sweep(small))

    if csv_path:
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            write_rank_table(rows, fh)

    return {
        "ok": all(r.ok for r in results),
        "seed": seed,
        "max_vertices": max_vertices,
        "sweeps": [r.to_dict() for r in results],
        "graphs_without_witness": [g.to_dict() for g in counterexamples],
    }
