"""Bundled example instances used by tests, scripts, and the CLI docs."""

from __future__ import annotations

import random

from .hypergraph import EdgeColoredHypergraph, build_kequal


def ex28() -> EdgeColoredHypergraph:
    """Four vertices, red edges {1,2},{3,4} and a blue edge {2,3}."""
    return EdgeColoredHypergraph.from_edge_list(
        4, [({1, 2}, "R"), ({2, 3}, "B"), ({3, 4}, "R")]
    )


def ex28_2() -> EdgeColoredHypergraph:
    """Five vertices, three overlapping 3-edges in distinct colors."""
    return EdgeColoredHypergraph.from_edge_list(
        5, [({1, 2, 3}, "R"), ({2, 3, 4}, "B"), ({3, 4, 5}, "G")]
    )


def smalldude() -> EdgeColoredHypergraph:
    """Smallest instance whose intersection lattice is atomic but not geometric."""
    return EdgeColoredHypergraph.from_edge_list(
        4, [({1, 2, 3}, "a"), ({3, 4}, "b"), ({2, 4}, "c")]
    )


def mcs7() -> EdgeColoredHypergraph:
    """Seven vertices, five single-edge colors forming a Massey color system."""
    return EdgeColoredHypergraph.from_edge_list(
        7,
        [
            ({1, 2, 3}, "L1"),
            ({3, 4, 5}, "L2"),
            ({5, 6, 7}, "L3"),
            ({2, 3, 4}, "L4"),
            ({4, 5, 6}, "L5"),
        ],
        color_order=["L1", "L2", "L3", "L4", "L5"],
    )


def single_color(codim: int) -> EdgeColoredHypergraph:
    """One edge of codim+1 vertices; the complement is an odd sphere."""
    return EdgeColoredHypergraph.from_edge_list(
        codim + 1, [(set(range(1, codim + 2)), "A")]
    )


def disjoint_pair() -> EdgeColoredHypergraph:
    """Two codim-2 colors with disjoint support on six vertices."""
    return EdgeColoredHypergraph.from_edge_list(
        6, [({1, 2, 3}, "A"), ({4, 5, 6}, "B")]
    )


def edgeless(vertex_count: int) -> EdgeColoredHypergraph:
    return EdgeColoredHypergraph(vertex_count, (), ())


def random_hypergraph(rng: random.Random, max_vertices: int = 6, max_colors: int = 4) -> EdgeColoredHypergraph:
    """One random valid instance; every color gets at least one edge."""
    n = rng.randint(2, max_vertices)
    ncolors = rng.randint(1, max_colors)
    edges = []
    colors = []
    for i in range(ncolors):
        name = f"c{i + 1}"
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(2, min(n, 4))
            edge = frozenset(rng.sample(range(1, n + 1), size))
            edges.append(edge)
            colors.append(name)
    return EdgeColoredHypergraph(n, tuple(edges), tuple(colors))


def random_corpus(seed: int = 20260810, count: int = 20) -> list[EdgeColoredHypergraph]:
    rng = random.Random(seed)
    return [random_hypergraph(rng) for _ in range(count)]


def named_corpus() -> dict[str, EdgeColoredHypergraph]:
    """The fixed instances every cross-method test runs on."""
    return {
        "ex28": ex28(),
        "ex28_2": ex28_2(),
        "smalldude": smalldude(),
        "kequal_3_2": build_kequal(3, 2),
        "kequal_4_2": build_kequal(4, 2),
        "kequal_5_3": build_kequal(5, 3),
        "mcs7": mcs7(),
    }


def full_corpus(seed: int = 20260810, count: int = 20) -> dict[str, EdgeColoredHypergraph]:
    out = named_corpus()
    for i, h in enumerate(random_corpus(seed, count)):
        out[f"random_{i:02d}"] = h
    return out
