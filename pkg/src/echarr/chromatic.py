"""Generalized chromatic polynomial of an edge-colored hypergraph.

Three independent routes are provided: brute-force counting of proper vertex
colorings, deletion-contraction recursion, and (in the lattice module) the
Mobius-function characteristic polynomial.  A fourth enumeration counts
integer points of a symmetric cube avoiding the arrangement, which must equal
the polynomial at odd arguments t = 2s+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ResourceLimitError
from .hypergraph import EdgeColoredHypergraph
from .polynomial import IntPolynomial, interpolate_integer


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard caps for the enumeration kernels."""

    max_points: int = 10**8
    chunk: int = 1 << 20


DEFAULT_BUDGET = EnumerationBudget()


def is_proper(h: EdgeColoredHypergraph, coloring: Sequence[int]) -> bool:
    """True iff every color has some connected component that is not
    monochromatic under the vertex coloring (vertex v gets coloring[v-1])."""
    if len(coloring) != h.vertex_count:
        raise ValueError("coloring must assign a value to every vertex")
    for c in h.colors:
        components = h.components([c])
        if not any(len({coloring[v - 1] for v in comp}) > 1 for comp in components):
            return False
    return True


def _component_table(h: EdgeColoredHypergraph) -> list[list[list[int]]]:
    return [[sorted(comp) for comp in h.components([c])] for c in h.colors]


def _vertex_digits(idx: np.ndarray, vertex_count: int, t: int) -> list[np.ndarray]:
    digits = []
    rest = idx
    for _ in range(vertex_count):
        digits.append(rest % t)
        rest = rest // t
    return digits  # digits[v-1] is the value at vertex v


def count_proper_colorings(
    h: EdgeColoredHypergraph, t: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> int:
    """Exact count of proper colorings with t colors, by enumeration."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return 0
    total = t**h.vertex_count
    if total > budget.max_points:
        raise ResourceLimitError(
            f"{total} candidate colorings exceed the budget of {budget.max_points}",
            limit=budget.max_points,
        )
    table = _component_table(h)
    count = 0
    for start in range(0, total, budget.chunk):
        idx = np.arange(start, min(start + budget.chunk, total), dtype=np.int64)
        digits = _vertex_digits(idx, h.vertex_count, t)
        ok = np.ones(len(idx), dtype=bool)
        for components in table:
            # starts all-True, so an edgeless color (whole ambient space)
            # correctly kills every candidate
            all_mono = np.ones(len(idx), dtype=bool)
            for comp in components:
                eq = np.ones(len(idx), dtype=bool)
                for v in comp[1:]:
                    eq &= digits[comp[0] - 1] == digits[v - 1]
                all_mono &= eq
            ok &= ~all_mono
        count += int(np.count_nonzero(ok))
    return count


def integer_point_count(
    h: EdgeColoredHypergraph, s: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> int:
    """Points of {-s..s}^n lying on none of the arrangement's subspaces.

    A point lies on a color's subspace iff it is constant along every
    connected component of that color's edges.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    t = 2 * s + 1
    total = t**h.vertex_count
    if total > budget.max_points:
        raise ResourceLimitError(
            f"{total} lattice points exceed the budget of {budget.max_points}",
            limit=budget.max_points,
        )
    table = _component_table(h)
    count = 0
    for start in range(0, total, budget.chunk):
        idx = np.arange(start, min(start + budget.chunk, total), dtype=np.int64)
        coords = [d - s for d in _vertex_digits(idx, h.vertex_count, t)]
        on_some = np.zeros(len(idx), dtype=bool)
        for components in table:
            member = np.ones(len(idx), dtype=bool)
            for comp in components:
                for v in comp[1:]:
                    member &= coords[comp[0] - 1] == coords[v - 1]
            on_some |= member
        count += int(np.count_nonzero(~on_some))
    return count


def _canonical_key(h: EdgeColoredHypergraph):
    structures = sorted(
        tuple(sorted(tuple(sorted(e)) for e in h.edges_of(c))) for c in h.colors
    )
    relabel: dict[int, int] = {}
    for edges in structures:
        for e in edges:
            for v in e:
                if v not in relabel:
                    relabel[v] = len(relabel) + 1
    rebuilt = sorted(
        tuple(sorted(tuple(sorted(relabel[v] for v in e)) for e in edges))
        for edges in structures
    )
    return h.vertex_count, tuple(rebuilt)


def chromatic_polynomial(
    h: EdgeColoredHypergraph,
    choose_pivot: Callable[[EdgeColoredHypergraph], str] | None = None,
) -> IntPolynomial:
    """Deletion-contraction recursion with base case t^n for edgeless inputs.

    The default pivot is the color with fewest edges, ties broken by the
    canonical color order; the result is pivot-independent.
    """
    memo: dict = {}

    def default_pivot(g: EdgeColoredHypergraph) -> str:
        order = {c: i for i, c in enumerate(g.colors)}
        return min(g.colors, key=lambda c: (len(g.edges_of(c)), order[c]))

    pick = choose_pivot or default_pivot

    def rec(g: EdgeColoredHypergraph) -> IntPolynomial:
        if not g.colors:
            return IntPolynomial.monomial(g.vertex_count)
        key = _canonical_key(g)
        if key not in memo:
            pivot = pick(g)
            contracted = g.contract_color(pivot)
            # a color whose every edge collapsed inside a pivot component can
            # never witness a non-monochromatic component again, so the whole
            # contraction branch counts zero colorings
            killed = (set(g.colors) - {pivot}) - set(contracted.colors)
            right = IntPolynomial.zero() if killed else rec(contracted)
            memo[key] = rec(g.delete_color(pivot)) - right
        return memo[key]

    return rec(h)


def chromatic_polynomial_by_counting(
    h: EdgeColoredHypergraph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> IntPolynomial:
    """Interpolate the proper-coloring counts at t = 0..n exactly."""
    points = [(t, count_proper_colorings(h, t, budget)) for t in range(h.vertex_count + 1)]
    return interpolate_integer(points)
