"""Canonical basic sets used throughout the tests and the CLI.

Sets with a combinatorial rule are built from the rule; the rest are
defined by their horizontal transition matrix.
"""

from __future__ import annotations

from itertools import product

from .core import BasicSet


def _vertex_rule(p, keep):
    pats = [pat for pat in product(range(p), repeat=4) if keep(*pat)]
    return BasicSet.vertex(p, pats)


def golden_mean():
    """Hard-square constraint: no two orthogonally adjacent ones."""
    return _vertex_rule(
        2,
        lambda u00, u10, u01, u11: u00 * u10 == 0
        and u01 * u11 == 0
        and u00 * u01 == 0
        and u10 * u11 == 0,
    )


def simplified_golden_mean():
    """At most one 1 in every 2x2 block."""
    return _vertex_rule(2, lambda *us: sum(us) <= 1)


def three_coloring():
    """Proper 3-colorings: orthogonal neighbors carry distinct symbols."""
    return _vertex_rule(
        3,
        lambda u00, u10, u01, u11: u00 != u10
        and u01 != u11
        and u00 != u01
        and u10 != u11,
    )


def northeast_forcing():
    """A 1 forces a 1 at its upper-right diagonal neighbor."""
    return _vertex_rule(2, lambda u00, u10, u01, u11: not (u00 == 1 and u11 == 0))


def boyle():
    """All 2x2 blocks except a single 1 in the upper-right corner of 0s."""
    return _vertex_rule(2, lambda *us: us != (0, 0, 0, 1))


def ledrappier_variant():
    """Parity rule: the bottom-right, top-left and top-right cells sum to 0 mod 2."""
    return _vertex_rule(2, lambda u00, u10, u01, u11: (u10 + u01 + u11) % 2 == 0)


def burton_steif():
    """Symbols {-2,-1,1,2} as 0..3; opposite signs may only meet through -1,+1."""

    def compatible(s, t):
        neg_s, neg_t = s < 2, t < 2
        if neg_s == neg_t:
            return True
        return {s, t} == {1, 2}

    return _vertex_rule(
        4,
        lambda u00, u10, u01, u11: compatible(u00, u10)
        and compatible(u01, u11)
        and compatible(u00, u01)
        and compatible(u10, u11),
    )


def cycle_example():
    """p = 2 set certified through a diagonal cycle at order (3,1)."""
    return BasicSet.from_h2(
        [[1, 0, 0, 1], [1, 1, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0]]
    )


def pair_example():
    """p = 3 set certified through a commutative cycle pair at length 7."""
    return BasicSet.from_h2(
        [
            [0, 0, 1, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 1, 0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 1, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 1, 1, 0, 0],
        ]
    )


def near_full_a():
    """16 minus 3 blocks; satisfies hole filling at window (3,3)."""
    return BasicSet.from_h2(
        [[1, 1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1], [1, 1, 1, 0]]
    )


def near_full_b():
    """16 minus 2 blocks; satisfies hole filling at window (4,4)."""
    return BasicSet.from_h2(
        [[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1], [0, 1, 1, 1]]
    )


def full_set(p=2):
    """Every 2x2 block allowed."""
    return BasicSet.full(p)


def six_vertex():
    """Ice-rule tiles: two arrows in, two out (edges 1 = up/right)."""
    tiles = [
        (0, 0, 0, 0),
        (0, 0, 1, 1),
        (0, 1, 1, 0),
        (1, 0, 0, 1),
        (1, 1, 0, 0),
        (1, 1, 1, 1),
    ]
    return BasicSet.edge(2, tiles)


def eight_vertex():
    """Tiles with an even number of 1-edges."""
    tiles = [t for t in product((0, 1), repeat=4) if sum(t) % 2 == 0]
    return BasicSet.edge(2, tiles)


def full_edge_set(p=2):
    """Every edge tile allowed."""
    return BasicSet.full(p, mode="edge")


EXAMPLES = {
    "golden_mean": golden_mean,
    "simplified_golden_mean": simplified_golden_mean,
    "three_coloring": three_coloring,
    "northeast_forcing": northeast_forcing,
    "boyle": boyle,
    "ledrappier_variant": ledrappier_variant,
    "burton_steif": burton_steif,
    "cycle_example": cycle_example,
    "pair_example": pair_example,
    "near_full_a": near_full_a,
    "near_full_b": near_full_b,
    "full_set": full_set,
    "six_vertex": six_vertex,
    "eight_vertex": eight_vertex,
    "full_edge_set": full_edge_set,
}
