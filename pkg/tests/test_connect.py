import numpy as np

from sftmix.connect import (build_connecting, connecting_block, connector_entry,
                            connector_entry_pattern, verify_connect_reduction)
from sftmix.examples import EXAMPLES


def strip_admissible(B, cells):
    """Every 2x2 subblock of the assignment lies in B."""
    xs = max(x for x, y in cells)
    ys = max(y for x, y in cells)
    for x in range(xs):
        for y in range(ys):
            blk = (cells[(x, y)], cells[(x + 1, y)],
                   cells[(x, y + 1)], cells[(x + 1, y + 1)])
            if blk not in B.patterns:
                return False
    return True


def test_family_shape():
    B = EXAMPLES["three_coloring"]()
    fam = build_connecting(B, "h", 3)
    assert fam.p == 3 and fam.m == 3
    assert fam.blocks.shape == (9, 9, 9, 9)


def test_connecting_block_indexes_family():
    B = EXAMPLES["golden_mean"]()
    fam = build_connecting(B, "h", 2)
    for a in range(1, 5):
        for b in range(1, 5):
            blk = connecting_block(B, "h", 2, a, b)
            assert (blk == fam.blocks[a - 1, b - 1]).all()


def test_entry_matches_strip_semantics():
    # sampled tuples: a 1 entry means exactly that the strip is admissible
    rng = np.random.default_rng(11)
    for name in ("golden_mean", "cycle_example", "three_coloring"):
        B = EXAMPLES[name]()
        p = B.p
        for _ in range(40):
            m = int(rng.integers(2, 4))
            ori = "h" if rng.integers(2) else "v"
            a = int(rng.integers(1, p * p + 1))
            b = int(rng.integers(1, p * p + 1))
            s = int(rng.integers(1, p ** (m - 1) + 1))
            t = int(rng.integers(1, p ** (m - 1) + 1))
            cells = connector_entry_pattern(p, m, a, b, s, t, ori)
            assert bool(connector_entry(B, ori, m, a, b, s, t)) == strip_admissible(B, cells)


def test_vertical_family_swaps_axes():
    B = EXAMPLES["cycle_example"]()
    from sftmix.core import BasicSet
    swapped = BasicSet(B.p, frozenset(
        (u00, u01, u10, u11) for (u00, u10, u01, u11) in B.patterns))
    for a in (1, 2, 3):
        for b in (1, 4):
            got = connecting_block(B, "v", 2, a, b)
            want = connecting_block(swapped, "h", 2, a, b)
            assert (got == want).all()


def test_verify_connect_reduction_sampled():
    for name, grid in [("golden_mean", [(2, 2, 1), (3, 2, 2), (2, 3, 1)]),
                       ("three_coloring", [(2, 2, 1), (3, 2, 1)]),
                       ("boyle", [(2, 2, 2), (3, 3, 1)])]:
        B = EXAMPLES[name]()
        for m, n, q in grid:
            assert verify_connect_reduction(B, m, n, q)
