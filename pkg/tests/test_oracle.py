import pytest

from sftmix.core import BasicSet, CapExceeded
from sftmix.examples import EXAMPLES
from sftmix.oracle import (annulus_cells, brute_fill_annulus, brute_glue_window,
                           enumerate_admissible, find_admissible, rect_cells,
                           transfer_count_crosscheck, window_variables,
                           witness_assignment)


def test_rect_cells_raster_order():
    cells = rect_cells(2, 3)
    assert cells == [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)]


def test_annulus_cells_excludes_hole():
    cells = set(annulus_cells(1, 1, 2))
    assert (0, 0) not in cells
    assert (-1, -1) in cells and (2, 2) in cells
    # ring of thickness 2 around a 1x1 hole
    assert len(cells) == 5 * 5 - 1


def test_enumerate_counts_windows():
    GM = EXAMPLES["golden_mean"]()
    assert enumerate_admissible(GM, rect_cells(1, 1)).count == 2
    assert enumerate_admissible(GM, rect_cells(2, 2)).count == 7
    TC = EXAMPLES["three_coloring"]()
    assert enumerate_admissible(TC, rect_cells(2, 2)).count == 18


def test_enumerate_empty_set():
    B = BasicSet(2, frozenset())
    assert enumerate_admissible(B, rect_cells(2, 2)).count == 0


def test_find_admissible_respects_pins():
    GM = EXAMPLES["golden_mean"]()
    asn = find_admissible(GM, rect_cells(3, 3), {(1, 1): 1})
    assert asn is not None and asn[(1, 1)] == 1
    # two horizontally adjacent ones cannot appear once a 2x2 block sees them
    assert find_admissible(GM, rect_cells(2, 2), {(0, 0): 1, (1, 0): 1}) is None
    # a 2x1 strip contains no 2x2 block, so nothing constrains it
    assert find_admissible(GM, rect_cells(2, 1), {(0, 0): 1, (1, 0): 1}) is not None


def test_witness_assignment_inverts_serialized_pairs():
    GM = EXAMPLES["golden_mean"]()
    asn = find_admissible(GM, rect_cells(2, 2), {})
    ser = sorted((list(k), v) for k, v in asn.items())
    assert witness_assignment(ser) == asn


def test_window_variables_edge_mode():
    SV = EXAMPLES["six_vertex"]()
    vars_ = window_variables(SV, rect_cells(1, 1))
    # one cell owns its four surrounding edges
    assert sorted(vars_) == [("h", 0, 0), ("h", 0, 1), ("v", 0, 0), ("v", 1, 0)]


def test_edge_window_count():
    SV = EXAMPLES["six_vertex"]()
    assert enumerate_admissible(SV, rect_cells(1, 1)).count == 6
    EV = EXAMPLES["eight_vertex"]()
    assert enumerate_admissible(EV, rect_cells(1, 1)).count == 8


def test_glue_window_positive():
    GM = EXAMPLES["golden_mean"]()
    assert brute_glue_window(GM, {(0, 0): 1}, {(3, 3): 1}, rect_cells(4, 4))
    assert brute_glue_window(GM, {(0, 0): 1}, {(1, 1): 1}, rect_cells(2, 2))


def test_glue_window_detects_conflict():
    GM = EXAMPLES["golden_mean"]()
    assert not brute_glue_window(GM, {(0, 0): 1}, {(1, 0): 1}, rect_cells(2, 2))
    # thin windows carry no 2x2 blocks and glue vacuously
    assert brute_glue_window(GM, {(0, 0): 1}, {(1, 0): 1}, rect_cells(2, 1))


def test_crosscheck_small_grid():
    report = transfer_count_crosscheck(EXAMPLES["golden_mean"](), 3, 3)
    assert report.ok
    for row in report.rows:
        assert row.matrix_count == row.oracle_count


def test_annulus_methods_agree():
    for name in ("golden_mean", "simplified_golden_mean"):
        B = EXAMPLES[name]()
        a = brute_fill_annulus(B, 2, 1, 1, method="interface")
        b = brute_fill_annulus(B, 2, 1, 1, method="literal")
        assert a.holds == b.holds


def test_annulus_rejects_unknown_method():
    with pytest.raises(ValueError):
        brute_fill_annulus(EXAMPLES["golden_mean"](), 2, 1, 1, method="guess")
