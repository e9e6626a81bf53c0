"""End-to-end checks pinning the library's verdicts on the example corpus."""

from itertools import product

import numpy as np
import pytest

from sftmix.certify import (CommutativePairCert, DiagonalCycleCert,
                            check_invariant_cycle_conditions, check_pair_conditions,
                            find_commutative_pair, find_invariant_diagonal_cycle,
                            mixing_verdict, primitivity_all_n_certificate)
from sftmix.connect import (connecting_block, connector_entry,
                            connector_entry_pattern, verify_connect_reduction)
from sftmix.core import BasicSet
from sftmix.edge import (edge_certificates, edge_connector, edge_family,
                         verify_edge_reduction)
from sftmix.examples import EXAMPLES
from sftmix.holefill import (check_hfc, check_hfc_k, replay_strong_specification,
                             strong_specification_verdict, ufp_corner_gluing_evidence,
                             validate_hfc_witness)
from sftmix.matrices import (bool_power, is_N_primitive, primitivity_analysis,
                             saturated, split_blocks)
from sftmix.oracle import (brute_fill_annulus, brute_glue_window, rect_cells,
                           transfer_count_crosscheck)
from sftmix.structure import (corner_conditions, degeneracy_profile, k_crisscross)
from sftmix.transfer import build_transition, elementary_pattern, verify_reduction


def test_criterion_01_golden_mean_full_route():
    GM = EXAMPLES["golden_mean"]()
    H2 = build_transition(GM, "h", 2).astype(int)
    assert H2.tolist() == [[1, 1, 1, 0], [1, 0, 1, 0], [1, 1, 0, 0], [0, 0, 0, 0]]
    assert saturated(H2).astype(int).tolist() == [
        [1, 1, 1, 0], [1, 1, 1, 0], [1, 1, 1, 0], [0, 0, 0, 0],
    ]
    table = {
        (1, 1): [[1, 1], [1, 0]],
        (1, 2): [[1, 0], [1, 0]], (1, 3): [[1, 0], [1, 0]], (1, 4): [[1, 0], [1, 0]],
        (2, 1): [[1, 1], [0, 0]], (3, 1): [[1, 1], [0, 0]], (4, 1): [[1, 1], [0, 0]],
        (2, 3): [[1, 0], [0, 0]], (3, 2): [[1, 0], [0, 0]],
    }
    for a in range(1, 5):
        for b in range(1, 5):
            want = table.get((a, b), [[0, 0], [0, 0]])
            assert connecting_block(GM, "h", 2, a, b).astype(int).tolist() == want
    cert = find_invariant_diagonal_cycle(GM, "h")
    assert cert == DiagonalCycleCert("h", 2, (1,), (1, 2))
    assert check_invariant_cycle_conditions(GM, cert).ok
    sel = elementary_pattern(GM, "h", 2, 2, 1, 1) + elementary_pattern(GM, "h", 2, 2, 1, 2)
    assert sel.a.tolist() == [[3, 2], [2, 2]]
    assert is_N_primitive(H2, 2)
    assert mixing_verdict(GM).status == "proved"
    assert check_hfc(GM, 1, 1).holds
    assert strong_specification_verdict(GM).status == "proved"


def test_criterion_02_cycle_example_pair():
    CE = EXAMPLES["cycle_example"]()
    assert connecting_block(CE, "h", 3, 1, 1).astype(int).tolist() == [
        [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0],
    ]
    cert = find_invariant_diagonal_cycle(CE, "h")
    assert cert == DiagonalCycleCert("h", 3, (1,), (3, 4))
    pair = CommutativePairCert("v", (2, 1, 1, 2, 1), (2, 2), 7, 4, 12, 51, 1, ("KL",))
    assert check_pair_conditions(CE, pair).ok
    assert connector_entry(CE, "v", 7, 4, 4, 12, 51) == 1
    assert mixing_verdict(CE).status == "proved"


def test_criterion_03_pair_example_certificate():
    PE = EXAMPLES["pair_example"]()
    assert elementary_pattern(PE, "h", 7, 2, 1, 513).a.tolist() == [
        [1, 0, 1], [0, 0, 0], [1, 0, 0],
    ]
    assert elementary_pattern(PE, "h", 7, 2, 1, 709).a.tolist() == [
        [0, 0, 1], [0, 0, 0], [1, 0, 1],
    ]
    e21 = split_blocks(saturated(build_transition(PE, "h", 2)), 3)[0]
    assert e21.astype(int).tolist() == [[1, 0, 1], [0, 0, 0], [1, 0, 1]]
    pair = CommutativePairCert("h", (1, 3, 1), (1, 3, 3, 3), 7, 1, 513, 709, 2, ("KL",))
    assert check_pair_conditions(PE, pair).ok
    assert connector_entry(PE, "h", 7, 1, 1, 513, 709) == 1
    assert primitivity_all_n_certificate(PE, "h").status == "proved"


def test_criterion_04_three_coloring_cycle():
    TC = EXAMPLES["three_coloring"]()
    assert build_transition(TC, "h", 2).astype(int).tolist() == [
        [0] * 9,
        [0, 0, 0, 1, 0, 1, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 1, 1, 0, 0, 0, 0, 1, 0],
        [0] * 9,
        [0, 1, 0, 0, 0, 0, 1, 1, 0],
        [0, 1, 1, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 0, 0, 0],
        [0] * 9,
    ]
    s15 = connecting_block(TC, "h", 2, 1, 5).astype(int)
    s51 = connecting_block(TC, "h", 2, 5, 1).astype(int)
    assert s15.tolist() == [[0, 0, 0], [1, 0, 1], [1, 0, 0]]
    assert s51.tolist() == [[0, 1, 1], [0, 0, 0], [0, 1, 0]]
    assert (s15 @ s51).tolist() == [[0, 0, 0], [0, 2, 1], [0, 1, 1]]
    cert = find_invariant_diagonal_cycle(TC, "h")
    assert cert == DiagonalCycleCert("h", 2, (1, 5), (2, 3))
    assert mixing_verdict(TC).status == "proved"


def test_criterion_05_northeast_forcing_obstructions():
    NE = EXAMPLES["northeast_forcing"]()
    assert build_transition(NE, "h", 2).astype(int).tolist() == [
        [1, 1, 1, 1], [1, 1, 1, 1], [0, 1, 0, 1], [0, 1, 0, 1],
    ]
    assert corner_conditions(NE) == (True, False, True, False)
    prof = degeneracy_profile(NE)
    assert not prof.h.weakly_nondegenerated and not prof.v.weakly_nondegenerated
    assert mixing_verdict(NE).status == "unknown"
    # a one at the origin cannot coexist with a zero far northeast
    assert not brute_glue_window(NE, {(0, 0): 1}, {(6, 6): 0}, rect_cells(7, 7))


def test_criterion_06_simplified_golden_mean_level_three():
    SGM = EXAMPLES["simplified_golden_mean"]()
    for M in (1, 2, 3):
        for N in (1, 2, 3):
            assert not check_hfc(SGM, M, N).holds
    assert check_hfc_k(SGM, 3, 3, 3).holds
    assert k_crisscross(SGM, 3)
    assert is_N_primitive(build_transition(SGM, "h", 3), 2)
    v = strong_specification_verdict(SGM, k_max=3, MN_max=3)
    assert v.status == "proved" and v.certificate["k"] == 3


@pytest.mark.slow
def test_criterion_07_burton_steif_hole_filling():
    BS = EXAMPLES["burton_steif"]()
    H2 = build_transition(BS, "h", 2).astype(int)
    assert H2.tolist() == [
        [1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0] * 16,
        [0] * 16,
        [1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0],
        [0] * 16,
        [0] * 16,
        [0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1],
        [0] * 16,
        [0] * 16,
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
    ]
    assert np.array_equal(H2, build_transition(BS, "v", 2).astype(int))
    assert not is_N_primitive(H2, 2)
    assert is_N_primitive(H2, 3)
    res = check_hfc(BS, 2, 2)
    assert res.holds and res.checked == 254256
    assert strong_specification_verdict(BS).status == "proved"


def test_criterion_08_near_full_sets_windows():
    NA = EXAMPLES["near_full_a"]()
    NB = EXAMPLES["near_full_b"]()
    assert build_transition(NA, "h", 2).astype(int).tolist() == [
        [1, 1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1], [1, 1, 1, 0],
    ]
    assert build_transition(NB, "h", 2).astype(int).tolist() == [
        [1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1], [0, 1, 1, 1],
    ]
    assert check_hfc(NA, 3, 3).holds
    assert check_hfc(NB, 4, 4).holds
    va = strong_specification_verdict(NA)
    vb = strong_specification_verdict(NB)
    assert va.status == "proved" and vb.status == "proved"


def test_criterion_09_boyle_witness_and_unknown():
    BO = EXAMPLES["boyle"]()
    res = check_hfc(BO, 1, 1)
    assert not res.holds
    assert res.witness == {"alphas": [1, 1, 1, 1, 1], "i": 1, "j": 2}
    assert validate_hfc_witness(BO, 2, 1, 1, res.witness)
    v = strong_specification_verdict(BO)
    assert v.status == "unknown"
    # the stored refuting window replays as not-proved as well
    assert replay_strong_specification(
        BO, {"certificate": {"k": 2, "M": 1, "N": 1}, "caps": {}}
    ).status == "unknown"


def test_criterion_10_six_vertex_edge_certificates():
    SV = EXAMPLES["six_vertex"]()
    fam = edge_family(SV, "h", 2)
    assert [b.tolist() for b in fam] == [
        [[1, 0], [0, 1]], [[0, 0], [1, 0]], [[0, 1], [0, 0]], [[1, 0], [0, 1]],
    ]
    assert edge_connector(SV, "h", 2, 1).tolist() == [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1],
    ]
    v = edge_certificates(SV)
    assert v.status == "proved" and v.theorem == "edge-cycle-certificates"
    payload = v.certificate["h"]
    assert payload["m"] == 2 and payload["word"] == [1]
    assert payload["K"] == [1, 2, 3, 4]


def test_criterion_11_eight_vertex_annulus_failures():
    EV = EXAMPLES["eight_vertex"]()
    assert not brute_fill_annulus(EV, 2, 1, 1).holds
    assert not brute_fill_annulus(EV, 3, 3, 3).holds
    assert edge_certificates(EV).status == "proved"


def test_criterion_12_property_suite_counts():
    for name in EXAMPLES:
        assert transfer_count_crosscheck(EXAMPLES[name](), 4, 4).ok, name


def test_criterion_12_property_suite_reductions():
    GM = EXAMPLES["golden_mean"]()
    TC = EXAMPLES["three_coloring"]()
    assert verify_reduction(GM, 3, 1) and verify_reduction(GM, 4, 2)
    assert verify_reduction(TC, 3, 2)
    assert verify_connect_reduction(GM, 2, 3, 1) and verify_connect_reduction(GM, 3, 3, 2)
    assert verify_connect_reduction(TC, 2, 3, 1)
    assert verify_edge_reduction(EXAMPLES["six_vertex"](), 2, 3, 1)
    assert verify_edge_reduction(EXAMPLES["eight_vertex"](), 2, 3, 1)


def _strip_admissible(B, cells):
    xs = max(x for x, y in cells)
    ys = max(y for x, y in cells)
    for x in range(xs):
        for y in range(ys):
            blk = (cells[(x, y)], cells[(x + 1, y)],
                   cells[(x, y + 1)], cells[(x + 1, y + 1)])
            if blk not in B.patterns:
                return False
    return True


def test_criterion_12_property_suite_entry_semantics():
    rng = np.random.default_rng(12)
    sets = [EXAMPLES[n]() for n in ("golden_mean", "cycle_example", "three_coloring")]
    for i in range(100):
        B = sets[i % 3]
        p = B.p
        m = int(rng.integers(2, 4))
        ori = "h" if rng.integers(2) else "v"
        a = int(rng.integers(1, p * p + 1))
        b = int(rng.integers(1, p * p + 1))
        s = int(rng.integers(1, p ** (m - 1) + 1))
        t = int(rng.integers(1, p ** (m - 1) + 1))
        cells = connector_entry_pattern(p, m, a, b, s, t, ori)
        assert bool(connector_entry(B, ori, m, a, b, s, t)) == _strip_admissible(B, cells)


def test_criterion_12_property_suite_primitivity():
    rng = np.random.default_rng(20260822)
    for _ in range(40):
        dim = int(rng.integers(2, 9))
        a = rng.random((dim, dim)) < float(rng.uniform(0.2, 0.7))
        rep = primitivity_analysis(a)
        e = saturated(a).astype(int)
        bound = dim * dim + dim
        hits = [n for n in range(1, bound + 1)
                if (bool_power(a, n).astype(int) >= e).all()]
        direct = bool(hits) and hits[-1] == bound and len(hits) == bound - hits[0] + 1
        assert rep.primitive == direct
        if rep.primitive:
            assert rep.n0 == hits[0]


# brute enumeration cost rules the window list for each example set
_ANNULUS_GRID = {
    "golden_mean": [(2, 1, 1), (2, 2, 2), (3, 3, 3)],
    "simplified_golden_mean": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "three_coloring": [(2, 1, 1), (2, 2, 2)],
    "northeast_forcing": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "boyle": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "ledrappier_variant": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "burton_steif": [(2, 1, 1)],
    "cycle_example": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "pair_example": [(2, 1, 1), (2, 2, 2), (3, 3, 3)],
    "near_full_a": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "near_full_b": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
    "full_set": [(2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 3)],
}


def test_criterion_12_property_suite_annulus_agreement():
    for name, combos in _ANNULUS_GRID.items():
        B = EXAMPLES[name]()
        for k, M, N in combos:
            a = check_hfc_k(B, k, M, N).holds
            b = brute_fill_annulus(B, k, M, N).holds
            assert a == b, (name, k, M, N)
    rng = np.random.default_rng(20260822)
    densities = (0.5, 0.65, 0.8, 0.95)
    for i in range(50):
        d = densities[i % 4]
        pats = frozenset(t for t in product((0, 1), repeat=4) if rng.random() < d)
        if not pats:
            pats = frozenset({(0, 0, 0, 0)})
        B = BasicSet.vertex(2, pats)
        combos = [(2, 1, 1), (2, 2, 2)]
        if i % 10 == 0:
            combos += [(2, 3, 3), (3, 3, 3)]
        for k, M, N in combos:
            a = check_hfc_k(B, k, M, N).holds
            b = brute_fill_annulus(B, k, M, N).holds
            assert a == b, (i, k, M, N)


def test_criterion_13_ledrappier_variant_evidence_only():
    LV = EXAMPLES["ledrappier_variant"]()
    for direction in ("h", "v"):
        assert find_invariant_diagonal_cycle(LV, direction) is None
        assert find_commutative_pair(LV, direction) is None
    for n in range(2, 7):
        H = build_transition(LV, "h", n)
        assert np.array_equal(H, build_transition(LV, "v", n))
        assert primitivity_analysis(H).primitive
    assert primitivity_all_n_certificate(LV, "h").status == "evidence"
    assert mixing_verdict(LV).status == "unknown"


def test_criterion_14_bounded_gluing_checks():
    GM = EXAMPLES["golden_mean"]()
    v = ufp_corner_gluing_evidence(GM, "ufp", 2, 3, 3)
    assert v.status == "evidence"
    assert v.certificate["windows"] == [[2, 2], [2, 3], [3, 2], [3, 3]]
    BO = EXAMPLES["boyle"]()
    for g in (0, 1, 2):
        w = ufp_corner_gluing_evidence(BO, "corner", g, 3, 3)
        assert w.status == "refuted"
        assert w.certificate["witness"] == {
            "s": 1, "t": 1, "a": 1, "b": 2, "g": g, "m": 2, "n": 2,
        }
