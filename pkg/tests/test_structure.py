import pytest

from sftmix.core import BasicSet
from sftmix.examples import EXAMPLES
from sftmix.structure import (corner_conditions, crisscross_closure,
                              degeneracy_profile, infer_rectangle_extendability,
                              is_crisscross_extendable, k_crisscross,
                              r_extendability)


def test_golden_mean_profile():
    prof = degeneracy_profile(EXAMPLES["golden_mean"]())
    for d in (prof.h, prof.v):
        assert d.weakly_nondegenerated
        assert not d.nondegenerated
        assert d.compressible_blocks == (2, 3, 4)


def test_nondegenerate_example():
    prof = degeneracy_profile(EXAMPLES["cycle_example"]())
    assert prof.h.nondegenerated and prof.v.nondegenerated


def test_diagonal_halfplane_profile():
    # the u4 >= u1 rule kills weak nondegeneracy in both directions
    prof = degeneracy_profile(EXAMPLES["northeast_forcing"]())
    assert not prof.h.weakly_nondegenerated
    assert not prof.v.weakly_nondegenerated


def test_corner_conditions():
    assert corner_conditions(EXAMPLES["golden_mean"]()) == (True, True, True, True)
    assert corner_conditions(EXAMPLES["northeast_forcing"]()) == (True, False, True, False)
    full = BasicSet(2, frozenset(
        (a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)))
    assert corner_conditions(full) == (True, True, True, True)


def test_crisscross_extendable_examples():
    for name in ("golden_mean", "three_coloring", "northeast_forcing"):
        assert is_crisscross_extendable(EXAMPLES[name]())


def test_r_extendability_conditions():
    r = r_extendability(EXAMPLES["three_coloring"]())
    assert r.conditions == (True, True, True, True)
    assert r.crisscross


def test_closure_fixpoint_of_closed_set():
    B = EXAMPLES["golden_mean"]()
    cl = crisscross_closure(B)
    assert cl.b_star.patterns == B.patterns
    assert cl.iterations == 1


def test_closure_keeps_self_continuing_pattern():
    # the all-ones pattern continues by itself, so the fixpoint keeps it
    GM = EXAMPLES["golden_mean"]()
    aug = BasicSet(2, frozenset(set(GM.patterns) | {(1, 1, 1, 1)}))
    cl = crisscross_closure(aug)
    assert cl.b_star.patterns == aug.patterns


def test_closure_drops_dead_pattern():
    # (0,1,0,1) with everything else absent has no vertical continuation
    B = BasicSet(2, frozenset({(0, 1, 0, 1)}))
    cl = crisscross_closure(B)
    assert cl.b_star.patterns == frozenset()


def test_closure_constant_patterns_survive():
    B = BasicSet(2, frozenset({(0, 0, 0, 0), (1, 1, 1, 1)}))
    cl = crisscross_closure(B)
    assert cl.b_star.patterns == B.patterns
    assert cl.iterations == 1


def test_closure_rejects_edge_mode():
    with pytest.raises(ValueError):
        crisscross_closure(EXAMPLES["six_vertex"]())


def test_k_crisscross_levels():
    SGM = EXAMPLES["simplified_golden_mean"]()
    assert k_crisscross(SGM, 2)
    assert k_crisscross(SGM, 3)
    assert k_crisscross(EXAMPLES["golden_mean"](), 2)


def test_rectangle_extendability_statuses():
    assert infer_rectangle_extendability(EXAMPLES["golden_mean"]()).status == "proved"
    assert infer_rectangle_extendability(EXAMPLES["northeast_forcing"]()).status == "proved"
    res = infer_rectangle_extendability(EXAMPLES["boyle"]())
    assert res.status in ("proved", "evidence")
