"""Structural predicates on a basic set's transition matrices.

These are the finitely checkable conditions the certificates lean on:
block degeneracy, row/column support containments, corner extension
checks on 3x3 windows with one cell removed, and the closure that prunes
patterns unable to reach all four neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import oracle
from .core import BasicSet, pattern_coords, transition_pair
from .matrices import bool_mat, split_blocks
from .transfer import build_transition


def row_support(a):
    """1-based indices of the nonzero rows."""
    return frozenset(int(i) + 1 for i in np.flatnonzero(bool_mat(a).any(axis=1)))


def col_support(a):
    """1-based indices of the nonzero columns."""
    return frozenset(int(i) + 1 for i in np.flatnonzero(bool_mat(a).any(axis=0)))


def is_compressible(a):
    """True when the matrix has a zero row or a zero column."""
    m = bool_mat(a)
    return not (m.any(axis=1).all() and m.any(axis=0).all())


@dataclass(frozen=True)
class DirectionProfile:
    degenerated: bool
    weakly_nondegenerated: bool
    nondegenerated: bool
    compressible_blocks: tuple


@dataclass(frozen=True)
class StructureProfile:
    h: DirectionProfile
    v: DirectionProfile


def _direction_profile(mat, p):
    blocks = split_blocks(mat, p)
    compressible = tuple(
        a + 1 for a, blk in enumerate(blocks) if is_compressible(blk)
    )
    nondeg = not compressible
    weak = True
    for r in range(p):
        alive = [blocks[r * p + c] for c in range(p) if blocks[r * p + c].any()]
        if len({row_support(b) for b in alive}) > 1:
            weak = False
    for c in range(p):
        alive = [blocks[r * p + c] for r in range(p) if blocks[r * p + c].any()]
        if len({col_support(b) for b in alive}) > 1:
            weak = False
    return DirectionProfile(bool(compressible), weak, nondeg, compressible)


def degeneracy_profile(B):
    """Block compressibility and support alignment of both level-2 matrices."""
    h2, v2 = transition_pair(B)
    return StructureProfile(
        _direction_profile(h2, B.p), _direction_profile(v2, B.p)
    )


@dataclass(frozen=True)
class RExtendability:
    conditions: tuple  # four support containments
    crisscross: bool


def r_extendability(B):
    """Support containments between rows and columns of the level-2 matrices.

    The four conditions say, in order: every right-extendable column is
    left-extendable (horizontal), the same vertically, and the two reverse
    containments.  All four together make every pattern extendable to the
    plus-shaped union of its four neighbor windows.
    """
    h2, v2 = transition_pair(B)
    rh, ch = row_support(h2), col_support(h2)
    rv, cv = row_support(v2), col_support(v2)
    conds = (rh >= ch, rv >= cv, ch >= rh, cv >= rv)
    return RExtendability(conds, all(conds))


def corner_conditions(B):
    """Whether every admissible 3x3-minus-corner pattern regains its corner.

    Conditions are ordered by the missing corner: upper right, upper left,
    lower left, lower right.
    """
    full = oracle.rect_cells(3, 3)
    out = []
    for corner in [(2, 2), (0, 2), (0, 0), (2, 0)]:
        cells = [c for c in full if c != corner]
        ok = True
        for pat in oracle.iter_admissible(B, cells):
            if oracle.find_admissible(B, full, fixed=pat) is None:
                ok = False
                break
        out.append(ok)
    return tuple(out)


def _closure_step(B):
    h2, v2 = transition_pair(B)
    keep = []
    for pat in B.sorted_patterns():
        i1, j1, i2, j2 = pattern_coords(pat, B.p)
        if not h2[:, i1 - 1].any() or not h2[j1 - 1, :].any():
            continue
        if not v2[:, i2 - 1].any() or not v2[j2 - 1, :].any():
            continue
        keep.append(pat)
    if len(keep) == len(B):
        return B
    return BasicSet.vertex(B.p, keep)


@dataclass(frozen=True)
class ClosureResult:
    b_c: BasicSet
    b_star: BasicSet
    iterations: int


def crisscross_closure(B):
    """Iteratively drop patterns missing a neighbor on some side.

    b_c is the one-step result; b_star the fixpoint.  The fixpoint admits
    the same global colorings as B, and equals B exactly when every
    pattern of B extends to the plus shape.
    """
    if B.mode != "vertex":
        raise ValueError("vertex sets only")
    first = _closure_step(B)
    cur, iterations = first, 1
    limit = 2 * B.p * B.p + 1
    while True:
        nxt = _closure_step(cur)
        if len(nxt) == len(cur):
            break
        cur = nxt
        iterations += 1
        if iterations > limit:
            raise AssertionError("closure failed to stabilize within bound")
    return ClosureResult(first, cur, iterations)


def is_crisscross_extendable(B):
    return r_extendability(B).crisscross


def k_crisscross(B, k):
    """Level-k analogue: equal row and column supports of both matrices."""
    hk = build_transition(B, "h", k)
    vk = build_transition(B, "v", k)
    return row_support(hk) == col_support(hk) and row_support(vk) == col_support(vk)


@dataclass(frozen=True)
class RectangleExtendability:
    status: str  # "proved" | "evidence" | "unknown"
    basis: str | None


def infer_rectangle_extendability(B, n_cap=5):
    """Best available route to rectangle extendability.

    Proved when both level-2 matrices are non-degenerated, or when the
    closure fixes B and an opposite corner pair holds.  If neither route
    lands but no level up to n_cap is compressible, that is reported as
    evidence only.
    """
    prof = degeneracy_profile(B)
    if prof.h.nondegenerated and prof.v.nondegenerated:
        return RectangleExtendability("proved", "nondegenerate-transitions")
    if is_crisscross_extendable(B):
        c = corner_conditions(B)
        if (c[0] and c[2]) or (c[1] and c[3]):
            return RectangleExtendability("proved", "corner-closure")
    ok = True
    for n in range(2, n_cap + 1):
        if is_compressible(build_transition(B, "h", n)) or is_compressible(
            build_transition(B, "v", n)
        ):
            ok = False
            break
    if ok:
        return RectangleExtendability("evidence", "noncompressible-levels")
    return RectangleExtendability("unknown", None)
