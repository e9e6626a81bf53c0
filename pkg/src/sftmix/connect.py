"""Connecting operators between consecutive strip widths.

A connecting block records which two-column (or two-row) strips of a given
length are admissible, split by the symbols at the four strip corners.
Two indexings are used: the raw grid indexed by column pairs, and the
corner-pair indexing that aligns blocks with products of transition
matrices one level up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import BasicSet, CapExceeded, psi, unpsi
from .matrices import split_blocks
from .transfer import _assemble, axis_name, axis_pair, elementary_table

FAMILY_ENTRY_CAP = 1 << 26


@lru_cache(maxsize=None)
def _c_block(B, axis, m, i, j):
    """Raw order-m connecting block for column-pair indices (i, j)."""
    along, across = axis_pair(B, axis)
    p = B.p
    if m == 2:
        cross = split_blocks(across, p)[i - 1]
        tilde = along[:, j - 1].reshape(p, p)
        out = (cross * tilde).astype(np.uint8)
    else:
        parts = [
            along[i - 1, b] * _c_block(B, axis, m - 1, b + 1, j)
            for b in range(p * p)
        ]
        out = _assemble(parts, p)
    out.setflags(write=False)
    return out


def connecting_block(B, direction, m, alpha, beta):
    """Corner-indexed block: alpha names the bottom corners, beta the top."""
    p = B.p
    a1, a2 = unpsi(alpha, 2, p)
    b1, b2 = unpsi(beta, 2, p)
    i = psi((a1, b1), p)
    j = psi((a2, b2), p)
    return _c_block(B, axis_name(direction), m, i, j)


@dataclass(frozen=True)
class ConnectorFamily:
    """All order-m connecting blocks of one direction, corner-indexed."""

    p: int
    m: int
    kind: str  # "S" for horizontal strips, "W" for vertical
    blocks: np.ndarray  # (p*p, p*p, p^(m-1), p^(m-1)) uint8

    def block(self, alpha, beta):
        return self.blocks[alpha - 1, beta - 1]

    @property
    def dim(self):
        return self.blocks.shape[2]


def build_connecting(B, direction, m):
    """Materialize the corner-indexed order-m family for a direction."""
    if not isinstance(B, BasicSet):
        raise TypeError("BasicSet required")
    if B.mode != "vertex":
        raise ValueError("vertex sets only")
    if m < 2:
        raise ValueError("m >= 2 required")
    p = B.p
    d = p ** (m - 1)
    if (p * p * d) ** 2 > FAMILY_ENTRY_CAP:
        raise CapExceeded("connecting family at order {} over cap".format(m))
    axis = axis_name(direction)
    blocks = np.zeros((p * p, p * p, d, d), dtype=np.uint8)
    for alpha in range(1, p * p + 1):
        for beta in range(1, p * p + 1):
            blocks[alpha - 1, beta - 1] = connecting_block(B, axis, m, alpha, beta)
    blocks.setflags(write=False)
    return ConnectorFamily(p, m, "S" if axis == "h" else "W", blocks)


def connector_entry(B, direction, m, alpha, beta, s, t):
    """Single block entry, evaluated without building any block.

    The entry is 1 exactly when the strip whose corner and interior words
    are named by (alpha, beta, s, t) is admissible: a product of level-2
    lookups over consecutive column pairs.
    """
    along, _ = axis_pair(B, direction)
    p = B.p
    a = unpsi(alpha, 2, p)
    b = unpsi(beta, 2, p)
    sm = unpsi(s, m - 1, p)
    tm = unpsi(t, m - 1, p)
    bottom = (a[0],) + sm + (a[1],)
    top = (b[0],) + tm + (b[1],)
    out = 1
    for x in range(m):
        g0 = psi((bottom[x], top[x]), p)
        g1 = psi((bottom[x + 1], top[x + 1]), p)
        out *= int(along[g0 - 1, g1 - 1])
        if not out:
            break
    return out


def connector_entry_pattern(p, m, alpha, beta, s, t, orientation="h"):
    """Cells of the strip pattern named by a block entry.

    Horizontal orientation: (m+1) columns, two rows; alpha holds the two
    bottom corners, beta the top corners, s and t the interior words.
    Vertical orientation transposes the cells.
    """
    a = unpsi(alpha, 2, p)
    b = unpsi(beta, 2, p)
    sm = unpsi(s, m - 1, p)
    tm = unpsi(t, m - 1, p)
    bottom = (a[0],) + sm + (a[1],)
    top = (b[0],) + tm + (b[1],)
    cells = {}
    for x in range(m + 1):
        if orientation == "h":
            cells[(x, 0)] = bottom[x]
            cells[(x, 1)] = top[x]
        else:
            cells[(0, x)] = bottom[x]
            cells[(1, x)] = top[x]
    return cells


def verify_connect_reduction(B, m, n, q):
    """Check that connecting blocks tie consecutive levels together.

    Three identities, each over every corner pair: the base level where
    block row sums reproduce order-m window counts; one level up, where
    blocks transport the level-n table to level n+1; and q-fold chains,
    where summed chain columns rebuild sub-blocks of the m-th power of the
    level-(n+q) matrix.
    """
    from .transfer import build_transition, path_offsets, power_with_saturation

    p = B.p
    for direction in ("h", "v"):
        fam = build_connecting(B, direction, m)
        base = elementary_table(B, direction, m, 2)
        tab_n = elementary_table(B, direction, m, n)
        tab_n1 = elementary_table(B, direction, m, n + 1)
        kmax = p ** (m - 1)
        for alpha in range(1, p * p + 1):
            for beta in range(1, p * p + 1):
                blk = fam.block(alpha, beta).astype(np.int64)
                rowsums = blk.sum(axis=1)
                br, bc = (beta - 1) // p, (beta - 1) % p
                for k in range(1, kmax + 1):
                    if base[alpha][k - 1].a[br, bc] != rowsums[k - 1]:
                        return False
                    d = p ** (n - 1)
                    sub = tab_n1[alpha][k - 1].a[
                        br * d : (br + 1) * d, bc * d : (bc + 1) * d
                    ]
                    want = sum(
                        int(blk[k - 1, l - 1]) * tab_n[beta][l - 1].a
                        for l in range(1, kmax + 1)
                    )
                    if not np.array_equal(sub, want):
                        return False
        big = power_with_saturation(build_transition(B, direction, n + q), m)
        if big.saturated:
            raise CapExceeded("power counts saturated during verification")
        d = p ** (n - 1)
        for flat in range((p * p) ** (q + 1)):
            path = tuple(x + 1 for x in unpsi(flat + 1, q + 1, p * p))
            chain = fam.block(path[0], path[1]).astype(np.int64)
            for a, b in zip(path[1:], path[2:]):
                chain = chain @ fam.block(a, b).astype(np.int64)
            colsums = chain.sum(axis=0)
            row, col = path_offsets(path, n, p)
            sub = big.a[row : row + d, col : col + d]
            want = sum(
                int(colsums[l - 1]) * tab_n[path[-1]][l - 1].a
                for l in range(1, kmax + 1)
            )
            if not np.array_equal(sub, want):
                return False
    return True
