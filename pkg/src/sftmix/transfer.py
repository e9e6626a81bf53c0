"""Transition matrices for strips of growing width.

The level-n matrix of a vertex set records which height-n columns can sit
next to which; its m-th power counts (m+1) x n window patterns.  Levels
are built recursively: the level-n matrix is a p x p grid of blocks, one
per (bottom symbol, top symbol) pair of the new column cells, each block a
weighted copy of a level-(n-1) family member.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import BasicSet, CapExceeded, psi, transition_pair, unpsi
from .matrices import CountMatrix, split_blocks

TRANSITION_DIM_CAP = 1 << 12


def axis_name(direction):
    """Normalize a direction spelling to "h" or "v"."""
    d = str(direction).lower()
    if d in ("h", "horizontal", "x"):
        return "h"
    if d in ("v", "vertical", "y"):
        return "v"
    raise ValueError("unknown direction: {!r}".format(direction))


def axis_pair(B, direction):
    """(along, across) level-2 matrices for the requested direction."""
    h2, v2 = transition_pair(B)
    return (h2, v2) if axis_name(direction) == "h" else (v2, h2)


def _assemble(parts, p):
    """Glue p*p equally sized blocks, row-major, into one matrix."""
    d = parts[0].shape[0]
    arr = np.stack(parts).reshape(p, p, d, d)
    return np.ascontiguousarray(arr.transpose(0, 2, 1, 3).reshape(p * d, p * d))


@lru_cache(maxsize=None)
def _family(B, axis, n):
    """The p*p level-n blocks, indexed 0-based by psi(bottom, top) - 1."""
    along, across = axis_pair(B, axis)
    p = B.p
    if n == 2:
        parts = [m.copy() for m in split_blocks(along, p)]
    else:
        prev = _family(B, axis, n - 1)
        parts = []
        for a in range(p * p):
            grid = [across[a, b] * prev[b] for b in range(p * p)]
            parts.append(_assemble(grid, p))
    for m in parts:
        m.setflags(write=False)
    return tuple(parts)


def build_transition(B, direction, n):
    """Level-n transition matrix (0/1, dimension p^n) for the direction."""
    if not isinstance(B, BasicSet):
        raise TypeError("BasicSet required")
    if B.mode != "vertex":
        raise ValueError("vertex sets only; edge sets have their own builder")
    if n < 2:
        raise ValueError("n >= 2 required")
    axis = axis_name(direction)
    if B.p**n > TRANSITION_DIM_CAP:
        raise CapExceeded("transition dimension p^{} over cap".format(n))
    out = _assemble(list(_family(B, axis, n)), B.p)
    out.setflags(write=False)
    return out


def transition_block(B, direction, n, i, j):
    """Two-index block: the level-n piece joining column tops i and j."""
    p = B.p
    if not (1 <= i <= p and 1 <= j <= p):
        raise ValueError("block indices in [1, p] required")
    if B.p**n > TRANSITION_DIM_CAP:
        raise CapExceeded("transition dimension p^{} over cap".format(n))
    fam = _family(B, axis_name(direction), n)
    return fam[psi((i - 1, j - 1), p) - 1]


def path_offsets(path, n, p):
    """Top-left corner of the block addressed by a nest of block indices.

    path lists q+1 block numbers in [1, p*p]; the addressed block has
    dimension p^(n-1) inside a level-(n+q) matrix.
    """
    q = len(path) - 1
    row = col = 0
    for l, beta in enumerate(path, start=1):
        if not 1 <= beta <= p * p:
            raise ValueError("path entries in [1, p*p] required")
        scale = p ** (n + q - l)
        row += ((beta - 1) // p) * scale
        col += ((beta - 1) % p) * scale
    return row, col


def block_at(B, big, path, n, direction="h"):
    """Sub-block of a level-(n+q) sized matrix addressed by a block path.

    Returns (block, weight): the dense p^(n-1) sub-block of `big` and the
    product of across-direction weights accumulated along the path.
    """
    p = B.p
    d = p ** (n - 1)
    row, col = path_offsets(path, n, p)
    _, across = axis_pair(B, direction)
    weight = 1
    for a, b in zip(path, path[1:]):
        weight *= int(across[a - 1, b - 1])
    return np.asarray(big)[row : row + d, col : col + d], weight


def verify_reduction(B, n, q):
    """Check the factorization of level n+q into levels q+1 and n.

    The level-(n+q) matrix must equal the entrywise product of the
    level-(q+1) matrix blown up by ones, and the level-n matrix tiled;
    block addressing must agree with weighted level-n family members.
    """
    p = B.p
    for direction in ("h", "v"):
        big = build_transition(B, direction, n + q)
        coarse = build_transition(B, direction, q + 1)
        fine = build_transition(B, direction, n)
        lift = np.kron(coarse, np.ones((p ** (n - 1), p ** (n - 1)), dtype=np.uint8))
        tile = np.kron(np.ones((p**q, p**q), dtype=np.uint8), fine)
        if not np.array_equal(big, lift * tile):
            return False
        fam = _family(B, direction, n)
        for flat in range((p * p) ** (q + 1)):
            path = tuple(d + 1 for d in unpsi(flat + 1, q + 1, p * p))
            block, weight = block_at(B, big, path, n, direction)
            if not np.array_equal(block, weight * fam[path[-1] - 1]):
                return False
    return True


def power_with_saturation(matrix, m):
    """CountMatrix m-th power of a 0/1 matrix; m = 0 gives the identity."""
    if m < 0:
        raise ValueError("m >= 0 required")
    if m == 0:
        dim = np.asarray(matrix).shape[0]
        return CountMatrix(np.eye(dim, dtype=np.int64))
    return CountMatrix.from_bool(matrix).power(m)


def elementary_word(p, m, alpha, k):
    """Column-top word (j1 .. j_{m+1}) named by corner pair alpha, middle k."""
    a1, a2 = unpsi(alpha, 2, p)
    mids = unpsi(k, m - 1, p) if m > 1 else ()
    return (a1 + 1,) + tuple(d + 1 for d in mids) + (a2 + 1,)


def elementary_pattern(B, direction, m, n, alpha, k):
    """Count matrix for (m+1) x n windows whose column tops walk one word."""
    word = elementary_word(B.p, m, alpha, k)
    out = CountMatrix.from_bool(transition_block(B, direction, n, word[0], word[1]))
    for a, b in zip(word[1:], word[2:]):
        out = out @ CountMatrix.from_bool(transition_block(B, direction, n, a, b))
    return out


def elementary_table(B, direction, m, n):
    """All word-resolved count matrices at order m, level n.

    Returns {alpha: [CountMatrix for k = 1 .. p^(m-1)]} with shared-prefix
    products, so the whole table costs one matrix product per word.
    """
    p = B.p
    fam = {
        (i, j): CountMatrix.from_bool(transition_block(B, direction, n, i, j))
        for i in range(1, p + 1)
        for j in range(1, p + 1)
    }
    # prefixes[word] holds the product over the word's steps
    prefixes = {(j,): None for j in range(1, p + 1)}
    for _ in range(m):
        nxt = {}
        for word, prod in prefixes.items():
            for j in range(1, p + 1):
                step = fam[(word[-1], j)]
                nxt[word + (j,)] = step if prod is None else prod @ step
        prefixes = nxt
    table = {}
    for word, prod in prefixes.items():
        alpha = psi((word[0] - 1, word[-1] - 1), p)
        k = psi(tuple(d - 1 for d in word[1:-1]), p) if m > 1 else 1
        table.setdefault(alpha, {})[k] = prod
    return {
        alpha: [entry[k] for k in range(1, p ** (m - 1) + 1)]
        for alpha, entry in sorted(table.items())
    }
