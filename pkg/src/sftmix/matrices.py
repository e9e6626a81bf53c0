"""Dense zero-one matrices, saturating count matrices, and primitivity.

Zero-one matrices are numpy uint8 arrays.  Count matrices carry int64
entries with saturating products: the (entry >= threshold) predicates the
verdicts rely on survive saturation unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .core import CapExceeded

BOOL_DIM_CAP = 1 << 16
POWER_STEP_CAP = 4096


def bool_mat(a):
    """Normalize to a square uint8 0/1 array."""
    m = np.asarray(a)
    m = (m > 0).astype(np.uint8)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    return m


def bool_product(a, b):
    """Boolean matrix product of 0/1 arrays."""
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch")
    # float32 sums stay exact: row sums are bounded by the dimension.
    c = a.astype(np.float32) @ b.astype(np.float32)
    return (c > 0).astype(np.uint8)


def bool_power(a, n):
    """n-th boolean power, n >= 1."""
    if n < 1:
        raise ValueError("n >= 1 required")
    out = bool_mat(a)
    base = out
    n -= 1
    while n:
        if n & 1:
            out = bool_product(out, base)
        base = bool_product(base, base) if n > 1 else base
        n >>= 1
    return out


def entry_sum(a):
    """Exact integer sum of entries."""
    if isinstance(a, CountMatrix):
        return a.entry_sum()
    return int(np.asarray(a, dtype=np.int64).astype(object).sum())


def saturated(a):
    """E(A): zero exactly on the rows and columns of A that vanish."""
    m = bool_mat(a)
    rows = m.any(axis=1).astype(np.uint8)
    cols = m.any(axis=0).astype(np.uint8)
    return np.outer(rows, cols)


def split_blocks(a, rows, cols=None):
    """Cut a matrix into a rows x cols grid, listed row-major.

    Block number alpha (1-based) sits at ((alpha-1)//cols, (alpha-1)%cols).
    """
    m = np.asarray(a)
    cols = rows if cols is None else cols
    if m.shape[0] % rows or m.shape[1] % cols:
        raise ValueError("matrix does not divide into the requested grid")
    h, w = m.shape[0] // rows, m.shape[1] // cols
    return [
        m[r * h : (r + 1) * h, c * w : (c + 1) * w]
        for r in range(rows)
        for c in range(cols)
    ]


def indicator(blocks):
    """Zero-one matrix marking which blocks contain a positive entry."""
    nrows = len(blocks)
    out = np.zeros((nrows, len(blocks[0])), dtype=np.uint8)
    shape = None
    for r, row in enumerate(blocks):
        if len(row) != out.shape[1]:
            raise ValueError("ragged block matrix")
        for c, blk in enumerate(row):
            arr = blk.a if isinstance(blk, CountMatrix) else np.asarray(blk)
            if shape is None:
                shape = arr.shape
            elif arr.shape != shape:
                raise ValueError("ragged block matrix")
            out[r, c] = 1 if (arr > 0).any() else 0
    return out


class CountMatrix:
    """int64 matrix whose products clamp instead of overflowing."""

    __slots__ = ("a", "saturated")

    def __init__(self, a, saturated=False):
        self.a = np.asarray(a, dtype=np.int64)
        if self.a.ndim != 2:
            raise ValueError("matrix required")
        self.saturated = bool(saturated)

    @classmethod
    def from_bool(cls, a):
        return cls(bool_mat(a).astype(np.int64))

    @property
    def dim(self):
        return self.a.shape[0]

    def __matmul__(self, other):
        if not isinstance(other, CountMatrix):
            other = CountMatrix(other)
        a, b = self.a, other.a
        if a.shape[1] != b.shape[0]:
            raise ValueError("shape mismatch")
        inner = a.shape[1]
        amax = int(a.max(initial=0))
        bmax = int(b.max(initial=0))
        sat = self.saturated or other.saturated
        bound = inner * amax * bmax
        if bound < 1 << 53:
            c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        elif bound < 1 << 62:
            c = a @ b
        else:
            cap = isqrt((1 << 62) // max(inner, 1))
            c = np.minimum(a, cap) @ np.minimum(b, cap)
            sat = True
        return CountMatrix(c, sat)

    def power(self, m):
        if m < 1:
            raise ValueError("m >= 1 required")
        out = self
        base = self
        m -= 1
        while m:
            if m & 1:
                out = out @ base
            if m > 1:
                base = base @ base
            m >>= 1
        return out

    def __add__(self, other):
        if not isinstance(other, CountMatrix):
            other = CountMatrix(other)
        amax = int(self.a.max(initial=0))
        bmax = int(other.a.max(initial=0))
        if amax + bmax < 1 << 62:
            return CountMatrix(self.a + other.a, self.saturated or other.saturated)
        half = 1 << 61
        return CountMatrix(np.minimum(self.a, half) + np.minimum(other.a, half), True)

    def entry_sum(self):
        return int(self.a.astype(object).sum())

    def indicator(self):
        return (self.a > 0).astype(np.uint8)

    def __eq__(self, other):
        o = other.a if isinstance(other, CountMatrix) else np.asarray(other)
        return self.a.shape == o.shape and bool((self.a == o).all())

    def __ge__(self, other):
        o = other.a if isinstance(other, CountMatrix) else np.asarray(other)
        return bool((self.a >= o).all())

    def __repr__(self):
        tag = ", saturated" if self.saturated else ""
        return "CountMatrix({}{})".format(self.a.tolist(), tag)


@dataclass
class PrimitivityReport:
    primitive: bool
    n0: int | None
    transient: int
    period: int


def primitivity_analysis(a):
    """Exact primitivity of a 0/1 matrix, tolerating zero rows and columns.

    Powers A, A^2, ... are eventually periodic; A is primitive iff every
    power in the limit cycle dominates E(A).  n0 is the least onset from
    which domination persists.
    """
    m = bool_mat(a)
    if m.shape[0] > BOOL_DIM_CAP:
        raise CapExceeded("matrix dimension over cap")
    target = saturated(m)
    seen = {}
    powers = [None, m]
    seen[m.tobytes()] = 1
    cur = m
    n = 1
    while True:
        n += 1
        if n > POWER_STEP_CAP:
            raise CapExceeded("power sequence did not close within cap")
        cur = bool_product(cur, m)
        key = cur.tobytes()
        if key in seen:
            start = seen[key]
            if not np.array_equal(powers[start], cur):
                raise AssertionError("hash state mismatch")
            transient, period = start, n - start
            break
        seen[key] = n
        powers.append(cur)
    ok = [bool((powers[i] >= target).all()) for i in range(1, transient + period)]
    primitive = all(ok[i - 1] for i in range(transient, transient + period))
    n0 = None
    if primitive:
        bad = [i for i in range(1, transient + period) if not ok[i - 1]]
        n0 = (max(bad) + 1) if bad else 1
    return PrimitivityReport(primitive, n0, transient, period)


def is_N_primitive(a, N):
    """True iff a is primitive with onset n0 <= N."""
    rep = primitivity_analysis(a)
    return rep.primitive and rep.n0 <= N


def to_masks(a):
    """Rows of a 0/1 matrix as python int bitmasks (bit j = column j)."""
    m = bool_mat(a)
    out = []
    for row in m:
        acc = 0
        for j in np.flatnonzero(row):
            acc |= 1 << int(j)
        out.append(acc)
    return out


def mask_mult(am, bm):
    """Boolean product on bitmask rows: bit j of row i set iff sum > 0."""
    out = []
    for x in am:
        acc = 0
        while x:
            low = x & -x
            acc |= bm[low.bit_length() - 1]
            x ^= low
        out.append(acc)
    return out
