"""Symbol counting, 2x2 patterns and the basic-set container.

Conventions used across the package:
  - symbols are 0-based integers in [0, p)
  - matrix/operator indices exposed by the API are 1-based (storage is
    0-based; conversion happens exactly once, at the API boundary)
  - a vertex pattern is the tuple (u00, u10, u01, u11): bottom-left,
    bottom-right, top-left, top-right
  - an edge tile is the tuple (b, t, l, r): bottom, top, left, right
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

Symbol = int
PsiIndex = int
VertexPattern2x2 = tuple  # (u00, u10, u01, u11)


class CapExceeded(Exception):
    """A resource cap was hit; the caller chose not to go that far."""


def psi(seq, p):
    """1-based index of a symbol sequence: 1 + sum u_k p^(n-k)."""
    index = 0
    for u in seq:
        if not 0 <= u < p:
            raise ValueError(f"symbol {u} out of range for p={p}")
        index = index * p + u
    return index + 1


def unpsi(index, n, p):
    """Inverse of psi: the n-symbol sequence encoding a 1-based index."""
    if not 1 <= index <= p**n:
        raise ValueError(f"index {index} out of range for p={p}, n={n}")
    rest = index - 1
    seq = []
    for _ in range(n):
        seq.append(rest % p)
        rest //= p
    return tuple(reversed(seq))


def pattern_coords(pattern, p):
    """(i1, j1, i2, j2) of a vertex pattern: column pair / row pair indices.

    i1/j1 read the left/right columns bottom-to-top; i2/j2 read the
    bottom/top rows left-to-right.
    """
    u00, u10, u01, u11 = pattern
    i1 = psi((u00, u01), p)
    j1 = psi((u10, u11), p)
    i2 = psi((u00, u10), p)
    j2 = psi((u01, u11), p)
    return i1, j1, i2, j2


def pattern_from_coords(i1, j1, p):
    """Vertex pattern with left column index i1 and right column index j1."""
    u00, u01 = unpsi(i1, 2, p)
    u10, u11 = unpsi(j1, 2, p)
    return (u00, u10, u01, u11)


@dataclass(frozen=True)
class BasicSet:
    """A set of allowed 2x2 patterns (vertex mode) or edge tiles (edge mode)."""

    p: int
    patterns: frozenset = field(compare=True)
    mode: str = "vertex"

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if self.mode not in ("vertex", "edge"):
            raise ValueError(f"unknown mode {self.mode!r}")
        for pat in self.patterns:
            if len(pat) != 4 or not all(0 <= u < self.p for u in pat):
                raise ValueError(f"bad pattern {pat!r} for p={self.p}")

    @classmethod
    def vertex(cls, p, patterns):
        return cls(p, frozenset(tuple(pat) for pat in patterns), "vertex")

    @classmethod
    def edge(cls, p, tiles):
        return cls(p, frozenset(tuple(t) for t in tiles), "edge")

    @classmethod
    def from_h2(cls, h2):
        """Recover a vertex basic set from its horizontal transition matrix."""
        h2 = np.asarray(h2)
        dim = h2.shape[0]
        if h2.shape != (dim, dim):
            raise ValueError("h2 must be square")
        p = int(round(dim**0.5))
        if p * p != dim:
            raise ValueError(f"h2 dimension {dim} is not a perfect square")
        pats = []
        for i1 in range(1, dim + 1):
            for j1 in range(1, dim + 1):
                if h2[i1 - 1, j1 - 1]:
                    pats.append(pattern_from_coords(i1, j1, p))
        return cls.vertex(p, pats)

    @classmethod
    def full(cls, p, mode="vertex"):
        """All p^4 patterns."""
        pats = [
            (a, b, c, d)
            for a in range(p)
            for b in range(p)
            for c in range(p)
            for d in range(p)
        ]
        return cls(p, frozenset(pats), mode)

    def sorted_patterns(self):
        """Patterns in canonical lexicographic order."""
        return sorted(self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __contains__(self, pattern):
        return tuple(pattern) in self.patterns

    def swap_axes(self):
        """The set with x and y exchanged (transpose of every pattern)."""
        if self.mode == "vertex":
            swapped = [(u00, u01, u10, u11) for u00, u10, u01, u11 in self.patterns]
        else:
            swapped = [(l, r, b, t) for b, t, l, r in self.patterns]
        return BasicSet(self.p, frozenset(swapped), self.mode)


def transition_pair(B):
    """Horizontal and vertical transition matrices (H2, V2) of a vertex set.

    Both are p^2 x p^2 zero-one matrices; each allowed pattern contributes
    one entry to each, so both entry sums equal the pattern count.
    """
    if B.mode != "vertex":
        raise ValueError("transition_pair needs a vertex-mode set")
    dim = B.p * B.p
    h2 = np.zeros((dim, dim), dtype=np.uint8)
    v2 = np.zeros((dim, dim), dtype=np.uint8)
    for pat in B.patterns:
        i1, j1, i2, j2 = pattern_coords(pat, B.p)
        h2[i1 - 1, j1 - 1] = 1
        v2[i2 - 1, j2 - 1] = 1
    return h2, v2


def parse_basic_set(text):
    """Read a basic set from its JSON document.

    Accepted forms: {"p", "mode", "allowed": [[u00,u10,u01,u11], ...]} with
    mode "vertex" or "edge" (edge tiles are [b,t,l,r]), or
    {"p", "mode": "vertex", "h2": [[...], ...]}.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "p" not in doc:
        raise ValueError("document must be an object with a 'p' field")
    p = doc["p"]
    if not isinstance(p, int) or p < 1:
        raise ValueError("'p' must be a positive integer")
    mode = doc.get("mode", "vertex")
    if "h2" in doc:
        if mode != "vertex":
            raise ValueError("'h2' form requires vertex mode")
        h2 = np.array(doc["h2"])
        if h2.shape != (p * p, p * p):
            raise ValueError(f"'h2' must be {p * p}x{p * p}")
        if not np.isin(h2, (0, 1)).all():
            raise ValueError("'h2' entries must be 0 or 1")
        return BasicSet.from_h2(h2)
    if "allowed" not in doc:
        raise ValueError("document needs 'allowed' or 'h2'")
    pats = [tuple(pat) for pat in doc["allowed"]]
    return BasicSet(p, frozenset(pats), mode)


def serialize_basic_set(B):
    """Canonical JSON document of a basic set (round-trips via parse)."""
    doc = {
        "p": B.p,
        "mode": B.mode,
        "allowed": [list(pat) for pat in B.sorted_patterns()],
    }
    return json.dumps(doc, separators=(", ", ": "))
