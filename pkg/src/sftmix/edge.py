"""Transfer matrices and mixing certificates for edge tile sets.

Edge sets constrain the four edge labels of each unit square.  Strip
matrices follow a Kronecker recursion over the shared label column, and
a diagonal sequence of connecting matrices feeding an index set back
into itself certifies primitivity of every strip at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .core import BasicSet, CapExceeded, psi, unpsi
from .matrices import CountMatrix, bool_product, primitivity_analysis, split_blocks
from .structure import is_compressible
from .transfer import axis_name
from .certify import (
    CertifyCaps,
    CheckOutcome,
    Verdict,
    diagonal_indices,
    extract_invariant_K,
)

EDGE_DIM_CAP = 1 << 12


def edge_set_from_arrows(arrows, p=2):
    """Edge set from arrow tiles given as (right, up, left, down) words.

    Each side is "in" or "out"; a tile becomes the label quadruple
    (bottom, top, left, right) with inflow counted on bottom and left,
    outflow on top and right.
    """
    tiles = set()
    for right, up, left, down in arrows:
        for side in (right, up, left, down):
            if side not in ("in", "out"):
                raise ValueError("arrow sides must be 'in' or 'out'")
        tiles.add(
            (
                int(down == "in"),
                int(up == "out"),
                int(left == "in"),
                int(right == "out"),
            )
        )
    return BasicSet.edge(p, tiles)


def _axis_set(B, direction):
    if B.mode != "edge":
        raise ValueError("edge basic set required")
    return B if axis_name(direction) == "h" else B.swap_axes()


@lru_cache(maxsize=None)
def _family(B, n):
    p = B.p
    p2 = p * p
    if n == 2:
        base = []
        for j in range(1, p2 + 1):
            b, t = unpsi(j, 2, p)
            blk = np.zeros((p, p), dtype=np.int64)
            for bb, tt, ll, rr in B.patterns:
                if bb == b and tt == t:
                    blk[ll, rr] = 1
            base.append(blk)
        return tuple(blk.copy() for blk in base)
    base = _family(B, 2)
    prev = _family(B, n - 1)
    out = []
    for j in range(1, p2 + 1):
        b, t = unpsi(j, 2, p)
        acc = None
        for c in range(p):
            term = np.kron(
                base[psi((b, c), p) - 1], prev[psi((c, t), p) - 1]
            )
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def edge_family(B, direction, n):
    """Strip blocks at level n, one per bottom and top label pair."""
    if n < 2:
        raise ValueError("n >= 2 required")
    S = _axis_set(B, direction)
    if S.p ** (n - 1) > EDGE_DIM_CAP:
        raise CapExceeded("edge strip dimension over cap")
    return _family(S, n)


def edge_transfer(B, direction, n):
    """Full strip count matrix at level n."""
    fam = edge_family(B, direction, n)
    out = fam[0].copy()
    for blk in fam[1:]:
        out = out + blk
    return out


def bar_blocks(B, direction, n):
    """Bottom-label partial sums of the strip blocks, one per label."""
    p = B.p
    fam = edge_family(B, direction, n)
    out = []
    for i in range(p):
        acc = fam[psi((i, 0), p) - 1].copy()
        for t in range(1, p):
            acc = acc + fam[psi((i, t), p) - 1]
        out.append(acc)
    return tuple(out)


def bar_word_product(B, direction, m, n, l):
    """Product of bottom-label sums along the m-digit word encoding l."""
    bars = bar_blocks(B, direction, n)
    word = unpsi(l, m, B.p)
    out = CountMatrix(bars[word[0]])
    for w in word[1:]:
        out = out @ CountMatrix(bars[w])
    return out


def edge_connector(B, direction, m, alpha):
    """Connecting matrix of order m for one end label pair."""
    other = "v" if axis_name(direction) == "h" else "h"
    return edge_family(B, other, m + 1)[alpha - 1]


def verify_edge_reduction(B, m, n, q):
    """Check that power blocks decompose through connecting matrices.

    Every depth-q block of the m-th power of the level n+1 strip matrix
    must equal the column sums of the connecting chain times the shorter
    bottom-label products.
    """
    if not 1 <= q <= n - 1:
        raise ValueError("1 <= q <= n-1 required")
    p = B.p
    p2 = p * p
    for direction in ("h", "v"):
        big = CountMatrix(edge_transfer(B, direction, n + 1)).power(m)
        if big.saturated:
            raise CapExceeded("power entries over cap")
        pm = p**m
        for path in product(range(1, p2 + 1), repeat=q):
            chain = CountMatrix(edge_connector(B, direction, m, path[0]))
            for beta in path[1:]:
                chain = chain @ CountMatrix(
                    edge_connector(B, direction, m, beta)
                )
            if chain.saturated:
                raise CapExceeded("chain entries over cap")
            colsums = chain.a.sum(axis=0)
            blk = big.a
            for beta in path:
                blk = split_blocks(blk, p)[beta - 1]
            rhs = None
            for l in range(1, pm + 1):
                if colsums[l - 1] == 0:
                    continue
                term = (
                    bar_word_product(B, direction, m, n - q + 1, l).a
                    * int(colsums[l - 1])
                )
                rhs = term if rhs is None else rhs + term
            if rhs is None:
                rhs = np.zeros_like(blk)
            if not np.array_equal(blk, rhs):
                return False
    return True


@dataclass(frozen=True)
class EdgeSequenceCert:
    direction: str
    m: int
    word: tuple
    K: tuple

    def as_dict(self):
        return {
            "kind": "edge-diagonal-sequence",
            "direction": self.direction,
            "m": self.m,
            "word": list(self.word),
            "K": list(self.K),
        }


def edge_nondegenerated(B, direction):
    """No bottom-label sum at level 2 has a zero row or column."""
    return all(not is_compressible(blk) for blk in bar_blocks(B, direction, 2))


def _sequence_chain(B, axis, m, word):
    chain = edge_connector(B, axis, m, word[0]) > 0
    for beta in word[1:]:
        chain = bool_product(chain, edge_connector(B, axis, m, beta) > 0)
    return chain


def iter_edge_sequences(B, direction, m_max=7, q_max=4):
    """Candidate diagonal sequences in deterministic search order."""
    axis = axis_name(direction)
    diag = diagonal_indices(B.p)
    for m in range(2, m_max + 1):
        for q in range(1, q_max + 1):
            for word in product(diag, repeat=q):
                chain = _sequence_chain(B, axis, m, word)
                K = extract_invariant_K(chain, self_supporting=True)
                if K:
                    yield EdgeSequenceCert(axis, m, tuple(word), K)


def find_edge_sequence(B, direction, m_max=7, q_max=4):
    """First diagonal sequence with a nonempty feedback index set."""
    for cert in iter_edge_sequences(B, direction, m_max, q_max):
        return cert
    return None


def check_edge_sequence(B, cert):
    """Validate an edge sequence certificate."""
    axis = axis_name(cert.direction)
    p = B.p
    diag = set(diagonal_indices(p))
    m, q = cert.m, len(cert.word)
    if m < 2 or q < 1:
        return CheckOutcome(False, None, "degenerate certificate shape", {})
    if any(b not in diag for b in cert.word):
        return CheckOutcome(False, None, "sequence leaves the diagonal blocks", {})
    K = tuple(sorted(cert.K))
    if not K or any(not 1 <= k <= p**m for k in K):
        return CheckOutcome(False, None, "index set out of range", {})
    chain = _sequence_chain(B, axis, m, cert.word)
    for l in K:
        if not any(chain[k - 1, l - 1] for k in K):
            return CheckOutcome(
                False, None, "index set is not fed back by the sequence", {}
            )
    if not edge_nondegenerated(B, axis):
        return CheckOutcome(
            False, None, "a level-2 bottom-label sum is compressible", {}
        )
    onsets = {}
    for n in range(2, q + 2):
        acc = bar_word_product(B, axis, m, n, K[0])
        for l in K[1:]:
            acc = acc + bar_word_product(B, axis, m, n, l)
        rep = primitivity_analysis(acc.indicator())
        if not rep.primitive:
            return CheckOutcome(
                False,
                None,
                "selected word sum not primitive at level {}".format(n),
                {},
            )
        onsets[n] = rep.n0
    return CheckOutcome(True, "edge-cycle-certificates", None, {"onsets": onsets})


def edge_primitivity_all_n(B, direction, caps=CertifyCaps()):
    """Verdict on primitivity of every edge strip level in one direction."""
    axis = axis_name(direction)
    caps_dict = caps.as_dict(B.p)
    caps_dict["direction"] = axis
    for cert in iter_edge_sequences(B, axis, caps.m_max, caps.q_max):
        out = check_edge_sequence(B, cert)
        if out.ok:
            payload = cert.as_dict()
            payload["checks"] = out.details
            return Verdict(
                "primitivity-all-n", "proved", out.theorem, payload, caps_dict
            )
    n_cap = caps.resolve_direct(B.p)
    reports = {
        n: primitivity_analysis(edge_transfer(B, axis, n) > 0)
        for n in range(2, n_cap + 1)
    }
    bad = [n for n, rep in reports.items() if not rep.primitive]
    if bad:
        return Verdict(
            "primitivity-all-n",
            "refuted",
            None,
            {"kind": "direct", "level": min(bad)},
            caps_dict,
        )
    return Verdict(
        "primitivity-all-n",
        "evidence",
        None,
        {
            "kind": "direct",
            "levels_checked": list(range(2, n_cap + 1)),
            "onsets": {str(n): reports[n].n0 for n in reports},
        },
        caps_dict,
    )


def edge_certificates(B, caps=CertifyCaps()):
    """Mixing verdict for an edge set via per-direction certificates."""
    caps_dict = caps.as_dict(B.p)
    ph = edge_primitivity_all_n(B, "h", caps)
    pv = edge_primitivity_all_n(B, "v", caps)
    structure = {
        "nondegenerated": [
            edge_nondegenerated(B, "h"),
            edge_nondegenerated(B, "v"),
        ]
    }
    if ph.status == "proved" and pv.status == "proved":
        return Verdict(
            "mixing",
            "proved",
            "edge-cycle-certificates",
            {"h": ph.certificate, "v": pv.certificate, "structure": structure},
            caps_dict,
        )
    missing = []
    if ph.status != "proved":
        missing.append(
            "horizontal direction: {} at caps".format(ph.status)
        )
    if pv.status != "proved":
        missing.append("vertical direction: {} at caps".format(pv.status))
    return Verdict(
        "mixing",
        "unknown",
        None,
        {
            "reason": "; ".join(missing),
            "structure": structure,
            "direct_evidence": {"h": ph.status, "v": pv.status},
        },
        caps_dict,
    )


def replay_edge_mixing(B, data):
    """Re-validate a proved edge mixing verdict from its certificates."""
    cert = dict(data.get("certificate") or {})
    caps = dict(data.get("caps") or {})
    caps["replayed"] = True
    outs = []
    for axis in ("h", "v"):
        payload = cert[axis]
        stored = EdgeSequenceCert(
            payload["direction"],
            int(payload["m"]),
            tuple(int(x) for x in payload["word"]),
            tuple(int(x) for x in payload["K"]),
        )
        outs.append(check_edge_sequence(B, stored))
    if all(o.ok for o in outs):
        return Verdict(
            "mixing", "proved", "edge-cycle-certificates", cert, caps
        )
    reason = "; ".join(
        "{}: {}".format(axis, o.reason)
        for axis, o in zip(("h", "v"), outs)
        if not o.ok
    )
    return Verdict(
        "mixing", "unknown", None, {"reason": reason, "stored": cert}, caps
    )
