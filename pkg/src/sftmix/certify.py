"""Certificate search and verdicts for strip primitivity and mixing.

Two certificate shapes prove primitivity of every strip level at once:
diagonal cycles, where a cyclic product of connecting blocks feeds an
index set back into itself, and commutative cycle pairs, where two closed
words through the level-2 blocks interleave.  Verdicts never overstate:
anything short of a validated certificate is reported as evidence,
refuted, or unknown with the failing condition named.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .core import BasicSet, psi, unpsi
from .matrices import (
    CountMatrix,
    bool_product,
    is_N_primitive,
    primitivity_analysis,
    saturated,
    split_blocks,
)
from .connect import connecting_block, connector_entry
from .structure import (
    degeneracy_profile,
    infer_rectangle_extendability,
    is_crisscross_extendable,
    corner_conditions,
    r_extendability,
)
from .transfer import axis_name, build_transition, elementary_pattern


def direct_cap(p):
    """Default direct-check level by symbol count."""
    return {2: 6, 3: 4}.get(p, 3)


@dataclass(frozen=True)
class CertifyCaps:
    m_max: int = 7
    q_max: int = 4
    N_max: int = 8
    n_direct: int | None = None

    def resolve_direct(self, p):
        return self.n_direct if self.n_direct is not None else direct_cap(p)

    def as_dict(self, p=None):
        out = {"m_max": self.m_max, "q_max": self.q_max, "N_max": self.N_max}
        out["n_direct"] = self.n_direct if p is None else self.resolve_direct(p)
        return out


@dataclass(frozen=True)
class Verdict:
    property: str
    status: str  # "proved" | "refuted" | "evidence" | "unknown"
    theorem: str | None = None
    certificate: dict | None = None
    caps: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "property": self.property,
            "status": self.status,
            "theorem": self.theorem,
            "certificate": self.certificate,
            "caps": dict(self.caps),
        }


@dataclass(frozen=True)
class DiagonalCycleCert:
    direction: str
    m: int
    cycle: tuple
    K: tuple

    def as_dict(self):
        return {
            "kind": "diagonal-cycle",
            "direction": self.direction,
            "m": self.m,
            "cycle": list(self.cycle),
            "K": list(self.K),
        }


@dataclass(frozen=True)
class CommutativePairCert:
    direction: str
    i_cycle: tuple  # (i1 .. iq)
    j_cycle: tuple  # (j1 .. jq'), j1 == i1
    m: int
    alpha: int
    K: int
    L: int
    N: int
    s_orders: tuple  # subset of ("KL", "LK")

    def as_dict(self):
        return {
            "kind": "commutative-pair",
            "direction": self.direction,
            "i_cycle": list(self.i_cycle),
            "j_cycle": list(self.j_cycle),
            "m": self.m,
            "alpha": self.alpha,
            "K": self.K,
            "L": self.L,
            "N": self.N,
            "s_orders": list(self.s_orders),
        }


@dataclass(frozen=True)
class CheckOutcome:
    ok: bool
    theorem: str | None
    reason: str | None
    details: dict


def diagonal_indices(p):
    """Block numbers whose two naming symbols agree."""
    return [1 + j * (p + 1) for j in range(p)]


def extract_invariant_K(chain, self_supporting=False):
    """Greatest index set every member of which is reached from the set.

    With self_supporting=False a column kept alive only by its own row is
    dropped as well; the extraction is a greatest fixpoint either way.
    """
    n = chain.shape[0]
    K = set(range(1, n + 1))
    changed = True
    while changed:
        changed = False
        for l in sorted(K):
            sup = {k for k in K if chain[k - 1, l - 1]}
            if not sup or (not self_supporting and sup <= {l}):
                K.discard(l)
                changed = True
    return tuple(sorted(K))


def _cycle_chain(B, axis, m, cycle):
    """Boolean product of connecting blocks around a closed block word."""
    closed = tuple(cycle) + (cycle[0],)
    chain = connecting_block(B, axis, m, closed[0], closed[1])
    for a, b in zip(closed[1:], closed[2:]):
        chain = bool_product(chain, connecting_block(B, axis, m, a, b))
    return chain


def iter_diagonal_cycles(B, direction, m_max=7, q_max=4):
    """Candidate cycle certificates in deterministic search order."""
    axis = axis_name(direction)
    diag = diagonal_indices(B.p)
    for m in range(2, m_max + 1):
        for q in range(1, q_max + 1):
            for word in product(diag, repeat=q):
                chain = _cycle_chain(B, axis, m, word)
                K = extract_invariant_K(chain)
                if K:
                    yield DiagonalCycleCert(axis, m, tuple(word), K)


def find_invariant_diagonal_cycle(B, direction, m_max=7, q_max=4):
    """First diagonal cycle whose feedback index set is nonempty."""
    for cert in iter_diagonal_cycles(B, direction, m_max, q_max):
        return cert
    return None


def _dominating_exponent(indicator_mat, target):
    """Least a with the a-th boolean power dominating target, else None."""
    seen = set()
    cur = indicator_mat
    a = 1
    while True:
        if bool((cur >= target).all()):
            return a
        key = cur.tobytes()
        if key in seen:
            return None
        seen.add(key)
        cur = bool_product(cur, indicator_mat)
        a += 1


def _level_block_target(B, axis, n, alpha):
    """Zero-row/zero-column saturation of level n, restricted to one block."""
    return split_blocks(saturated(build_transition(B, axis, n)), B.p)[alpha - 1]


def check_invariant_cycle_conditions(B, cert, direction=None):
    """Validate a diagonal cycle certificate and say which route accepts it."""
    axis = axis_name(direction or cert.direction)
    p = B.p
    diag = set(diagonal_indices(p))
    m, q = cert.m, len(cert.cycle)
    if m < 2 or q < 1:
        return CheckOutcome(False, None, "degenerate certificate shape", {})
    if any(b not in diag for b in cert.cycle):
        return CheckOutcome(False, None, "cycle leaves the diagonal blocks", {})
    K = tuple(sorted(cert.K))
    if not K or any(not 1 <= k <= p ** (m - 1) for k in K):
        return CheckOutcome(False, None, "index set out of range", {})
    chain = _cycle_chain(B, axis, m, cert.cycle)
    for l in K:
        if not any(chain[k - 1, l - 1] for k in K):
            return CheckOutcome(
                False, None, "index set is not fed back by the cycle", {}
            )
    prof = degeneracy_profile(B)
    dprof = prof.h if axis == "h" else prof.v
    beta1 = cert.cycle[0]

    def selected_sum(n):
        out = elementary_pattern(B, axis, m, n, beta1, K[0])
        for l in K[1:]:
            out = out + elementary_pattern(B, axis, m, n, beta1, l)
        return out

    if dprof.nondegenerated:
        onsets = {}
        for n in range(2, q + 2):
            rep = primitivity_analysis(selected_sum(n).indicator())
            if not rep.primitive:
                return CheckOutcome(
                    False,
                    None,
                    "selected window sum not primitive at level {}".format(n),
                    {},
                )
            onsets[n] = rep.n0
        return CheckOutcome(
            True, "cycle-direct", None, {"onsets": onsets}
        )
    rext = r_extendability(B).conditions
    needed = (0, 1, 2) if axis == "h" else (0, 1, 3)
    if dprof.weakly_nondegenerated and all(rext[i] for i in needed):
        exponents = {}
        onsets = {}
        for n in range(2, q + 2):
            target = _level_block_target(B, axis, n, beta1)
            a = _dominating_exponent(selected_sum(n).indicator(), target)
            if a is None:
                return CheckOutcome(
                    False,
                    None,
                    "no power of the selected sum dominates the level-{} "
                    "support block".format(n),
                    {},
                )
            exponents[n] = a
            rep = primitivity_analysis(build_transition(B, axis, n))
            if not rep.primitive:
                return CheckOutcome(
                    False, None, "level {} not primitive".format(n), {}
                )
            onsets[n] = rep.n0
        return CheckOutcome(
            True,
            "cycle-weak",
            None,
            {"exponents": exponents, "onsets": onsets},
        )
    reason = (
        "level-2 blocks fail support alignment"
        if not dprof.weakly_nondegenerated
        else "missing support containment conditions"
    )
    return CheckOutcome(False, None, reason, {})


def _pair_index(p, i_cycle, j_cycle):
    """(m, alpha, K, L) for a commutative pair of closed words."""
    q, qp = len(i_cycle), len(j_cycle)
    i1 = i_cycle[0]
    m = q + qp
    alpha = psi((i1 - 1, i1 - 1), p)
    k_digits = (
        tuple(x - 1 for x in i_cycle[1:]) + (i1 - 1,) + tuple(x - 1 for x in j_cycle[1:])
    )
    l_digits = (
        tuple(x - 1 for x in j_cycle[1:]) + (i1 - 1,) + tuple(x - 1 for x in i_cycle[1:])
    )
    return m, alpha, psi(k_digits, p), psi(l_digits, p)


def _pair_candidate(B, axis, i_cycle, j_cycle, N_max):
    """Pair cert when the unit entry and the power condition both hold."""
    p = B.p
    m, alpha, K, L = _pair_index(p, i_cycle, j_cycle)
    orders = []
    if connector_entry(B, axis, m, alpha, alpha, K, L):
        orders.append("KL")
    if connector_entry(B, axis, m, alpha, alpha, L, K):
        orders.append("LK")
    if not orders:
        return None
    target = _level_block_target(B, axis, 2, alpha)
    hk = elementary_pattern(B, axis, m, 2, alpha, K)
    hl = elementary_pattern(B, axis, m, 2, alpha, L)
    for N in range(1, N_max + 1):
        if hk.power(N) >= target or hl.power(N) >= target:
            return CommutativePairCert(
                axis, tuple(i_cycle), tuple(j_cycle), m, alpha, K, L, N,
                tuple(orders),
            )
    return None


def iter_commutative_pairs(B, direction, m_max=7, N_max=8):
    """Candidate pair certificates in deterministic search order."""
    axis = axis_name(direction)
    p = B.p
    rng = range(1, p + 1)
    for m in range(2, m_max + 1):
        for q in range(1, m):
            qp = m - q
            for i1 in rng:
                for i_mids in product(rng, repeat=q - 1):
                    for j_mids in product(rng, repeat=qp - 1):
                        cert = _pair_candidate(
                            B, axis, (i1,) + i_mids, (i1,) + j_mids, N_max
                        )
                        if cert is not None:
                            yield cert


def find_commutative_pair(B, direction, m_max=7, N_max=8):
    """First pair passing the unit-entry and power conditions."""
    for cert in iter_commutative_pairs(B, direction, m_max, N_max):
        return cert
    return None


def check_pair_conditions(B, cert, direction=None):
    """Validate a commutative pair certificate and name the route."""
    axis = axis_name(direction or cert.direction)
    p = B.p
    q, qp = len(cert.i_cycle), len(cert.j_cycle)
    if q < 1 or qp < 1:
        return CheckOutcome(False, None, "degenerate certificate shape", {})
    if cert.i_cycle[0] != cert.j_cycle[0]:
        return CheckOutcome(False, None, "words do not share a base symbol", {})
    if any(not 1 <= x <= p for x in cert.i_cycle + cert.j_cycle):
        return CheckOutcome(False, None, "word symbols out of range", {})
    m, alpha, K, L = _pair_index(p, cert.i_cycle, cert.j_cycle)
    if (m, alpha, K, L) != (cert.m, cert.alpha, cert.K, cert.L):
        return CheckOutcome(False, None, "stored index disagrees with words", {})
    orders = []
    if connector_entry(B, axis, m, alpha, alpha, K, L):
        orders.append("KL")
    if connector_entry(B, axis, m, alpha, alpha, L, K):
        orders.append("LK")
    if not orders:
        return CheckOutcome(False, None, "no unit entry links the two words", {})
    target = _level_block_target(B, axis, 2, alpha)
    hk = elementary_pattern(B, axis, m, 2, alpha, K)
    hl = elementary_pattern(B, axis, m, 2, alpha, L)
    if not (hk.power(cert.N) >= target or hl.power(cert.N) >= target):
        return CheckOutcome(
            False, None, "stored power does not dominate the support block", {}
        )
    prof = degeneracy_profile(B)
    dprof = prof.h if axis == "h" else prof.v
    if dprof.nondegenerated:
        return CheckOutcome(True, "pair-direct", None, {"orders": orders})
    rext = r_extendability(B).conditions
    needed = (0, 1, 2) if axis == "h" else (0, 1, 3)
    level2 = build_transition(B, axis, 2)
    if (
        dprof.weakly_nondegenerated
        and all(rext[i] for i in needed)
        and primitivity_analysis(level2).primitive
    ):
        return CheckOutcome(True, "pair-weak", None, {"orders": orders})
    if not dprof.weakly_nondegenerated:
        reason = "level-2 blocks fail support alignment"
    elif not all(rext[i] for i in needed):
        reason = "missing support containment conditions"
    else:
        reason = "level-2 matrix not primitive"
    return CheckOutcome(False, None, reason, {})


def _direct_reports(B, axis, n_cap):
    return {
        n: primitivity_analysis(build_transition(B, axis, n))
        for n in range(2, n_cap + 1)
    }


def primitivity_all_n_certificate(B, direction, caps=CertifyCaps()):
    """Verdict on primitivity of every level in one direction."""
    axis = axis_name(direction)
    caps_dict = caps.as_dict(B.p)
    caps_dict["direction"] = axis
    for cert in iter_diagonal_cycles(B, axis, caps.m_max, caps.q_max):
        out = check_invariant_cycle_conditions(B, cert)
        if out.ok:
            payload = cert.as_dict()
            payload["checks"] = out.details
            return Verdict(
                "primitivity-all-n", "proved", out.theorem, payload, caps_dict
            )
    for cert in iter_commutative_pairs(B, axis, caps.m_max, caps.N_max):
        out = check_pair_conditions(B, cert)
        if out.ok:
            payload = cert.as_dict()
            payload["checks"] = out.details
            return Verdict(
                "primitivity-all-n", "proved", out.theorem, payload, caps_dict
            )
    n_cap = caps.resolve_direct(B.p)
    reports = _direct_reports(B, axis, n_cap)
    bad = [n for n, rep in reports.items() if not rep.primitive]
    if bad:
        n = min(bad)
        return Verdict(
            "primitivity-all-n",
            "refuted",
            None,
            {"kind": "direct", "level": n, "dimension": B.p**n},
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


def block_gluing_verdict(B, caps=CertifyCaps()):
    """Uniform-onset evidence for block gluing, or its refutation."""
    caps_dict = caps.as_dict(B.p)
    rect = infer_rectangle_extendability(B)
    n_cap = caps.resolve_direct(B.p)
    rep_h = _direct_reports(B, "h", n_cap)
    rep_v = _direct_reports(B, "v", n_cap)
    bad = [
        (axis, n)
        for axis, reps in (("h", rep_h), ("v", rep_v))
        for n, rep in reps.items()
        if not rep.primitive
    ]
    if bad:
        axis, n = bad[0]
        if rect.status == "proved":
            return Verdict(
                "block-gluing",
                "refuted",
                "primitivity-gap",
                {"direction": axis, "level": n, "rectangle_basis": rect.basis},
                caps_dict,
            )
        return Verdict(
            "block-gluing",
            "unknown",
            None,
            {
                "reason": "level {} not primitive ({}) and rectangle "
                "extendability unresolved".format(n, axis)
            },
            caps_dict,
        )
    onset = max(
        [rep.n0 for rep in rep_h.values()] + [rep.n0 for rep in rep_v.values()]
    )
    return Verdict(
        "block-gluing",
        "evidence",
        "uniform-onset",
        {
            "uniform_onset": onset,
            "levels_checked": list(range(2, n_cap + 1)),
            "rectangle_extendability": rect.status,
        },
        caps_dict,
    )


def mixing_verdict(B, caps=CertifyCaps()):
    """Mixing verdict for a basic set; edge sets take the edge route."""
    if B.mode == "edge":
        from .edge import edge_certificates

        return edge_certificates(B, caps)
    caps_dict = caps.as_dict(B.p)
    prof = degeneracy_profile(B)
    rext = r_extendability(B)
    corners = corner_conditions(B)
    rect = infer_rectangle_extendability(B)
    ph = primitivity_all_n_certificate(B, "h", caps)
    pv = primitivity_all_n_certificate(B, "v", caps)
    structure = {
        "nondegenerated": [prof.h.nondegenerated, prof.v.nondegenerated],
        "weakly_nondegenerated": [
            prof.h.weakly_nondegenerated,
            prof.v.weakly_nondegenerated,
        ],
        "support_conditions": list(rext.conditions),
        "crisscross": rext.crisscross,
        "corners": list(corners),
        "rectangle_extendability": {"status": rect.status, "basis": rect.basis},
    }
    if ph.status == "refuted" or pv.status == "refuted":
        failing = ph if ph.status == "refuted" else pv
        axis = "h" if ph.status == "refuted" else "v"
        if rect.status == "proved":
            return Verdict(
                "mixing",
                "refuted",
                "primitivity-gap",
                {
                    "direction": axis,
                    "level": failing.certificate["level"],
                    "structure": structure,
                },
                caps_dict,
            )
        return Verdict(
            "mixing",
            "unknown",
            None,
            {
                "reason": "a level is not primitive but rectangle "
                "extendability is unresolved",
                "structure": structure,
            },
            caps_dict,
        )
    if ph.status == "proved" and pv.status == "proved":
        payload = {
            "h": ph.certificate,
            "v": pv.certificate,
            "structure": structure,
        }
        if prof.h.nondegenerated and prof.v.nondegenerated:
            return Verdict(
                "mixing", "proved", "equivalence-nondegenerate", payload, caps_dict
            )
        if rext.crisscross and sum(corners) >= 3:
            return Verdict(
                "mixing", "proved", "equivalence-corners", payload, caps_dict
            )
        if (
            prof.h.weakly_nondegenerated
            and prof.v.weakly_nondegenerated
            and rext.crisscross
        ):
            return Verdict(
                "mixing", "proved", "packaged-certificates", payload, caps_dict
            )
        return Verdict(
            "mixing",
            "unknown",
            None,
            {
                "reason": "primitivity certified both ways but no bridge "
                "from primitivity to mixing applies",
                "structure": structure,
            },
            caps_dict,
        )
    missing = []
    if ph.status != "proved":
        missing.append("no certificate for the horizontal direction at caps")
    if pv.status != "proved":
        missing.append("no certificate for the vertical direction at caps")
    failed_conditions = []
    for name, val in (
        ("corner-1", corners[0]),
        ("corner-2", corners[1]),
        ("corner-3", corners[2]),
        ("corner-4", corners[3]),
    ):
        if not val:
            failed_conditions.append(name)
    if not prof.h.weakly_nondegenerated:
        failed_conditions.append("h-support-alignment")
    if not prof.v.weakly_nondegenerated:
        failed_conditions.append("v-support-alignment")
    return Verdict(
        "mixing",
        "unknown",
        None,
        {
            "reason": "; ".join(missing),
            "failed_conditions": failed_conditions,
            "structure": structure,
            "direct_evidence": {"h": ph.status, "v": pv.status},
        },
        caps_dict,
    )


def _cert_from_payload(payload):
    kind = payload.get("kind")
    if kind == "diagonal-cycle":
        return DiagonalCycleCert(
            payload["direction"],
            int(payload["m"]),
            tuple(int(x) for x in payload["cycle"]),
            tuple(int(x) for x in payload["K"]),
        )
    if kind == "commutative-pair":
        return CommutativePairCert(
            payload["direction"],
            tuple(int(x) for x in payload["i_cycle"]),
            tuple(int(x) for x in payload["j_cycle"]),
            int(payload["m"]),
            int(payload["alpha"]),
            int(payload["K"]),
            int(payload["L"]),
            int(payload["N"]),
            tuple(payload.get("s_orders", ())),
        )
    raise ValueError("unknown certificate kind: {!r}".format(kind))


def _check_payload(B, payload):
    if payload.get("kind") == "edge-diagonal-sequence":
        from .edge import EdgeSequenceCert, check_edge_sequence

        stored = EdgeSequenceCert(
            payload["direction"],
            int(payload["m"]),
            tuple(int(x) for x in payload["word"]),
            tuple(int(x) for x in payload["K"]),
        )
        return check_edge_sequence(B, stored)
    cert = _cert_from_payload(payload)
    if isinstance(cert, DiagonalCycleCert):
        return check_invariant_cycle_conditions(B, cert)
    return check_pair_conditions(B, cert)


def replay(B, verdict):
    """Re-validate a proved verdict from its stored certificate alone.

    Accepts a Verdict or its dict form; no search is performed.  Returns a
    fresh Verdict: proved when the certificate still checks out, otherwise
    unknown with the checker's reason.
    """
    data = verdict.as_dict() if isinstance(verdict, Verdict) else dict(verdict)
    prop = data["property"]
    cert = data.get("certificate") or {}
    caps = dict(data.get("caps") or {})
    caps["replayed"] = True
    if data.get("status") != "proved":
        return Verdict(prop, data["status"], data.get("theorem"), cert, caps)
    if prop == "primitivity-all-n":
        out = _check_payload(B, cert)
        status = "proved" if out.ok else "unknown"
        return Verdict(
            prop,
            status,
            out.theorem if out.ok else None,
            cert if out.ok else {"reason": out.reason, "stored": cert},
            caps,
        )
    if prop == "mixing":
        if B.mode == "edge":
            from .edge import replay_edge_mixing

            return replay_edge_mixing(B, data)
        out_h = _check_payload(B, cert["h"])
        out_v = _check_payload(B, cert["v"])
        prof = degeneracy_profile(B)
        rext = r_extendability(B)
        corners = corner_conditions(B)
        bridge = (
            (prof.h.nondegenerated and prof.v.nondegenerated)
            or (rext.crisscross and sum(corners) >= 3)
            or (
                prof.h.weakly_nondegenerated
                and prof.v.weakly_nondegenerated
                and rext.crisscross
            )
        )
        if out_h.ok and out_v.ok and bridge:
            return Verdict(prop, "proved", data.get("theorem"), cert, caps)
        reason = "; ".join(
            r
            for r in (
                None if out_h.ok else "horizontal: {}".format(out_h.reason),
                None if out_v.ok else "vertical: {}".format(out_v.reason),
                None if bridge else "bridge conditions no longer hold",
            )
            if r
        )
        return Verdict(prop, "unknown", None, {"reason": reason, "stored": cert}, caps)
    if prop == "strong-specification":
        from .holefill import replay_strong_specification

        return replay_strong_specification(B, data)
    raise ValueError("cannot replay property {!r}".format(prop))
