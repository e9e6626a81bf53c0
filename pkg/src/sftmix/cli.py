"""Command line front end emitting byte-stable verdict reports.

Subcommands read a basic set document, run the requested checks, and
print one report. Exit codes say only whether the tool ran: 0 for a
completed run whatever the verdicts, 1 for usage or input errors, 2
when a resource cap stopped the computation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

import numpy as np

from .core import CapExceeded, parse_basic_set, serialize_basic_set
from .certify import (
    CertifyCaps,
    Verdict,
    block_gluing_verdict,
    mixing_verdict,
    primitivity_all_n_certificate,
    replay,
)
from .structure import (
    corner_conditions,
    degeneracy_profile,
    infer_rectangle_extendability,
    r_extendability,
)

SCHEMA = "sftmix-report/1"
VERSION = "0.1.0"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(x):
    """Plain JSON values only: numpy scalars to ints, tuples to lists."""
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def emit_report(verdicts, fmt="json", extra=None, elapsed=None):
    """Serialize verdicts (and optional extra sections) into one document.

    JSON output carries no timing so identical inputs give identical
    bytes; the text rendering appends the elapsed seconds at the end.
    """
    doc = {"schema": SCHEMA, "version": VERSION, "verdicts": []}
    for v in verdicts:
        doc["verdicts"].append(v.as_dict() if isinstance(v, Verdict) else v)
    if extra:
        doc.update(extra)
    doc = _jsonable(doc)
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = ["report schema {} version {}".format(doc["schema"], doc["version"])]
    if "input" in doc:
        info = doc["input"]
        lines.append(
            "input: mode={} p={} patterns={} digest={}".format(
                info["mode"], info["p"], info["patterns"], info["digest"][:12]
            )
        )
    for v in doc["verdicts"]:
        line = "{}: {}".format(v["property"], v["status"])
        if v.get("theorem"):
            line += " via {}".format(v["theorem"])
        cert = v.get("certificate") or {}
        if isinstance(cert, dict):
            if cert.get("reason"):
                line += " ({})".format(cert["reason"])
            if cert.get("failed_conditions"):
                line += " failed: {}".format(", ".join(cert["failed_conditions"]))
        lines.append(line)
    for key in ("structure", "crosscheck"):
        if key in doc:
            lines.append(
                "{}: {}".format(key, json.dumps(doc[key], sort_keys=True))
            )
    if elapsed is not None:
        lines.append("timing: {:.2f}s".format(elapsed))
    return "\n".join(lines) + "\n"


def _load_input(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read input: {}".format(exc))
    try:
        return parse_basic_set(text)
    except ValueError as exc:
        raise UsageError("bad input document: {}".format(exc))


def _input_section(B):
    canon = serialize_basic_set(B)
    return {
        "input": {
            "digest": hashlib.sha256(canon.encode()).hexdigest(),
            "mode": B.mode,
            "p": B.p,
            "patterns": len(B),
        }
    }


def _certify_caps(args):
    kw = {}
    if args.m is not None:
        kw["m_max"] = args.m
    if args.q is not None:
        kw["q_max"] = args.q
    if args.n is not None:
        kw["n_direct"] = args.n
    return CertifyCaps(**kw)


def _primitivity_verdicts(B, caps):
    if B.mode == "edge":
        from .edge import edge_primitivity_all_n

        return [
            edge_primitivity_all_n(B, "h", caps),
            edge_primitivity_all_n(B, "v", caps),
        ]
    return [
        primitivity_all_n_certificate(B, "h", caps),
        primitivity_all_n_certificate(B, "v", caps),
    ]


def _cmd_inspect(B, args):
    if B.mode == "edge":
        from .edge import edge_nondegenerated

        structure = {
            "nondegenerated": [
                edge_nondegenerated(B, "h"),
                edge_nondegenerated(B, "v"),
            ]
        }
        return [], {"structure": structure}
    prof = degeneracy_profile(B)
    rext = r_extendability(B)
    corners = corner_conditions(B)
    rect = infer_rectangle_extendability(B)
    structure = {
        "degenerated": [prof.h.degenerated, prof.v.degenerated],
        "weakly_nondegenerated": [
            prof.h.weakly_nondegenerated,
            prof.v.weakly_nondegenerated,
        ],
        "nondegenerated": [prof.h.nondegenerated, prof.v.nondegenerated],
        "compressible_blocks": [
            list(prof.h.compressible_blocks),
            list(prof.v.compressible_blocks),
        ],
        "support_conditions": list(rext.conditions),
        "crisscross": rext.crisscross,
        "corners": list(corners),
        "rectangle_extendability": {"status": rect.status, "basis": rect.basis},
    }
    return [], {"structure": structure}


def _cmd_primitivity(B, args):
    return _primitivity_verdicts(B, _certify_caps(args)), {}


def _cmd_certify(B, args):
    caps = _certify_caps(args)
    verdicts = _primitivity_verdicts(B, caps)
    verdicts.append(mixing_verdict(B, caps))
    if B.mode == "vertex":
        verdicts.append(block_gluing_verdict(B, caps))
    return verdicts, {}


def _cmd_mixing(B, args):
    return [mixing_verdict(B, _certify_caps(args))], {}


def _cmd_strongspec(B, args):
    from .holefill import strong_specification_verdict

    k_max = args.k if args.k is not None else 3
    mn = [x for x in (args.m, args.n) if x is not None]
    mn_max = max(mn) if mn else 4
    return [strong_specification_verdict(B, k_max=k_max, MN_max=mn_max)], {}


def _cmd_hfc(B, args):
    from .holefill import check_hfc_k

    k = args.k if args.k is not None else 2
    M = args.m if args.m is not None else 1
    N = args.n if args.n is not None else 1
    try:
        res = check_hfc_k(B, k, M, N)
    except ValueError as exc:
        raise UsageError(str(exc))
    verdict = Verdict(
        "hole-filling",
        "proved" if res.holds else "refuted",
        None,
        {"holds": res.holds, "witness": res.witness, "checked": res.checked},
        dict(res.params),
    )
    return [verdict], {}


def _cmd_edge(B, args):
    if B.mode != "edge":
        raise UsageError("edge subcommand needs an edge basic set")
    from .edge import edge_certificates

    caps = _certify_caps(args)
    verdicts = _primitivity_verdicts(B, caps)
    verdicts.append(edge_certificates(B, caps))
    return verdicts, {}


def _cmd_oracle(B, args):
    from .oracle import transfer_count_crosscheck

    m_max = args.m if args.m is not None else 4
    n_max = args.n if args.n is not None else 4
    report = transfer_count_crosscheck(B, m_max, n_max)
    rows = [
        {
            "m": row.m,
            "n": row.n,
            "matrix": row.matrix_count,
            "oracle": row.oracle_count,
            "ok": row.ok,
        }
        for row in report.rows
    ]
    return [], {"crosscheck": {"ok": report.ok, "rows": rows}}


def _cmd_report(B, args):
    if args.replay:
        try:
            with open(args.replay, "r", encoding="utf-8") as fh:
                stored = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError("cannot read replay document: {}".format(exc))
        if stored.get("schema") != SCHEMA:
            raise UsageError("replay document has no recognized schema field")
        return [replay(B, v) for v in stored.get("verdicts", [])], {}
    from .holefill import strong_specification_verdict

    caps = _certify_caps(args)
    verdicts = _primitivity_verdicts(B, caps)
    verdicts.append(mixing_verdict(B, caps))
    if B.mode == "vertex":
        verdicts.append(block_gluing_verdict(B, caps))
        verdicts.append(strong_specification_verdict(B))
    return verdicts, {}


_COMMANDS = {
    "inspect": _cmd_inspect,
    "primitivity": _cmd_primitivity,
    "certify": _cmd_certify,
    "mixing": _cmd_mixing,
    "strongspec": _cmd_strongspec,
    "hfc": _cmd_hfc,
    "edge": _cmd_edge,
    "oracle": _cmd_oracle,
    "report": _cmd_report,
}


def build_parser():
    parser = _Parser(prog="sftmix", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="basic set JSON document")
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--q", type=int, default=None)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--threads", type=int, default=1)
        if name == "report":
            p.add_argument("--replay", default=None, help="stored report to re-check")
    return parser


def run_command(argv, out=None):
    """Run one subcommand; returns the process exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        B = _load_input(args.input)
        start = time.monotonic()
        verdicts, extra = _COMMANDS[args.command](B, args)
        elapsed = time.monotonic() - start
        extra = dict(extra)
        extra.update(_input_section(B))
        out.write(emit_report(verdicts, args.format, extra, elapsed))
        return 0
    except UsageError as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print("cap exceeded: {}".format(exc), file=sys.stderr)
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
