"""Command-line front door: construct, verify, and export.

Exit codes: 0 success, 1 verification failure (a theorem suite reported
failures, which should never happen), 2 bad input or flags. Every error
message names the violated invariant and a witness when one exists.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats
from ._backend import BACKEND
from .constructions import PushoutInvariantError, pushout_embeddings
from .core import NonEmbeddingError
from .corelations import phi
from .duality import NonDistributiveError, upset_lattice, join_irreducibles
from .enumeration import (
    THEOREMS,
    BudgetExceededError,
    EnumerationBudget,
    UnknownTheoremError,
    enumerate_corelations,
    enumerate_posets,
    enumerate_preorders,
    verify,
)

ENV_MAX_N = "POSCAT_MAX_N"


def _theorem_epilog() -> str:
    lines = ["theorems:"]
    for tid in sorted(THEOREMS):
        lines.append(f"  {tid:<20} {THEOREMS[tid].description}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poscat",
        description="Finite posets, their categorical constructions, and exhaustive theorem verification.",
        epilog=_theorem_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"poscat 0.1.0 ({BACKEND} backend)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="stream structures as JSON lines")
    group = p_enum.add_mutually_exclusive_group(required=True)
    group.add_argument("--posets", type=int, metavar="N", help="all partial orders on N labeled points")
    group.add_argument("--preorders", type=int, metavar="N", help="all pre-orders on N labeled points")
    p_enum.add_argument("--unlabeled", action="store_true", help="one representative per isomorphism class")
    p_enum.add_argument("--out", metavar="FILE")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser(
        "verify",
        help="run an exhaustive theorem suite and write its JSON report",
        epilog=_theorem_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_verify.add_argument("--theorem", required=True, metavar="ID")
    p_verify.add_argument("--max-n", type=int, default=None, metavar="K", help=f"carrier-size bound (default per theorem, override with ${ENV_MAX_N})")
    p_verify.add_argument("--parallel", type=int, default=1, metavar="W", help="worker count for the fan-out suites")
    p_verify.add_argument("--out", metavar="FILE")
    p_verify.set_defaults(func=cmd_verify)

    p_push = sub.add_parser("pushout", help="pushout of two order-embeddings sharing a domain")
    p_push.add_argument("--f0", required=True, metavar="FILE", help="JSON monotone map file")
    p_push.add_argument("--f1", required=True, metavar="FILE", help="JSON monotone map file")
    p_push.add_argument("--out", metavar="FILE")
    p_push.set_defaults(func=cmd_pushout)

    p_cor = sub.add_parser("corelations", help="list all equivalence co-relations of a poset with their glued subsets")
    p_cor.add_argument("poset_file", metavar="POSET_FILE")
    p_cor.add_argument("--out", metavar="FILE")
    p_cor.set_defaults(func=cmd_corelations)

    p_dual = sub.add_parser("dual", help="apply the duality: poset file -> up-set lattice, lattice file -> join-irreducible poset")
    p_dual.add_argument("input_file", metavar="FILE")
    p_dual.add_argument("--out", metavar="FILE")
    p_dual.set_defaults(func=cmd_dual)

    p_exp = sub.add_parser("export", help="export a poset")
    p_exp.add_argument("--dot", required=True, metavar="POSET_FILE", help="write the Hasse diagram in DOT")
    p_exp.add_argument("--out", metavar="FILE")
    p_exp.set_defaults(func=cmd_export)

    return parser


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise formats.FormatError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise formats.FormatError(f"{path} is not valid JSON: {e}") from None


def cmd_enumerate(args) -> int:
    if args.posets is not None:
        stream = enumerate_posets(args.posets, labeled=not args.unlabeled)
        docs = (formats.poset_to_doc(p) for p in stream)
    else:
        if args.unlabeled:
            raise ValueError("--unlabeled applies to --posets only")
        docs = (formats.preorder_to_doc(p) for p in enumerate_preorders(args.preorders))
    _write(args, "".join(formats.dumps_line(doc) for doc in docs))
    return 0


def cmd_verify(args) -> int:
    max_n = args.max_n
    if max_n is None:
        env = os.environ.get(ENV_MAX_N)
        if env is not None:
            max_n = int(env)
    if theorem := THEOREMS.get(args.theorem):
        if max_n is None:
            max_n = theorem.default_max_n
    budget = EnumerationBudget(max_n=max_n if max_n is not None else 3, parallelism=args.parallel)
    report = verify(args.theorem, budget)
    _write(args, formats.dumps(report.to_doc()))
    return 0 if report.ok else 1


def cmd_pushout(args) -> int:
    f0 = formats.map_from_doc(_load_json(args.f0))
    f1 = formats.map_from_doc(_load_json(args.f1))
    result = pushout_embeddings(f0, f1)
    _write(args, formats.dumps(formats.pushout_to_doc(result)))
    return 0


def cmd_corelations(args) -> int:
    p = formats.poset_from_doc(_load_json(args.poset_file))
    lines = []
    for c in enumerate_corelations(p):
        glued = sorted(p.carrier.label(i) for i in phi(c))
        lines.append(formats.dumps_line({"phi": glued, "pairs": formats.corelation_extra_pairs(c)}))
    _write(args, "".join(lines))
    return 0


def cmd_dual(args) -> int:
    doc = _load_json(args.input_file)
    if "bot" in doc or "top" in doc:
        lat = formats.lattice_from_doc(doc)
        out = formats.poset_to_doc(join_irreducibles(lat))
    else:
        p = formats.poset_from_doc(doc)
        out = formats.lattice_to_doc(upset_lattice(p))
    _write(args, formats.dumps(out))
    return 0


def cmd_export(args) -> int:
    p = formats.poset_from_doc(_load_json(args.dot))
    _write(args, formats.dot_hasse(p))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PushoutInvariantError as e:
        # a falsified construction invariant is a verification failure
        print(f"verification failure: {e}", file=sys.stderr)
        return 1
    except (
        formats.FormatError,
        BudgetExceededError,
        UnknownTheoremError,
        NonEmbeddingError,
        NonDistributiveError,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
