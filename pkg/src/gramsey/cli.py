"""Command-line front end for certificates, classification, and experiments.

Outputs are JSON with sorted keys and a trailing newline, so identical
inputs (and seed) always give byte-identical files.  Exit codes encode
outcome categories, one code per category:

* ``certify``: 0 solution, 2 obstruction, 1 input error.
* ``search``: 0 certificate found, 3 absent or exhausted, 1 input error.
* ``classify`` / ``experiment``: 0 report written, 1 input error.
* any ``--verify`` run: 0 when the certificate re-verifies, 1 otherwise.

``GRAMSEY_THREADS`` (0 = auto) caps internal parallelism.  Searches
currently run on one thread; the canonical first-witness contract means a
parallel schedule must produce identical reports, so the variable is
validated and otherwise inert.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .gaussian import parse_gauss_int
from .largeness import (
    GaussSet,
    contains_delta,
    contains_ip,
    is_piecewise_syndetic,
    is_syndetic,
    is_thick,
)
from .linalg import (
    IprCertificate,
    ParseError,
    SOLUTION,
    certify,
    clear_denominators,
    parse_matrix,
)
from .partition import (
    Coloring,
    ImageCertificate,
    SCOPE,
    abundance_report,
    congruence_proofcheck,
    preservation_experiment,
    search_monochromatic,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OBSTRUCTION = 2
EXIT_ABSENT = 3


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_json(path: str) -> dict:
    doc = json.loads(_read_text(path))
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object at top level")
    return doc


def _emit(doc: dict, out_path: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_threads() -> int:
    raw = os.environ.get("GRAMSEY_THREADS", "0")
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"GRAMSEY_THREADS must be an integer, got {raw!r}") from None
    if val < 0:
        raise ValueError("GRAMSEY_THREADS must be >= 0")
    return val


def _tokens(values) -> Optional[list[str]]:
    if values is None:
        return None
    return [str(v) for v in values]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_certify(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.matrix))
    if args.verify:
        cert = IprCertificate.from_json_dict(_read_json(args.verify))
        valid = cert.verify(matrix)
        _emit(
            {"command": "certify", "mode": "verify", "kind": cert.kind, "valid": valid},
            args.out,
        )
        return EXIT_OK if valid else EXIT_ERROR
    cert = certify(matrix)
    doc = cert.to_json_dict(matrix)
    doc["command"] = "certify"
    _emit(doc, args.out)
    return EXIT_OK if cert.kind == SOLUTION else EXIT_OBSTRUCTION


def cmd_search(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.matrix))
    coloring = Coloring.from_json_dict(_read_json(args.coloring), default_seed=args.seed)
    n, cleared = clear_denominators(matrix)
    if args.verify:
        cert = ImageCertificate.from_json_dict(_read_json(args.verify))
        valid = cert.verify(cleared, coloring)
        _emit(
            {"command": "search", "mode": "verify", "valid": valid},
            args.out,
        )
        return EXIT_OK if valid else EXIT_ERROR
    result = search_monochromatic(matrix, coloring, args.search_radius)
    doc = {
        "command": "search",
        "status": result.status,
        "certificate": (
            result.certificate.to_json_dict() if result.certificate else None
        ),
        "scanned": result.scanned,
        "viable": result.viable,
        "params": {
            "search_radius": args.search_radius,
            "denominator_scale": n,
            "matrix": {"rows": matrix.nrows, "cols": matrix.ncols},
            "coloring": coloring.describe(),
        },
        "scope": SCOPE,
    }
    _emit(doc, args.out)
    return EXIT_OK if result.status == "found" else EXIT_ABSENT


def cmd_classify(args: argparse.Namespace) -> int:
    C = GaussSet.from_json_dict(_read_json(args.set), default_seed=args.seed)
    k, g, f = args.depth, args.g_radius, args.f_radius
    syn = is_syndetic(C, g)
    ps = is_piecewise_syndetic(C, g, f)
    th = is_thick(C, f)
    ipw = contains_ip(C, k)
    dw = contains_delta(C, k)
    comp = C.complement()
    ip_star_w = contains_ip(comp, k)
    delta_star_w = contains_delta(comp, k)
    doc = {
        "command": "classify",
        "syndetic": {"holds": syn is not None, "translates": _tokens(syn)},
        "piecewise_syndetic": {
            "holds": ps is not None,
            "witness": (
                None
                if ps is None
                else {"translates": _tokens(ps.translates), "x": str(ps.x)}
            ),
        },
        "thick": {"holds": th is not None, "x": None if th is None else str(th)},
        "ip": {"holds": ipw is not None, "witness": _tokens(ipw)},
        "delta": {"holds": dw is not None, "witness": _tokens(dw)},
        "ip_star": {
            "holds": ip_star_w is None,
            "complement_witness": _tokens(ip_star_w),
        },
        "delta_star": {
            "holds": delta_star_w is None,
            "complement_witness": _tokens(delta_star_w),
        },
        "params": {
            "depth": k,
            "g_radius": g,
            "f_radius": f,
            "set": C.describe(),
        },
        "scope": SCOPE,
    }
    _emit(doc, args.out)
    return EXIT_OK


def cmd_experiment_abundance(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.matrix))
    C = GaussSet.from_json_dict(_read_json(args.set), default_seed=args.seed)
    doc = abundance_report(matrix, C, args.radius, args.depth)
    doc["command"] = "experiment:abundance"
    _emit(doc, args.out)
    return EXIT_OK


def cmd_experiment_preservation(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.matrix))
    C = GaussSet.from_json_dict(_read_json(args.set), default_seed=args.seed)
    doc = preservation_experiment(matrix, C, args.family, args.depth, args.radius)
    doc["command"] = "experiment:preservation"
    _emit(doc, args.out)
    return EXIT_OK


def cmd_experiment_proofcheck(args: argparse.Namespace) -> int:
    matrix = parse_matrix(_read_text(args.matrix))
    l = parse_gauss_int(args.l)
    doc = congruence_proofcheck(matrix, l, args.radius)
    doc["command"] = "experiment:proofcheck"
    _emit(doc, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramsey",
        description=(
            "Exact all-ones certificates, finite-window largeness "
            "classification, and desk-scale partition experiments over the "
            "Gaussian integers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser(
        "certify",
        help="decide whether A*s = all-ones is solvable; exit 0 solution, 2 obstruction",
    )
    c.add_argument("matrix", help="matrix file: first line 'u v', then entries")
    c.add_argument("--verify", metavar="CERT", help="re-verify an emitted certificate")
    c.add_argument("--out", help="write the JSON result here instead of stdout")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser(
        "search",
        help="scan for a one-color in-window image; exit 0 found, 3 absent/exhausted",
    )
    s.add_argument("matrix")
    s.add_argument("coloring", help="coloring JSON file")
    s.add_argument("--search-radius", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--verify", metavar="CERT", help="re-verify an emitted certificate")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    cl = sub.add_parser("classify", help="run every largeness detector on a set file")
    cl.add_argument("set", metavar="SET", help="set JSON file")
    cl.add_argument("--depth", type=int, default=2)
    cl.add_argument("--g-radius", type=int, default=1)
    cl.add_argument("--f-radius", type=int, default=1)
    cl.add_argument("--seed", type=int, default=0)
    cl.add_argument("--out")
    cl.set_defaults(func=cmd_classify)

    ex = sub.add_parser("experiment", help="finite-scale experiment reports")
    exsub = ex.add_subparsers(dest="kind", required=True)

    ab = exsub.add_parser("abundance", help="image-density and witness report")
    ab.add_argument("matrix")
    ab.add_argument("set", metavar="SET")
    ab.add_argument("--radius", type=int, default=4)
    ab.add_argument("--depth", type=int, default=2)
    ab.add_argument("--seed", type=int, default=0)
    ab.add_argument("--out")
    ab.set_defaults(func=cmd_experiment_abundance)

    pr = exsub.add_parser("preservation", help="classify C and its preimage")
    pr.add_argument("matrix")
    pr.add_argument("set", metavar="SET")
    pr.add_argument(
        "--family", required=True, choices=["ip", "delta", "ps", "thick"]
    )
    pr.add_argument("--radius", type=int, default=4)
    pr.add_argument("--depth", type=int, default=2)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_experiment_preservation)

    pc = exsub.add_parser("proofcheck", help="re-enact the obstruction congruence scan")
    pc.add_argument("matrix")
    pc.add_argument("--l", required=True, help="nonzero Gaussian integer, e.g. '1+i'")
    pc.add_argument("--radius", type=int, default=12)
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_experiment_proofcheck)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _resolve_threads()
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
