"""Command-line driver.

Exit codes: 0 all checks pass, 1 some check failed, 2 some check undetermined,
64 usage or input error.  The default seed comes from ``LORENTZHOM_SEED``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from lorentzhom import __version__
from lorentzhom.catalog import CatalogError, canonical_name, list_catalog, so
from lorentzhom.exact.matrix import Mat, MatrixFormatError
from lorentzhom.exact.linalg import signature
from lorentzhom.forms import FOUND, UNDETERMINED as V_UNDETERMINED, SubalgebraError
from lorentzhom.lie.algebra import parse_algebra
from lorentzhom.lie.roots import root_decomposition
from lorentzhom import verification as ver

SCHEMA_VERSION = 1
SEED_ENV = "LORENTZHOM_SEED"

EXIT_OK, EXIT_FAIL, EXIT_UNDETERMINED, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "text"
    seed: int = ver.DEFAULT_SEED


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return ver.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    common.add_argument("--seed", type=int, default=None,
                        help=f"random seed (default: ${SEED_ENV} or {ver.DEFAULT_SEED})")

    parser = _Parser(prog="lorentzhom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"lorentzhom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run check suites")
    vsub = v.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    va = vsub.add_parser("all", parents=[common], help="every suite up to --max-n")
    va.add_argument("--max-n", type=int, required=True)
    va.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    vl = vsub.add_parser("lemma", parents=[common], help="standard representation of so(1,k)")
    vl.add_argument("--k", type=int, required=True)
    vl.add_argument("--json", metavar="PATH")
    vq = vsub.add_parser("quotient", parents=[common], help="invariant forms on g/h")
    vq.add_argument("--g", required=True, metavar="so(P,Q)")
    vq.add_argument("--h", required=True, metavar="NAME")
    vq.add_argument("--expect", choices=("found", "none"),
                    help="fail unless the verdict matches")
    vq.add_argument("--json", metavar="PATH")

    r = sub.add_parser("roots", parents=[common], help="restricted roots and multiplicities")
    r.add_argument("--g", required=True, metavar="so(P,Q)")
    s = sub.add_parser("signature", parents=[common], help="signature of a symmetric matrix file")
    s.add_argument("--matrix", required=True, metavar="FILE")
    c = sub.add_parser("catalog", parents=[common], help="standard subalgebras")
    c.add_argument("--g", required=True, metavar="so(P,Q)")
    return parser


def _algebra(text: str):
    try:
        p, q = parse_algebra(text)
        return so(p, q)
    except ValueError as e:
        raise UsageError(str(e)) from None


# report output -------------------------------------------------------------------------

def report_document(reports) -> dict:
    return {"version": SCHEMA_VERSION, "checks": [r.to_dict() for r in reports],
            "summary": ver.summarize(reports)}


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _exit_code(reports) -> int:
    status = ver.summarize(reports)["status"]
    return {ver.PASS: EXIT_OK, ver.FAIL: EXIT_FAIL, ver.UNDETERMINED: EXIT_UNDETERMINED}[status]


def _emit_reports(cfg: RunConfig, reports, json_path: str | None, out) -> int:
    doc = report_document(reports)
    if json_path:
        try:
            with open(json_path, "w", encoding="utf-8") as fh:
                fh.write(dumps(doc))
        except OSError as e:
            raise UsageError(f"cannot write {json_path}: {e.strerror}") from None
    if cfg.output_format == "json":
        out.write(dumps(doc))
    else:
        for r in reports:
            params = ", ".join(f"{k}={v}" for k, v in r.params.items() if k != "u")
            line = f"{r.status.upper():13s} {r.check_name} ({params})"
            reason = (r.certificate or {}).get("reason")
            if reason:
                line += f": {reason}"
            out.write(line + "\n")
        sm = doc["summary"]
        out.write(f"summary: {sm['status']} ({sm['pass']} pass, {sm['fail']} fail, "
                  f"{sm['undetermined']} undetermined of {sm['total']})\n")
    return _exit_code(reports)


# commands --------------------------------------------------------------------------------

def quotient_report(g, h_name: str, expect: str | None = None) -> ver.CheckReport:
    """Report on the invariant forms of a catalog quotient; pass means decided."""
    try:
        rep, space, verdict = ver.analyze_quotient(g, h_name)
    except (CatalogError, SubalgebraError) as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(f"{g.name}/{h_name}: {e}") from None
    cert = {"quotient_dim": rep.m, "h_dim": rep.h.dim, "forms_dim": space.dim,
            "verdict": verdict.tag, "reason": verdict.reason, "evidence": verdict.evidence}
    if verdict.tag == FOUND:
        cert["forms"] = [ver.form_entry(g, h_name, verdict.certificate)]
    if verdict.tag == V_UNDETERMINED:
        status = ver.UNDETERMINED
    elif expect is not None and verdict.tag != expect:
        status = ver.FAIL
    else:
        status = ver.PASS
    params = {"g": g.name, "h": h_name}
    if expect:
        params["expect"] = expect
    return ver.CheckReport("quotient", params, status,
                           "Invariant symmetric forms on the isotropy representation",
                           ver.jsonable(cert))


def _cmd_verify(cfg: RunConfig, args, out) -> int:
    try:
        if args.suite == "all":
            reports = ver.run_all(args.max_n, cfg.seed)
        elif args.suite == "lemma":
            reports = [ver.check_lemma_std_rep(args.k, cfg.seed)]
        else:
            g = _algebra(args.g)
            h_name = args.h.strip()
            if h_name != "0":
                h_name = canonical_name(g, h_name)
            reports = [quotient_report(g, h_name, args.expect)]
            if cfg.output_format == "text":
                c = reports[0].certificate
                out.write(f"{g.name}/{h_name}: quotient dim {c['quotient_dim']}, "
                          f"invariant forms dim {c['forms_dim']}, verdict {c['verdict']}\n")
                out.write(f"  {c['reason']}\n")
                if c.get("forms"):
                    out.write(f"  certificate signature {c['forms'][0]['signature']}\n")
    except ValueError as e:
        raise UsageError(str(e)) from None
    return _emit_reports(cfg, reports, args.json, out)


def _cmd_roots(cfg: RunConfig, args, out) -> int:
    g = _algebra(args.g)
    if g.p > g.q or g.p == 0:
        raise UsageError(f"roots need 1 <= P <= Q, got {g.name}")
    rd = root_decomposition(g)
    rows = [{"root": list(r), "multiplicity": rd.multiplicity(r),
             "positive": r in rd.positive_roots} for r in sorted(rd.roots)]
    names = {}
    if rd.rank == 2:
        try:
            a, b = rd.alpha_beta()
            for label, (i, j) in {"alpha": (1, 0), "beta": (0, 1), "alpha+beta": (1, 1),
                                  "alpha+2beta": (1, 2)}.items():
                names[label] = [i * x + j * y for x, y in zip(a, b)]
        except ValueError:
            names = {}
    doc = {"version": SCHEMA_VERSION, "algebra": g.name, "rank": rd.rank,
           "zero_space_dim": rd.zero_space.dim, "roots": rows, "named": names}
    if cfg.output_format == "json":
        out.write(dumps(doc))
    else:
        out.write(f"{g.name}: real rank {rd.rank}, dim g_0 = {rd.zero_space.dim}\n")
        label_of = {tuple(v): k for k, v in names.items()}
        for row in rows:
            lab = label_of.get(tuple(row["root"]), "")
            neg = label_of.get(tuple(-x for x in row["root"]))
            if not lab and neg:
                lab = f"-({neg})" if "+" in neg else f"-{neg}"
            out.write(f"  {str(tuple(row['root'])):12s} mult {row['multiplicity']}"
                      f"{'  ' + lab if lab else ''}\n")
    return EXIT_OK


def _cmd_signature(cfg: RunConfig, args, out) -> int:
    try:
        with open(args.matrix, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.matrix}: {e.strerror}") from None
    try:
        m = Mat.from_text(text)
    except MatrixFormatError as e:
        raise UsageError(f"{args.matrix}: {e}") from None
    if not m.is_symmetric():
        raise UsageError(f"{args.matrix}: matrix is not symmetric")
    sig = signature(m)
    if cfg.output_format == "json":
        out.write(dumps({"version": SCHEMA_VERSION, "signature": list(sig),
                         "minkowski": sig.is_minkowski}))
    else:
        out.write(f"{sig}\n")
    return EXIT_OK


def _cmd_catalog(cfg: RunConfig, args, out) -> int:
    g = _algebra(args.g)
    entries = list_catalog(g)
    if cfg.output_format == "json":
        out.write(dumps({"version": SCHEMA_VERSION, "algebra": g.name,
                         "entries": [{"name": e.name, "dim": e.expected_dim,
                                      "description": e.description} for e in entries]}))
    elif not entries:
        out.write(f"{g.name}: no catalog entries (only so(1,n), n >= 2, and so(2,n), n >= 3)\n")
    else:
        for e in entries:
            out.write(f"{e.name:20s} dim {e.expected_dim:3d}  {e.description}\n")
    return EXIT_OK


_COMMANDS = {"verify": _cmd_verify, "roots": _cmd_roots, "signature": _cmd_signature,
             "catalog": _cmd_catalog}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        params = {k: v for k, v in vars(args).items()
                  if k not in ("command", "output_format", "seed")}
        cfg = RunConfig(args.command, params, args.output_format, seed)
        return _COMMANDS[args.command](cfg, args, out)
    except UsageError as e:
        print(f"lorentzhom: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
