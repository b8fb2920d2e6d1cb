"""Command-line front end.

Exit codes: 0 success, 1 definitive negative, 2 unknown or marginal, 3 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import formats
from .algebra import CarrierError, GroupRing
from .certificates import (
    CertificateError,
    ModulePresentation,
    bound_propagate,
    cert_verify,
    l1_certificate,
    verify_norm,
)
from .expressions import ExpressionError, format_element, parse_carrier, parse_expression
from .forms import FormError, form_respects_module, gns, gns_residual, prop9_audit, prop10_audit
from .groups import GroupError
from .irreps import SplittingError, decompose_irreps
from .linalg import PSD_TOL
from .positivity import (
    BOUNDARY,
    INTERIOR,
    NORM_TOL,
    OUTSIDE,
    DegeneratePresentation,
    arch_membership,
    build_AM_model,
    corollary8_audit,
    evaluation_map_audit,
    example9_audit,
    seminorm,
    theorem1_audit,
)
from .reports import FAIL, PASS

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common(p: argparse.ArgumentParser, carrier: bool = True) -> None:
    if carrier:
        p.add_argument("--carrier", help="carrier spec, e.g. cyclic:4, symmetric:3, free:2, mat:2:cyclic:2")
        p.add_argument("--table", help="JSON group table file (overrides --carrier)")
        p.add_argument("--gen", action="append", default=[], help="module generator expression (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--psd-tol", type=float, default=PSD_TOL)
    p.add_argument("--norm-tol", type=float, default=NORM_TOL)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadmod", description="Quadratic modules on *-rings: seminorms, certificates, audits.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("norm", help="seminorm n_M of an element")
    _common(p)
    p.add_argument("element")

    p = sub.add_parser("cert-verify", help="check a certificate file exactly")
    _common(p, carrier=False)
    p.add_argument("file")

    p = sub.add_parser("cert-derive", help="derive a norm certificate")
    _common(p)
    p.add_argument("--method", choices=["auto", "l1", "propagate"], default="auto")
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.add_argument("element")

    p = sub.add_parser("arch", help="closure / interior membership of a symmetric element")
    _common(p)
    p.add_argument("element")

    p = sub.add_parser("irreps", help="irreducible representations of a finite carrier")
    _common(p)

    p = sub.add_parser("gns", help="GNS representation of a form file")
    _common(p, carrier=False)
    p.add_argument("--gen", action="append", default=[], help="module generator for the positivity check")
    p.add_argument("form")

    p = sub.add_parser("audit", help="run a named audit")
    _common(p)
    p.add_argument("name", choices=["characters", "completion", "evaluation", "extensions", "forms", "all"])
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--form", help="form file for the forms audit")
    p.add_argument("--element", help="element for the evaluation audit")
    return parser


# helpers ------------------------------------------------------------------------


def _carrier(args):
    if getattr(args, "table", None):
        return parse_carrier(f"table:{args.table}")
    if not args.carrier:
        raise UsageError("--carrier or --table is required")
    return parse_carrier(args.carrier)


def _presentation(args, carrier=None) -> ModulePresentation:
    car = _carrier(args) if carrier is None else carrier
    return ModulePresentation(car, tuple(parse_expression(g, car) for g in args.gen))


def _fmt(x: float, tol: float) -> str:
    if not math.isfinite(x):
        return "inf"
    digits = max(1, int(round(-math.log10(tol))) + 1) if tol > 0 else 17
    return f"{x:.{digits}g}"


def _emit(args, payload: dict, text: str, out=None) -> None:
    out = sys.stdout if out is None else out
    out.write(formats.dumps(payload) if args.json else text + "\n")


# subcommands --------------------------------------------------------------------


def cmd_norm(args) -> int:
    pres = _presentation(args)
    a = parse_expression(args.element, pres.carrier)
    est = seminorm(a, pres, seed=args.seed)
    payload = {"element": format_element(a), "estimate": est.to_json()}
    if est.exact:
        text = _fmt(est.upper, args.norm_tol)
    else:
        text = f"[{_fmt(est.lower, args.norm_tol)}, {_fmt(est.upper, args.norm_tol)}]"
        if est.note:
            text += f"  ({est.note})"
    _emit(args, payload, text)
    return EXIT_OK if est.finite else EXIT_UNKNOWN


def cmd_cert_verify(args) -> int:
    try:
        pres, cert, target, nc = formats.certificate_from_json(Path(args.file))
    except CertificateError as exc:
        _emit(args, {"accepted": False, "reason": str(exc), "terms": None}, f"rejected: {exc}")
        return EXIT_NEGATIVE
    verdict = cert_verify(cert, target, pres)
    if verdict and nc is not None:
        if nc.target() != target:
            verdict = type(verdict)(False, "claimed target differs from bound^2 - a a^*")
        else:
            verdict = verify_norm(nc, pres)
    payload = {"accepted": verdict.accepted, "reason": verdict.reason, "terms": len(cert.terms)}
    _emit(args, payload, "accepted" if verdict else f"rejected: {verdict.reason}")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_cert_derive(args) -> int:
    pres = _presentation(args)
    a = parse_expression(args.element, pres.carrier)
    method = args.method
    if method == "auto":
        method = "l1" if isinstance(pres.carrier, GroupRing) else "propagate"
    nc = l1_certificate(a, pres) if method == "l1" else bound_propagate(a, pres)
    text = formats.dumps(formats.certificate_to_json(nc, pres))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"bound {nc.bound} with {len(nc.cert.terms)} terms written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_arch(args) -> int:
    pres = _presentation(args)
    x = parse_expression(args.element, pres.carrier)
    if not x.is_symmetric():
        raise UsageError(f"{format_element(x)} is not symmetric")
    status = arch_membership(x, pres, args.psd_tol, seed=args.seed)
    _emit(args, {"element": format_element(x), "status": status}, status)
    if status in (INTERIOR, BOUNDARY):
        return EXIT_OK
    return EXIT_NEGATIVE if status == OUTSIDE else EXIT_UNKNOWN


def cmd_irreps(args) -> int:
    car = _carrier(args)
    irr = decompose_irreps(car, args.seed)
    payload = formats.irreps_to_json(irr)
    lines = [f"{r.label}: dimension {r.dim}" for r in irr]
    lines.append(f"sum of squared dimensions {sum(d * d for d in irr.dimensions)} = {len(car.basis())}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gns(args) -> int:
    try:
        f = formats.form_from_json(Path(args.form), args.psd_tol)
    except FormError as exc:
        _emit(args, {"accepted": False, "reason": str(exc)}, f"rejected: {exc}")
        return EXIT_NEGATIVE
    g = gns(f)
    res = gns_residual(g, f)
    payload = {
        "dimension": g.dim,
        "scale": round(g.scale, 12),
        "residual": res,
        "omega": [[float(z.real), float(z.imag)] for z in np.round(g.omega, 12) + 0.0],
    }
    text = f"GNS dimension {g.dim}, f(1) = {_fmt(g.scale, args.norm_tol)}, reproduction residual {res:.2e}"
    status = EXIT_OK
    if args.gen:
        pres = ModulePresentation(f.carrier, tuple(parse_expression(s, f.carrier) for s in args.gen))
        resp = form_respects_module(f, pres, args.psd_tol)
        payload["respects_module"] = resp
        text += f"\nrespects the module: {resp}"
        if resp == "yes":
            report = prop10_audit(g, pres, seed=args.seed)
            payload["report"] = report.to_json()
            status = EXIT_OK if report.passed else EXIT_NEGATIVE
    _emit(args, payload, text)
    return status


def cmd_audit(args) -> int:
    pres = _presentation(args)
    names = ["characters", "completion", "evaluation", "extensions", "forms"] if args.name == "all" else [args.name]
    reports = []
    for name in names:
        if name == "characters":
            abelian = isinstance(pres.carrier, GroupRing) and pres.carrier.group.is_abelian()
            if args.name == "all" and not abelian:
                continue
            reports.append(theorem1_audit(pres, args.samples, args.seed, args.psd_tol))
        elif name == "completion":
            model = build_AM_model(pres, args.seed, args.psd_tol, allow_empty=True)
            reports.append(corollary8_audit(model, args.samples, args.seed, args.psd_tol))
        elif name == "evaluation":
            a = parse_expression(args.element, pres.carrier) if args.element else None
            reports.append(evaluation_map_audit(pres, a, pairs=args.samples, seed=args.seed))
        elif name == "extensions":
            reports.append(example9_audit(pres, args.samples, seed=args.seed))
        elif name == "forms":
            if not args.form:
                if args.name == "all":
                    continue
                raise UsageError("the forms audit needs --form")
            f = formats.form_from_json(Path(args.form), args.psd_tol)
            if f.carrier != pres.carrier:
                raise UsageError("form carrier differs from --carrier")
            reports.append(prop9_audit(f, pres, args.samples, args.seed, tol=args.psd_tol))
            if form_respects_module(f, pres, args.psd_tol) == "yes" and f.unit_value > 0:
                reports.append(prop10_audit(gns(f), pres, args.samples, args.seed, tol=args.psd_tol))
    payload = {"reports": [r.to_json() for r in reports]}
    _emit(args, payload, "\n".join(r.summary() for r in reports))
    states = {r.status for r in reports}
    if FAIL in states:
        return EXIT_NEGATIVE
    return EXIT_OK if states <= {PASS} else EXIT_UNKNOWN


COMMANDS = {
    "norm": cmd_norm,
    "cert-verify": cmd_cert_verify,
    "cert-derive": cmd_cert_derive,
    "arch": cmd_arch,
    "irreps": cmd_irreps,
    "gns": cmd_gns,
    "audit": cmd_audit,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ExpressionError, CarrierError, GroupError, formats.FormatError, CertificateError,
            FormError, OSError, ValueError) as exc:
        if isinstance(exc, DegeneratePresentation):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_UNKNOWN
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SplittingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
