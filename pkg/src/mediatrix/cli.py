"""Command-line interface.

Exit codes: 0 success or valid certificate, 1 a certificate claim is false
(or a search found nothing), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import certificate
from .bounds import bounds_record, best_upper_bound, f_lower, plane_bounds, plane_order
from .constructions import develop, development_sdr, extend_plane, extension_size, min_difference_cover
from .errors import BudgetError, ResourceLimitError
from .exact import mu_exact
from .families import digraph_from_family, find_sdr
from .galois import is_prime_power, projective_plane

CSV_COLUMNS = ["n", "f", "mu_ub", "method", "gap", "strict_gap"]


class UsageError(Exception):
    pass


def cmd_bounds(args: argparse.Namespace, out) -> int:
    if args.lo < 1 or args.lo > args.hi:
        raise UsageError(f"need 1 <= --from <= --to, got {args.lo}..{args.hi}")
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
    for n in range(args.lo, args.hi + 1):
        row = bounds_record(n, args.effort).as_row()
        if args.format == "csv":
            row["strict_gap"] = str(row["strict_gap"]).lower()
            writer.writerow(row)
        else:
            out.write(json.dumps(row) + "\n")
    return 0


def build_certificate(n: int, method: str, q=None, m=None, t=None, effort: int = 1) -> certificate.Certificate:
    """Construct a witness digraph on ``n`` vertices with the requested method."""
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")
    if method == "plane":
        order = plane_order(n)
        if order is None or not is_prime_power(order):
            raise UsageError(f"plane needs n = q^2+q+1 with q a prime power; {n} is not of that form")
        family = projective_plane(order).lines
        d = digraph_from_family(family, find_sdr(family))
        return certificate.Certificate.for_digraph(d, order, f"plane({order})", {"q": order})
    if method == "extend":
        if None in (q, m, t):
            if any(v is not None for v in (q, m, t)):
                raise UsageError("give all of --q, --m, --t or none of them")
            options = [b for b in plane_bounds(n) if b.params["kind"] == "plane-extension"]
            if not options:
                raise UsageError(f"no plane extension q^2+q+1+m(q+1)-t reaches n={n}")
            best = min(options, key=lambda b: b.value)
            q, m, t = best.params["q"], best.params["m"], best.params["t"]
        elif extension_size(q, m, t) != n:
            raise UsageError(f"q={q}, m={m}, t={t} gives {extension_size(q, m, t)} points, not {n}")
        try:
            ext = extend_plane(q, m, t)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        d = digraph_from_family(ext.family, ext.sdr)
        return certificate.Certificate.for_digraph(d, q + m, f"plane-extension({q},{m},{t})", {"q": q, "m": m, "t": t})
    if method == "diffcover":
        cover = min_difference_cover(n)
        if cover is None:
            raise UsageError(f"no difference cover of Z_{n} within the default size budget")
        d = digraph_from_family(develop(cover), development_sdr(cover))
        return certificate.Certificate.for_digraph(d, cover.k - 1, f"diff-cover({cover.k})", {"cover": list(cover.elems)})
    if method == "exact":
        try:
            mu, d = mu_exact(n)
        except (ResourceLimitError, BudgetError) as exc:
            raise UsageError(str(exc)) from exc
        return certificate.Certificate.for_digraph(d, mu, "exact", {})
    if method == "auto":
        ub = best_upper_bound(n, effort)
        return certificate.Certificate.for_digraph(ub.witness_digraph(), ub.value, ub.method, _public(ub.params))
    raise UsageError(f"unknown method {method!r}")


def _public(params: dict) -> dict:
    return {k: v for k, v in params.items() if k != "kind"}


def cmd_construct(args: argparse.Namespace, out) -> int:
    cert = build_certificate(args.n, args.method, args.q, args.m, args.t, args.effort)
    report = certificate.check(cert)
    if not report.ok:
        raise AssertionError(f"constructed certificate failed verification:\n{report}")
    certificate.write(cert, args.out)
    out.write(f"wrote {args.out}: {cert.kind} on {cert.n} vertices, max in-degree {cert.claim} via {cert.method}\n")
    return 0


def cmd_verify(args: argparse.Namespace, out) -> int:
    try:
        cert = certificate.read(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    except certificate.CertificateError as exc:
        raise UsageError(f"{args.file}: {exc}") from exc
    report = certificate.check(cert)
    out.write(str(report) + "\n")
    out.write(("VALID" if report.ok else "INVALID") + "\n")
    return 0 if report.ok else 1


def cmd_diffcover(args: argparse.Namespace, out) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    cover = min_difference_cover(args.n, args.k_budget)
    if cover is None:
        out.write(json.dumps({"n": args.n, "k": None, "cover": None}) + "\n")
        return 1
    row = {"n": args.n, "k": cover.k, "cover": list(cover.elems), "mu_ub": cover.k - 1, "f": f_lower(args.n)}
    out.write(json.dumps(row) + "\n")
    return 0


def cmd_exact(args: argparse.Namespace, out) -> int:
    try:
        mu, d = mu_exact(args.n, args.k_cap)
    except (ResourceLimitError, BudgetError) as exc:
        raise UsageError(str(exc)) from exc
    out.write(json.dumps({"n": args.n, "mu": mu, "f": f_lower(args.n), "arcs": [list(a) for a in d.arcs()]}) + "\n")
    if args.out:
        certificate.write(certificate.Certificate.for_digraph(d, mu, "exact", {}), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mediatrix", description="Bounds and witnesses for the mediation number mu(n).")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="tabulate f(n) and the best upper bound")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--effort", type=int, choices=[0, 1, 2], default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="write a witness certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["auto", "plane", "extend", "diffcover", "exact"], default="auto")
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--effort", type=int, choices=[0, 1, 2], default=1, help="effort tier for --method auto")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate without trusting its method")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diffcover", help="smallest cyclic difference cover of Z_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-budget", type=int)
    p.set_defaults(func=cmd_diffcover)

    p = sub.add_parser("exact", help="exact mu(n) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-cap", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"mediatrix {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
