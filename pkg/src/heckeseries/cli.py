"""Command-line interface.

Exit codes: 0 all requested checks passed; 1 a check failed or a prediction
was refused (inconclusive detection, failed certificate, rejected symmetry);
2 usage or parse error; 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import rmatrix, verify
from .partitions import format_partition, parse_partition
from .series import (
    BirankCertificate,
    CertificateError,
    InconclusiveDetection,
    TruncSeries,
    detect_rational,
    diamond,
    hom_dual_series,
    poly_mul,
    poly_negate_t,
    predict_hom_series,
    total_positivity,
)
from .symfunc import DegreeCapError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_rationals(text: str) -> list[Fraction]:
    toks = [t.strip() for t in text.split(",")]
    if not toks or any(not t for t in toks):
        raise UsageError(f"malformed rational list {text!r}")
    try:
        return [Fraction(t) for t in toks]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational list {text!r}: {exc}") from None


def _parse_rational_form(text: str) -> tuple[list[Fraction], list[Fraction]]:
    """Accepts 'num;den' or 'num=...; den=...' with comma coefficient lists."""
    parts = text.split(";")
    if len(parts) != 2:
        raise UsageError(
            f"expected 'num;den' with two coefficient lists, got {text!r}"
        )
    cleaned = []
    for part in parts:
        part = part.strip()
        if "=" in part:
            part = part.partition("=")[2].strip()
        cleaned.append(_parse_rationals(part))
    return cleaned[0], cleaned[1]


def _poly_from_roots(roots) -> list[Fraction]:
    out = [Fraction(1)]
    for a in roots:
        out = poly_mul(out, [Fraction(1), -Fraction(a)])
    return out


def _certificate_from_flags(series_text, alphas, betas, suffix="") -> BirankCertificate:
    if series_text is not None:
        if alphas or betas:
            raise UsageError(
                f"give either --series{suffix} or root lists, not both"
            )
        num, den = _parse_rational_form(series_text)
        # the series is f1(-t)/f0(t): numerator determines f1
        return BirankCertificate.from_polynomials(den, poly_negate_t(num))
    if not alphas and not betas:
        raise UsageError(
            f"need --series{suffix} or at least one of "
            f"--alphas{suffix}/--betas{suffix}"
        )
    f0 = _poly_from_roots(_parse_rationals(alphas) if alphas else ())
    f1 = _poly_from_roots(_parse_rationals(betas) if betas else ())
    return BirankCertificate.from_polynomials(f0, f1)


def _parse_symmetry_spec(spec: str) -> rmatrix.HeckeSymmetry:
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(
            f"symmetry specifier {spec!r} needs a 'std:', 'super:' or "
            "'file:' prefix"
        )
    if kind == "file":
        return rmatrix.load_symmetry_file(rest)
    fields = [f.strip() for f in rest.split(",")]
    try:
        if kind == "std":
            kv = dict(f.split("=", 1) for f in fields)
            return rmatrix.build_standard(int(kv["r"]), Fraction(kv["q"]))
        if kind == "super":
            if len(fields) != 3 or not fields[2].startswith("q="):
                raise UsageError(
                    f"super specifier must be 'super:r0,r1,q=Q', got {spec!r}"
                )
            return rmatrix.build_super(
                int(fields[0]), int(fields[1]), Fraction(fields[2][2:])
            )
    except UsageError:
        raise
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad symmetry specifier {spec!r}: {exc}") from None
    raise UsageError(f"unknown symmetry kind {kind!r}")


def _render_series(f: TruncSeries) -> str:
    return f.render()


def cmd_predict(args) -> int:
    cert = _certificate_from_flags(args.series, args.alphas, args.betas)
    order = args.degree
    what = args.what
    if what in ("A", "E"):
        cert2 = _certificate_from_flags(
            args.series2, args.alphas2, args.betas2, suffix="2"
        )
        hom = predict_hom_series(cert, cert2, order)
        out = hom if what == "A" else hom_dual_series(hom)
        print(_render_series(out))
        print(f"birank: ({cert.r0}, {cert.r1})")
        print(f"certificate: {cert.render()}")
        print(f"birank2: ({cert2.r0}, {cert2.r1})")
        print(f"certificate2: {cert2.render()}")
        return 0
    out = cert.symmetric_series(order) if what == "sym" else cert.exterior_series(order)
    print(_render_series(out))
    print(f"birank: ({cert.r0}, {cert.r1})")
    print(f"certificate: {cert.render()}")
    return 0


def _parse_quotient_arg(rest: str):
    parts = rest.split(";")
    if len(parts) != 2:
        raise UsageError(
            f"quotient wants 'quotient:[parts];[parts]', got {rest!r}"
        )
    try:
        return parse_partition(parts[0]), parse_partition(parts[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_compute(args) -> int:
    sym = _parse_symmetry_spec(args.symmetry)
    what = args.what
    n_max = args.degree
    if what == "sym":
        dims = rmatrix.symmetric_dims(sym, n_max)
    elif what == "ext":
        dims = rmatrix.exterior_dims(sym, n_max)
    elif what.startswith("quotient:"):
        lam, mu = _parse_quotient_arg(what[len("quotient:"):])
        print(rmatrix.dim_quotient(sym, lam, mu))
        return 0
    elif what.startswith(("A:", "E:")):
        sym2 = _parse_symmetry_spec(what[2:])
        fn = (
            rmatrix.dim_intertwiner
            if what.startswith("A:")
            else rmatrix.dim_e_component
        )
        dims = [fn(sym2, sym, n) for n in range(n_max + 1)]
    else:
        raise UsageError(f"unknown computation {what!r}")
    print(", ".join(str(v) for v in dims))
    return 0


def cmd_verify(args) -> int:
    sym = _parse_symmetry_spec(args.symmetry)
    sym2 = _parse_symmetry_spec(args.symmetry2) if args.symmetry2 else sym
    n_max = args.nmax
    reports = []
    wanted = args.suite
    if wanted in ("hilbert", "all"):
        reports.append(verify.suite_hilbert(sym, n_max))
    if wanted in ("character", "all"):
        reports.append(verify.suite_character(sym, n_max))
    if wanted in ("homspace", "all"):
        reports.append(verify.suite_homspace(sym2, sym, n_max))
    if wanted in ("positivity", "all"):
        report = verify.VerificationReport(
            "positivity", conjectural=sym.source == "user"
        )
        try:
            cert = verify.detected_certificate(sym, n_max)
        except (InconclusiveDetection, CertificateError) as exc:
            report.add(
                "certificate", f"error: {exc}", "certified rational form", False
            )
            reports.append(report)
        else:
            inner = verify.suite_positivity(cert, args.max_weight)
            inner.conjectural = sym.source == "user"
            reports.append(inner)
    blocks = []
    for report in reports:
        blocks.append(
            report.render_machine() if args.machine else report.render_human()
        )
    print("\n".join(blocks))
    return 0 if all(r.passed for r in reports) else 1


def cmd_series(args) -> int:
    if args.action == "detect-rational":
        coeffs = _parse_rationals(_require(args.coeffs, "--coeffs"))
        f = TruncSeries(coeffs)
        r_max = args.rmax if args.rmax is not None else max(0, f.order // 2)
        form = detect_rational(f, r_max)
        if form is None:
            print(f"inconclusive at truncation order {f.order}")
            return 1
        print(form.render())
        return 0
    if args.action == "diamond":
        f = _padded_series(_require(args.f, "--f"), args.degree)
        g = _padded_series(_require(args.g, "--g"), args.degree)
        print(_render_series(diamond(f, g, args.degree)))
        return 0
    if args.action == "total-positivity":
        f = _padded_series(_require(args.coeffs, "--coeffs"), args.max_weight)
        hit = total_positivity(f, args.max_weight)
        if hit is None:
            print("ok")
            return 0
        lam, value = hit
        print(f"violation at {format_partition(lam)}: {value}")
        return 1
    raise UsageError(f"unknown series action {args.action!r}")


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this action")
    return value


def _padded_series(text: str, order: int) -> TruncSeries:
    """Coefficient lists on the command line denote polynomials: everything
    beyond the last given coefficient is an exact zero."""
    coeffs = _parse_rationals(text)
    if len(coeffs) < order + 1:
        coeffs = coeffs + [Fraction(0)] * (order + 1 - len(coeffs))
    return TruncSeries(coeffs)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="heckeseries",
        description=(
            "Exact Hilbert-series arithmetic for graded algebras built "
            "from Hecke symmetries."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    predict = sub.add_parser(
        "predict",
        help="closed-form series from a certified rational presentation",
        description=(
            "Input is either --series 'num;den' (ascending coefficients of "
            "f1(-t) and f0(t)) or explicit reciprocal-root lists --alphas/"
            "--betas. Output: the series, one coefficient list per line, "
            "then birank and certificate status."
        ),
    )
    predict.add_argument("--series", help="rational form 'num;den'")
    predict.add_argument("--alphas", help="comma list of denominator roots")
    predict.add_argument("--betas", help="comma list of numerator roots")
    predict.add_argument("--series2", help="second rational form (A/E)")
    predict.add_argument("--alphas2", help="second denominator roots (A/E)")
    predict.add_argument("--betas2", help="second numerator roots (A/E)")
    predict.add_argument("--degree", type=int, default=12)
    predict.add_argument("--what", required=True, choices=("sym", "ext", "A", "E"))
    predict.set_defaults(func=cmd_predict)

    compute = sub.add_parser(
        "compute",
        help="exact dimensions from a concrete symmetry",
        description=(
            "Symmetries: std:r=R,q=Q | super:r0,r1,q=Q | file:PATH. "
            "--what sym|ext prints dimensions for degrees 0..N; "
            "quotient:[parts];[parts] prints one mixed-quotient dimension; "
            "A:SPEC2 / E:SPEC2 print hom-algebra dimensions against a "
            "second symmetry."
        ),
    )
    compute.add_argument("--symmetry", required=True)
    compute.add_argument("--degree", type=int, default=4)
    compute.add_argument("--what", required=True)
    compute.set_defaults(func=cmd_compute)

    verify_cmd = sub.add_parser(
        "verify",
        help="run cross-validation suites",
        description=(
            "Machine output: one check per line, 'name<TAB>lhs<TAB>rhs<TAB>"
            "pass|fail'; lines starting with # are notes."
        ),
    )
    verify_cmd.add_argument(
        "--suite",
        required=True,
        choices=("hilbert", "character", "homspace", "positivity", "all"),
    )
    verify_cmd.add_argument("--symmetry", required=True)
    verify_cmd.add_argument("--symmetry2")
    verify_cmd.add_argument("--nmax", type=int, default=4)
    verify_cmd.add_argument("--max-weight", type=int, default=8)
    verify_cmd.add_argument("--machine", action="store_true")
    verify_cmd.set_defaults(func=cmd_verify)

    series_cmd = sub.add_parser(
        "series",
        help="series utilities: detection, pairing product, positivity",
        description=(
            "Coefficient lists are comma-separated exact rationals. For "
            "diamond and total-positivity the list denotes a polynomial "
            "(higher coefficients are exact zeros); detect-rational treats "
            "it as the known truncation window."
        ),
    )
    series_cmd.add_argument(
        "action", choices=("detect-rational", "diamond", "total-positivity")
    )
    series_cmd.add_argument("--coeffs")
    series_cmd.add_argument("--f")
    series_cmd.add_argument("--g")
    series_cmd.add_argument("--degree", type=int, default=12)
    series_cmd.add_argument("--max-weight", type=int, default=8)
    series_cmd.add_argument("--rmax", type=int)
    series_cmd.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (rmatrix.CapExceeded, DegreeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except rmatrix.FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except rmatrix.SymmetryError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    except (InconclusiveDetection, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry():
    sys.exit(main())
