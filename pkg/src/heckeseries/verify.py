"""Cross-validation suites: closed-form predictions against brute force.

Each suite runs every check and reports all outcomes; a failing check never
aborts the run.  Reports are deterministic given identical inputs, and each
check carries rendered left/right values so mismatches are inspectable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import enumerate_partitions, format_partition, in_hook, partition_pairs
from .rmatrix import (
    DIMENSION_CAP,
    HeckeSymmetry,
    dim_e_component,
    dim_intertwiner,
    dim_quotient,
    exterior_dims,
    symmetric_dims,
)
from .series import (
    BirankCertificate,
    CertificateError,
    InconclusiveDetection,
    TruncSeries,
    birank_certificate,
    diamond,
    hom_dual_series,
    schur_minor,
)
from .symfunc import SymElement, specialize_super


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: str
    rhs: str
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    conjectural: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, lhs, rhs, passed: bool):
        self.checks.append(CheckResult(name, str(lhs), str(rhs), passed))

    def compare(self, name: str, lhs, rhs):
        self.add(name, lhs, rhs, lhs == rhs)

    def render_machine(self) -> str:
        lines = []
        if self.conjectural:
            lines.append(
                "# conjectural: structural hypotheses unverified for "
                "user-supplied input"
            )
        for c in self.checks:
            state = "pass" if c.passed else "fail"
            lines.append(f"{c.name}\t{c.lhs}\t{c.rhs}\t{state}")
        return "\n".join(lines)

    def render_human(self) -> str:
        lines = [f"suite {self.suite}"]
        if self.conjectural:
            lines.append(
                "  note: input is user-supplied; predictions are conjectural"
                " (structural hypotheses not algorithmically verified)"
            )
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            if c.passed:
                lines.append(f"  [{mark}] {c.name}: {c.lhs}")
            else:
                lines.append(f"  [{mark}] {c.name}: {c.lhs} expected {c.rhs}")
        done = sum(1 for c in self.checks if c.passed)
        lines.append(f"  {done}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def series_horizon(d: int, n_max: int) -> int:
    """Matrix-series truncation: enough room for recurrence detection, but
    capped by the ambient-dimension limit."""
    horizon = max(n_max, d + 2)
    while horizon > n_max and d**horizon > DIMENSION_CAP:
        horizon -= 1
    return horizon


def detected_certificate(sym: HeckeSymmetry, n_max: int) -> BirankCertificate:
    """Detect and certify the symmetric-side series of a symmetry from its
    matrix-computed dimensions.  Raises like birank_certificate."""
    horizon = series_horizon(sym.d, n_max)
    f = TruncSeries([Fraction(v) for v in symmetric_dims(sym, horizon)])
    return birank_certificate(f, sym.d)


def _is_conjectural(*syms: HeckeSymmetry) -> bool:
    return any(s.source == "user" for s in syms)


def suite_hilbert(sym: HeckeSymmetry, n_max: int) -> VerificationReport:
    """Graded dimensions of the two quadratic quotients and their closed
    forms: duality of the two series, recurrence detection, root
    certificate, degree bound, and both certified expansions."""
    report = VerificationReport("hilbert", conjectural=_is_conjectural(sym))
    horizon = series_horizon(sym.d, n_max)
    sdims = symmetric_dims(sym, horizon)
    edims = exterior_dims(sym, horizon)
    fs = TruncSeries([Fraction(v) for v in sdims])
    fe = TruncSeries([Fraction(v) for v in edims])
    product = fs.mul(fe.negate_variable())
    report.compare(
        "duality_product", product.render(), TruncSeries.one(horizon).render()
    )
    try:
        cert = birank_certificate(fs, sym.d)
    except (InconclusiveDetection, CertificateError) as exc:
        failure = f"error: {exc}"
        for name in (
            "certificate",
            "birank_bound",
            "symmetric_series_matches_certificate",
            "exterior_series_matches_certificate",
        ):
            report.add(name, failure, "certified rational form", False)
        return report
    report.add(
        "certificate",
        cert.render(),
        "roots positive real: verified",
        cert.roots_verified,
    )
    report.add(
        "birank_bound",
        f"r0+r1 = {cert.r0 + cert.r1}",
        f"<= {sym.d}",
        cert.r0 + cert.r1 <= sym.d,
    )
    report.compare(
        "symmetric_series_matches_certificate",
        fs.render(),
        cert.symmetric_series(horizon).render(),
    )
    report.compare(
        "exterior_series_matches_certificate",
        fe.render(),
        cert.exterior_series(horizon).render(),
    )
    return report


def suite_character(sym: HeckeSymmetry, n_max: int) -> VerificationReport:
    """Quotient dimensions against products of series coefficients, and the
    global tensor-power dimension identity driven by the certificate."""
    report = VerificationReport("character", conjectural=_is_conjectural(sym))
    horizon = series_horizon(sym.d, n_max)
    fs = TruncSeries([Fraction(v) for v in symmetric_dims(sym, horizon)])
    for n in range(1, n_max + 1):
        for nu in enumerate_partitions(n):
            lhs = dim_quotient(sym, nu, ())
            rhs = Fraction(1)
            for part in nu:
                rhs *= fs.coeff(part)
            report.compare(
                f"quotient_dim[{format_partition(nu)}]", lhs, rhs
            )
    try:
        cert = birank_certificate(fs, sym.d)
    except (InconclusiveDetection, CertificateError) as exc:
        report.add(
            "tensor_dimension_identity",
            f"error: {exc}",
            "certified rational form",
            False,
        )
        return report
    # one degree beyond the matrix checks: this identity is pure arithmetic
    # on the certificate, so the extra degree costs nothing
    for n in range(1, n_max + 2):
        total = Fraction(0)
        for lam, mu in partition_pairs(n):
            a = specialize_super(
                SymElement.generator("m", lam), alpha_poly=list(cert.f0)
            )
            if a == 0:
                continue
            b = specialize_super(
                SymElement.generator("m", mu), alpha_poly=list(cert.f1)
            )
            if b == 0:
                continue
            multinomial = math.factorial(n)
            for part in lam:
                multinomial //= math.factorial(part)
            for part in mu:
                multinomial //= math.factorial(part)
            total += a * b * multinomial
        report.compare(
            f"tensor_dimension_identity[n={n}]", total, Fraction(sym.d**n)
        )
    return report


def suite_homspace(
    sym_target: HeckeSymmetry, sym_source: HeckeSymmetry, n_max: int
) -> VerificationReport:
    """Intertwiner-space dimensions against the pairing-product prediction,
    and the dual-algebra dimensions against the inverted-series transform of
    the brute-force results."""
    if sym_target.q != sym_source.q:
        raise ValueError(
            f"the two symmetries must share q; got {sym_target.q} "
            f"and {sym_source.q}"
        )
    report = VerificationReport(
        "homspace", conjectural=_is_conjectural(sym_target, sym_source)
    )
    f_source = TruncSeries(
        [Fraction(v) for v in symmetric_dims(sym_source, n_max)]
    )
    f_target = TruncSeries(
        [Fraction(v) for v in symmetric_dims(sym_target, n_max)]
    )
    predicted = diamond(f_source, f_target, n_max)
    a_dims = [dim_intertwiner(sym_target, sym_source, n) for n in range(n_max + 1)]
    for n in range(n_max + 1):
        report.compare(
            f"hom_dim[n={n}]", Fraction(a_dims[n]), predicted.coeff(n)
        )
    dual_expected = hom_dual_series(
        TruncSeries([Fraction(v) for v in a_dims])
    )
    for n in range(n_max + 1):
        lhs = dim_e_component(sym_target, sym_source, n)
        report.compare(
            f"hom_dual_dim[n={n}]", Fraction(lhs), dual_expected.coeff(n)
        )
    return report


def suite_positivity(cert: BirankCertificate, max_weight: int) -> VerificationReport:
    """Sign and support of the certified series on Schur generators: values
    are nonnegative, vanish exactly off the hook region, and vanishing along
    rectangle rows never reverses."""
    report = VerificationReport("positivity")
    f = cert.symmetric_series(max_weight)
    for w in range(max_weight + 1):
        for lam in enumerate_partitions(w):
            val = schur_minor(f, lam)
            hook = in_hook(lam, cert.r0, cert.r1)
            ok = val >= 0 and (val > 0) == hook
            report.add(
                f"schur_support[{format_partition(lam)}]",
                f"value {val}",
                f"in hook: {hook}",
                ok,
            )
    for k in range(1, max_weight + 1):
        values = [
            schur_minor(f, (n,) * k) for n in range(1, max_weight // k + 1)
        ]
        if not values:
            continue
        seen_zero = False
        monotone = True
        for v in values:
            if v == 0:
                seen_zero = True
            elif seen_zero:
                monotone = False
                break
        report.add(
            f"rectangle_vanishing[k={k}]",
            ", ".join(str(v) for v in values),
            "no revival after vanishing",
            monotone,
        )
    return report
