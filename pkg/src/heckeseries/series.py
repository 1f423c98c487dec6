"""Truncated power series over exact rationals.

Everything here is window-honest: a series carries its truncation order, all
claims (recurrence detection, positivity, root location) are made relative to
that window, and running out of window raises instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .partitions import Partition, enumerate_partitions, format_partition


class InconclusiveDetection(ValueError):
    """No stable recurrence order fits inside the available window."""


class CertificateError(ValueError):
    """Detected rational form fails an integrality or normalization check."""


class RootLocationError(CertificateError):
    """A certificate polynomial has roots outside the positive real axis."""

    def __init__(self, message: str, polynomial):
        super().__init__(message)
        self.polynomial = tuple(polynomial)


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, ascending powers)


def poly_trim(p) -> list[Fraction]:
    p = [Fraction(x) for x in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p, q) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def poly_negate_t(p) -> list[Fraction]:
    """p(t) -> p(-t)."""
    return [Fraction(x) * (-1) ** i for i, x in enumerate(p)]


def poly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def poly_derivative(p) -> list[Fraction]:
    return [Fraction(c) * i for i, c in enumerate(p)][1:]


def _poly_rem(a, b) -> list[Fraction]:
    a = [Fraction(x) for x in a]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and poly_trim(a):
        a = poly_trim(a)
        if len(a) - 1 < db:
            break
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = poly_trim(a)
        if not a:
            break
    return poly_trim(a)


def poly_gcd(p, q) -> list[Fraction]:
    """Monic gcd of two rational polynomials."""
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, _poly_rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_divide_exact(p, d) -> list[Fraction]:
    """Quotient p / d, requiring zero remainder."""
    p, d = poly_trim(p), poly_trim(d)
    if not d:
        raise ZeroDivisionError("division by zero polynomial")
    out = [Fraction(0)] * (len(p) - len(d) + 1) if len(p) >= len(d) else []
    work = list(p)
    for shift in range(len(p) - len(d), -1, -1):
        f = work[shift + len(d) - 1] / d[-1]
        out[shift] = f
        if f:
            for i, c in enumerate(d):
                work[shift + i] -= f * c
    if poly_trim(work):
        raise ValueError("inexact polynomial division")
    return poly_trim(out)


# ---------------------------------------------------------------------------
# truncated series


class TruncSeries:
    """Power series known exactly up to and including degree `order`."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise ValueError(
                f"coefficient {n} beyond truncation order {self.order}"
            )
        return self.coeffs[n]

    def truncate(self, n: int) -> "TruncSeries":
        if n > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: n + 1])

    def mul(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(out)

    __mul__ = mul

    def inverse(self) -> "TruncSeries":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ValueError("series with zero constant term has no inverse")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / a0
        for k in range(1, n + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    s += self.coeffs[i] * out[k - i]
            out[k] = -s / a0
        return TruncSeries(out)

    def scale_variable(self, a) -> "TruncSeries":
        """f(t) -> f(a t)."""
        a = Fraction(a)
        return TruncSeries(
            [c * a**i for i, c in enumerate(self.coeffs)]
        )

    def negate_variable(self) -> "TruncSeries":
        """f(t) -> f(-t)."""
        return self.scale_variable(-1)

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def render(self) -> str:
        return ", ".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"TruncSeries({self.render()})"

    @classmethod
    def parse(cls, text: str) -> "TruncSeries":
        toks = [t.strip() for t in text.split(",")]
        if not toks or any(not t for t in toks):
            raise ValueError(f"malformed series {text!r}")
        return cls([Fraction(t) for t in toks])

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)


def expand_ratio(num, den, order: int) -> TruncSeries:
    """Series of num(t)/den(t) to the given order; den(0) must be nonzero."""
    num = [Fraction(x) for x in num] or [Fraction(0)]
    den = [Fraction(x) for x in den]
    if not den or den[0] == 0:
        raise ValueError("denominator needs nonzero constant term")
    pad = lambda p: p[: order + 1] + [Fraction(0)] * max(0, order + 1 - len(p))
    return TruncSeries(pad(num)).mul(TruncSeries(pad(den)).inverse())


# ---------------------------------------------------------------------------
# rational forms and certificates


@dataclass(frozen=True)
class RationalForm:
    """A verified p/q representation with q(0) = 1."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(Fraction(x) for x in self.num))
        object.__setattr__(self, "den", tuple(Fraction(x) for x in self.den))
        if not self.den or self.den[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def expand(self, order: int) -> TruncSeries:
        return expand_ratio(self.num, self.den, order)

    def render(self) -> str:
        num = ",".join(str(c) for c in (self.num or (Fraction(0),)))
        den = ",".join(str(c) for c in self.den)
        return f"num={num}; den={den}"

    @classmethod
    def parse(cls, text: str) -> "RationalForm":
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 2:
            raise ValueError(f"expected 'num=...; den=...', got {text!r}")
        fields = {}
        for part in parts:
            key, _, val = part.partition("=")
            fields[key.strip()] = [Fraction(t.strip()) for t in val.split(",")]
        if set(fields) != {"num", "den"}:
            raise ValueError(f"expected 'num=...; den=...', got {text!r}")
        return cls(tuple(fields["num"]), tuple(fields["den"]))


@dataclass(frozen=True)
class BirankCertificate:
    """Integer polynomials f0, f1 (constant term 1, all roots positive real)
    presenting the symmetric-side series as f1(-t)/f0(t)."""

    f0: tuple[int, ...]
    f1: tuple[int, ...]
    r0: int
    r1: int
    roots_verified: bool

    def symmetric_series(self, order: int) -> TruncSeries:
        return expand_ratio(poly_negate_t(self.f1), self.f0, order)

    def exterior_series(self, order: int) -> TruncSeries:
        return expand_ratio(poly_negate_t(self.f0), self.f1, order)

    @property
    def birank(self) -> tuple[int, int]:
        return (self.r0, self.r1)

    def render(self) -> str:
        f0 = ",".join(str(c) for c in self.f0)
        f1 = ",".join(str(c) for c in self.f1)
        tag = "verified" if self.roots_verified else "unverified"
        return f"f0={f0}; f1={f1}; roots positive real: {tag}"

    @classmethod
    def from_polynomials(cls, f0, f1) -> "BirankCertificate":
        f0 = poly_trim(f0) or [Fraction(1)]
        f1 = poly_trim(f1) or [Fraction(1)]
        for p in (f0, f1):
            if any(c.denominator != 1 for c in p):
                raise CertificateError(f"non-integer certificate polynomial {p}")
            if p[0] != 1:
                raise CertificateError(f"certificate constant term must be 1: {p}")
        for p in (f0, f1):
            if not sturm_all_roots_positive(p):
                raise RootLocationError(
                    f"polynomial has roots off the positive real axis: {p}", p
                )
        return cls(
            tuple(int(c) for c in f0),
            tuple(int(c) for c in f1),
            len(f0) - 1,
            len(f1) - 1,
            True,
        )


# ---------------------------------------------------------------------------
# Hankel minors and Schur-type determinants straight from coefficients


def hankel_minor(f: TruncSeries, i: int, k: int) -> Fraction:
    """k x k shifted-window determinant with top row a_i ... a_{i+k-1}.

    Entry (s, t) is a_{i-s+t}; indices below zero read as 0.
    """
    if k < 0:
        raise ValueError("window size must be nonnegative")
    if k == 0:
        return Fraction(1)
    if i + k - 1 > f.order:
        raise ValueError("window extends beyond the truncation order")
    rows = [
        [f.coeff(i - s + t) for t in range(k)] for s in range(k)
    ]
    return linalg.det(rows)


def schur_minor(f: TruncSeries, lam: Partition) -> Fraction:
    """Determinant det(a_{lam_i - i + j}) over the series coefficients.

    This is the coefficient-side route to evaluating the series homomorphism
    on a Schur element; the basis-conversion route lives in symfunc.
    """
    k = len(lam)
    if k == 0:
        return Fraction(1)
    rows = [
        [f.coeff(lam[s] - (s + 1) + (t + 1)) for t in range(k)]
        for s in range(k)
    ]
    return linalg.det(rows)


# ---------------------------------------------------------------------------
# recurrence detection


def detect_rational(f: TruncSeries, r_max: int) -> RationalForm | None:
    """Least-order stable linear recurrence fitting the whole tail window.

    Tries orders r = 0..r_max.  For each r the candidate coefficients are
    solved from the last r windowed equations, then the recurrence is walked
    backwards to its onset o.  A candidate is accepted only when the onset
    satisfies o <= r_max + 1 (numerator degree at most r_max) and the window
    verifies at least r + 1 equations.  Returns None when nothing fits; a
    returned form is re-verified as q * f having zero coefficients from the
    onset through the truncation order.
    """
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    n = f.order
    a = f.coeff

    def recurrence_holds(c, m):
        return a(m) == sum(cj * a(m - j - 1) for j, cj in enumerate(c))

    for r in range(0, min(r_max, n) + 1):
        if r == 0:
            c: list[Fraction] = []
        else:
            rows = [[a(m - j) for j in range(1, r + 1)] for m in range(n - r + 1, n + 1)]
            rhs = [a(m) for m in range(n - r + 1, n + 1)]
            sol = linalg.solve_square(rows, rhs)
            if sol is None:
                continue
            c = list(sol)
            while c and c[-1] == 0:
                c.pop()
        r_eff = len(c)
        m = n
        while m >= 1 and recurrence_holds(c, m):
            m -= 1
        onset = m + 1
        if onset > r_max + 1:
            continue
        if n - onset + 1 < r_eff + 1:
            continue
        q = [Fraction(1)] + [-cj for cj in c]
        prod = poly_mul(q, list(f.coeffs))
        if any(prod[i] != 0 for i in range(onset, n + 1)):
            continue
        p = poly_trim(prod[:onset])
        return RationalForm(tuple(p), tuple(q))
    return None


# ---------------------------------------------------------------------------
# positivity and certificates


def total_positivity(f: TruncSeries, max_weight: int):
    """First Schur-determinant violation up to max_weight, or None when clean.

    Partitions are scanned by weight, then in descending lexicographic order;
    the returned pair is (partition, value) for the first negative value.
    """
    if max_weight > f.order:
        raise ValueError("max_weight exceeds the truncation order")
    for w in range(max_weight + 1):
        for lam in enumerate_partitions(w):
            val = schur_minor(f, lam)
            if val < 0:
                return (lam, val)
    return None


def sturm_all_roots_positive(p) -> bool:
    """Exact test: every complex root of p is a positive real number.

    Repeated factors are cleared via gcd with the derivative; the squarefree
    part is then root-counted on (0, inf) with a Sturm chain.  Since the
    squarefree part carries every distinct root, multiplicity bookkeeping is
    automatic.
    """
    p = poly_trim(p)
    if not p:
        raise ValueError("zero polynomial has no root certificate")
    if p[0] == 0:
        raise ValueError("polynomial must not vanish at 0")
    if len(p) == 1:
        return True
    g = poly_gcd(p, poly_derivative(p))
    sf = poly_divide_exact(p, g) if len(g) > 1 else poly_trim(p)
    deg = len(sf) - 1
    if deg == 0:
        return True
    chain = [sf, poly_derivative(sf)]
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    if poly_trim(chain[-1]) == []:
        chain.pop()

    def variations(values):
        signs = [1 if v > 0 else -1 for v in values if v != 0]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    at_zero = variations([q[0] for q in chain if poly_trim(q)])
    at_inf = variations([q[-1] for q in chain if poly_trim(q)])
    return at_zero - at_inf == deg


def birank_certificate(f: TruncSeries, r_max: int) -> BirankCertificate:
    """Detect, normalize and root-verify the (f0, f1) presentation of f.

    Expects a series that is totally positive over the window.  Raises
    InconclusiveDetection when no recurrence fits, CertificateError on
    integrality/normalization failure or when the detected degrees exceed the
    first coefficient, RootLocationError when a Sturm check fails.
    """
    form = detect_rational(f, r_max)
    if form is None:
        raise InconclusiveDetection(
            f"no rational form detected within order {r_max} "
            f"at truncation order {f.order}"
        )
    num, den = list(form.num), list(form.den)
    if not num or num[0] != 1:
        raise CertificateError("series must start at 1 for a certificate")
    f0 = poly_trim(den)
    f1 = poly_trim(poly_negate_t(num))
    cert = BirankCertificate.from_polynomials(f0, f1)
    a1 = f.coeff(1)
    if cert.r0 + cert.r1 > a1:
        raise CertificateError(
            f"birank sum {cert.r0 + cert.r1} exceeds first coefficient {a1}"
        )
    return cert


# ---------------------------------------------------------------------------
# the pairing product and its closed forms


def exterior_from_symmetric(f: TruncSeries) -> TruncSeries:
    """The dual graded series 1 / f(-t), to the same truncation order."""
    return f.negate_variable().inverse()


def hom_dual_series(f: TruncSeries) -> TruncSeries:
    """Series of the dual partner algebra: g with g(t) * f(-t) = 1."""
    return exterior_from_symmetric(f)


def diamond(f: TruncSeries, g: TruncSeries, order: int) -> TruncSeries:
    """Degreewise pairing product: coefficient n is the sum over partitions
    of weight n of the two Schur-determinant values multiplied together."""
    if f.order < order or g.order < order:
        raise ValueError("both operands must carry at least the target order")
    out = []
    for n in range(order + 1):
        s = Fraction(0)
        for lam in enumerate_partitions(n):
            a = schur_minor(f, lam)
            if a:
                b = schur_minor(g, lam)
                if b:
                    s += a * b
        out.append(s)
    return TruncSeries(out)


def _reciprocal_integer_roots(poly) -> list[int] | None:
    """For an integer polynomial 1 + c1 t + ... = prod(1 - a_i t) with all
    roots positive real, return the a_i when they are all integers, else None.
    """
    p = poly_trim(poly)
    roots = []
    while len(p) > 1:
        lead = p[-1]
        cand = None
        for a in range(1, abs(int(lead)) + 1):
            if int(lead) % a:
                continue
            if poly_eval(p, Fraction(1, a)) == 0:
                cand = a
                break
        if cand is None:
            return None
        p = poly_divide_exact(p, [Fraction(1), Fraction(-cand)])
        roots.append(cand)
    return sorted(roots)


def predict_hom_series(
    cert_a: BirankCertificate, cert_b: BirankCertificate, order: int
) -> TruncSeries:
    """Predicted Hilbert series of the graded hom algebra of two certified
    symmetries, computed by the pairing product.

    When all four certificate polynomials split over the integers the
    closed-form product formula is also assembled and asserted equal.
    """
    fa = cert_a.symmetric_series(order)
    fb = cert_b.symmetric_series(order)
    result = diamond(fa, fb, order)

    alphas = _reciprocal_integer_roots(cert_a.f0)
    betas = _reciprocal_integer_roots(cert_a.f1)
    alphas2 = _reciprocal_integer_roots(cert_b.f0)
    betas2 = _reciprocal_integer_roots(cert_b.f1)
    if None not in (alphas, betas, alphas2, betas2):
        num = [Fraction(1)]
        for b in betas:
            for a2 in alphas2:
                num = poly_mul(num, [Fraction(1), Fraction(b * a2)])
        for a in alphas:
            for b2 in betas2:
                num = poly_mul(num, [Fraction(1), Fraction(a * b2)])
        den = [Fraction(1)]
        for a in alphas:
            for a2 in alphas2:
                den = poly_mul(den, [Fraction(1), Fraction(-a * a2)])
        for b in betas:
            for b2 in betas2:
                den = poly_mul(den, [Fraction(1), Fraction(-b * b2)])
        closed = expand_ratio(num, den, order)
        if closed != result:
            raise AssertionError(
                "pairing product disagrees with the closed-form expansion; "
                f"got {result.render()} vs {closed.render()}"
            )
    return result
