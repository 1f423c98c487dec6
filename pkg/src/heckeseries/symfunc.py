"""Symmetric functions per degree: bases m, h, e, s and their pairings.

The conversion engine is deliberately small: every change of basis routes
through the Schur basis using the Kostka matrix and its integer inverse.
Products use Littlewood-Richardson coefficients; evaluations of a series
homomorphism use the h-basis, where the homomorphism is defined.

With partitions indexed in descending lexicographic order (the order
enumerate_partitions emits), dominance refines the index order, so both
defining relations

    h_mu = sum_lam K[lam][mu] * s_lam      (columns of K)
    s_lam = sum_mu K[lam][mu] * m_mu       (rows of K)

are upper unitriangular and K inverts over the integers.  In coordinates:
h->s is c |-> K c, s->h is K^{-1} c, m->s is K^{-T} c, s->m is K^T c, and
the e-basis is the h-basis composed with conjugation of Schur labels.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import linalg
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    kostka,
    lr_coeff,
    partition_pairs,
    weight,
)
from .series import TruncSeries, expand_ratio, poly_mul, poly_negate_t, poly_trim, schur_minor

BASES = ("m", "h", "e", "s")

# Partition counts grow fast; transition matrices above this degree are
# refused rather than silently truncated.
DEGREE_CAP = 14


class DegreeCapError(ValueError):
    """Requested degree exceeds the configured transition-matrix cap."""


class ConsistencyError(AssertionError):
    """Two independent evaluation routes disagreed; indicates a code bug."""


def _check_degree(n: int):
    if n > DEGREE_CAP:
        raise DegreeCapError(f"degree {n} exceeds cap {DEGREE_CAP}")


class SymElement:
    """Homogeneous symmetric-function element in one named basis."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Partition, Fraction] = {}
        for lam, c in dict(coeffs).items():
            lam = as_partition(lam)
            c = Fraction(c)
            if weight(lam) != degree:
                raise ValueError(
                    f"partition {lam} has weight {weight(lam)}, expected {degree}"
                )
            if c != 0:
                clean[lam] = c
        self.degree = degree
        self.basis = basis
        self.coeffs = clean

    def coeff(self, lam) -> Fraction:
        return self.coeffs.get(as_partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def scaled(self, c) -> "SymElement":
        c = Fraction(c)
        return SymElement(
            self.degree, self.basis, {lam: v * c for lam, v in self.coeffs.items()}
        )

    def plus(self, other: "SymElement") -> "SymElement":
        if other.degree != self.degree or other.basis != self.basis:
            raise ValueError("can only add elements of equal degree and basis")
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, Fraction(0)) + c
        return SymElement(self.degree, self.basis, merged)

    __add__ = plus

    def __eq__(self, other):
        return (
            isinstance(other, SymElement)
            and self.degree == other.degree
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.basis, tuple(sorted(self.coeffs.items()))))

    def render(self) -> str:
        if not self.coeffs:
            return f"{self.basis}: 0"
        parts = sorted(self.coeffs, reverse=True)
        terms = " + ".join(
            f"{self.coeffs[lam]}*{format_partition(lam)}" for lam in parts
        )
        return f"{self.basis}: {terms}"

    def __repr__(self):
        return f"SymElement({self.render()})"

    @classmethod
    def unit(cls, basis: str = "s") -> "SymElement":
        return cls(0, basis, {(): Fraction(1)})

    @classmethod
    def generator(cls, basis: str, lam) -> "SymElement":
        lam = as_partition(lam)
        return cls(weight(lam), basis, {lam: Fraction(1)})


class TransitionCache:
    """Write-once-per-degree store of the Kostka matrix and its inverse."""

    def __init__(self):
        self._lock = threading.Lock()
        self._by_degree: dict[int, tuple] = {}

    def degree_data(self, n: int):
        _check_degree(n)
        with self._lock:
            cached = self._by_degree.get(n)
        if cached is not None:
            return cached
        parts = enumerate_partitions(n)
        index = {lam: i for i, lam in enumerate(parts)}
        k_matrix = [[kostka(lam, mu) for mu in parts] for lam in parts]
        k_inverse = linalg.invert_unitriangular(k_matrix)
        data = (parts, index, k_matrix, k_inverse)
        with self._lock:
            # a concurrent builder may have won the race; keep one value
            return self._by_degree.setdefault(n, data)


_CACHE = TransitionCache()


def _coeff_vector(u: SymElement, parts, index):
    vec = [Fraction(0)] * len(parts)
    for lam, c in u.coeffs.items():
        vec[index[lam]] = c
    return vec


def _to_schur(u: SymElement) -> SymElement:
    if u.basis == "s":
        return u
    parts, index, k_matrix, k_inverse = _CACHE.degree_data(u.degree)
    vec = _coeff_vector(u, parts, index)
    n = len(parts)
    out = [Fraction(0)] * n
    if u.basis in ("h", "e"):
        for j in range(n):
            c = vec[j]
            if not c:
                continue
            for i in range(j + 1):
                k = k_matrix[i][j]
                if k:
                    row = i if u.basis == "h" else index[conjugate(parts[i])]
                    out[row] += c * k
    else:  # m: coordinates transform by the inverse transpose
        for j in range(n):
            c = vec[j]
            if not c:
                continue
            for i in range(j, n):
                k = k_inverse[j][i]
                if k:
                    out[i] += c * k
    return SymElement(u.degree, "s", dict(zip(parts, out)))


def _from_schur(u: SymElement, target: str) -> SymElement:
    if target == "s":
        return u
    parts, index, k_matrix, k_inverse = _CACHE.degree_data(u.degree)
    vec = _coeff_vector(u, parts, index)
    n = len(parts)
    if target == "e":
        relabeled = [Fraction(0)] * n
        for i in range(n):
            relabeled[index[conjugate(parts[i])]] = vec[i]
        vec = relabeled
    out = [Fraction(0)] * n
    if target in ("h", "e"):
        for i in range(n):
            acc = Fraction(0)
            for j in range(i, n):
                k = k_inverse[i][j]
                if k and vec[j]:
                    acc += k * vec[j]
            out[i] = acc
    else:  # m: coordinates transform by the transpose
        for j in range(n):
            acc = Fraction(0)
            for i in range(j + 1):
                k = k_matrix[i][j]
                if k and vec[i]:
                    acc += k * vec[i]
            out[j] = acc
    return SymElement(u.degree, target, dict(zip(parts, out)))


def to_basis(u: SymElement, target: str) -> SymElement:
    """Re-express u in the target basis; roundtrips are exact identities."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    _check_degree(u.degree)
    if u.basis == target:
        return u
    return _from_schur(_to_schur(u), target)


def multiply(u: SymElement, v: SymElement) -> SymElement:
    """Product, returned in the Schur basis."""
    total = u.degree + v.degree
    _check_degree(total)
    us, vs = _to_schur(u), _to_schur(v)
    out: dict[Partition, Fraction] = {}
    for lam, a in us.coeffs.items():
        for mu, b in vs.coeffs.items():
            ab = a * b
            for nu in enumerate_partitions(total):
                c = lr_coeff(lam, mu, nu)
                if c:
                    out[nu] = out.get(nu, Fraction(0)) + ab * c
    return SymElement(total, "s", out)


def inner_product(u: SymElement, v: SymElement) -> Fraction:
    """Hall pairing; the Schur basis is orthonormal."""
    if u.degree != v.degree:
        raise ValueError(
            f"pairing needs equal degrees, got {u.degree} and {v.degree}"
        )
    us, vs = _to_schur(u), _to_schur(v)
    total = Fraction(0)
    for lam, a in us.coeffs.items():
        b = vs.coeffs.get(lam)
        if b:
            total += a * b
    return total


def omega(u: SymElement) -> SymElement:
    """The involution exchanging h and e, conjugating Schur labels."""
    if u.basis == "h":
        return SymElement(u.degree, "e", u.coeffs)
    if u.basis == "e":
        return SymElement(u.degree, "h", u.coeffs)
    if u.basis == "s":
        return SymElement(
            u.degree, "s", {conjugate(lam): c for lam, c in u.coeffs.items()}
        )
    flipped = omega(_to_schur(u))
    return _from_schur(flipped, "m")


def hom_eval(f: TruncSeries, u: SymElement) -> Fraction:
    """Apply the ring homomorphism sending the degree-n h-generator to the
    n-th coefficient of f."""
    if u.degree > f.order:
        raise ValueError(
            f"element degree {u.degree} exceeds truncation order {f.order}"
        )
    uh = to_basis(u, "h")
    total = Fraction(0)
    for lam, c in uh.coeffs.items():
        prod = c
        for part in lam:
            prod *= f.coeff(part)
            if prod == 0:
                break
        total += prod
    return total


def hall_rep(f: TruncSeries, n: int) -> SymElement:
    """The degree-n element representing the series homomorphism under the
    Hall pairing: sum over weight-n partitions of (value on s_lam) * s_lam."""
    if n > f.order:
        raise ValueError(f"degree {n} exceeds truncation order {f.order}")
    _check_degree(n)
    coeffs = {}
    for lam in enumerate_partitions(n):
        val = schur_minor(f, lam)
        if val:
            coeffs[lam] = val
    return SymElement(n, "s", coeffs)


def _alphabet_series(roots, poly, sign: int) -> list[Fraction]:
    """Polynomial prod(1 + sign*x_i t) from explicit roots, or the given
    polynomial (sign already baked in by the caller)."""
    if roots and poly is not None:
        raise ValueError("give either explicit roots or a polynomial, not both")
    if poly is not None:
        p = [Fraction(c) for c in poly]
        if not p or p[0] == 0:
            raise ValueError("alphabet polynomial needs a nonzero constant term")
        return p
    out = [Fraction(1)]
    for x in roots:
        out = poly_mul(out, [Fraction(1), sign * Fraction(x)])
    return out


def specialize_super(
    u: SymElement,
    alphas=(),
    betas=(),
    alpha_poly=None,
    beta_poly=None,
) -> Fraction:
    """Evaluate u on a two-alphabet (even/odd) specialization.

    The defining data is the series sum h_n t^n = prod(1 + beta_j t) /
    prod(1 - alpha_i t).  Alphabets come either as explicit rational root
    lists or as integer polynomials with the roots left implicit: the
    denominator polynomial is prod(1 - alpha_i t), the numerator polynomial
    prod(1 - beta_j t) and is flipped to -t internally, so results stay
    exact even when the roots are irrational.
    """
    den = _alphabet_series(alphas, alpha_poly, -1)
    if beta_poly is not None:
        num = poly_negate_t(_alphabet_series((), beta_poly, +1))
    else:
        num = _alphabet_series(betas, None, +1)
    f = expand_ratio(num, den, u.degree if u.degree > 0 else 1)
    return hom_eval(f, u)


def tensor_power_character(f0, f1, n: int) -> SymElement:
    """Character of the n-th tensor power attached to a certified pair of
    polynomials, expanded in the h-basis.

    Sums m_lam(alpha) * m_mu(beta) * h_lam * e_mu over all two-partition
    splittings of n, where the alphabet values come from the single-alphabet
    series 1/f0 and 1/f1.
    """
    f0 = poly_trim(f0) or [Fraction(1)]
    f1 = poly_trim(f1) or [Fraction(1)]
    if f0[0] != 1 or f1[0] != 1:
        raise ValueError("alphabet polynomials need constant term 1")
    _check_degree(n)
    result = SymElement(n, "h", {})
    for lam, mu in partition_pairs(n):
        a = specialize_super(SymElement.generator("m", lam), alpha_poly=f0)
        if a == 0:
            continue
        b = specialize_super(SymElement.generator("m", mu), alpha_poly=f1)
        if b == 0:
            continue
        h_part = SymElement.generator("h", lam)
        e_part = SymElement.generator("e", mu)
        term = to_basis(multiply(h_part, e_part), "h")
        result = result + term.scaled(a * b)
    return result


def schur_value(f: TruncSeries, lam) -> Fraction:
    """Value of the series homomorphism on a Schur generator, computed both
    by basis conversion and by the Toeplitz determinant; the two routes must
    agree."""
    lam = as_partition(lam)
    via_basis = hom_eval(f, SymElement.generator("s", lam))
    via_minor = schur_minor(f, lam)
    if via_basis != via_minor:
        raise ConsistencyError(
            f"Schur evaluation routes disagree at {lam}: "
            f"{via_basis} vs {via_minor}"
        )
    return via_minor
