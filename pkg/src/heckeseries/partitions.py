"""Integer partitions and the tableau/matrix counts built on them.

A partition is a tuple of weakly decreasing positive integers; the zero
partition is the empty tuple.  All counts are exact Python integers and may
exceed 64 bits.
"""

from __future__ import annotations

import math
from functools import lru_cache

Partition = tuple[int, ...]
PartitionPair = tuple[Partition, Partition]


def as_partition(parts) -> Partition:
    """Validate and normalize a sequence into a partition tuple."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p <= 0:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"expected bracketed partition, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    return as_partition(int(tok) for tok in body.split(","))


def _descending(n: int, max_part: int, max_len: int):
    if n == 0:
        yield ()
        return
    if max_len <= 0 or max_part <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending(n - first, first, max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, max_len: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    return tuple(_descending(n, n, n if max_len is None else max_len))


@lru_cache(maxsize=None)
def partition_pairs(n: int) -> tuple[PartitionPair, ...]:
    """All ordered pairs (lam, mu) with |lam| + |mu| = n."""
    out = []
    for a in range(n, -1, -1):
        for lam in enumerate_partitions(a):
            for mu in enumerate_partitions(n - a):
                out.append((lam, mu))
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(
        sum(1 for p in lam if p > i) for i in range(lam[0])
    )


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True when mu is dominated by lam (equal weights required)."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares partitions of equal weight")
    ps_mu = ps_lam = 0
    for i in range(max(len(mu), len(lam))):
        ps_mu += mu[i] if i < len(mu) else 0
        ps_lam += lam[i] if i < len(lam) else 0
        if ps_mu > ps_lam:
            return False
    return True


def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    count, rem = divmod(math.factorial(n), hooks)
    assert rem == 0
    return count


def _horizontal_strip_predecessors(shape: Partition, size: int):
    """Shapes sigma ⊆ shape with shape/sigma a horizontal strip of `size` cells."""

    def rec(i, remaining):
        if i == len(shape):
            if remaining == 0:
                yield ()
            return
        low = shape[i + 1] if i + 1 < len(shape) else 0
        # sigma_i ranges over [low, shape_i]; removal counts toward the strip
        for s in range(shape[i], low - 1, -1):
            used = shape[i] - s
            if used > remaining:
                break
            for rest in rec(i + 1, remaining - used):
                yield (s,) + rest if s else rest

    yield from rec(0, size)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Semistandard tableaux of shape lam and content mu.

    Counted by peeling horizontal strips of sizes mu_k, ..., mu_1 off lam:
    each chain of shapes is exactly one column-strict filling.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("kostka requires equal weights")
    memo: dict[tuple[Partition, int], int] = {}

    def count(shape: Partition, k: int) -> int:
        if k == 0:
            return 1 if not shape else 0
        key = (shape, k)
        got = memo.get(key)
        if got is None:
            got = sum(
                count(prev, k - 1)
                for prev in _horizontal_strip_predecessors(shape, mu[k - 1])
            )
            memo[key] = got
        return got

    return count(lam, len(mu))


def _cells_of_skew(outer: Partition, inner: Partition):
    """Skew cells in reading order: rows top to bottom, right to left."""
    cells = []
    for r, row_len in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        for c in range(row_len - 1, start - 1, -1):
            cells.append((r, c))
    return cells


@lru_cache(maxsize=None)
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of nu in lam * mu.

    Counts column-strict fillings of nu/lam with content mu whose reverse
    reading word is a lattice word.  Returns 0 on weight mismatch.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu):
        return 0
    if any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    cells = _cells_of_skew(nu, lam)
    nrows = len(nu)
    fill = [[0] * nu[r] for r in range(nrows)]
    counts = [0] * (len(mu) + 1)
    inner_len = [lam[r] if r < len(lam) else 0 for r in range(nrows)]
    total = 0

    def backtrack(idx: int):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = len(mu)
        if c + 1 < nu[r] :
            hi = min(hi, fill[r][c + 1])
        lo = 1
        if r > 0 and c < nu[r - 1] and c >= inner_len[r - 1]:
            lo = fill[r - 1][c] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            fill[r][c] = v
            counts[v] += 1
            backtrack(idx + 1)
            counts[v] -= 1
        fill[r][c] = 0

    backtrack(0)
    return total


def _strip_chain_count(start: Partition, target: Partition, sizes) -> int:
    """Ways to grow `start` to `target` adding horizontal strips of `sizes`."""
    memo: dict[tuple[Partition, int], int] = {}

    def grow(shape: Partition, k: int) -> int:
        if k == len(sizes):
            return 1 if shape == target else 0
        key = (shape, k)
        got = memo.get(key)
        if got is not None:
            return got
        size = sizes[k]
        total = 0
        for nxt in _horizontal_strip_successors(shape, target, size):
            total += grow(nxt, k + 1)
        memo[key] = total
        return total

    return grow(start, 0)


def _horizontal_strip_successors(shape: Partition, bound: Partition, size: int):
    """Shapes tau ⊆ bound with shape ⊆ tau, tau/shape a horizontal strip of `size`."""
    nrows = len(bound)

    def rec(i, remaining, prev):
        if i == nrows:
            if remaining == 0:
                yield ()
            return
        cur = shape[i] if i < len(shape) else 0
        above = shape[i - 1] if i >= 1 and i - 1 < len(shape) else (10**9 if i == 0 else 0)
        hi = min(bound[i], prev, above if i > 0 else bound[i])
        for t in range(max(cur, 0), hi + 1):
            used = t - cur
            if used > remaining:
                break
            for rest in rec(i + 1, remaining - used, t):
                yield (t,) + rest if t else rest

    yield from rec(0, size, 10**9)


@lru_cache(maxsize=None)
def lr_coeff_via_pieri(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Independent route to lr_coeff: signed sums of iterated Pieri steps.

    Expands the mu factor as the alternating k x k determinant in complete
    homogeneous pieces, then counts horizontal-strip chains from lam to nu for
    each monomial.  Slower than lr_coeff; kept as a cross-check oracle.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    k = len(mu)
    if k == 0:
        return 1 if lam == nu else 0
    total = 0
    import itertools

    for perm in itertools.permutations(range(k)):
        sizes = []
        ok = True
        for i in range(k):
            e = mu[i] - (i + 1) + (perm[i] + 1)
            if e < 0:
                ok = False
                break
            if e > 0:
                sizes.append(e)
        if not ok:
            continue
        sign = 1
        seen = list(perm)
        # parity via inversion count
        inv = sum(
            1
            for a in range(k)
            for b in range(a + 1, k)
            if seen[a] > seen[b]
        )
        sign = -1 if inv % 2 else 1
        total += sign * _strip_chain_count(lam, nu, tuple(sizes))
    return total


def _bounded_compositions(total: int, bounds):
    """Compositions of `total` with 0 <= part_i <= bounds[i]."""

    def rec(i, remaining):
        if i == len(bounds):
            if remaining == 0:
                yield ()
            return
        hi = min(bounds[i], remaining)
        for v in range(hi + 1):
            for rest in rec(i + 1, remaining - v):
                yield (v,) + rest

    yield from rec(0, total)


@lru_cache(maxsize=None)
def count_row_col_matrices(mu: Partition, lam: Partition) -> int:
    """Nonnegative integer matrices with row sums lam_i and column sums mu_j."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        raise ValueError("matrix counts require equal weights")
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def rec(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(lam):
            return 1
        key = (i, remaining)
        got = memo.get(key)
        if got is None:
            got = 0
            for row in _bounded_compositions(lam[i], remaining):
                got += rec(i + 1, tuple(r - v for r, v in zip(remaining, row)))
            memo[key] = got
        return got

    return rec(0, mu)


def _binary_compositions(total: int, bounds):
    """0/1 vectors with sum `total`, entry j allowed only when bounds[j] > 0."""

    def rec(i, remaining):
        if i == len(bounds):
            if remaining == 0:
                yield ()
            return
        if len(bounds) - i < remaining:
            return
        for v in (0, 1):
            if v and (remaining == 0 or bounds[i] == 0):
                continue
            for rest in rec(i + 1, remaining - v):
                yield (v,) + rest

    yield from rec(0, total)


@lru_cache(maxsize=None)
def count_mixed_matrices(pair: PartitionPair, nu: Partition) -> int:
    """Pairs (A, B): A nonnegative with column sums lam, B zero/one with
    column sums mu, rows indexed by nu with joint row sums nu_l."""
    lam, mu = tuple(pair[0]), tuple(pair[1])
    nu = tuple(nu)
    if sum(lam) + sum(mu) != sum(nu):
        raise ValueError("matrix counts require equal weights")
    memo: dict = {}

    def rec(l: int, rem_lam: tuple[int, ...], rem_mu: tuple[int, ...]) -> int:
        if l == len(nu):
            return 1
        key = (l, rem_lam, rem_mu)
        got = memo.get(key)
        if got is None:
            got = 0
            target = nu[l]
            for b_used in range(min(target, len(mu)) + 1):
                for brow in _binary_compositions(b_used, rem_mu):
                    next_mu = tuple(r - v for r, v in zip(rem_mu, brow))
                    for arow in _bounded_compositions(target - b_used, rem_lam):
                        got += rec(
                            l + 1,
                            tuple(r - v for r, v in zip(rem_lam, arow)),
                            next_mu,
                        )
            memo[key] = got
        return got

    return rec(0, lam, mu)


def in_hook(lam: Partition, r0: int, r1: int) -> bool:
    """True when lam fits the (r0, r1) hook: row j <= r1 for all j > r0."""
    if r0 < 0 or r1 < 0:
        raise ValueError("hook parameters must be nonnegative")
    return all(p <= r1 for p in lam[r0:])
