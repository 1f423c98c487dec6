"""Concrete Hecke symmetries and exact linear algebra on tensor powers.

All dimensions of graded components are computed by exact rational
elimination.  Pure chains (one relation subspace inserted at every adjacent
pair of tensor slots) are computed degree by degree through quotient
coordinates, so the full tensor-power matrices are never materialized; the
mixed quotients keep the direct spanning-set elimination so the two routes
stay independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .partitions import as_partition, weight

# Refuse tensor computations whose ambient dimension d**n exceeds this.
DIMENSION_CAP = 4096


class CapExceeded(ValueError):
    """Requested tensor degree exceeds the configured ambient-dimension cap."""


class SymmetryError(ValueError):
    """Base class for validation failures of a candidate symmetry."""


class BraidViolation(SymmetryError):
    """Braid identity fails; witness is a 1-based basis triple (i, j, k)."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            f"braid identity fails on basis vector {self.witness}"
        )


class HeckeViolation(SymmetryError):
    """Quadratic relation fails; witness is a 1-based basis pair (i, j)."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            f"quadratic relation fails on basis vector {self.witness}"
        )


class FileFormatError(ValueError):
    """Malformed symmetry file; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _check_cap(d: int, n: int):
    if d**n > DIMENSION_CAP:
        raise CapExceeded(
            f"tensor power dimension {d}**{n} exceeds cap {DIMENSION_CAP}"
        )


class HeckeSymmetry:
    """A validated solution R of the braid + quadratic relations on V⊗V.

    ``matrix`` is d²×d² over exact rationals; column (i-1)·d + (j-1) holds
    R(e_i⊗e_j) expressed with row (k-1)·d + (l-1) for the e_k⊗e_l component.
    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("d", "q", "matrix", "source", "_cache")

    def __init__(self, d: int, q, matrix, source: str = "user"):
        q = Fraction(q)
        if q == 0:
            raise ValueError("the parameter q must be nonzero")
        dd = d * d
        if len(matrix) != dd or any(len(row) != dd for row in matrix):
            raise ValueError(f"matrix must be {dd}x{dd}")
        self.d = d
        self.q = q
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        self.source = source
        self._cache = {}
        _validate(self)

    def inverse_matrix(self):
        """R^{-1} = (R - (q-1)·Id)/q, an identity forced by the quadratic
        relation; no elimination needed."""
        cached = self._cache.get("inverse")
        if cached is None:
            dd = self.d * self.d
            cached = tuple(
                tuple(
                    (self.matrix[r][c] - (self.q - 1) * (r == c)) / self.q
                    for c in range(dd)
                )
                for r in range(dd)
            )
            self._cache["inverse"] = cached
        return cached

    def image_pair_basis(self):
        """Row basis of Im(R - q) inside V⊗V."""
        cached = self._cache.get("image")
        if cached is None:
            dd = self.d * self.d
            cols = [
                [self.matrix[r][c] - self.q * (r == c) for r in range(dd)]
                for c in range(dd)
            ]
            cached = tuple(tuple(v) for v in linalg.row_basis(cols, dd))
            self._cache["image"] = cached
        return cached

    def kernel_pair_basis(self):
        """Basis of Ker(R - q) inside V⊗V."""
        cached = self._cache.get("kernel")
        if cached is None:
            dd = self.d * self.d
            rows = [
                [self.matrix[r][c] - self.q * (r == c) for c in range(dd)]
                for r in range(dd)
            ]
            cached = tuple(tuple(v) for v in linalg.nullspace(rows, dd))
            self._cache["kernel"] = cached
        return cached

    def __repr__(self):
        return f"HeckeSymmetry(d={self.d}, q={self.q}, source={self.source})"


@dataclass(frozen=True)
class TensorOperator:
    """The braid generator acting at one adjacent pair of slots of a tensor
    power, applied matrix-free."""

    sym: HeckeSymmetry
    n: int
    position: int

    def __post_init__(self):
        if not 1 <= self.position <= self.n - 1:
            raise ValueError(
                f"position {self.position} not in [1, {self.n - 1}]"
            )


def _apply_block(block, site_dim: int, n: int, pos: int, vec):
    """Apply a two-site operator at slots (pos, pos+1) of a tensor vector."""
    size = site_dim**n
    if len(vec) != size:
        raise ValueError(f"vector length {len(vec)} != {site_dim}**{n}")
    dd = site_dim * site_dim
    stride = site_dim ** (n - pos - 1)
    block_stride = stride * dd
    out = [Fraction(0)] * size
    for x, val in enumerate(vec):
        if not val:
            continue
        lo = x % stride
        pair = (x // stride) % dd
        base = (x // block_stride) * block_stride + lo
        for row in range(dd):
            m = block[row][pair]
            if m:
                out[base + row * stride] += m * val
    return out


def apply_tensor_op(op: TensorOperator, vec):
    return _apply_block(op.sym.matrix, op.sym.d, op.n, op.position, vec)


def _validate(sym: HeckeSymmetry):
    d, q, mat = sym.d, sym.q, sym.matrix
    dd = d * d
    # quadratic relation (R - q)(R + 1) = 0, column by column
    for col in range(dd):
        w = [mat[r][col] + (r == col) for r in range(dd)]
        for r in range(dd):
            acc = -q * w[r]
            for c in range(dd):
                if w[c]:
                    acc += mat[r][c] * w[c]
            if acc != 0:
                raise HeckeViolation((col // d + 1, col % d + 1))
    # braid identity on V⊗³, basis vector by basis vector
    for x in range(d**3):
        vec = [Fraction(0)] * d**3
        vec[x] = Fraction(1)
        lhs = vec
        for pos in (1, 2, 1):
            lhs = _apply_block(mat, d, 3, pos, lhs)
        rhs = vec
        for pos in (2, 1, 2):
            rhs = _apply_block(mat, d, 3, pos, rhs)
        if lhs != rhs:
            raise BraidViolation((x // dd + 1, (x // d) % d + 1, x % d + 1))


def build_standard(r: int, q) -> HeckeSymmetry:
    """The deformed-transposition symmetry on an r-dimensional space:
    diagonal pairs scale by q, ordered pairs swap, with the lower-triangular
    correction keeping the quadratic relation exact."""
    if r < 1:
        raise ValueError("dimension must be at least 1")
    q = Fraction(q)
    if q == 0:
        raise ValueError("the parameter q must be nonzero")
    dd = r * r
    mat = [[Fraction(0)] * dd for _ in range(dd)]
    for i in range(r):
        for j in range(r):
            col = i * r + j
            if i == j:
                mat[col][col] = q
            elif i < j:
                mat[j * r + i][col] = Fraction(1)
            else:
                mat[j * r + i][col] = q
                mat[col][col] = q - 1
    return HeckeSymmetry(r, q, mat, source="standard")


def build_super(r0: int, r1: int, q) -> HeckeSymmetry:
    """The graded variant: r0 even basis vectors followed by r1 odd ones.
    Odd-odd diagonal pairs pick up the sign, mixed swaps carry the parity
    factor, and the same lower-triangular correction applies."""
    if r0 < 0 or r1 < 0 or r0 + r1 < 1:
        raise ValueError("need r0, r1 >= 0 with r0 + r1 >= 1")
    q = Fraction(q)
    if q == 0:
        raise ValueError("the parameter q must be nonzero")
    d = r0 + r1
    parity = [0] * r0 + [1] * r1
    dd = d * d
    mat = [[Fraction(0)] * dd for _ in range(dd)]
    for i in range(d):
        for j in range(d):
            col = i * d + j
            sign = Fraction(-1) if parity[i] and parity[j] else Fraction(1)
            if i == j:
                mat[col][col] = q if parity[i] == 0 else Fraction(-1)
            elif i < j:
                mat[j * d + i][col] = sign
            else:
                mat[j * d + i][col] = q * sign
                mat[col][col] = q - 1
    return HeckeSymmetry(d, q, mat, source="super")


def load_and_validate(d: int, q, matrix) -> HeckeSymmetry:
    """Validate a user-supplied candidate; raises BraidViolation or
    HeckeViolation with a 1-based witness on failure."""
    return HeckeSymmetry(d, q, matrix, source="user")


# ---------------------------------------------------------------------------
# file format


def serialize_symmetry(sym: HeckeSymmetry) -> str:
    lines = [
        "hecke-symmetry v1",
        f"d = {sym.d}",
        f"q = {sym.q.numerator}/{sym.q.denominator}",
    ]
    for row in sym.matrix:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_symmetry_text(text: str) -> HeckeSymmetry:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "hecke-symmetry v1":
        raise FileFormatError(1, "expected header 'hecke-symmetry v1'")
    if len(lines) < 3:
        raise FileFormatError(len(lines), "missing d / q lines")

    def keyed(line_no: int, key: str) -> str:
        raw = lines[line_no - 1]
        head, _, val = raw.partition("=")
        if head.strip() != key:
            raise FileFormatError(line_no, f"expected '{key} = ...'")
        return val.strip()

    try:
        d = int(keyed(2, "d"))
    except ValueError as exc:
        raise FileFormatError(2, f"bad dimension: {exc}") from None
    try:
        q = Fraction(keyed(3, "q"))
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(3, f"bad q: {exc}") from None
    dd = d * d
    body = lines[3:]
    if len(body) < dd:
        raise FileFormatError(len(lines), f"expected {dd} matrix rows")
    matrix = []
    for k in range(dd):
        line_no = 4 + k
        toks = body[k].split()
        if len(toks) != dd:
            raise FileFormatError(
                line_no, f"expected {dd} entries, got {len(toks)}"
            )
        try:
            matrix.append([Fraction(t) for t in toks])
        except (ValueError, ZeroDivisionError) as exc:
            raise FileFormatError(line_no, f"bad entry: {exc}") from None
    tail = [ln for ln in body[dd:] if ln.strip()]
    if tail:
        raise FileFormatError(4 + dd, "unexpected trailing content")
    return load_and_validate(d, q, matrix)


def load_symmetry_file(path: str) -> HeckeSymmetry:
    with open(path, "r", encoding="ascii") as fh:
        return parse_symmetry_text(fh.read())


# ---------------------------------------------------------------------------
# graded dimension engines


def _rref(rows, ncols):
    """Reduced row echelon form over Fractions: (pivot columns, rows)."""
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rref = []
    for row in work:
        for pc, pr in zip(pivots, rref):
            if row[pc]:
                f = row[pc]
                for k in range(pc, ncols):
                    row[k] -= f * pr[k]
        lead = next((k for k in range(ncols) if row[k]), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        for pc, pr in zip(pivots, rref):
            if pr[lead]:
                f = pr[lead]
                for k in range(ncols):
                    pr[k] -= f * row[k]
        pivots.append(lead)
        rref.append(row)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [pivots[i] for i in order], [rref[i] for i in order]


def _graded_quotient_dims(site_dim: int, pair_basis, n_max: int):
    """Dimensions, per degree up to n_max, of the tensor algebra on a
    site_dim-dimensional space modulo the ideal generated by the given
    subspace of the square.

    Degree n is handled as (previous quotient)⊗(one more slot) modulo the
    image of the relations inserted at the last adjacent pair; coordinates
    on each quotient are carried forward, which keeps every elimination at
    the size of the quotient rather than the full tensor power.
    """
    d = site_dim
    dims = [1]
    if n_max == 0:
        return dims
    _check_cap(d, 1)
    dims.append(d)
    coords = [
        [Fraction(1) if i == j else Fraction(0) for j in range(d)]
        for i in range(d)
    ]
    for n in range(2, n_max + 1):
        _check_cap(d, n)
        m_prev = dims[n - 1]
        ncols = m_prev * d
        ech = linalg.Echelon(ncols)
        for w in range(d ** (n - 2)):
            for u in pair_basis:
                rel = [Fraction(0)] * ncols
                touched = False
                for a in range(d):
                    cvec = coords[w * d + a]
                    for b in range(d):
                        uab = u[a * d + b]
                        if not uab:
                            continue
                        for j in range(m_prev):
                            cj = cvec[j]
                            if cj:
                                rel[j * d + b] += uab * cj
                                touched = True
                if touched:
                    ech.add(rel)
        pivots, rref = _rref(ech.rows, ncols)
        m_new = ncols - len(pivots)
        dims.append(m_new)
        if n == n_max:
            break
        pivot_row = dict(zip(pivots, rref))
        free = [c for c in range(ncols) if c not in pivot_row]
        free_index = {c: k for k, c in enumerate(free)}
        new_coords = []
        for z in range(d ** (n - 1)):
            cvec = coords[z]
            for b in range(d):
                out = [Fraction(0)] * m_new
                # embed e_z⊗e_b then reduce modulo the relation row space
                for j in range(m_prev):
                    cj = cvec[j]
                    if not cj:
                        continue
                    col = j * d + b
                    k = free_index.get(col)
                    if k is not None:
                        out[k] += cj
                        continue
                    row = pivot_row[col]
                    for fc in free:
                        if row[fc]:
                            out[free_index[fc]] -= cj * row[fc]
                new_coords.append(out)
        coords = new_coords
    return dims


def _cached_dims(sym: HeckeSymmetry, key: str, pair_basis, n_max: int):
    cached = sym._cache.get(key)
    if cached is None or len(cached) <= n_max:
        cached = _graded_quotient_dims(sym.d, pair_basis, n_max)
        sym._cache[key] = cached
    return list(cached[: n_max + 1])


def symmetric_dims(sym: HeckeSymmetry, n_max: int):
    """dim of the degree-n component of the quadratic quotient by
    Im(R - q), for n = 0..n_max."""
    return _cached_dims(sym, "sym_dims", sym.image_pair_basis(), n_max)


def exterior_dims(sym: HeckeSymmetry, n_max: int):
    """dim of the degree-n component of the quadratic quotient by
    Ker(R - q), for n = 0..n_max."""
    return _cached_dims(sym, "ext_dims", sym.kernel_pair_basis(), n_max)


def _block_positions(lam) -> set[int]:
    """Adjacent positions lying strictly inside the parts of a partition
    laid out left to right (1-based)."""
    positions = set()
    offset = 0
    for part in lam:
        for i in range(1, part):
            positions.add(offset + i)
        offset += part
    return positions


def _embedded_pair_vectors(vecs, d: int, n: int, pos: int):
    """All tensor embeddings of two-site vectors at slots (pos, pos+1)."""
    dd = d * d
    stride = d ** (n - pos - 1)
    block_stride = stride * dd
    outer = d ** (n - 2)
    out = []
    for v in vecs:
        support = [(pair, v[pair]) for pair in range(dd) if v[pair]]
        for w in range(outer):
            hi, lo = divmod(w, stride)
            base = hi * block_stride + lo
            row = [Fraction(0)] * (d**n)
            for pair, val in support:
                row[base + pair * stride] = val
            out.append(row)
    return out


def dim_quotient(sym: HeckeSymmetry, lam, mu) -> int:
    """Dimension of the tensor power modulo image relations inside the
    blocks of lam and kernel relations inside the blocks of mu (mu laid out
    after lam), by one exact elimination over the spanning set."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = weight(lam) + weight(mu)
    d = sym.d
    if n == 0:
        return 1
    _check_cap(d, n)
    if n == 1:
        return d
    if mu == () and lam == (n,):
        return symmetric_dims(sym, n)[n]
    if lam == () and mu == (n,):
        return exterior_dims(sym, n)[n]
    spanning = []
    for pos in _block_positions(lam):
        spanning.extend(
            _embedded_pair_vectors(sym.image_pair_basis(), d, n, pos)
        )
    shift = weight(lam)
    for pos in _block_positions(mu):
        spanning.extend(
            _embedded_pair_vectors(sym.kernel_pair_basis(), d, n, shift + pos)
        )
    return d**n - linalg.rank(spanning, d**n)


# ---------------------------------------------------------------------------
# hom-space dimensions for a pair of symmetries


def _pair_conjugation_matrix(sym_target: HeckeSymmetry, sym_source: HeckeSymmetry):
    """Matrix, on the square of Hom(V, V'), of conjugating a two-slot map by
    the source symmetry and the inverse target symmetry."""
    d, dp = sym_source.d, sym_target.d
    big = d * dp
    rinv = sym_target.inverse_matrix()
    rmat = sym_source.matrix
    size = big * big
    mat = [[Fraction(0)] * size for _ in range(size)]
    for a in range(dp):
        for c in range(dp):
            for a2 in range(dp):
                for c2 in range(dp):
                    left = rinv[a2 * dp + c2][a * dp + c]
                    if not left:
                        continue
                    for b in range(d):
                        for e in range(d):
                            for b2 in range(d):
                                for e2 in range(d):
                                    right = rmat[b * d + e][b2 * d + e2]
                                    if not right:
                                        continue
                                    row = (a2 * d + b2) * big + (c2 * d + e2)
                                    col = (a * d + b) * big + (c * d + e)
                                    mat[row][col] += left * right
    return mat


def _require_same_q(sym_target: HeckeSymmetry, sym_source: HeckeSymmetry):
    if sym_target.q != sym_source.q:
        raise ValueError(
            f"the two symmetries must share q; got {sym_target.q} "
            f"and {sym_source.q}"
        )


def dim_intertwiner(sym_target: HeckeSymmetry, sym_source: HeckeSymmetry, n: int) -> int:
    """Dimension of the space of maps between the n-th tensor powers
    commuting with both braid actions, computed as a graded quotient on
    tensor powers of Hom(V, V')."""
    _require_same_q(sym_target, sym_source)
    big = sym_source.d * sym_target.d
    _check_cap(big, n)
    if n <= 1:
        return big**n
    conj = _pair_conjugation_matrix(sym_target, sym_source)
    size = len(conj)
    # row space of (conj - Id) = image of its transpose
    rows = [
        [conj[r][c] - (r == c) for c in range(size)] for r in range(size)
    ]
    pair_basis = linalg.row_basis(rows, size)
    return _graded_quotient_dims(big, pair_basis, n)[n]


def dim_e_component(sym_target: HeckeSymmetry, sym_source: HeckeSymmetry, n: int) -> int:
    """Dimension of the intersection over all adjacent positions of the
    images of (conjugation - identity) on the n-th tensor power of
    Hom(V, V')."""
    _require_same_q(sym_target, sym_source)
    big = sym_source.d * sym_target.d
    _check_cap(big, n)
    if n <= 1:
        return big**n
    conj = _pair_conjugation_matrix(sym_target, sym_source)
    size = len(conj)
    cols = [
        [conj[r][c] - (r == c) for r in range(size)] for c in range(size)
    ]
    image_basis = linalg.row_basis(cols, size)
    ambient = big**n
    current = None
    for pos in range(1, n):
        embedded = _embedded_pair_vectors(image_basis, big, n, pos)
        if current is None:
            current = linalg.row_basis(embedded, ambient)
        else:
            current = linalg.intersect_bases(current, embedded, ambient)
        if not current:
            return 0
    return len(current)
