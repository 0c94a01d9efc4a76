"""Dense linear algebra over GF(2) on bit-packed rows.

Row ``i`` of a :class:`BitMatrix` is stored in ``data[i]`` as ``ceil(cols/64)``
little-endian ``uint64`` words: column ``j`` lives in word ``j >> 6`` at bit
``j & 63``.  Bits past the last column are always zero.

Vectors are row vectors and matrices act on the right, ``v -> v @ g``.
Polynomials over GF(2) are Python ints with bit ``k`` holding the
coefficient of ``x^k``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

if sys.byteorder != "little":  # pragma: no cover
    raise ImportError("the packed layout assumes a little-endian host")

WORD = 64
_ONE = np.uint64(1)


def n_words(cols: int) -> int:
    return (cols + WORD - 1) // WORD


class BitMatrix:
    """A ``rows x cols`` matrix over GF(2)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        self.rows = int(rows)
        self.cols = int(cols)
        shape = (self.rows, n_words(self.cols))
        if data is None:
            data = np.zeros(shape, dtype=np.uint64)
        elif data.shape != shape or data.dtype != np.uint64:
            raise ValueError(f"packed data has shape {data.shape}, expected {shape}")
        self.data = np.ascontiguousarray(data)

    # -- construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        idx = np.arange(n)
        m.data[idx, idx >> 6] = _ONE << (idx & 63).astype(np.uint64)
        return m

    @classmethod
    def from_dense(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = arr.shape
        w = n_words(cols)
        packed = np.packbits(arr, axis=1, bitorder="little")
        buf = np.zeros((rows, w * 8), dtype=np.uint8)
        buf[:, : packed.shape[1]] = packed
        return cls(rows, cols, buf.view(np.uint64).reshape(rows, w))

    @classmethod
    def from_int_rows(cls, rows: Sequence[int], cols: int) -> "BitMatrix":
        w = n_words(cols)
        buf = b"".join(int(r).to_bytes(w * 8, "little") for r in rows)
        data = np.frombuffer(buf, dtype=np.uint64).reshape(len(rows), w).copy()
        return cls(len(rows), cols, data)

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> "BitMatrix":
        return cls.from_dense(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))

    # -- views ---------------------------------------------------------------

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        bits = np.unpackbits(self.data.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.cols].copy()

    def int_rows(self) -> list[int]:
        return [int.from_bytes(row.tobytes(), "little") for row in self.data]

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.data.copy())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int((self.data[i, j >> 6] >> np.uint64(j & 63)) & _ONE)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.data, other.data))
        )

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return not self.data.any()

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(self.rows, self.cols, self.data ^ other.data)

    __sub__ = __add__

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return multiply(self, other)

    @property
    def T(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def take_rows(self, idx) -> "BitMatrix":
        idx = np.asarray(idx, dtype=np.intp)
        return BitMatrix(len(idx), self.cols, self.data[idx])

    def take_cols(self, idx) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense()[:, np.asarray(idx, dtype=np.intp)])


def vstack(mats: Sequence[BitMatrix], cols: int | None = None) -> BitMatrix:
    if not mats:
        return BitMatrix(0, cols or 0)
    c = mats[0].cols
    if any(m.cols != c for m in mats):
        raise ValueError("column mismatch")
    return BitMatrix(sum(m.rows for m in mats), c, np.vstack([m.data for m in mats]))


def hstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    return BitMatrix.from_dense(np.hstack([m.to_dense() for m in mats]))


# -- multiplication -------------------------------------------------------


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Exact product ``a @ b``.

    Works on 8-row blocks of ``b``: all 256 XOR-combinations of the block are
    tabulated once, then each row of ``a`` picks its combination by the
    matching byte of its packed words.
    """
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bw = b.data.shape[1]
    out = np.zeros((a.rows, bw), dtype=np.uint64)
    if a.rows == 0 or a.cols == 0 or bw == 0:
        return BitMatrix(a.rows, b.cols, out)
    if a.rows <= 4:
        for i, row in enumerate(a.to_dense()):
            idx = np.flatnonzero(row)
            if idx.size:
                out[i] = np.bitwise_xor.reduce(b.data[idx], axis=0)
        return BitMatrix(a.rows, b.cols, out)
    abytes = a.data.view(np.uint8)
    table = np.zeros((256, bw), dtype=np.uint64)
    for blk in range((a.cols + 7) // 8):
        base = blk * 8
        for t in range(min(8, b.rows - base)):
            table[1 << t : 2 << t] = table[: 1 << t] ^ b.data[base + t]
        # entries with bits past b.rows are stale but never indexed
        out ^= table[abytes[:, blk]]
    return BitMatrix(a.rows, b.cols, out)


# -- elimination ------------------------------------------------------------


def _rref(data: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; pivots are taken at the lowest free column."""
    m = data.copy()
    nrows = m.shape[0]
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == nrows:
            break
        w, bit = c >> 6, _ONE << np.uint64(c & 63)
        nz = np.flatnonzero(m[r:, w] & bit)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        hits = np.flatnonzero(m[:, w] & bit)
        hits = hits[hits != r]
        if hits.size:
            m[hits] ^= m[r]
        pivots.append(c)
        r += 1
    return m[:r], pivots


@dataclass
class Subspace:
    """Row space given by a reduced echelon basis."""

    basis: BitMatrix
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, vecs: BitMatrix) -> "Subspace":
        data, piv = _rref(vecs.data, vecs.cols)
        return cls(BitMatrix(len(piv), vecs.cols, data), tuple(piv))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(BitMatrix(0, ambient), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(BitMatrix.identity(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def ambient(self) -> int:
        return self.basis.cols

    def reduce(self, vecs: BitMatrix) -> BitMatrix:
        """Residues of the rows of ``vecs`` with every pivot bit cleared."""
        if vecs.cols != self.ambient:
            raise ValueError("dimension mismatch")
        m = vecs.data.copy()
        for i, p in enumerate(self.pivots):
            hits = np.flatnonzero(m[:, p >> 6] & (_ONE << np.uint64(p & 63)))
            if hits.size:
                m[hits] ^= self.basis.data[i]
        return BitMatrix(vecs.rows, vecs.cols, m)

    def contains(self, vecs: BitMatrix) -> bool:
        return self.reduce(vecs).is_zero()

    def coordinates(self, vecs: BitMatrix) -> BitMatrix:
        """Coordinates of vectors lying in the subspace, w.r.t. ``basis``."""
        return vecs.take_cols(list(self.pivots))

    def non_pivots(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient) if c not in piv]

    def join(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(vstack([self.basis, other.basis]))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis


def echelon(a: BitMatrix) -> Subspace:
    return Subspace.from_vectors(a)


def rank(a: BitMatrix) -> int:
    return len(_rref(a.data, a.cols)[1])


def kernel(a: BitMatrix) -> Subspace:
    """Right null space ``{x : a x^T = 0}``, as row vectors of length ``a.cols``."""
    data, piv = _rref(a.data, a.cols)
    r = BitMatrix(len(piv), a.cols, data).to_dense()
    free = [c for c in range(a.cols) if c not in set(piv)]
    x = np.zeros((len(free), a.cols), dtype=np.uint8)
    if free:
        x[np.arange(len(free)), free] = 1
        if piv:
            x[:, piv] = r[:, free].T
    return Subspace.from_vectors(BitMatrix.from_dense(x))


def left_kernel(a: BitMatrix) -> Subspace:
    """``{y : y a = 0}``."""
    return kernel(a.T)


def nullity(a: BitMatrix) -> int:
    """Dimension of the left kernel."""
    return a.rows - rank(a)


def solve(a: BitMatrix, b: BitMatrix) -> BitMatrix | None:
    """A solution ``x`` (``1 x cols``) of ``a x^T = b^T``, or None.

    ``b`` is given as a ``1 x rows`` row vector.
    """
    if b.cols != a.rows or b.rows != 1:
        raise ValueError("right-hand side must be a 1 x rows vector")
    aug = hstack([a, b.T])
    data, piv = _rref(aug.data, aug.cols)
    if piv and piv[-1] == a.cols:
        return None
    r = BitMatrix(len(piv), aug.cols, data).to_dense()
    x = np.zeros((1, a.cols), dtype=np.uint8)
    for i, p in enumerate(piv):
        x[0, p] = r[i, a.cols]
    return BitMatrix.from_dense(x)


def inverse(a: BitMatrix) -> BitMatrix:
    if a.rows != a.cols:
        raise ValueError("only square matrices are invertible")
    n = a.rows
    aug = hstack([a, BitMatrix.identity(n)])
    data, piv = _rref(aug.data, aug.cols)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular over GF(2)")
    return BitMatrix(n, aug.cols, data).take_cols(range(n, 2 * n))


def _semi_reduce(rows: np.ndarray, pivots: list[int], m: np.ndarray) -> np.ndarray:
    # rows[k] is zero at pivots[:k], so one ordered pass clears every pivot
    m = m.copy()
    for row, p in zip(rows, pivots):
        hits = np.flatnonzero(m[:, p >> 6] & (_ONE << np.uint64(p & 63)))
        if hits.size:
            m[hits] ^= row
    return m


def spin_up(generators: Sequence[BitMatrix], seeds: BitMatrix | Subspace) -> Subspace:
    """Smallest subspace containing ``seeds`` and closed under ``v -> v @ g``."""
    start = seeds if isinstance(seeds, Subspace) else Subspace.from_vectors(seeds)
    cols = start.ambient
    rows = [start.basis.data]
    pivots = list(start.pivots)
    frontier = start.basis
    while frontier.rows and generators and len(pivots) < cols:
        images = np.vstack([(frontier @ g).data for g in generators])
        basis = np.vstack(rows)
        res, piv = _rref(_semi_reduce(basis, pivots, images), cols)
        if not piv:
            break
        rows.append(res)
        pivots += piv
        frontier = BitMatrix(len(piv), cols, res)
    return Subspace.from_vectors(BitMatrix(len(pivots), cols, np.vstack(rows)))


# -- polynomials over GF(2) ----------------------------------------------------


def pdeg(p: int) -> int:
    return p.bit_length() - 1


def pmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = pdeg(b)
    q = 0
    while a and pdeg(a) >= db:
        s = pdeg(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


@lru_cache(maxsize=None)
def irreducibles(maxdeg: int) -> tuple[int, ...]:
    """All irreducible polynomials of degree 1..maxdeg, by degree then value."""
    found: list[int] = []
    for d in range(1, maxdeg + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if not any(pdeg(q) * 2 <= d and pdivmod(p, q)[1] == 0 for q in found):
                found.append(p)
    return tuple(found)


def small_factors(p: int, maxdeg: int = 8) -> list[tuple[int, int]]:
    """Irreducible factors of degree <= maxdeg, with multiplicities."""
    out = []
    for q in irreducibles(maxdeg):
        if pdeg(q) > pdeg(p):
            break
        k = 0
        while True:
            quo, rem = pdivmod(p, q)
            if rem:
                break
            p, k = quo, k + 1
        if k:
            out.append((q, k))
    return out


def poly_of_matrix(p: int, a: BitMatrix) -> BitMatrix:
    """``p(a)`` by Horner's rule."""
    n = a.rows
    out = BitMatrix.zeros(n, n)
    eye = BitMatrix.identity(n)
    for k in range(pdeg(p), -1, -1):
        out = out @ a
        if (p >> k) & 1:
            out = out + eye
    return out


def _vecmul(v: int, rows: list[int]) -> int:
    acc = 0
    while v:
        low = v & -v
        acc ^= rows[low.bit_length() - 1]
        v ^= low
    return acc


def charpoly_blocks(a: BitMatrix) -> list[int]:
    """Relative minimal polynomials of a Krylov decomposition of ``a``.

    Their product is the characteristic polynomial.  Each block starts from
    the first unit vector outside the span found so far.
    """
    if a.rows != a.cols:
        raise ValueError("charpoly needs a square matrix")
    n = a.rows
    rows = a.int_rows()
    ech: list[list[int]] = []  # [pivot bit, vector, poly tag]
    blocks: list[int] = []
    total = 0
    for j in range(n):
        if total == n:
            break
        raw, k = 1 << j, 0
        while True:
            w, wp = raw, 1 << k
            for entry in ech:
                if w & entry[0]:
                    w ^= entry[1]
                    wp ^= entry[2]
            if w == 0:
                if k:
                    blocks.append(wp)
                    total += k
                break
            ech.append([w & -w, w, wp])
            raw = _vecmul(raw, rows)
            k += 1
        for entry in ech:
            entry[2] = 0
    return blocks


def charpoly(a: BitMatrix) -> int:
    out = 1
    for b in charpoly_blocks(a):
        out = pmul(out, b)
    return out


def vector_from_int(v: int, n: int) -> BitMatrix:
    return BitMatrix.from_int_rows([v], n)


def ints_to_matrix(rows: Iterable[int], n: int) -> BitMatrix:
    return BitMatrix.from_int_rows(list(rows), n)
