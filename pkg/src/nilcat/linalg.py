"""Dense exact matrices and the elimination routines built on them.

Vectorisation is column stacking throughout:
``vec(A @ X @ B) == kron(B.T, A) @ vec(X)``.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .field import QQ, Field


class DimensionMismatch(ValueError):
    pass


class Mat:
    """Immutable dense matrix over an exact field.

    ``rows`` x ``cols`` with row-major entries; zero-sized shapes are allowed.
    """

    __slots__ = ("field", "rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable, field: Field = QQ):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative shape {rows}x{cols}")
        data = tuple(field(e) for e in entries)
        if len(data) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def _raw(cls, rows, cols, data, field):
        # trusted constructor: data is a tuple of field elements
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m._data = data
        m._hash = None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, cols: Optional[int] = None) -> Mat:
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), n, [e for r in rows for e in r], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Mat], nrows: int, field: Field = QQ) -> Mat:
        """Pack column vectors (``n x 1`` matrices) side by side."""
        if not columns:
            return cls.zeros(nrows, 0, field)
        return hstack(columns)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> Mat:
        z = field.zero
        return cls._raw(rows, cols, (z,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Mat:
        z, o = field.zero, field.one
        return cls._raw(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)), field)

    @classmethod
    def column(cls, values: Sequence, field: Field = QQ) -> Mat:
        return cls(len(values), 1, values, field)

    @classmethod
    def unit(cls, n: int, i: int, field: Field = QQ) -> Mat:
        """Standard basis column vector e_i of length n (0-based)."""
        z, o = field.zero, field.one
        return cls._raw(n, 1, tuple(o if k == i else z for k in range(n)), field)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return self._data

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def col(self, j: int) -> Mat:
        return Mat._raw(self.rows, 1, tuple(self._data[i * self.cols + j] for i in range(self.rows)),
                        self.field)

    def columns(self) -> list[Mat]:
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Mat:
        c = self.cols
        return Mat._raw(len(rows), len(cols),
                        tuple(self._data[i * c + j] for i in rows for j in cols), self.field)

    def _check_same(self, other: Mat):
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if other.field != self.field:
            raise DimensionMismatch(f"field mismatch: {self.field!r} vs {other.field!r}")
        if other.shape != self.shape:
            raise DimensionMismatch(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: Mat) -> Mat:
        self._check_same(other)
        return Mat._raw(self.rows, self.cols,
                        tuple(a + b for a, b in zip(self._data, other._data)), self.field)

    def __sub__(self, other: Mat) -> Mat:
        self._check_same(other)
        return Mat._raw(self.rows, self.cols,
                        tuple(a - b for a, b in zip(self._data, other._data)), self.field)

    def __neg__(self) -> Mat:
        return Mat._raw(self.rows, self.cols, tuple(-a for a in self._data), self.field)

    def scale(self, c) -> Mat:
        c = self.field(c)
        return Mat._raw(self.rows, self.cols, tuple(c * a for a in self._data), self.field)

    def __matmul__(self, other: Mat) -> Mat:
        if not isinstance(other, Mat):
            return NotImplemented
        if other.field != self.field:
            raise DimensionMismatch(f"field mismatch: {self.field!r} vs {other.field!r}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, m, k = self.rows, other.cols, self.cols
        zero = self.field.zero
        a, b = self._data, other._data
        bcols = [b[j::m] for j in range(m)] if m else []
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            nz = [(t, v) for t, v in enumerate(arow) if v]
            for j in range(m):
                bc = bcols[j]
                s = zero
                for t, v in nz:
                    w = bc[t]
                    if w:
                        s = s + v * w
                out.append(s)
        return Mat._raw(n, m, tuple(out), self.field)

    @property
    def T(self) -> Mat:
        r, c = self.rows, self.cols
        return Mat._raw(c, r, tuple(self._data[i * c + j] for j in range(c) for i in range(r)),
                        self.field)

    def __pow__(self, k: int) -> Mat:
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices have powers")
        if k < 0:
            raise ValueError("negative powers are not supported; use inverse()")
        result = Mat.identity(self.rows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def is_zero(self) -> bool:
        return not any(self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(e) for e in self.row(i))
                         for i in range(self.rows))
        return f"Mat({self.rows}x{self.cols}, [{body}], {self.field!r})"

    def vec(self) -> Mat:
        """Column-stacked vectorisation as an ``(rows*cols) x 1`` matrix."""
        return self.T.reshape(self.rows * self.cols, 1)

    def reshape(self, rows: int, cols: int) -> Mat:
        if rows * cols != self.rows * self.cols:
            raise DimensionMismatch(f"cannot reshape {self.shape} to {(rows, cols)}")
        return Mat._raw(rows, cols, self._data, self.field)

    def trace(self):
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        s = self.field.zero
        for i in range(self.rows):
            s = s + self._data[i * self.cols + i]
        return s


def unvec(v: Mat, rows: int, cols: int) -> Mat:
    """Inverse of :meth:`Mat.vec`."""
    if v.cols != 1 or v.rows != rows * cols:
        raise DimensionMismatch(f"cannot unvec {v.shape} into {rows}x{cols}")
    return Mat._raw(cols, rows, v.entries, v.field).T


def hstack(mats: Sequence[Mat]) -> Mat:
    if not mats:
        raise ValueError("hstack of nothing")
    r = mats[0].rows
    if any(m.rows != r for m in mats):
        raise DimensionMismatch("hstack needs equal row counts")
    f = mats[0].field
    data = []
    for i in range(r):
        for m in mats:
            data.extend(m.row(i))
    return Mat._raw(r, sum(m.cols for m in mats), tuple(data), f)


def vstack(mats: Sequence[Mat]) -> Mat:
    if not mats:
        raise ValueError("vstack of nothing")
    c = mats[0].cols
    if any(m.cols != c for m in mats):
        raise DimensionMismatch("vstack needs equal column counts")
    data = []
    for m in mats:
        data.extend(m.entries)
    return Mat._raw(sum(m.rows for m in mats), c, tuple(data), mats[0].field)


def block_diag(mats: Sequence[Mat], field: Field = QQ) -> Mat:
    if mats:
        field = mats[0].field
    n = sum(m.rows for m in mats)
    k = sum(m.cols for m in mats)
    out = [[field.zero] * k for _ in range(n)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out[r0 + i][c0:c0 + m.cols] = m.row(i)
        r0 += m.rows
        c0 += m.cols
    return Mat._raw(n, k, tuple(e for row in out for e in row), field)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product: block (i, j) equals ``a[i, j] * b``."""
    if a.field != b.field:
        raise DimensionMismatch("field mismatch in kron")
    r, c = a.rows * b.rows, a.cols * b.cols
    data = []
    for i in range(a.rows):
        arow = a.row(i)
        for k in range(b.rows):
            brow = b.row(k)
            for x in arow:
                data.extend(x * y for y in brow)
    return Mat._raw(r, c, tuple(data), a.field)


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        prow = rows[r]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return Mat._raw(m.rows, m.cols, tuple(e for row in rows for e in row), m.field), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: Mat) -> list[Mat]:
    """Canonical kernel basis: one vector per free column, in increasing order,
    with that free coordinate set to 1."""
    reduced, pivots = rref(m)
    one, zero = m.field.one, m.field.zero
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [zero] * m.cols
        v[free] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r, free]
        basis.append(Mat._raw(m.cols, 1, tuple(v), m.field))
    return basis


def solve(m: Mat, b: Mat) -> Optional[tuple[Mat, list[Mat]]]:
    """Solve ``m @ s == b``.

    Returns ``None`` when inconsistent, otherwise a particular solution (free
    variables set to zero) together with the canonical nullspace basis.
    """
    if b.cols != 1 or b.rows != m.rows:
        raise DimensionMismatch(f"right-hand side of shape {b.shape} for a {m.shape} system")
    if m.field != b.field:
        raise DimensionMismatch("field mismatch in solve")
    aug = hstack([m, b]) if m.cols else Mat._raw(m.rows, 1, b.entries, m.field)
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    sol = [m.field.zero] * m.cols
    for r, pc in enumerate(pivots):
        sol[pc] = reduced[r, m.cols]
    return Mat._raw(m.cols, 1, tuple(sol), m.field), nullspace_basis(m)


def solve_matrix(a: Mat, b: Mat) -> Optional[Mat]:
    """Some X with ``a @ X == b`` (free variables zero), or ``None``."""
    if a.rows != b.rows:
        raise DimensionMismatch(f"cannot solve {a.shape} X = {b.shape}")
    aug = hstack([a, b]) if a.cols else b
    reduced, pivots = rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    out = [[a.field.zero] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            out[pc][j] = reduced[r, a.cols + j]
    return Mat._raw(a.cols, b.cols, tuple(e for row in out for e in row), a.field)


def inverse(m: Mat) -> Optional[Mat]:
    """Inverse of a square matrix, ``None`` when singular."""
    if not m.is_square():
        return None
    x = solve_matrix(m, Mat.identity(m.rows, m.field))
    if x is None or rank(m) < m.rows:
        return None
    return x


def column_space(m: Mat) -> Mat:
    """Basis of the column space as columns (the nonzero rows of rref(m.T))."""
    reduced, pivots = rref(m.T)
    return reduced.submatrix(range(len(pivots)), range(reduced.cols)).T


def same_column_space(a: Mat, b: Mat) -> bool:
    if a.rows != b.rows:
        return False
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    if a.cols == 0 or b.cols == 0:
        return ra == rb == 0
    return rank(hstack([a, b])) == ra


def commutation_matrix(m: int, n: int, field: Field = QQ) -> Mat:
    """Permutation P with ``P @ kron(a, b) @ P.T == kron(b, a)`` for a m x m, b n x n.

    Row index ``j*m + i`` of the result picks index ``i*n + j`` of the input.
    """
    size = m * n
    data = [field.zero] * (size * size)
    one = field.one
    for i in range(m):
        for j in range(n):
            data[(j * m + i) * size + (i * n + j)] = one
    return Mat._raw(size, size, tuple(data), field)
