"""Exact integer linear algebra.

Every equality decision in the package bottoms out here: matrices carry
Python ints (arbitrary precision), and linear systems over the integers are
decided through the Smith normal form.

Row convention: vectors are rows, a homomorphism Z^m -> Z^n is an m x n
matrix, and "f then g" is the product ``f @ g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError

__all__ = [
    "ZMatrix",
    "HermiteDecomposition",
    "SmithDecomposition",
    "hnf",
    "snf",
    "solve_left",
    "kernel_basis",
    "solve_terms",
    "terms_matrix",
    "solve_homotopy",
    "xgcd",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _round_div(a: int, b: int) -> int:
    """Nearest-integer quotient, so that ``|a - q*b| <= |b| / 2``."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else -1
    return q


class ZMatrix:
    """Immutable integer matrix with explicit shape.

    Zero-row and zero-column matrices are legal, so the shape is stored
    separately from the entries.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable[int]] = (), rows: int | None = None,
                 cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            if not data:
                raise DimensionError("cols must be given for a matrix without rows")
            cols = len(data[0])
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        if rows == 0 or cols == 0:
            if any(len(r) for r in data) or (data and len(data) != rows):
                raise DimensionError(f"entries do not match shape {rows}x{cols}")
            data = tuple(() for _ in range(rows))
        elif len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionError(f"entries do not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def _raw(cls, data, rows: int, cols: int) -> "ZMatrix":
        # trusted fast path: ``data`` is a sequence of int rows of the right shape
        self = object.__new__(cls)
        self.rows, self.cols, self._hash = rows, cols, None
        self._data = tuple(map(tuple, data)) if rows and cols else tuple(() for _ in range(rows))
        return self

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ZMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "ZMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def scalar(cls, n: int, c: int) -> "ZMatrix":
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, rows: int, cols: int, diag: Sequence[int]) -> "ZMatrix":
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls(out, rows, cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ZMatrix"]]) -> "ZMatrix":
        """Assemble a block matrix; every block row and column must be consistent."""
        if not blocks or not blocks[0]:
            raise DimensionError("block() needs at least one block")
        row_heights = [row[0].rows for row in blocks]
        col_widths = [b.cols for b in blocks[0]]
        for i, row in enumerate(blocks):
            if len(row) != len(col_widths):
                raise DimensionError("ragged block matrix")
            for j, b in enumerate(row):
                if b.rows != row_heights[i] or b.cols != col_widths[j]:
                    raise DimensionError(
                        f"block ({i},{j}) is {b.rows}x{b.cols}, "
                        f"expected {row_heights[i]}x{col_widths[j]}")
        out = []
        for row in blocks:
            for r in range(row[0].rows):
                line = []
                for b in row:
                    line.extend(b._data[r])
                out.append(line)
        return cls(out, sum(row_heights), sum(col_widths))

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def entries(self) -> tuple[int, ...]:
        """Row-major entry sequence, length ``rows*cols``."""
        return tuple(x for r in self._data for x in r)

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def submatrix(self, rows: range | Sequence[int], cols: range | Sequence[int]) -> "ZMatrix":
        rows, cols = list(rows), list(cols)
        return ZMatrix._raw([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    # -- arithmetic -------------------------------------------------------

    def _check_same_shape(self, other: "ZMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ZMatrix") -> "ZMatrix":
        self._check_same_shape(other)
        return ZMatrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                       self.rows, self.cols)

    def __sub__(self, other: "ZMatrix") -> "ZMatrix":
        self._check_same_shape(other)
        return ZMatrix._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                       self.rows, self.cols)

    def __neg__(self) -> "ZMatrix":
        return ZMatrix._raw([[-a for a in r] for r in self._data], self.rows, self.cols)

    def scale(self, c: int) -> "ZMatrix":
        return ZMatrix._raw([[c * a for a in r] for r in self._data], self.rows, self.cols)

    def __matmul__(self, other: "ZMatrix") -> "ZMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        return ZMatrix._raw([[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data],
                       self.rows, other.cols)

    @property
    def T(self) -> "ZMatrix":
        return ZMatrix._raw([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                       self.cols, self.rows)

    def kron(self, other: "ZMatrix") -> "ZMatrix":
        out = []
        for r in self._data:
            for s in other._data:
                out.append([a * b for a in r for b in s])
        return ZMatrix._raw(out, self.rows * other.rows, self.cols * other.cols)

    def hstack(self, other: "ZMatrix") -> "ZMatrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return ZMatrix._raw([a + b for a, b in zip(self._data, other._data)],
                       self.rows, self.cols + other.cols)

    def vstack(self, other: "ZMatrix") -> "ZMatrix":
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return ZMatrix._raw(self._data + other._data, self.rows + other.rows, self.cols)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        a = [list(r) for r in self._data]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"ZMatrix.zero({self.rows}, {self.cols})"
        return f"ZMatrix({self.tolist()})"

    def pretty(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[{self.rows}x{self.cols}]"
        width = max(len(str(x)) for r in self._data for x in r)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]"
                         for r in self._data)


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class HermiteDecomposition:
    """``U @ M == H`` with ``U`` unimodular and ``H`` in row Hermite form."""

    U: ZMatrix
    H: ZMatrix
    rank: int
    pivots: tuple[int, ...]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: ZMatrix
    D: ZMatrix
    V: ZMatrix
    rows: int
    cols: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.rows, self.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf(M: ZMatrix) -> HermiteDecomposition:
    """Row Hermite normal form.

    Pivots are positive, entries below a pivot vanish and entries above a
    pivot lie in ``[0, pivot)``. Zero rows collect at the bottom.
    """
    n, m = M.shape
    a = M.tolist()
    u = _identity_rows(n)
    r = 0
    pivots = []
    for j in range(m):
        if r == n:
            break
        # Euclid on column j: the smallest entry reduces the others until
        # one remains (keeps transform entries far smaller than gcd combos)
        while True:
            live = [i for i in range(r, n) if a[i][j]]
            if len(live) <= 1:
                if live and live[0] != r:
                    i = live[0]
                    a[r], a[i] = a[i], a[r]
                    u[r], u[i] = u[i], u[r]
                break
            k = min(live, key=lambda i: abs(a[i][j]))
            if k != r:
                a[r], a[k] = a[k], a[r]
                u[r], u[k] = u[k], u[r]
            p, ar, ur = a[r][j], a[r], u[r]
            for i in range(r + 1, n):
                if a[i][j]:
                    q = _round_div(a[i][j], p)
                    a[i] = [s - q * t for s, t in zip(a[i], ar)]
                    u[i] = [s - q * t for s, t in zip(u[i], ur)]
        piv = a[r][j]
        if piv == 0:
            continue
        if piv < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
            piv = -piv
        for i in range(r):
            q = a[i][j] // piv
            if q:
                a[i] = [s - q * t for s, t in zip(a[i], a[r])]
                u[i] = [s - q * t for s, t in zip(u[i], u[r])]
        pivots.append(j)
        r += 1
    return HermiteDecomposition(ZMatrix._raw(u, n, n), ZMatrix._raw(a, n, m), r, tuple(pivots))


def snf(M: ZMatrix) -> SmithDecomposition:
    """Smith normal form with transforms: ``U @ M @ V == D``.

    Diagonal entries are non-negative and each divides the next.
    """
    n, m = M.shape
    a = M.tolist()
    u = _identity_rows(n)
    v = _identity_rows(m)

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, c):  # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(n, m):
        # pivot: smallest nonzero magnitude in the trailing block
        best = None
        for i in range(t, n):
            row = a[i]
            for j in range(t, m):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            piv = a[t][t]
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // piv))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, m):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // piv))
                    if a[t][j]:
                        done = False
            if not done:
                # a nonzero remainder is smaller than the pivot: move it in
                best = None
                for i in range(t, n):
                    if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                        best = (abs(a[i][t]), i, None)
                for j in range(t, m):
                    if a[t][j] and abs(a[t][j]) < best[0]:
                        best = (abs(a[t][j]), None, j)
                _, i, j = best
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    # divisibility chain: diag(p, q) ~ diag(gcd, lcm) by unimodular 2x2 moves
    for i in range(t):
        for j in range(i + 1, t):
            p, q = a[i][i], a[j][j]
            if q % p == 0:
                continue
            g, x, y = xgcd(p, q)
            pg, qg = p // g, q // g
            ui, uj = u[i], u[j]
            u[i] = [x * s + y * r for s, r in zip(ui, uj)]
            u[j] = [-qg * s + pg * r for s, r in zip(ui, uj)]
            for row in v:
                ci, cj = row[i], row[j]
                row[i] = ci + cj
                row[j] = -y * qg * ci + x * pg * cj
            a[i][i], a[j][j] = g, p * qg
    return SmithDecomposition(ZMatrix._raw(u, n, n), ZMatrix._raw(a, n, m), ZMatrix._raw(v, m, m), n, m)


# ---------------------------------------------------------------------------
# linear systems


def solve_left(M: ZMatrix, B: ZMatrix) -> ZMatrix | None:
    """Some integer ``X`` with ``X @ M == B``, or ``None`` if none exists.

    With ``U M V = D`` the system becomes ``Y D = B V`` for ``Y = X U^-1``,
    which is solvable iff every column of ``B V`` is divisible by the
    matching invariant factor (and vanishes past the rank).
    """
    if B.cols != M.cols:
        raise DimensionError(f"solve_left: B has {B.cols} columns, M has {M.cols}")
    k, (n, m) = B.rows, M.shape
    if k == 0:
        return ZMatrix.zero(0, n)
    dec = snf(M)
    C = B @ dec.V
    diag = dec.diagonal
    y = [[0] * n for _ in range(k)]
    for j in range(m):
        d = diag[j] if j < len(diag) else 0
        for i in range(k):
            c = C[i, j]
            if d == 0:
                if c:
                    return None
            else:
                q, rem = divmod(c, d)
                if rem:
                    return None
                y[i][j] = q
    return ZMatrix(y, k, n) @ dec.U


def kernel_basis(M: ZMatrix) -> ZMatrix:
    """Canonical basis (rows) of the left kernel ``{v : v @ M == 0}``.

    The basis is returned in Hermite normal form, so two matrices with the
    same left kernel produce identical outputs.
    """
    n = M.rows
    dec = hnf(M)
    K = dec.U.submatrix(range(dec.rank, n), range(n))
    h = hnf(K)
    return h.H.submatrix(range(h.rank), range(n))


def terms_matrix(shapes: Sequence[tuple[int, int]],
                 equations: Sequence[tuple[Sequence[tuple[int, ZMatrix, ZMatrix]], tuple[int, int]]]
                 ) -> ZMatrix:
    """Coefficient matrix of a system of matrix equations.

    ``shapes[i]`` is the shape of unknown ``X_i``. Each equation is a list of
    terms ``(i, L, R)`` standing for ``L @ X_i @ R`` together with the shape of
    its right-hand side. With row-major vectorisation
    ``vec(L X R) = vec(X) @ kron(L.T, R)``; the blocks are stacked so that
    ``vec(X_0) ... vec(X_k)`` times the result is the concatenated left-hand
    sides.
    """
    offsets = [0]
    for r, c in shapes:
        offsets.append(offsets[-1] + r * c)
    blocks = []
    for terms, (er, ec) in equations:
        col = [ZMatrix.zero(r * c, er * ec) for r, c in shapes]
        for i, L, R in terms:
            r, c = shapes[i]
            if L.shape != (er, r) or R.shape != (c, ec):
                raise DimensionError(
                    f"term L{L.shape} X{(r, c)} R{R.shape} does not give {(er, ec)}")
            col[i] = col[i] + L.T.kron(R)
        blocks.append(col)
    total = offsets[-1]
    columns = []
    for col in blocks:
        m = ZMatrix.zero(0, col[0].cols)
        for b in col:
            m = m.vstack(b)
        columns.append(m)
    out = ZMatrix.zero(total, 0)
    for m in columns:
        out = out.hstack(m)
    return out


def solve_terms(shapes: Sequence[tuple[int, int]],
                equations: Sequence[tuple[Sequence[tuple[int, ZMatrix, ZMatrix]], ZMatrix]]
                ) -> list[ZMatrix] | None:
    """Solve ``sum(L @ X_i @ R) == C`` for all equations simultaneously.

    Returns the unknowns ``X_i`` or ``None`` when no integer solution exists.
    """
    M = terms_matrix(shapes, [(terms, rhs.shape) for terms, rhs in equations])
    rhs = []
    for _, C in equations:
        rhs.extend(C.entries())
    x = solve_left(M, ZMatrix([rhs], 1, len(rhs)))
    if x is None:
        return None
    flat = x.row(0)
    out, pos = [], 0
    for r, c in shapes:
        out.append(ZMatrix([flat[pos + i * c: pos + (i + 1) * c] for i in range(r)], r, c))
        pos += r * c
    return out


def solve_homotopy(a1: ZMatrix, b0: ZMatrix, C: ZMatrix) -> tuple[ZMatrix, ZMatrix] | None:
    """Find ``(S, T)`` with ``S @ b0 + a1 @ T == C``, or ``None``.

    ``a1`` is n1 x n2, ``b0`` is m0 x m1 and ``C`` is n1 x m1; then ``S`` is
    n1 x m0 and ``T`` is n2 x m1.
    """
    n1, n2 = a1.shape
    m0, m1 = b0.shape
    if C.shape != (n1, m1):
        raise DimensionError(f"solve_homotopy: C is {C.shape}, expected {(n1, m1)}")
    sol = solve_terms(
        [(n1, m0), (n2, m1)],
        [([(0, ZMatrix.identity(n1), b0), (1, a1, ZMatrix.identity(m1))], C)],
    )
    if sol is None:
        return None
    return sol[0], sol[1]
