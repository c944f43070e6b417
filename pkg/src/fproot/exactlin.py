"""Exact linear algebra over the rationals.

Everything in this module is computed with `fractions.Fraction`; no floating
point enters or leaves.  This matters because downstream brick tests ask for
statements like ``dim Hom = 1`` which are integer facts and must not depend
on tolerances.

Matrices are dense and small (desk scale); no attempt is made at sparsity.
All functions are pure and all matrices immutable, so everything here is safe
to call concurrently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence


def rat(x) -> Fraction:
    """Coerce ints, Fractions and strings like '3/4' to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def rat_str(x: Fraction) -> str:
    """Serialize a Fraction as 'p' or 'p/q' (used by all JSON formats)."""
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """An immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: Optional[int] = None):
        rows = tuple(tuple(rat(x) for x in row) for row in data)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows in matrix data")
            if cols is not None and cols != ncols:
                raise ValueError("explicit cols disagrees with row length")
        else:
            if cols is None:
                cols = 0
            ncols = cols
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "data", rows)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("RatMatrix is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        z = Fraction(0)
        return RatMatrix([[z] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(
            [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)],
            cols=n,
        )

    @staticmethod
    def from_columns(columns: Sequence[Sequence], rows: Optional[int] = None) -> "RatMatrix":
        cols = [list(c) for c in columns]
        if cols:
            rows = len(cols[0])
        elif rows is None:
            rows = 0
        return RatMatrix([[cols[j][i] for j in range(len(cols))] for i in range(rows)],
                         cols=len(cols))

    @staticmethod
    def column(entries: Sequence) -> "RatMatrix":
        return RatMatrix([[x] for x in entries], cols=1)

    # -- access -------------------------------------------------------
    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i][j] for i in range(self.rows))

    def to_lists(self):
        return [list(r) for r in self.data]

    def to_floats(self):
        return [[float(x) for x in r] for r in self.data]

    # -- algebra ------------------------------------------------------
    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        od = other.data
        out = []
        for r in self.data:
            orow = [Fraction(0)] * other.cols
            for k, a in enumerate(r):
                if a:
                    ok = od[k]
                    for j in range(other.cols):
                        if ok[j]:
                            orow[j] += a * ok[j]
            out.append(orow)
        return RatMatrix(out, cols=other.cols)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in +")
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in -")
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in r] for r in self.data], cols=self.cols)

    def scale(self, c) -> "RatMatrix":
        c = rat(c)
        return RatMatrix([[c * a for a in r] for r in self.data], cols=self.cols)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return RatMatrix(
            [r1 + r2 for r1, r2 in zip(self.data, other.data)],
            cols=self.cols + other.cols,
        )

    # -- predicates ---------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.shape == other.shape \
            and self.data == other.data

    def __hash__(self):
        return hash((self.shape, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(rat_str(x) for x in r) for r in self.data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def _rref_rows(rows, ncols):
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rref(m: RatMatrix):
    """Reduced row echelon form.

    Returns (rrefmatrix, pivot_columns).  The rank of m is len(pivot_columns).
    """
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(rows, m.cols)
    return RatMatrix(rows, cols=m.cols), tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: RatMatrix):
    """Basis of {v : m v = 0} as a list of column matrices.

    The basis is in the standard rref form: the vector attached to free
    column f has entry 1 at f and 0 at every other free column, so the
    coordinates of any kernel vector in this basis can be read off its
    values at the free columns.
    """
    R, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R.data[i][f]
        basis.append(RatMatrix.column(v))
    return basis


def solve(m: RatMatrix, b: RatMatrix) -> Optional[RatMatrix]:
    """A particular solution of m x = b, or None when inconsistent.

    b must be a column with m.rows entries; free variables are set to 0.
    """
    if b.cols != 1 or b.rows != m.rows:
        raise ValueError(f"right-hand side shape {b.shape} does not match {m.shape}")
    aug = m.hstack(b)
    R, pivots = _rref_aug(aug)
    for i in range(len(pivots), m.rows):
        if R.data[i][m.cols]:
            return None
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = R.data[i][m.cols]
    return RatMatrix.column(x)


def _rref_aug(aug: RatMatrix):
    rows = [list(r) for r in aug.data]
    pivots = _rref_rows(rows, aug.cols)
    return RatMatrix(rows, cols=aug.cols), tuple(pivots)
