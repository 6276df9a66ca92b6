"""Exact rational dense matrices: rank, reduced row echelon form, nullspace.

Scalars are `fractions.Fraction`, so every result is exact; there is no
rounding anywhere in the package.  Elimination uses the deterministic
pivot rule "first row with a nonzero entry, columns scanned left to
right", which makes echelon forms (and everything derived from them,
e.g. canonical subspace bases) reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction

Vector = tuple[Fraction, ...]


def qf(x) -> Fraction:
    """Coerce ints/strings/Fractions to Fraction, rejecting floats."""
    if type(x) is Fraction:
        return x
    if isinstance(x, float):
        raise TypeError("floating point input is not allowed in exact arithmetic")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Render as "p" or "p/q" in lowest terms (Fraction normalizes)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))

def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))

def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)

def is_zero_vec(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)

def unit_vector(n: int, i: int) -> Vector:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "data", "_rref", "_pivots")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(qf(x) for x in row) for row in data)
        if rows:
            cols_found = len(rows[0])
            if any(len(r) != cols_found for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != cols_found:
                raise ValueError("cols mismatch")
            cols = cols_found
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows
        self._rref: Matrix | None = None
        self._pivots: tuple[int, ...] | None = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_rows(cls, vectors: Iterable[Sequence], cols: int) -> "Matrix":
        return cls(list(vectors), cols=cols)

    # -- basics ---------------------------------------------------------------

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def stack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return Matrix(self.data + other.data, cols=self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.cols
        out = []
        for r in self.data:
            row = [Q(0)] * cols
            for k, a in enumerate(r):
                if a:
                    orow = other.data[k]
                    for j in range(cols):
                        b = orow[j]
                        if b:
                            row[j] += a * b
                    # a*0 contributes nothing; skipping keeps sparse inputs fast
            out.append(row)
        return Matrix(out, cols=cols)

    def mul_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("shape mismatch in matrix-vector product")
        out = []
        for r in self.data:
            acc = Q(0)
            for a, b in zip(r, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.data)

    # -- elimination ----------------------------------------------------------

    def _eliminate(self) -> None:
        rows = [list(r) for r in self.data]
        nrows, ncols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            pr = None
            for i in range(r, nrows):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            prow = rows[r]
            inv = 1 / prow[c]
            if inv != 1:
                rows[r] = prow = [x * inv for x in prow]
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [x - f * y for x, y in zip(ri, prow)]
            pivots.append(c)
            r += 1
        self._rref = Matrix.__new__(Matrix)
        self._rref.rows = nrows
        self._rref.cols = ncols
        self._rref.data = tuple(tuple(r) for r in rows)
        self._rref._rref = self._rref
        self._rref._pivots = tuple(pivots)
        self._pivots = tuple(pivots)

    def rref(self) -> "Matrix":
        if self._rref is None:
            self._eliminate()
        return self._rref

    def pivot_columns(self) -> tuple[int, ...]:
        if self._pivots is None:
            self._eliminate()
        return self._pivots

    def rank(self) -> int:
        return len(self.pivot_columns())

    def nullspace_basis(self) -> list[Vector]:
        """Basis of {v : self @ v = 0}, one vector per free column."""
        red = self.rref()
        pivots = self.pivot_columns()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Q(0)] * self.cols
            v[free] = Q(1)
            for prow, pcol in enumerate(pivots):
                v[pcol] = -red.data[prow][free]
            basis.append(tuple(v))
        return basis


def span_rref(vectors: Iterable[Sequence], cols: int) -> Matrix:
    """Canonical (rref, no zero rows) basis matrix for a span of vectors."""
    rows = [tuple(qf(x) for x in v) for v in vectors]
    rows = [r for r in rows if not is_zero_vec(r)]
    if not rows:
        return Matrix([], cols=cols)
    red = Matrix(rows, cols=cols).rref()
    keep = red.data[: red.rank()]
    return Matrix(keep, cols=cols)
