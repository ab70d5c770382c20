"""Exact linear algebra over Q (fractions.Fraction) and F_p.

Ranks over Q use fraction-free (Bareiss) elimination on integer rows; reduced
echelon forms are finished with exact fractions.  Pivots are chosen
column by column, taking the smallest remaining row index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from math import lcm


@total_ordering
class Mod:
    """Residue modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, Mod):
            return other.v
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return other

    def __add__(self, o):
        return Mod(self.v + self._lift(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Mod(self.v - self._lift(o), self.p)

    def __rsub__(self, o):
        return Mod(self._lift(o) - self.v, self.p)

    def __mul__(self, o):
        return Mod(self.v * self._lift(o), self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        d = self._lift(o) % self.p
        if d == 0:
            raise ZeroDivisionError("division by zero mod p")
        return Mod(self.v * pow(d, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return Mod(self._lift(o), self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        if isinstance(o, (Mod, int, Fraction)):
            return (self.v - self._lift(o)) % self.p == 0
        return NotImplemented

    def __lt__(self, o):
        return self.v < self._lift(o) % self.p

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


@dataclass(frozen=True)
class Field:
    """Q when ``characteristic == 0``, otherwise F_p."""

    characteristic: int = 0

    def __call__(self, x):
        p = self.characteristic
        if not p:
            return Fraction(x)
        if isinstance(x, Mod):
            return x
        if isinstance(x, Fraction):
            return Mod(x.numerator, p) / x.denominator
        return Mod(int(x), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def name(self) -> str:
        return "Q" if not self.characteristic else f"F{self.characteristic}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@dataclass
class Matrix:
    """Sparse matrix; ``entries`` maps (row, col) to a nonzero scalar."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        self.entries = {k: self.field(v) for k, v in self.entries.items() if v}

    @classmethod
    def from_dense(cls, data, fld: Field = QQ, cols: int | None = None) -> Matrix:
        data = [list(r) for r in data]
        ncols = cols if cols is not None else (len(data[0]) if data else 0)
        ent = {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v}
        return cls(len(data), ncols, ent, fld)

    @classmethod
    def from_columns(cls, columns, nrows: int, fld: Field = QQ) -> Matrix:
        ent = {(i, j): v for j, col in enumerate(columns) for i, v in enumerate(col) if v}
        return cls(nrows, len(columns), ent, fld)

    def dense(self) -> list[list]:
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}, self.field)

    def matvec(self, v) -> list:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        out = [self.field.zero] * self.rows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] += a * v[j]
        return out

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict = {}
        for (k, j), b in other.entries.items():
            by_row.setdefault(k, []).append((j, b))
        acc: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return Matrix(self.rows, other.cols, acc, self.field)

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        ent = dict(self.entries)
        ent.update({(i, j + self.cols): v for (i, j), v in other.entries.items()})
        return Matrix(self.rows, self.cols + other.cols, ent, self.field)

    def is_zero(self) -> bool:
        return not self.entries

    def triplets(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, _plain(v)) for (i, j), v in self.entries.items())


def _plain(v):
    if isinstance(v, Mod):
        return v.v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def json_scalar(v):
    """Field element as a JSON value: int when integral, else a "p/q" string."""
    v = _plain(v)
    return v if isinstance(v, int) else str(v)


def _integer_rows(m: Matrix) -> list[list[int]]:
    rows = [[0] * m.cols for _ in range(m.rows)]
    dens = [1] * m.rows
    for (i, _), v in m.entries.items():
        dens[i] = lcm(dens[i], Fraction(v).denominator)
    for (i, j), v in m.entries.items():
        fv = Fraction(v) * dens[i]
        rows[i][j] = fv.numerator
    return rows


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination in place; returns (echelon rows, pivot columns)."""
    nrows = len(rows)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        top = rows[r]
        a = top[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            b = row[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(a * row[j] - b * top[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                row[j] = q
            row[c] = 0
        # rows above the pivot row keep their scale; only eliminated rows are rescaled
        prev = a
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _gauss_mod(m: Matrix) -> tuple[list[list[Mod]], list[int]]:
    rows = m.dense()
    nrows = len(rows)
    r = 0
    pivots = []
    for c in range(m.cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    if not m.entries:
        return 0
    if m.field.characteristic:
        return len(_gauss_mod(m)[1])
    return len(_bareiss(_integer_rows(m), m.cols)[1])


def rref(m: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if m.field.characteristic:
        rows, pivots = _gauss_mod(m)
    else:
        ech, pivots = _bareiss(_integer_rows(m), m.cols)
        rows = [[Fraction(x, row[c]) for x in row] for row, c in zip(ech, pivots)]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return rows, pivots


def kernel_basis(m: Matrix) -> list[list]:
    """Null space basis, one vector per non-pivot column (ascending)."""
    fld = m.field
    if not m.entries:
        rows, pivots = [], []
    else:
        rows, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [fld.zero] * m.cols
        v[free] = fld.one
        for row, c in zip(rows, pivots):
            if row[free]:
                v[c] = -row[free]
        basis.append(v)
    return basis


def solve_membership(m: Matrix, v) -> list | None:
    """Exact x with m x = v, or None when v is not in the column span."""
    if len(v) != m.rows:
        raise ValueError(f"vector length {len(v)} != {m.rows} rows")
    fld = m.field
    aug = m.hstack(Matrix.from_columns([[fld(x) for x in v]], m.rows, fld))
    if not aug.entries:
        return [fld.zero] * m.cols
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [fld.zero] * m.cols
    for row, c in zip(rows, pivots):
        x[c] = row[m.cols]
    return x
