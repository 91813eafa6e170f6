"""Immutable dense matrices over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused so that nothing inexact can leak into the core.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed; carries a 1-based position."""

    def __init__(self, message: str, line: int, column: int = 0):
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class Mat:
    """A rows x cols matrix of Fractions.  Instances never change."""

    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        e = tuple(tuple(as_rat(x) for x in row) for row in data)
        if cols is None:
            cols = len(e[0]) if e else 0
        for row in e:
            if len(row) != cols:
                raise ValueError("ragged matrix data")
        self._init(e, len(e), cols)

    def _init(self, e, rows, cols):
        self._e = e
        self.rows = rows
        self.cols = cols
        self._hash = None

    @classmethod
    def _wrap(cls, e, rows, cols) -> Mat:
        m = cls.__new__(cls)
        m._init(e, rows, cols)
        return m

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Mat:
        cols = rows if cols is None else cols
        return cls._wrap(tuple((_ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Iterable) -> Mat:
        vals = [as_rat(v) for v in values]
        n = len(vals)
        e = tuple(tuple(vals[i] if i == j else _ZERO for j in range(n)) for i in range(n))
        return cls._wrap(e, n, n)

    @classmethod
    def column(cls, values: Iterable) -> Mat:
        vals = [as_rat(v) for v in values]
        return cls._wrap(tuple((v,) for v in vals), len(vals), 1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Mat:
        if not columns:
            return cls.zeros(rows or 0, 0)
        cols = [[as_rat(x) for x in c] for c in columns]
        n = len(cols[0])
        return cls._wrap(tuple(tuple(c[i] for c in cols) for i in range(n)), n, len(cols))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Mat:
        """The matrix unit E_ij of size n."""
        e = [[_ZERO] * n for _ in range(n)]
        e[i][j] = _ONE
        return cls._wrap(tuple(map(tuple, e)), n, n)

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    @property
    def entries(self) -> tuple:
        """Row-major entries."""
        return tuple(x for r in self._e for x in r)

    def nonzero(self):
        """Yield ``(i, j, value)`` for every nonzero entry."""
        for i, r in enumerate(self._e):
            for j, x in enumerate(r):
                if x:
                    yield i, j, x

    # algebra ------------------------------------------------------------

    @property
    def T(self) -> Mat:
        return Mat._wrap(tuple(zip(*self._e)) if self.rows else (), self.cols, self.rows)

    def _check_same(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return True

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        e = tuple(tuple(a + b if b else a for a, b in zip(r, s)) for r, s in zip(self._e, other._e))
        return Mat._wrap(e, self.rows, self.cols)

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        e = tuple(tuple(a - b if b else a for a, b in zip(r, s)) for r, s in zip(self._e, other._e))
        return Mat._wrap(e, self.rows, self.cols)

    def __neg__(self):
        return Mat._wrap(tuple(tuple(-a if a else a for a in r) for r in self._e), self.rows, self.cols)

    def scale(self, c) -> Mat:
        c = as_rat(c)
        return Mat._wrap(tuple(tuple(c * a for a in r) for r in self._e), self.rows, self.cols)

    def __mul__(self, c):
        if isinstance(c, Mat):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: Mat) -> Mat:
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n = other.cols
        sparse_rows = [[(j, x) for j, x in enumerate(r) if x] for r in other._e]
        out = []
        for r in self._e:
            acc = [_ZERO] * n
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse_rows[k]:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Mat._wrap(tuple(out), self.rows, n)

    def bracket(self, other: Mat) -> Mat:
        """The commutator ``self @ other - other @ self``."""
        return self @ other - other @ self

    def trace(self):
        return sum((self._e[i][i] for i in range(min(self.rows, self.cols))), _ZERO)

    def is_zero(self) -> bool:
        return not any(x for r in self._e for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self._e[i][j] == self._e[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._e))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(_fmt(x) for x in r) for r in self._e)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    # text format ---------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(_fmt(x) for x in r) for r in self._e)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Mat:
        """Parse ``"rows cols"`` followed by row-major ``p/q`` or integer entries."""
        lines = text.splitlines()
        tokens = []
        for lineno, line in enumerate(lines, 1):
            col = 0
            for part in line.split():
                col = line.index(part, col) + 1
                tokens.append((part, lineno, col))
                col += len(part) - 1
        if len(tokens) < 2:
            raise MatrixFormatError("expected a header 'rows cols'", 1)
        (r_tok, rl, rc), (c_tok, cl, cc) = tokens[0], tokens[1]
        try:
            rows = int(r_tok)
        except ValueError:
            raise MatrixFormatError(f"bad row count {r_tok!r}", rl, rc) from None
        try:
            cols = int(c_tok)
        except ValueError:
            raise MatrixFormatError(f"bad column count {c_tok!r}", cl, cc) from None
        if rows < 0 or cols < 0:
            raise MatrixFormatError("negative dimension in header", rl, rc)
        body = tokens[2:]
        if len(body) != rows * cols:
            last = body[-1] if body else tokens[1]
            raise MatrixFormatError(
                f"expected {rows * cols} entries, found {len(body)}", last[1], last[2])
        vals = []
        for tok, line, col in body:
            try:
                vals.append(_parse_rat(tok))
            except ValueError:
                raise MatrixFormatError(f"bad entry {tok!r}", line, col) from None
        e = tuple(tuple(vals[i * cols:(i + 1) * cols]) for i in range(rows))
        return cls._wrap(e, rows, cols)


def _parse_rat(tok: str) -> Fraction:
    num, sep, den = tok.partition("/")
    if not num.lstrip("+-").isdigit() or (sep and not den.isdigit()):
        raise ValueError(tok)
    if sep and int(den) == 0:
        raise ValueError(tok)
    return Fraction(int(num), int(den) if sep else 1)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
