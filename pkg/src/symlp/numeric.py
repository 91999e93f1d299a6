"""Exact rational scalars, vectors, and dense matrices.

`fractions.Fraction` is the scalar type everywhere (aliased `Rational`):
arbitrary-precision, always stored reduced with a positive denominator.
Decimal input is converted exactly in base 10, never through a float.

`Matrix` is a small immutable dense matrix of Fractions.  Products go
through `symlp.kernels` (compiled when available); everything else here is
plain Python since it is never on a hot path.
"""

import re
from fractions import Fraction

from symlp import kernels

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?(?:\d+|\d*\.\d+|\d+\.\d*|\d+/\d+)$")


def parse_rational(text):
    """Parse an integer, fraction ("5/2"), or finite decimal ("2.5") exactly.

    Raises ValueError on malformed input or a zero denominator.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(q):
    """Render a Fraction as "p" or "p/q" (never a float)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _make_coprime_fraction(n, d):
    # Bypass Fraction's normalisation for pairs the kernels already reduced.
    f = Fraction.__new__(Fraction)
    f._numerator = n
    f._denominator = d
    return f


try:
    if _make_coprime_fraction(3, 2) != Fraction(3, 2):
        raise AttributeError
    fraction_from_coprime = _make_coprime_fraction
except AttributeError:  # pragma: no cover - other Fraction internals
    fraction_from_coprime = Fraction


def as_vector(values):
    """Coerce a sequence of ints/Fractions/strings to a tuple of Fractions."""
    out = []
    for v in values:
        if isinstance(v, str):
            out.append(parse_rational(v))
        else:
            out.append(Fraction(v))
    return tuple(out)


def dot(u, v):
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")
    total = Fraction(0)
    for a, b in zip(u, v):
        total += a * b
    return total


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def mul_vector(self, x):
        """Matrix-vector product as a tuple of Fractions."""
        if len(x) != self.cols:
            raise ValueError(f"vector length {len(x)} != column count {self.cols}")
        return tuple(dot(self.row(i), x) for i in range(self.rows))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(format_rational(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def mat_mul(a, b):
    """Exact matrix product, dispatched to the selected kernel."""
    if a.cols != b.rows:
        raise ValueError(
            f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}"
        )
    an = [e.numerator for e in a.entries]
    ad = [e.denominator for e in a.entries]
    bn = [e.numerator for e in b.entries]
    bd = [e.denominator for e in b.entries]
    cn, cd = kernels.mat_mul_q(a.rows, a.cols, b.cols, an, ad, bn, bd)
    entries = [fraction_from_coprime(n, d) for n, d in zip(cn, cd)]
    return Matrix(a.rows, b.cols, entries)


def rank(m):
    """Exact rank via fraction-free-enough row echelon (plain Fractions)."""
    rows = m.to_rows()
    nrows, ncols = m.rows, m.cols
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [inv * e for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve_square(a_rows, rhs):
    """Solve an n x n rational system exactly; None if singular.

    Gaussian elimination over Fractions.  Deliberately independent of the
    tableau kernels so it can serve as an oracle substrate.
    """
    n = len(a_rows)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(a_rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [inv * e for e in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(aug[i][n] for i in range(n))
