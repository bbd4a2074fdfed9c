"""
Dense matrices over the exact scalar kinds of the package and their determinants.

One scalar kind per matrix: integers/rationals, cyclotomic numbers, Laurent
polynomials or rational functions.  Determinants use fraction-free Bareiss
elimination over the integral domains (Z, K[t, t^-1]) and division-based
elimination over fields.
"""
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from .cyclotomic import CyclotomicNumber
from .laurent import LaurentPoly, LaurentRational


def _is_zero(x) -> bool:
    return not x


def _to_field(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, LaurentPoly):
        return LaurentRational.from_poly(x)
    return x


def _size(x) -> int:
    if isinstance(x, LaurentPoly):
        return len(x.coeffs)
    if isinstance(x, int):
        return x.bit_length()
    return 0


class Matrix:
    """An immutable rectangular matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int = None):
        self.entries: Tuple[Tuple, ...] = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("Matrix rows must have equal length")

    # -- constructors ------------------------------------------------------
    @classmethod
    def identity(cls, n: int, one=1) -> "Matrix":
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=0) -> "Matrix":
        return cls([[zero] * cols for _ in range(rows)], cols)

    @classmethod
    def diagonal(cls, values: Sequence, zero=0) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assembles a block matrix; every block row must have equal heights and block columns equal widths."""
        out: List[List] = []
        for block_row in blocks:
            height = block_row[0].rows
            for b in block_row:
                if b.rows != height:
                    raise ValueError("Block heights do not match")
            for i in range(height):
                row: List = []
                for b in block_row:
                    row.extend(b.entries[i])
                out.append(row)
        cols = sum(b.cols for b in blocks[0]) if blocks else 0
        return cls(out, cols)

    # -- access ------------------------------------------------------------
    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple:
        return tuple(row[j] for row in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def select(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def delete(self, rows: Sequence[int] = (), cols: Sequence[int] = ()) -> "Matrix":
        drop_r, drop_c = set(rows), set(cols)
        keep_r = [i for i in range(self.rows) if i not in drop_r]
        keep_c = [j for j in range(self.cols) if j not in drop_c]
        return self.select(keep_r, keep_c)

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.entries], self.cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix([a + b for a, b in zip(self.entries, other.entries)], self.cols + other.cols)

    def trace(self):
        total = 0
        for i in range(min(self.rows, self.cols)):
            total = total + self.entries[i][i]
        return total

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("Matrix dimensions do not match")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("Matrix dimensions do not match")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            other_cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            out = []
            for row in self.entries:
                new_row = []
                for col in other_cols:
                    acc = 0
                    for a, b in zip(row, col):
                        if a and b:
                            acc = acc + a * b
                    new_row.append(acc)
                out.append(new_row)
            return Matrix(out, other.cols)
        return self.map(lambda x: x * other)

    def __rmul__(self, scalar):
        return self.map(lambda x: scalar * x)

    def __pow__(self, exponent: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("Only square matrices have powers")
        base = self if exponent >= 0 else self.inverse()
        result = Matrix.identity(self.rows)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Matrix":
        """
        Gauss-Jordan inverse over the fraction field of the entries.

        Raises:
            ZeroDivisionError: If the matrix is singular.
        """
        if not self.is_square():
            raise ValueError("Only square matrices are invertible")
        n = self.rows
        work = [[_to_field(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
                for i, row in enumerate(self.entries)]
        for k in range(n):
            pivot = next((i for i in range(k, n) if not _is_zero(work[i][k])), None)
            if pivot is None:
                raise ZeroDivisionError("Matrix is singular")
            work[k], work[pivot] = work[pivot], work[k]
            inv = 1 / work[k][k]
            work[k] = [x * inv for x in work[k]]
            for i in range(n):
                if i != k and not _is_zero(work[i][k]):
                    factor = work[i][k]
                    work[i] = [a - factor * b for a, b in zip(work[i], work[k])]
        return Matrix([row[n:] for row in work], n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in row] for row in self.entries]})"

    def determinant(self):
        return determinant(self)

    def rank(self) -> int:
        return len(column_pivots(self))


def _bareiss(rows: List[List], divide: Callable, one):
    n = len(rows)
    sign = 1
    previous = one
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if not _is_zero(rows[i][k])]
        if not candidates:
            return one - one
        pivot = min(candidates, key=lambda i: (_size(rows[i][k]), i))
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        rk = rows[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            for j in range(k + 1, n):
                value = ri[j] * akk if not _is_zero(ri[j]) else ri[j]
                if not _is_zero(aik) and not _is_zero(rk[j]):
                    value = value - aik * rk[j]
                if k and not _is_zero(value):
                    value = divide(value, previous)
                ri[j] = value
            ri[k] = one - one
        previous = akk
    result = rows[n - 1][n - 1]
    return result if sign > 0 else -result


def _gauss_determinant(rows: List[List]):
    n = len(rows)
    det = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if not _is_zero(rows[i][k])), None)
        if pivot is None:
            return rows[0][0] - rows[0][0]
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        akk = rows[k][k]
        det = akk * det
        inv = 1 / akk
        for i in range(k + 1, n):
            if _is_zero(rows[i][k]):
                continue
            factor = rows[i][k] * inv
            rows[i] = [a - factor * b if not _is_zero(b) else a for a, b in zip(rows[i], rows[k])]
    return det


def determinant(m: Matrix):
    """
    Exact determinant.

    Args:
        m (Matrix): Square matrix with entries of one scalar kind.

    Returns:
        The determinant in the entry ring (1 for the empty matrix).

    Raises:
        ValueError: If m is not square.
    """
    if not m.is_square():
        raise ValueError(f"Determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    flat = [x for row in m.entries for x in row]
    if any(isinstance(x, LaurentPoly) for x in flat):
        one = LaurentPoly.constant(1)
        rows = [[x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in row] for row in m.entries]
        if n == 1:
            return rows[0][0]
        return _bareiss(rows, lambda a, b: a.exact_div(b), one)
    if all(isinstance(x, int) for x in flat):
        rows = [list(row) for row in m.entries]
        if n == 1:
            return rows[0][0]
        return _bareiss(rows, lambda a, b: a // b, 1)
    rows = [[_to_field(x) for x in row] for row in m.entries]
    if any(isinstance(x, CyclotomicNumber) for x in flat):
        order = max(x.order for x in flat if isinstance(x, CyclotomicNumber))
        rows = [[x if not isinstance(x, Fraction) else CyclotomicNumber.rational(order, x) for x in row]
                for row in rows]
    return _gauss_determinant(rows)


def column_pivots(m: Matrix, reverse: bool = False) -> List[int]:
    """
    Returns the greedy set of linearly independent columns (scanning left to right, or right to left).

    Args:
        m (Matrix): Matrix over a field or an integral domain (lifted to its fraction field).
        reverse (bool): Scan columns from the right.

    Returns:
        List[int]: Pivot column indices in increasing order.
    """
    order = list(range(m.cols))
    if reverse:
        order.reverse()
    rows = [[_to_field(m.entries[i][j]) for j in order] for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(len(order)):
        if r >= len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if not _is_zero(rows[i][c])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        for i in range(r + 1, len(rows)):
            if _is_zero(rows[i][c]):
                continue
            factor = rows[i][c] * inv
            rows[i] = [a - factor * b if not _is_zero(b) else a for a, b in zip(rows[i], rows[r])]
        pivots.append(order[c])
        r += 1
    return sorted(pivots)
