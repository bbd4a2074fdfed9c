"""
Smith normal form of integer matrices by the extended Euclidean algorithm,
with the unimodular transforms kept so that left * m * right = form.
"""
from typing import List, NamedTuple, Sequence, Union

from .matrix import Matrix


class SmithForm(NamedTuple):
    diagonal: List[int]
    left: Matrix
    right: Matrix
    form: Matrix


class _SNF:
    """Reduces an integer matrix step by step, recording row and column operations."""

    def __init__(self, rows: Sequence[Sequence[int]], cols: int):
        self.a = [list(map(int, row)) for row in rows]
        self.r = len(self.a)
        self.c = cols
        self.left = [[int(i == j) for j in range(self.r)] for i in range(self.r)]
        self.right = [[int(i == j) for j in range(self.c)] for i in range(self.c)]

    def _swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.left[i], self.left[j] = self.left[j], self.left[i]

    def _swap_cols(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.right:
            row[i], row[j] = row[j], row[i]

    def _add_row(self, target: int, source: int, k: int) -> None:
        self.a[target] = [x + k * y for x, y in zip(self.a[target], self.a[source])]
        self.left[target] = [x + k * y for x, y in zip(self.left[target], self.left[source])]

    def _add_col(self, target: int, source: int, k: int) -> None:
        for row in self.a:
            row[target] += k * row[source]
        for row in self.right:
            row[target] += k * row[source]

    def _pivot_to(self, s: int) -> bool:
        best = None
        for i in range(s, self.r):
            for j in range(s, self.c):
                v = self.a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            return False
        _, i, j = best
        self._swap_rows(s, i)
        self._swap_cols(s, j)
        return True

    def run(self) -> None:
        for s in range(min(self.r, self.c)):
            if not self._pivot_to(s):
                break
            while True:
                p = self.a[s][s]
                for i in range(s + 1, self.r):
                    if self.a[i][s]:
                        self._add_row(i, s, -(self.a[i][s] // p))
                for j in range(s + 1, self.c):
                    if self.a[s][j]:
                        self._add_col(j, s, -(self.a[s][j] // p))
                rest = [(abs(self.a[i][s]), 'row', i) for i in range(s + 1, self.r) if self.a[i][s]]
                rest += [(abs(self.a[s][j]), 'col', j) for j in range(s + 1, self.c) if self.a[s][j]]
                if rest:
                    _, kind, k = min(rest)
                    if kind == 'row':
                        self._swap_rows(s, k)
                    else:
                        self._swap_cols(s, k)
                    continue
                bad = next(((i, j) for i in range(s + 1, self.r) for j in range(s + 1, self.c)
                            if self.a[i][j] % p), None)
                if bad is not None:
                    self._add_row(s, bad[0], 1)
                    continue
                break
            if self.a[s][s] < 0:
                self.a[s] = [-x for x in self.a[s]]
                self.left[s] = [-x for x in self.left[s]]


def smith_normal_form(m: Union[Matrix, Sequence[Sequence[int]]], cols: int = None) -> SmithForm:
    """
    Computes the Smith normal form of an integer matrix.

    Args:
        m: Integer matrix (a Matrix or nested sequences).
        cols (int, optional): Column count, needed only for matrices without rows.

    Returns:
        SmithForm: diagonal d_1 | d_2 | ... (all >= 0), unimodular left/right
        transforms and the diagonal form with left * m * right = form.
    """
    if isinstance(m, Matrix):
        rows, cols = [list(r) for r in m.entries], m.cols
    else:
        rows = [list(r) for r in m]
        if cols is None:
            cols = len(rows[0]) if rows else 0
    snf = _SNF(rows, cols)
    snf.run()
    diagonal = [snf.a[i][i] for i in range(min(snf.r, snf.c))]
    return SmithForm(diagonal, Matrix(snf.left, snf.r), Matrix(snf.right, snf.c), Matrix(snf.a, snf.c))


def abelian_invariants(relations: Sequence[Sequence[int]], generators: int) -> List[int]:
    """
    Invariant factors of Z^generators / <relations>, omitting trivial factors; free summands appear as 0.

    Args:
        relations: Exponent-sum vectors of the relators, one row per relator.
        generators (int): Number of generators.

    Returns:
        List[int]: e.g. [6] for Z/6, [0] for Z, [] for the trivial group.
    """
    snf = smith_normal_form(relations, generators)
    diagonal = snf.diagonal + [0] * (generators - len(snf.diagonal))
    return [d for d in diagonal if d != 1]


def integer_kernel(relations: Sequence[Sequence[int]], generators: int) -> List[List[int]]:
    """Basis of the integer vectors v with R v = 0, read off the right transform."""
    snf = smith_normal_form(relations, generators)
    diagonal = snf.diagonal + [0] * (generators - len(snf.diagonal))
    return [list(snf.right.column(j)) for j in range(generators) if diagonal[j] == 0]
