"""Matrix polynomials in t^{-1} and the defining equations of the slice.

For ``X = I_n + sum_{s=1}^k X^(s) t^{-s}`` with generic entries
``x[i][j][s]``, the coefficients of ``det X`` in positive powers of
``t^{-1}`` generate the ideal of the Schubert slice of ``kn varpi_1`` on the
big cell.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidSize, SizeBudgetExceeded
from .polynomial import Polynomial, VarTable

MAX_DET_SIZE = 6


class TPoly:
    """Polynomial in ``t^{-1}``: ``coeffs[r]`` multiplies ``t^{-r}``."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: VarTable, coeffs):
        self.table = table
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            coeffs = [Polynomial.zero(table)]
        self.coeffs = coeffs

    @classmethod
    def constant(cls, table, c) -> "TPoly":
        return cls(table, [Polynomial.constant(table, c)])

    @property
    def degree(self) -> int:
        """Degree in ``t^{-1}``; -1 for zero."""
        if len(self.coeffs) == 1 and self.coeffs[0].is_zero():
            return -1
        return len(self.coeffs) - 1

    def coeff(self, r: int) -> Polynomial:
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return Polynomial.zero(self.table)

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __add__(self, other: "TPoly") -> "TPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self.table, [self.coeff(r) + other.coeff(r) for r in range(size)])

    def __sub__(self, other: "TPoly") -> "TPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self.table, [self.coeff(r) - other.coeff(r) for r in range(size)])

    def __neg__(self):
        return TPoly(self.table, [-c for c in self.coeffs])

    def mul(self, other: "TPoly", truncate: int | None = None) -> "TPoly":
        """Product; coefficients above ``t^{-truncate}`` are dropped when given."""
        top = len(self.coeffs) + len(other.coeffs) - 2
        if truncate is not None:
            top = min(top, truncate)
        out = [Polynomial.zero(self.table) for _ in range(top + 1)]
        for a, ca in enumerate(self.coeffs):
            if ca.is_zero() or a > top:
                continue
            for b, cb in enumerate(other.coeffs):
                if a + b > top:
                    break
                if not cb.is_zero():
                    out[a + b] = out[a + b] + ca * cb
        return TPoly(self.table, out)

    __mul__ = mul


class MatrixT:
    """Square matrix of :class:`TPoly` entries over one variable table."""

    def __init__(self, entries, table: VarTable, bound: int):
        self.entries = [list(row) for row in entries]
        self.n = len(self.entries)
        self.table = table
        self.bound = bound

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows, cols) -> "MatrixT":
        return MatrixT([[self.entries[i][j] for j in cols] for i in rows], self.table, self.bound)


def x_name(i: int, j: int, s: int, letter: str = "x") -> str:
    return f"{letter}[{i}][{j}][{s}]"


def slice_vartable(n: int, k: int, letter: str = "x") -> VarTable:
    """Variables ordered row-major, then by ``s``."""
    return VarTable(x_name(i, j, s, letter) for i in range(1, n + 1) for j in range(1, n + 1) for s in range(1, k + 1))


def build_generic_X(n: int, k: int, letter: str = "x", table: VarTable | None = None) -> MatrixT:
    if n < 2 or k < 0:
        raise InvalidSize(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    table = table if table is not None else slice_vartable(n, k, letter)
    entries = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            coeffs = [Polynomial.constant(table, int(i == j))]
            coeffs += [Polynomial.var(table, x_name(i, j, s, letter)) for s in range(1, k + 1)]
            row.append(TPoly(table, coeffs))
        entries.append(row)
    return MatrixT(entries, table, k)


def det_t(M: MatrixT, truncate: int | None = None) -> TPoly:
    """Determinant by row expansion, memoised on the set of remaining columns."""
    n = M.n
    if n > MAX_DET_SIZE:
        raise SizeBudgetExceeded(f"determinant of size {n} exceeds desk budget {MAX_DET_SIZE}")
    if n == 0:
        return TPoly.constant(M.table, 1)
    memo: dict = {}

    def minor(row: int, cols: tuple) -> TPoly:
        # rows row..n-1 against the columns in ``cols``
        if row == n - 1:
            return M.entries[row][cols[0]]
        key = cols
        if key in memo:
            return memo[key]
        total = None
        for pos, c in enumerate(cols):
            entry = M.entries[row][c]
            if entry.degree < 0:
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry.mul(rest, truncate)
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = TPoly(M.table, [Polynomial.zero(M.table)])
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def slice_generators(n: int, k: int) -> list:
    """``det^(1), ..., det^(kn)``: the ``t^{-r}`` coefficients of ``det X``."""
    if n < 2 or k < 1:
        raise InvalidSize(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    d = det_t(build_generic_X(n, k))
    return [d.coeff(r) for r in range(1, k * n + 1)]


def minor_degree_check(n: int, k: int, ell: int) -> bool:
    """Every ell x ell minor of the generic X has t^{-1}-degree <= k*ell."""
    if not 1 <= ell <= n:
        raise InvalidSize(f"minor size {ell} outside 1..{n}")
    X = build_generic_X(n, k)
    for rows in combinations(range(n), ell):
        for cols in combinations(range(n), ell):
            if det_t(X.submatrix(rows, cols)).degree > k * ell:
                return False
    return True


def t_weights(table: VarTable) -> list:
    """Grading weight ``s`` of each variable ``x[i][j][s]``."""
    return [int(name.rsplit("[", 1)[1].rstrip("]")) for name in table.names]
