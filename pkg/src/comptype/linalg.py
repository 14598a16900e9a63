"""Exact integer and rational linear algebra.

Everything is dense and uses Python integers and :class:`fractions.Fraction`,
so there is no overflow at any size.  Matrices are small (link-level
boundary matrices), which is what the dense representation is sized for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Hashable, Optional, Sequence

RatVector = tuple  # tuple[Fraction, ...]


class IntMatrix:
    """Dense integer matrix with optional row/column labels."""

    __slots__ = ("rows", "ncols", "row_labels", "col_labels")

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int | None = None,
                 row_labels: Sequence[Hashable] | None = None,
                 col_labels: Sequence[Hashable] | None = None):
        self.rows = [[int(x) for x in r] for r in rows]
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(self.rows[0])
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        for labels, n in ((row_labels, len(self.rows)), (col_labels, ncols)):
            if labels is not None:
                if len(labels) != n:
                    raise ValueError("label count does not match dimension")
                if len(set(labels)) != n:
                    raise ValueError("labels must be unique")
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(col) for col in zip(*self.rows)] if self.rows else
                         [[] for _ in range(self.ncols)], ncols=len(self.rows),
                         row_labels=self.col_labels, col_labels=self.row_labels)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
                         ncols=other.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        if isinstance(other, IntMatrix):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows!r}, ncols={self.ncols})"


def as_matrix(M) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix(M)


@dataclass(frozen=True)
class SNFResult:
    """S = U @ M @ V with U, V unimodular and S diagonal.

    ``U_inv`` is carried along because the saturation lattice is read off
    its columns.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    rank: int
    divisors: tuple[int, ...]
    U_inv: IntMatrix = field(repr=False)


def _min_pivot(A, t, r, c):
    best = None
    for i in range(t, r):
        row = A[i]
        for j in range(t, c):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else (best[1], best[2])


def _snf(rows: list[list[int]], r: int, c: int, track: bool):
    A = [list(row) for row in rows]
    U = [[int(i == j) for j in range(r)] for i in range(r)] if track else None
    Ui = [[int(i == j) for j in range(r)] for i in range(r)] if track else None
    V = [[int(i == j) for j in range(c)] for i in range(c)] if track else None

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if track:
            U[i], U[k] = U[k], U[i]
            for row in Ui:
                row[i], row[k] = row[k], row[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        if track:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def row_axpy(i, t, q):
        # row_i -= q * row_t
        Ai, At = A[i], A[t]
        for j in range(c):
            if At[j]:
                Ai[j] -= q * At[j]
        if track:
            Ui_, Ut = U[i], U[t]
            for j in range(r):
                if Ut[j]:
                    Ui_[j] -= q * Ut[j]
            for row in Ui:
                if row[i]:
                    row[t] += q * row[i]

    def col_axpy(j, t, q):
        # col_j -= q * col_t
        for row in A:
            if row[t]:
                row[j] -= q * row[t]
        if track:
            for row in V:
                if row[t]:
                    row[j] -= q * row[t]

    t = 0
    while t < min(r, c):
        pos = _min_pivot(A, t, r, c)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, r):
                if A[i][t]:
                    row_axpy(i, t, A[i][t] // p)
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, c):
                if A[t][j]:
                    col_axpy(j, t, A[t][j] // p)
                    dirty = dirty or A[t][j] != 0
            if dirty:
                # a nonzero remainder is smaller than the pivot; move it in
                best = (abs(p), t, t)
                for i in range(t + 1, r):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, c):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, r):
                row = A[i]
                for j in range(t + 1, c):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_axpy(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if track:
                U[t] = [-x for x in U[t]]
                for row in Ui:
                    row[t] = -row[t]
        t += 1
    return A, U, V, Ui, t


def smith_normal_form(M) -> SNFResult:
    M = as_matrix(M)
    r, c = M.shape
    A, U, V, Ui, rank = _snf(M.rows, r, c, track=True)
    return SNFResult(U=IntMatrix(U, ncols=r), S=IntMatrix(A, ncols=c), V=IntMatrix(V, ncols=c),
                     rank=rank, divisors=tuple(A[i][i] for i in range(rank)),
                     U_inv=IntMatrix(Ui, ncols=r))


def invariant_factors(M) -> tuple[int, ...]:
    """Nonzero Smith divisors of ``M`` without building the transforms."""
    M = as_matrix(M)
    r, c = M.shape
    A, _, _, _, rank = _snf(M.rows, r, c, track=False)
    return tuple(A[i][i] for i in range(rank))


def saturation_basis(M) -> list[tuple[int, ...]]:
    """Basis of the integer points in the real column span of ``M``."""
    M = as_matrix(M)
    res = smith_normal_form(M)
    return [tuple(res.U_inv.column(j)) for j in range(res.rank)]


# -- rational elimination ------------------------------------------------

def _rref(rows: list[list[Fraction]], ncols: int):
    A = [list(r) for r in rows]
    pivots = []
    i = 0
    for j in range(ncols):
        k = next((k for k in range(i, len(A)) if A[k][j] != 0), None)
        if k is None:
            continue
        A[i], A[k] = A[k], A[i]
        p = A[i][j]
        if p != 1:
            A[i] = [x / p for x in A[i]]
        for k in range(len(A)):
            if k != i and A[k][j] != 0:
                f = A[k][j]
                A[k] = [a - f * b for a, b in zip(A[k], A[i])]
        pivots.append(j)
        i += 1
        if i == len(A):
            break
    return A[:i], pivots


def rational_rank(M) -> int:
    M = as_matrix(M)
    return len(_rref([[Fraction(x) for x in r] for r in M.rows], M.ncols)[1])


def rational_kernel_basis(M) -> list[RatVector]:
    """Basis of {x : Mx = 0} over Q."""
    M = as_matrix(M)
    n = M.ncols
    R, pivots = _rref([[Fraction(x) for x in r] for r in M.rows], n)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for row, pj in zip(R, pivots):
            x[pj] = -row[free]
        basis.append(tuple(x))
    return basis


def solve_row_combination(M, col: int) -> Optional[RatVector]:
    """Rational u with u^T M = e_col^T, or None if e_col is not in the row space."""
    M = as_matrix(M)
    r, n = M.shape
    if not 0 <= col < n:
        raise IndexError("column selector out of range")
    # augmented system M^T u = e_col
    aug = [[Fraction(M.rows[i][j]) for i in range(r)] + [Fraction(int(j == col))]
           for j in range(n)]
    R, pivots = _rref(aug, r + 1)
    if r in pivots:
        return None
    u = [Fraction(0)] * r
    for row, pj in zip(R, pivots):
        u[pj] = row[r]
    return tuple(u)


# -- modular kernels -----------------------------------------------------

def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def kernel_basis_mod_p(M, p: int) -> list[tuple[int, ...]]:
    """Nullspace basis of M over GF(p), p prime."""
    M = as_matrix(M)
    n = M.ncols
    A = [[x % p for x in row] for row in M.rows]
    pivots = []
    i = 0
    for j in range(n):
        k = next((k for k in range(i, len(A)) if A[k][j]), None)
        if k is None:
            continue
        A[i], A[k] = A[k], A[i]
        inv = pow(A[i][j], -1, p)
        A[i] = [(x * inv) % p for x in A[i]]
        for k in range(len(A)):
            if k != i and A[k][j]:
                f = A[k][j]
                A[k] = [(a - f * b) % p for a, b in zip(A[k], A[i])]
        pivots.append(j)
        i += 1
        if i == len(A):
            break
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [0] * n
        x[free] = 1
        for row, pj in zip(A, pivots):
            x[pj] = (-row[free]) % p
        basis.append(tuple(x))
    return basis


def rank_mod_p(M, p: int) -> int:
    M = as_matrix(M)
    return M.ncols - len(kernel_basis_mod_p(M, p))


def kernel_mod_k(M, k: int, forced_coord: int) -> Optional[tuple[int, ...]]:
    """x in (Z/k)^cols with Mx = 0 mod k and x[forced_coord] != 0, or None.

    Primes go through elimination over GF(k).  Composite moduli use the
    integer Smith form: with S = U M V the solution group of ``Mx = 0``
    is V applied to the group generated by (k / gcd(d_i, k)) e_i for the
    pivot coordinates and e_i for the rest, and a coordinate functional is
    nonzero on a group iff it is nonzero on one of its generators.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    M = as_matrix(M)
    n = M.ncols
    if not 0 <= forced_coord < n:
        raise IndexError("forced coordinate out of range")
    if is_prime(k):
        for x in kernel_basis_mod_p(M, k):
            if x[forced_coord]:
                return x
        return None
    res = smith_normal_form(M)
    V = res.V.rows
    for i in range(n):
        step = k // gcd(res.divisors[i], k) if i < res.rank else 1
        if step == k:
            continue
        if (V[forced_coord][i] * step) % k:
            return tuple((V[row][i] * step) % k for row in range(n))
    return None


def mat_vec(M: IntMatrix, x: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in M.rows]
