"""Relative simplicial chains, homology groups and relative-cycle tests.

A maximal simplex ``sigma`` of ``X`` (not in ``A``) *belongs to a relative
cycle* when some relative n-chain with boundary in ``A`` gives it a
nonzero coefficient.  Three coefficient systems are supported: the
integers, Z/k, and the circle group R/Z.  The circle version is decided
exactly through a real lift: a circle-valued chain is a real vector x with
D x integral, and sigma is detected iff x_sigma can be made non-integral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Union

from .complex import ComplexError, Pair, Simplex
from .linalg import (IntMatrix, invariant_factors, kernel_mod_k, rational_kernel_basis,
                     smith_normal_form, solve_row_combination)


class PreconditionError(ComplexError):
    pass


@dataclass(frozen=True)
class RelBoundaryMatrix:
    n: int
    matrix: IntMatrix

    @property
    def columns(self) -> tuple[Simplex, ...]:
        return self.matrix.col_labels

    @property
    def rows(self) -> tuple[Simplex, ...]:
        return self.matrix.row_labels


def relative_chains(pair: Pair, n: int) -> tuple[Simplex, ...]:
    return tuple(s for s in pair.X.simplices_of_dim(n) if s not in pair.A)


def relative_boundary_matrix(pair: Pair, n: int) -> RelBoundaryMatrix:
    """Boundary C_n(X, A) -> C_{n-1}(X, A) in the sorted-vertex orientation."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    cols = relative_chains(pair, n)
    rows = relative_chains(pair, n - 1) if n > 0 else ()
    index = {s: i for i, s in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        if n == 0:
            break
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            r = index.get(face)
            if r is not None:
                entries[r][j] = -1 if i % 2 else 1
    return RelBoundaryMatrix(n, IntMatrix(entries, ncols=len(cols), row_labels=rows,
                                          col_labels=cols))


# -- groups ----------------------------------------------------------------

def canonical_torsion(orders) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of a product of cyclic groups."""
    prime_powers: dict[int, list[int]] = {}
    for m in orders:
        m = int(m)
        if m < 0:
            m = -m
        if m <= 1:
            continue
        p = 2
        while p * p <= m:
            if m % p == 0:
                q = 1
                while m % p == 0:
                    m //= p
                    q *= p
                prime_powers.setdefault(p, []).append(q)
            p += 1
        if m > 1:
            prime_powers.setdefault(m, []).append(m)
    if not prime_powers:
        return ()
    width = max(len(v) for v in prime_powers.values())
    factors = [1] * width
    for powers in prime_powers.values():
        powers = sorted(powers)
        off = width - len(powers)
        for i, q in enumerate(powers):
            factors[off + i] *= q
    return tuple(factors)


@dataclass(frozen=True)
class GroupDescriptor:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if canonical_torsion(self.torsion) != tuple(self.torsion):
            raise ValueError(f"torsion {self.torsion} is not an invariant-factor chain")

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


class Coeff(enum.Enum):
    Z = "Z"
    CIRCLE = "T"


@dataclass(frozen=True)
class Zk:
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("Z/k needs k >= 2")


CoefficientSpec = Union[Coeff, Zk]


def _integral_homology(pair: Pair, n: int):
    Dn = relative_boundary_matrix(pair, n).matrix
    Dn1 = relative_boundary_matrix(pair, n + 1).matrix
    rank_n = len(invariant_factors(Dn))
    divs = invariant_factors(Dn1)
    free = Dn.ncols - rank_n - len(divs)
    return free, tuple(d for d in divs if d > 1)


def relative_homology(pair: Pair, n: int, coeff: CoefficientSpec = Coeff.Z) -> GroupDescriptor:
    """H_n(X, A; Z) or H_n(X, A; Z/k).

    Over Z/k the result is a finite group, reported through its invariant
    factors with free_rank 0 (universal coefficients: H_n tensor Z/k plus
    Tor(H_{n-1}, Z/k)).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    free, tors = _integral_homology(pair, n)
    if coeff is Coeff.Z:
        return GroupDescriptor(free, canonical_torsion(tors))
    if not isinstance(coeff, Zk):
        raise ValueError("relative_homology supports Z and Z/k coefficients")
    k = coeff.k
    orders = [k] * free + [gcd(d, k) for d in tors]
    if n > 0:
        _, tors_below = _integral_homology(pair, n - 1)
        orders += [gcd(d, k) for d in tors_below]
    return GroupDescriptor(0, canonical_torsion(orders))


# -- relative-cycle membership ----------------------------------------------

def _check_sigma(pair: Pair, sigma, facets=None) -> Simplex:
    sigma = tuple(sorted(sigma))
    if sigma not in pair.X.simplices:
        raise PreconditionError(f"{' '.join(sigma)} is not a simplex of X")
    if len(sigma) < 2:
        raise PreconditionError("cycle tests need a simplex of dimension >= 1")
    if sigma in pair.A:
        raise PreconditionError(f"{' '.join(sigma)} lies in A")
    if sigma not in (facets if facets is not None else set(pair.X.facets)):
        raise PreconditionError(f"{' '.join(sigma)} is not a facet of X")
    return sigma


def _setup(pair: Pair, sigma):
    sigma = _check_sigma(pair, sigma)
    D = relative_boundary_matrix(pair, len(sigma) - 1)
    return D.matrix, D.columns.index(sigma)


def cycle_membership_Z(pair: Pair, sigma) -> bool:
    D, j = _setup(pair, sigma)
    return any(x[j] != 0 for x in rational_kernel_basis(D))


def cycle_membership_mod(pair: Pair, sigma, k: int) -> bool:
    if k < 2:
        raise ValueError("modulus must be at least 2")
    D, j = _setup(pair, sigma)
    return kernel_mod_k(D, k, j) is not None


@dataclass(frozen=True)
class CircleWitness:
    """Certificate for the circle-coefficient test.

    route "kernel": ``vector`` is an integral relative cycle with a nonzero
    sigma-coefficient.  route "lattice": ``u`` solves u^T D = e_sigma^T and
    ``g`` is a lattice vector with u.g non-integral (``value``).  route
    "none": no circle cycle reaches sigma; ``u`` is still reported.
    ``modulus`` is a k for which the Z/k test certifiably succeeds.
    """

    route: str
    modulus: Optional[int] = None
    vector: Optional[tuple[int, ...]] = None
    u: Optional[tuple[Fraction, ...]] = None
    g: Optional[tuple[int, ...]] = None
    value: Optional[Fraction] = None


def _smallest_non_divisor(q: int) -> int:
    k = 2
    while q % k == 0:
        k += 1
    return k


def lattice_detects(u, basis) -> Optional[int]:
    """Index of the first basis vector g with u.g not an integer."""
    for idx, g in enumerate(basis):
        if sum((a * b for a, b in zip(u, g)), Fraction(0)).denominator != 1:
            return idx
    return None


class CircleCycleTester:
    """Runs the circle-coefficient test for many facets of one pair.

    The boundary matrix, its rational kernel and its Smith form are built
    once per degree and shared by all facets of that degree.
    """

    def __init__(self, pair: Pair):
        self.pair = pair
        self._facets = set(pair.X.facets)
        self._cache: dict[int, tuple] = {}

    def _degree(self, n: int):
        got = self._cache.get(n)
        if got is None:
            D = relative_boundary_matrix(self.pair, n)
            got = (D.matrix, {s: i for i, s in enumerate(D.columns)},
                   rational_kernel_basis(D.matrix), [None])
            self._cache[n] = got
        return got

    def _snf(self, n: int):
        D, _, _, slot = self._degree(n)
        if slot[0] is None:
            slot[0] = smith_normal_form(D)
        return slot[0]

    def test(self, sigma) -> tuple[bool, CircleWitness]:
        sigma = _check_sigma(self.pair, sigma, self._facets)
        n = len(sigma) - 1
        D, index, kernel, _ = self._degree(n)
        j = index[sigma]
        # Step 1: a rational (hence integral) relative cycle through sigma
        for x in kernel:
            if x[j] != 0:
                den = lcm(*(c.denominator for c in x))
                z = [int(c * den) for c in x]
                g = gcd(*z)
                z = tuple(c // g for c in z)
                return True, CircleWitness("kernel", modulus=_smallest_non_divisor(abs(z[j])),
                                           vector=z)
        # Step 2: every lift has x_sigma = u . (D x), with D x ranging over
        # the integer points of the column span
        u = solve_row_combination(D, j)
        assert u is not None, "sigma lies in the row space when no kernel vector reaches it"
        snf = self._snf(n)
        basis = [tuple(snf.U_inv.column(i)) for i in range(snf.rank)]
        idx = lattice_detects(u, basis)
        if idx is None:
            return False, CircleWitness("none", u=u)
        g = basis[idx]
        value = sum((a * b for a, b in zip(u, g)), Fraction(0))
        k = _lattice_modulus(D, j, value.denominator, snf.divisors[idx])
        return True, CircleWitness("lattice", modulus=k, u=u, g=g, value=value)


def cycle_membership_T(pair: Pair, sigma) -> tuple[bool, CircleWitness]:
    return CircleCycleTester(pair).test(sigma)


def _lattice_modulus(D: IntMatrix, j: int, q: int, d: int) -> int:
    # q (the denominator) divides d, and d always works: V e_idx is an
    # integer chain with boundary d*g and sigma-coefficient d*(u.g).  The
    # denominator itself can fail when the lattice factor has a higher
    # prime-power order, so step up through the divisors of d.
    for k in range(q, d + 1, q):
        if d % k == 0 and kernel_mod_k(D, k, j) is not None:
            return k
    raise AssertionError("Smith divisor failed as a Z/k certificate")  # pragma: no cover
