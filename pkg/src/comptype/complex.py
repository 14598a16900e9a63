"""Finite simplicial complexes, pairs and vertex links.

Simplices are sorted tuples of vertex tokens (whitespace-free strings).
Every collection handed out by this module is sorted canonically, so all
downstream output is deterministic.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

Simplex = tuple  # tuple[str, ...], strictly increasing


class ComplexError(ValueError):
    """Base class for malformed complexes and pairs."""


class MalformedFacetError(ComplexError):
    pass


class SubcomplexError(ComplexError):
    def __init__(self, simplex: Simplex, message: str | None = None):
        self.simplex = simplex
        super().__init__(message or f"simplex {' '.join(simplex)} of A is not a simplex of X")


class UnknownVertexError(ComplexError):
    pass


class VertexCollisionError(ComplexError):
    pass


def vertex(token) -> str:
    tok = str(token)
    if not tok or any(ch.isspace() for ch in tok):
        raise MalformedFacetError(f"invalid vertex token {tok!r}")
    return sys.intern(tok)


def make_simplex(vertices: Iterable) -> Simplex:
    toks = [vertex(v) for v in vertices]
    if not toks:
        raise MalformedFacetError("empty facet")
    if len(set(toks)) != len(toks):
        raise MalformedFacetError(f"duplicate vertex in facet {' '.join(toks)}")
    return tuple(sorted(toks))


def simplex_key(s: Simplex):
    return (len(s), s)


def faces(s: Simplex) -> Iterable[Simplex]:
    """All nonempty faces of ``s``, ``s`` included."""
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


class Complex:
    """Immutable face-closed set of simplices.

    Build one with :func:`from_facets`; the constructor expects an already
    closed family and only checks that when ``check=True``.
    """

    __slots__ = ("_simplices", "_facets", "_by_dim", "dim", "_vertices")

    def __init__(self, simplices: Iterable[Simplex] = (), check: bool = True):
        simp = frozenset(simplices)
        if check:
            for s in simp:
                if len(s) != len(set(s)) or list(s) != sorted(s) or not s:
                    raise MalformedFacetError(f"not a sorted simplex: {s!r}")
                for f in combinations(s, len(s) - 1):
                    if f and f not in simp:
                        raise ComplexError(f"family not face-closed: missing {f!r}")
        self._simplices = simp
        self.dim = max((len(s) for s in simp), default=0) - 1
        by_dim: list[list[Simplex]] = [[] for _ in range(self.dim + 1)]
        for s in simp:
            by_dim[len(s) - 1].append(s)
        self._by_dim = tuple(tuple(sorted(level)) for level in by_dim)
        self._vertices = tuple(s[0] for s in self._by_dim[0]) if by_dim else ()
        self._facets = None

    # -- basic queries -------------------------------------------------
    @property
    def simplices(self) -> frozenset:
        return self._simplices

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def facets(self) -> tuple[Simplex, ...]:
        if self._facets is None:
            # a simplex is maximal iff none of its one-vertex extensions exists
            covered = set()
            for level in self._by_dim[1:]:
                for s in level:
                    covered.update(combinations(s, len(s) - 1))
            self._facets = tuple(sorted((s for s in self._simplices if s not in covered),
                                        key=simplex_key))
        return self._facets

    def simplices_of_dim(self, n: int) -> tuple[Simplex, ...]:
        if 0 <= n <= self.dim:
            return self._by_dim[n]
        return ()

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._by_dim)

    def is_empty(self) -> bool:
        return not self._simplices

    def is_pure(self) -> bool:
        return all(len(f) == self.dim + 1 for f in self.facets)

    def __contains__(self, s) -> bool:
        return tuple(s) in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self):
        for level in self._by_dim:
            yield from level

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        body = ", ".join("".join(f) if all(len(v) == 1 for v in f) else "-".join(f)
                         for f in self.facets[:8])
        more = ", ..." if len(self.facets) > 8 else ""
        return f"Complex(dim={self.dim}, facets=[{body}{more}])"

    def is_subcomplex_of(self, other: "Complex") -> bool:
        return self._simplices <= other._simplices

    def link(self, v: str) -> "Complex":
        """Lk(v) = {s : v not in s, s + {v} in the complex}."""
        v = vertex(v)
        if (v,) not in self._simplices:
            raise UnknownVertexError(f"vertex {v} is not in the complex")
        out = []
        for s in self._simplices:
            if v in s and len(s) > 1:
                out.append(tuple(x for x in s if x != v))
        return Complex(out, check=False)

    def star_facets(self, v: str) -> tuple[Simplex, ...]:
        return tuple(f for f in self.facets if v in f)


def closure(simplices: Iterable[Simplex]) -> Complex:
    out = set()
    for s in simplices:
        if s not in out:
            out.update(faces(s))
    return Complex(out, check=False)


def from_facets(facet_lists: Iterable[Sequence]) -> Complex:
    """Downward closure of the given vertex lists."""
    return closure(make_simplex(f) for f in facet_lists)


EMPTY_COMPLEX = Complex()


@dataclass(frozen=True)
class Pair:
    X: Complex
    A: Complex

    def __post_init__(self):
        if not self.A.is_subcomplex_of(self.X):
            bad = min((s for s in self.A.simplices if s not in self.X), key=simplex_key)
            raise SubcomplexError(bad)


def validate_pair(X: Complex, A: Complex | None = None) -> Pair:
    return Pair(X, A if A is not None else EMPTY_COMPLEX)


class Marker(enum.Enum):
    """The two non-complex values of the link's second component."""

    EMPTY = "empty"
    TIP = "tip"  # the formal join unit: A meets the star only at its centre

    def __repr__(self) -> str:
        return f"Marker.{self.name}"


NMarker = Union[Marker, Complex]


@dataclass(frozen=True)
class LinkPair:
    L: Complex
    N: NMarker

    def __post_init__(self):
        if isinstance(self.N, Complex):
            if self.N.is_empty():
                raise ComplexError("Sub(N) requires N nonempty; use Marker.EMPTY")
            if not self.N.is_subcomplex_of(self.L):
                raise ComplexError("N is not a subcomplex of L")

    @property
    def N_complex(self) -> Complex:
        """N as a plain complex (TIP and EMPTY both contribute no simplex of L)."""
        return self.N if isinstance(self.N, Complex) else EMPTY_COMPLEX

    def describe_N(self) -> str:
        if self.N is Marker.EMPTY:
            return "empty"
        if self.N is Marker.TIP:
            return "tip"
        return "sub"


def link_pair(pair: Pair, v) -> LinkPair:
    v = vertex(v)
    L = pair.X.link(v)
    if (v,) not in pair.A:
        return LinkPair(L, Marker.EMPTY)
    NA = pair.A.link(v)
    if NA.is_empty():
        return LinkPair(L, Marker.TIP)
    return LinkPair(L, NA)


def fresh_vertex(taken: Iterable[str], base: str) -> str:
    taken = set(taken)
    if base not in taken:
        return vertex(base)
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return vertex(f"{base}{i}")


def cone(X: Complex, apex) -> Complex:
    apex = vertex(apex)
    if (apex,) in X:
        raise VertexCollisionError(f"apex {apex} is already a vertex")
    out = set(X.simplices)
    out.add((apex,))
    for s in X.simplices:
        out.add(tuple(sorted(s + (apex,))))
    return Complex(out, check=False)


def join(X: Complex, Y: Complex) -> Complex:
    """Simplicial join; with this convention join(empty, Y) == Y."""
    clash = set(X.vertices) & set(Y.vertices)
    if clash:
        raise VertexCollisionError(f"join of complexes sharing vertices {sorted(clash)}")
    xs = [()] + list(X.simplices)
    ys = [()] + list(Y.simplices)
    out = {tuple(sorted(s + t)) for s in xs for t in ys if s or t}
    return Complex(out, check=False)


def suspension(X: Complex) -> Complex:
    north = fresh_vertex(X.vertices, "n")
    south = fresh_vertex(list(X.vertices) + [north], "s")
    return join(X, Complex([(north,), (south,)], check=False))


def odd_subcomplex(K: Complex) -> Complex:
    """Closure of the n-simplices lying in an odd number of maximal (n+1)-simplices."""
    counts: dict[Simplex, int] = {}
    for f in K.facets:
        if len(f) < 2:
            continue
        for sub in combinations(f, len(f) - 1):
            counts[sub] = counts.get(sub, 0) + 1
    return closure(s for s, c in counts.items() if c % 2 == 1)


def cone_pair(pair: Pair, apex) -> Pair:
    """The cone pair C(X, A) = (CX, X u CA)."""
    CX = cone(pair.X, apex)
    if pair.A.is_empty():
        base = pair.X
    else:
        base = Complex(set(pair.X.simplices) | set(cone(pair.A, apex).simplices), check=False)
    return Pair(CX, base)
