"""Named test complexes and random complexes.

``generate(name, *params)`` returns a :class:`Pair`; ``A`` is empty unless
the generator says otherwise.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Sequence

from .complex import (EMPTY_COMPLEX, Complex, Pair, closure, cone_pair, fresh_vertex,
                      from_facets, make_simplex, suspension)


class GeneratorError(ValueError):
    pass


# Moebius/Csaszar 7-vertex torus
TORUS7 = [sorted({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)] + \
         [sorted({i, (i + 2) % 7, (i + 3) % 7}) for i in range(7)]

RP2_6 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
         (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]

KLEIN8 = [(1, 2, 5), (1, 2, 8), (1, 3, 4), (1, 3, 7), (1, 4, 5), (1, 6, 7), (1, 6, 8),
          (2, 3, 6), (2, 3, 8), (2, 5, 6), (3, 4, 6), (3, 7, 8), (4, 5, 8), (4, 6, 7),
          (4, 7, 8), (5, 6, 8)]

# second barycentric subdivision of a triangle with its three edges glued
# by the word a a a^-1; vertex 1 is the corner point
DUNCE_HAT = [
    (1, 2, 3), (1, 2, 8), (1, 2, 13), (1, 3, 4), (1, 4, 8), (1, 10, 11), (1, 10, 15),
    (1, 10, 17), (1, 11, 12), (1, 12, 13), (1, 15, 16), (1, 16, 17), (2, 3, 5), (2, 5, 8),
    (2, 5, 13), (3, 4, 7), (3, 5, 6), (3, 6, 7), (4, 7, 8), (5, 6, 11), (5, 8, 9),
    (5, 9, 15), (5, 10, 11), (5, 10, 15), (5, 10, 17), (5, 13, 14), (5, 14, 17),
    (6, 7, 11), (7, 8, 9), (7, 9, 15), (7, 11, 12), (7, 12, 13), (7, 13, 14), (7, 14, 17),
    (7, 15, 16), (7, 16, 17),
]


def _bing_squares():
    """Unit squares of Bing's house in the box [0,5]x[0,3]x[0,2].

    Middle floor z=1 splits two rooms.  A tube over [1,2]x[1,2] runs from the
    bottom face to the floor; one over [3,4]x[1,2] from the ceiling to the
    floor.  Each tube is tied to a side wall by a one-square fin in the
    room it crosses.  Squares are (normal axis, level, lower corner).
    """
    sq = []
    for x in range(5):
        for y in range(3):
            if (x, y) != (1, 1):
                sq.append((2, 0, x, y))
            if (x, y) != (3, 1):
                sq.append((2, 2, x, y))
            if (x, y) not in ((1, 1), (3, 1)):
                sq.append((2, 1, x, y))
    for y in range(3):
        for z in range(2):
            sq += [(0, 0, y, z), (0, 5, y, z)]
    for x in range(5):
        for z in range(2):
            sq += [(1, 0, x, z), (1, 3, x, z)]
    sq += [(0, 1, 1, 0), (0, 2, 1, 0), (1, 1, 1, 0), (1, 2, 1, 0)]
    sq += [(0, 3, 1, 1), (0, 4, 1, 1), (1, 1, 3, 1), (1, 2, 3, 1)]
    sq += [(1, 1, 0, 0), (1, 1, 4, 1)]
    return sq


def _bing_house_facets():
    out = []
    for axis, level, a, b in _bing_squares():
        others = [i for i in range(3) if i != axis]
        corners = []
        for da, db in ((0, 0), (1, 0), (1, 1), (0, 1)):
            p = [0, 0, 0]
            p[axis] = level
            p[others[0]] = a + da
            p[others[1]] = b + db
            corners.append("%d%d%d" % tuple(p))
        p0, p1, p2, p3 = corners
        out += [(p0, p1, p2), (p0, p2, p3)]
    return out


def simplex(n: int) -> Complex:
    if n < 0:
        raise GeneratorError("simplex dimension must be >= 0")
    return from_facets([range(n + 1)])


def sphere(n: int) -> Complex:
    """Boundary of the (n+1)-simplex."""
    if n < 0:
        raise GeneratorError("sphere dimension must be >= 0")
    return closure(make_simplex(f) for f in combinations(range(n + 2), n + 1))


def _int(params, i, name, lo=0):
    try:
        v = int(params[i])
    except (IndexError, ValueError):
        raise GeneratorError(f"{name} expects an integer parameter") from None
    if v < lo:
        raise GeneratorError(f"{name} parameter must be >= {lo}")
    return v


def _no_extra(params, used, name):
    if len(params) > used:
        raise GeneratorError(f"{name}: unexpected parameters {list(params[used:])}")


def _gen_simplex(p):
    n = _int(p, 0, "simplex")
    _no_extra(p, 1, "simplex")
    return Pair(simplex(n), EMPTY_COMPLEX)


def _gen_sphere(p):
    n = _int(p, 0, "sphere")
    _no_extra(p, 1, "sphere")
    return Pair(sphere(n), EMPTY_COMPLEX)


def _gen_ball_pair(p):
    n = _int(p, 0, "ball_pair", lo=1)
    _no_extra(p, 1, "ball_pair")
    return Pair(simplex(n), sphere(n - 1))


def _gen_path(p):
    k = _int(p, 0, "path", lo=1)
    X = from_facets([(i, i + 1) for i in range(k)])
    if len(p) > 1:
        if p[1] != "ends":
            raise GeneratorError("path: second parameter must be 'ends'")
        _no_extra(p, 2, "path")
        return Pair(X, from_facets([(0,), (k,)]))
    return Pair(X, EMPTY_COMPLEX)


def _gen_cycle(p):
    k = _int(p, 0, "cycle", lo=3)
    _no_extra(p, 1, "cycle")
    return Pair(from_facets([(i, (i + 1) % k) for i in range(k)]), EMPTY_COMPLEX)


def _fixed(facets):
    def gen(p):
        if p:
            raise GeneratorError("this generator takes no parameters")
        return Pair(from_facets(facets), EMPTY_COMPLEX)
    return gen


def torus_with_disk() -> Complex:
    """torus7 with a disk coned onto the essential circle 0-1-2-...-6."""
    return from_facets(TORUS7 + [("d", i, (i + 1) % 7) for i in range(7)])


def _gen_cone_of(p):
    inner = generate(*p)
    apex = fresh_vertex(inner.X.vertices, "c")
    return cone_pair(inner, apex)


def _gen_suspension_of(p):
    inner = generate(*p)
    return Pair(suspension(inner.X), EMPTY_COMPLEX)


GENERATORS: dict[str, Callable[[Sequence[str]], Pair]] = {
    "simplex": _gen_simplex,
    "sphere": _gen_sphere,
    "ball_pair": _gen_ball_pair,
    "path": _gen_path,
    "cycle": _gen_cycle,
    "torus7": _fixed(TORUS7),
    "rp2_6": _fixed(RP2_6),
    "klein8": _fixed(KLEIN8),
    "dunce_hat": _fixed(DUNCE_HAT),
    "bing_house": lambda p: _fixed(_bing_house_facets())(p),
    "torus_disk": lambda p: _fixed(torus_with_disk().facets)(p),
    "cone_of": _gen_cone_of,
    "suspension_of": _gen_suspension_of,
}


def generate(name: str, *params) -> Pair:
    """Build a named pair.  ``cone_of`` and ``suspension_of`` take another
    generator invocation as their parameters, e.g. ``generate("cone_of",
    "torus7")``.  ``cone_of`` returns the cone pair (CX, X u CA)."""
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise GeneratorError(f"unknown generator {name!r}") from None
    if name in ("cone_of", "suspension_of") and not params:
        raise GeneratorError(f"{name} needs an inner generator")
    return gen([str(x) for x in params])


# corpus used by the test-suite and the CLI oracle sweep
CORPUS: list[tuple] = [
    ("simplex", 1), ("simplex", 2), ("simplex", 3),
    ("sphere", 0), ("sphere", 1), ("sphere", 2), ("sphere", 3),
    ("ball_pair", 1), ("ball_pair", 2), ("ball_pair", 3),
    ("path", 1), ("path", 3), ("path", 3, "ends"), ("cycle", 3), ("cycle", 5),
    ("torus7",), ("rp2_6",), ("klein8",), ("dunce_hat",), ("bing_house",), ("torus_disk",),
    ("cone_of", "torus7"), ("cone_of", "ball_pair", 2), ("cone_of", "rp2_6"),
    ("suspension_of", "sphere", 1), ("suspension_of", "torus7"),
]


def verify_generator(name: str) -> None:
    """Self-checks for the hardcoded triangulations; raises AssertionError."""
    from .homology import cycle_membership_Z, relative_homology

    pair = generate(name)
    X = pair.X
    point = ["Z", "0", "0"]
    if name in ("dunce_hat", "bing_house"):
        assert X.dim == 2 and X.is_pure(), f"{name} must be a pure 2-complex"
        hom = [str(relative_homology(pair, n)) for n in range(3)]
        assert hom == point, f"{name} homology {hom} is not that of a point"
    if name == "bing_house":
        for v in X.vertices:
            L = Pair(X.link(v), EMPTY_COMPLEX)
            assert L.X.dim == 1 and L.X.is_pure()
            for e in L.X.facets:
                assert cycle_membership_Z(L, e), f"edge {e} of Lk({v}) is a bridge"


# -- random complexes ----------------------------------------------------

def random_complex(rng: random.Random, n_vertices: int, n_facets: int, max_dim: int,
                   min_dim: int = 0) -> Complex:
    verts = list(range(n_vertices))
    facets = []
    for _ in range(n_facets):
        d = rng.randint(min_dim, min(max_dim, n_vertices - 1))
        facets.append(rng.sample(verts, d + 1))
    return from_facets(facets)


def random_pure_complex(rng: random.Random, dim: int, n_vertices: int, n_facets: int) -> Complex:
    return random_complex(rng, n_vertices, n_facets, dim, min_dim=dim)


def random_graph(rng: random.Random, n_vertices: int, n_edges: int) -> Complex:
    """Random graph; isolated vertices are kept as 0-simplices."""
    all_edges = list(combinations(range(n_vertices), 2))
    edges = rng.sample(all_edges, min(n_edges, len(all_edges)))
    return from_facets([(v,) for v in range(n_vertices)] + edges)


def random_subcomplex(rng: random.Random, X: Complex, p: float = 0.3) -> Complex:
    """Closure of a random subset of the simplices of X."""
    return closure(s for s in sorted(X.simplices) if rng.random() < p)
