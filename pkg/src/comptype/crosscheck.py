"""Brute-force cross-checks of the decider's homological route.

Used by ``check --oracle`` and by the test-suite.  Each check returns a
list of human-readable disagreement messages; an empty list means the
independent routes agree.
"""

from __future__ import annotations

from .complex import EMPTY_COMPLEX, Complex, Marker, Pair
from .decider import (Fragment, LinkReport, _dim0_cone_pair, classify_fragment,
                      graph_edge_criterion_oracle)
from .homology import cycle_membership_mod, cycle_membership_T, cycle_membership_Z

MAX_MODULUS = 30


def coefficient_disagreements(pair: Pair, sigma, max_k: int = MAX_MODULUS) -> list[str]:
    ok, wit = cycle_membership_T(pair, sigma)
    name = " ".join(sigma)
    out = []
    if ok:
        if not cycle_membership_mod(pair, sigma, wit.modulus):
            out.append(f"{name}: circle test passed but Z/{wit.modulus} certificate fails")
    else:
        for k in range(2, max_k + 1):
            if cycle_membership_mod(pair, sigma, k):
                out.append(f"{name}: circle test failed but Z/{k} finds a cycle")
                break
        if cycle_membership_Z(pair, sigma):
            out.append(f"{name}: integral cycle found but circle test failed")
    return out


def graph_disagreements(pair: Pair) -> list[str]:
    """Mod-2 relative cycles vs the combinatorial graph criterion.

    Only meaningful when ``pair.X`` is a graph and ``pair.A`` is a vertex set.
    """
    X, A = pair.X, pair.A
    if X.dim > 1 or A.dim > 0:
        return []
    oracle = graph_edge_criterion_oracle(X, A.vertices)
    out = []
    facets = set(X.facets)
    for e in X.simplices_of_dim(1):
        if e not in facets:
            continue
        hom = cycle_membership_mod(pair, e, 2)
        if hom != oracle[e]:
            out.append(f"edge {' '.join(e)}: mod-2 cycle route {hom}, graph criterion {oracle[e]}")
    return out


def link_test_pair(L: Complex, N):
    """The pair on which the decider runs its cycle tests for C(L, N)."""
    if N is Marker.TIP and len(L.vertices) > 1:
        N = Marker.EMPTY
    if classify_fragment(L, N).kind is Fragment.DIM0 and not L.is_empty():
        if N is Marker.TIP:
            return None
        return _dim0_cone_pair(L, N)[0]
    return Pair(L, N if isinstance(N, Complex) else EMPTY_COMPLEX)


def link_disagreements(report: LinkReport) -> list[str]:
    pair = link_test_pair(report.link.L, report.link.N)
    if pair is None:
        return []
    out = []
    for sigma in pair.X.facets:
        if len(sigma) >= 2 and sigma not in pair.A:
            out += coefficient_disagreements(pair, sigma)
    out += graph_disagreements(pair)
    return [f"vertex {report.vertex}: {m}" for m in out]
