"""Three-valued computable-type decision for finite simplicial pairs.

The pair is cut into vertex stars; each star is the cone on a link pair
(L, N), and the pair has computable type iff every cone pair C(L, N) has
the surjection property.  For a cone pair the decision is made by testing
whether every maximal simplex of L outside N belongs to a circle-valued
relative cycle.  That test is exact when L is pure of the facet dimension
or has dimension at most 3; elsewhere a passing test is still sufficient
and a failing one yields UNKNOWN.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .complex import (EMPTY_COMPLEX, Complex, ComplexError, LinkPair, Marker, NMarker, Pair,
                      Simplex, closure, fresh_vertex, link_pair)
from .homology import CircleCycleTester, CircleWitness


class Truth(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNKNOWN = "UNKNOWN"


class Fragment(enum.Enum):
    DIM0 = "Dim0"
    REL_PURE = "RelPure"
    LOW_DIM = "LowDim"
    AE_ONLY = "AE_Only"
    NOT_AE = "NotAE"


@dataclass(frozen=True)
class FragmentClass:
    kind: Fragment
    n: Optional[int] = None

    def __str__(self) -> str:
        if self.kind is Fragment.REL_PURE:
            return f"RelPure({self.n})"
        return self.kind.value

    @property
    def decidable(self) -> bool:
        return self.kind not in (Fragment.AE_ONLY, Fragment.NOT_AE)


@dataclass(frozen=True)
class FacetCheck:
    facet: Simplex
    passed: bool
    witness: Optional[CircleWitness] = None


@dataclass(frozen=True)
class Witness:
    facet: Simplex
    reason: str
    vertex: Optional[str] = None


@dataclass(frozen=True)
class Verdict:
    value: Truth
    witnesses: tuple[Witness, ...] = ()
    fragment: Optional[FragmentClass] = None
    route: str = ""
    checks: tuple[FacetCheck, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.value is Truth.FALSE and not self.witnesses:
            raise ValueError("a FALSE verdict needs a failing facet")
        if self.value is Truth.UNKNOWN and not self.witnesses and not self.route:
            raise ValueError("an UNKNOWN verdict needs a blocking reason")

    @property
    def failing_facets(self) -> tuple[Simplex, ...]:
        return tuple(w.facet for w in self.witnesses)

    @property
    def witness_modulus(self) -> Optional[int]:
        """Largest Z/k certificate among facets that only pass with torsion."""
        mods = [c.witness.modulus for c in self.checks
                if c.passed and c.witness is not None and c.witness.route == "lattice"]
        return max(mods) if mods else None


def _outside_facets(L: Complex, N: NMarker) -> list[Simplex]:
    Nc = N if isinstance(N, Complex) else EMPTY_COMPLEX
    return [f for f in L.facets if f not in Nc]


def classify_fragment(L: Complex, N: NMarker) -> FragmentClass:
    if L.dim <= 0:
        return FragmentClass(Fragment.DIM0)
    outside = _outside_facets(L, N)
    if any(len(f) == 1 for f in outside):
        return FragmentClass(Fragment.NOT_AE)
    if all(len(f) - 1 == L.dim for f in outside):
        return FragmentClass(Fragment.REL_PURE, L.dim)
    if L.dim <= 3:
        return FragmentClass(Fragment.LOW_DIM)
    return FragmentClass(Fragment.AE_ONLY)


def _dim0_cone_pair(L: Complex, N: NMarker) -> tuple[Pair, str]:
    """Cone graph on a finite point set: (C L, L u C N) with a fresh apex."""
    c = fresh_vertex(L.vertices, "c")
    X = closure([(c,)] + [tuple(sorted((c, w))) for w in L.vertices])
    A = set(L.simplices)
    if N is Marker.TIP:
        A.add((c,))
    elif isinstance(N, Complex):
        A.add((c,))
        A.update(tuple(sorted((c, w))) for w in N.vertices)
    return Pair(X, Complex(A, check=False)), c


def cone_pair_surjection(L: Complex, N: NMarker) -> Verdict:
    """Decide whether the cone pair C(L, N) has the surjection property."""
    if isinstance(N, Complex):
        LinkPair(L, N)  # validates N inside L
    if L.is_empty():
        return Verdict(Truth.TRUE, fragment=FragmentClass(Fragment.DIM0), route="empty-link")
    if N is Marker.TIP:
        if len(L.vertices) == 1:
            return Verdict(Truth.TRUE, fragment=FragmentClass(Fragment.DIM0), route="tip-point")
        # the tip only matters when L is a singleton
        N = Marker.EMPTY
    frag = classify_fragment(L, N)

    if frag.kind is Fragment.DIM0:
        pair, c = _dim0_cone_pair(L, N)
        Nv = set(N.vertices) if isinstance(N, Complex) else set()
        checks, witnesses = [], []
        tester = CircleCycleTester(pair)
        for w in L.vertices:
            if w in Nv:
                continue
            ok, wit = tester.test(tuple(sorted((c, w))))
            checks.append(FacetCheck((w,), ok, wit))
            if not ok:
                witnesses.append(Witness((w,), "cone edge to this point lies on no relative cycle"))
        value = Truth.FALSE if witnesses else Truth.TRUE
        return Verdict(value, tuple(witnesses), frag, "dim0-cone-graph", tuple(checks))

    if frag.kind is Fragment.NOT_AE:
        isolated = [f for f in _outside_facets(L, N) if len(f) == 1]
        return Verdict(Truth.UNKNOWN,
                       tuple(Witness(f, "maximal vertex outside N: link is not almost Euclidean")
                             for f in isolated),
                       frag, "outside-fragment")

    pair = Pair(L, N if isinstance(N, Complex) else EMPTY_COMPLEX)
    checks, failing = [], []
    tester = CircleCycleTester(pair)
    for f in _outside_facets(L, N):
        ok, wit = tester.test(f)
        checks.append(FacetCheck(f, ok, wit))
        if not ok:
            failing.append(f)
    if frag.decidable:
        witnesses = tuple(Witness(f, "facet belongs to no relative cycle") for f in failing)
        value = Truth.FALSE if failing else Truth.TRUE
        return Verdict(value, witnesses, frag, "equivalence", tuple(checks))
    if not failing:
        return Verdict(Truth.TRUE, (), frag, "implication", tuple(checks))
    witnesses = tuple(Witness(f, "no relative cycle; the cycle test is only sufficient here")
                      for f in failing)
    return Verdict(Truth.UNKNOWN, witnesses, frag, "implication", tuple(checks))


@dataclass(frozen=True)
class LinkReport:
    vertex: str
    link: LinkPair
    verdict: Verdict


def analyze_vertex(pair: Pair, v: str) -> LinkReport:
    lp = link_pair(pair, v)
    return LinkReport(v, lp, cone_pair_surjection(lp.L, lp.N))


def computable_type(pair: Pair, workers: int | None = None) -> tuple[Verdict, tuple[LinkReport, ...]]:
    """Aggregate the per-vertex cone-pair verdicts.

    ``workers`` > 1 analyses links on a thread pool; results are merged in
    canonical vertex order, so the report does not depend on it.
    """
    if pair.X.is_empty():
        raise ComplexError("computable_type needs a nonempty complex")
    verts = pair.X.vertices
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = tuple(pool.map(lambda v: analyze_vertex(pair, v), verts))
    else:
        reports = tuple(analyze_vertex(pair, v) for v in verts)
    values = {r.verdict.value for r in reports}
    if Truth.FALSE in values:
        value, keep = Truth.FALSE, (Truth.FALSE,)
    elif Truth.UNKNOWN in values:
        value, keep = Truth.UNKNOWN, (Truth.UNKNOWN,)
    else:
        value, keep = Truth.TRUE, ()
    witnesses = tuple(Witness(w.facet, w.reason, r.vertex)
                      for r in reports if r.verdict.value in keep
                      for w in (r.verdict.witnesses or (Witness((), r.verdict.route),)))
    return Verdict(value, witnesses, None, "vertex-links"), reports


# -- combinatorial cross-check for graphs --------------------------------

def _bridges(adj: dict[str, list[str]]) -> set[frozenset]:
    """Bridges of a simple graph by iterative depth-first search (low-link)."""
    disc, low, out = {}, {}, set()
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(adj[w])))
                    break
            else:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        out.add(frozenset((parent, u)))
    return out


def _reaches(adj, start, banned_edge, targets) -> bool:
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        if x in targets:
            return True
        for y in adj[x]:
            if frozenset((x, y)) == banned_edge or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    return False


def graph_edge_criterion_oracle(G: Complex, A_vertices) -> dict[Simplex, bool]:
    """Per edge: on a cycle, or on an edge-simple path between points of A."""
    if G.dim > 1:
        raise ComplexError("graph criterion needs a complex of dimension <= 1")
    A = set(A_vertices)
    adj = {v: [] for v in G.vertices}
    for a, b in G.simplices_of_dim(1):
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    bridges = _bridges(adj)
    out = {}
    for e in G.simplices_of_dim(1):
        key = frozenset(e)
        if key not in bridges:
            out[e] = True
        else:
            # across a bridge the two sides are disjoint, so a trail through
            # it joins an A-point on each side
            out[e] = _reaches(adj, e[0], key, A) and _reaches(adj, e[1], key, A)
    return out
