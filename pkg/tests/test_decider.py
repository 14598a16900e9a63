import random

import pytest

from oracles import random_graph_pairs, trail_oracle, vertex_set
from comptype.complex import (EMPTY_COMPLEX, ComplexError, Marker, Pair, from_facets, link_pair,
                              odd_subcomplex)
from comptype.decider import (Fragment, FragmentClass, Truth, Verdict, analyze_vertex,
                              classify_fragment, computable_type, cone_pair_surjection,
                              graph_edge_criterion_oracle)
from comptype.generators import (CORPUS, generate, random_complex, random_pure_complex,
                                 random_subcomplex, sphere)
from comptype.homology import cycle_membership_mod


# -- fragments --------------------------------------------------------------------

def test_classify_examples():
    assert classify_fragment(sphere(1), Marker.EMPTY) == FragmentClass(Fragment.REL_PURE, 1)
    tri_plus_point = from_facets([["a", "b", "c"], ["z"]])
    assert classify_fragment(tri_plus_point, Marker.EMPTY).kind is Fragment.NOT_AE
    assert classify_fragment(sphere(4), Marker.EMPTY) == FragmentClass(Fragment.REL_PURE, 4)
    assert str(FragmentClass(Fragment.REL_PURE, 4)) == "RelPure(4)"


def test_classify_precedence():
    pts = from_facets([["a"], ["b"]])
    assert classify_fragment(pts, Marker.EMPTY).kind is Fragment.DIM0
    assert classify_fragment(EMPTY_COMPLEX, Marker.EMPTY).kind is Fragment.DIM0
    mixed = from_facets([["a", "b", "c"], ["c", "d"]])
    assert classify_fragment(mixed, Marker.EMPTY).kind is Fragment.LOW_DIM
    # the lower-dimensional facet sits inside N, so the outside is pure
    assert classify_fragment(mixed, from_facets([["c", "d"]])) == FragmentClass(Fragment.REL_PURE, 2)
    # an isolated point inside N does not count against almost-Euclidean
    assert classify_fragment(from_facets([["a", "b"], ["z"]]), from_facets([["z"]])).kind \
        is Fragment.REL_PURE
    big = from_facets([list(f) for f in sphere(4).facets] + [["x", "y"]])
    assert classify_fragment(big, Marker.EMPTY).kind is Fragment.AE_ONLY
    assert classify_fragment(big, Marker.TIP).kind is Fragment.AE_ONLY


# -- cone pairs --------------------------------------------------------------------

def test_cone_on_circle_is_disk_pair():
    v = cone_pair_surjection(sphere(1), Marker.EMPTY)
    assert v.value is Truth.TRUE and v.route == "equivalence"


def test_single_point_link_fails():
    v = cone_pair_surjection(from_facets([["a"]]), Marker.EMPTY)
    assert v.value is Truth.FALSE and v.route == "dim0-cone-graph"
    assert v.failing_facets == (("a",),)


def test_two_point_link_passes():
    assert cone_pair_surjection(from_facets([["a"], ["b"]]), Marker.EMPTY).value is Truth.TRUE


def test_point_link_with_N():
    # the point is in N, so nothing is tested
    assert cone_pair_surjection(from_facets([["a"]]), from_facets([["a"]])).value is Truth.TRUE
    pts = from_facets([["a"], ["b"]])
    assert cone_pair_surjection(pts, from_facets([["a"]])).value is Truth.TRUE


def test_empty_and_tip_routes():
    assert cone_pair_surjection(EMPTY_COMPLEX, Marker.EMPTY).route == "empty-link"
    v = cone_pair_surjection(from_facets([["a"]]), Marker.TIP)
    assert v.value is Truth.TRUE and v.route == "tip-point"


def test_torus_disk_cone_fails_on_disk():
    X = generate("torus_disk").X
    v = cone_pair_surjection(X, Marker.EMPTY)
    assert v.value is Truth.FALSE
    assert v.failing_facets and all("d" in f for f in v.failing_facets)
    assert len(v.failing_facets) == 7


def test_low_dim_routes():
    sphere_and_circle = from_facets([list(f) for f in sphere(2).facets]
                                    + [["x", "y"], ["y", "z"], ["x", "z"]])
    v = cone_pair_surjection(sphere_and_circle, Marker.EMPTY)
    assert v.fragment.kind is Fragment.LOW_DIM and v.value is Truth.TRUE
    pendant = from_facets([list(f) for f in sphere(2).facets] + [["0", "x"]])
    v = cone_pair_surjection(pendant, Marker.EMPTY)
    assert v.value is Truth.FALSE and v.failing_facets == (("0", "x"),)


def test_outside_fragment_is_unknown():
    v = cone_pair_surjection(from_facets([["a", "b", "c"], ["z"]]), Marker.EMPTY)
    assert v.value is Truth.UNKNOWN and v.route == "outside-fragment"
    assert v.failing_facets == (("z",),)


def test_ae_only_implication():
    base = [list(f) for f in sphere(4).facets]
    passing = from_facets(base + [["x", "y"], ["y", "z"], ["x", "z"]])
    v = cone_pair_surjection(passing, Marker.EMPTY)
    assert v.fragment.kind is Fragment.AE_ONLY
    assert v.value is Truth.TRUE and v.route == "implication"
    failing = from_facets(base + [["x", "y"]])
    v = cone_pair_surjection(failing, Marker.EMPTY)
    assert v.value is Truth.UNKNOWN and v.failing_facets == (("x", "y"),)


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict(Truth.FALSE)
    with pytest.raises(ValueError):
        Verdict(Truth.UNKNOWN)


def test_invalid_N_rejected():
    with pytest.raises(ComplexError):
        cone_pair_surjection(sphere(1), from_facets([["q"]]))


def test_rp2_link_checks_use_kernel_route():
    # links of a surface are circles; torsion shows up globally, not in links
    verdict, reports = computable_type(generate("rp2_6"))
    assert verdict.value is Truth.TRUE
    assert all(r.verdict.witness_modulus is None for r in reports)


def test_witness_modulus_on_torsion_link():
    # the cone over rp2: its apex link is rp2 itself
    pair = generate("cone_of", "rp2_6")
    apex = [v for v in pair.X.vertices if v.startswith("c")][0]
    r = analyze_vertex(pair, apex)
    assert r.verdict.value is Truth.TRUE
    assert r.verdict.witness_modulus == 2


# -- global verdicts ------------------------------------------------------------------

@pytest.mark.parametrize("args,expected", [
    (("sphere", 2), Truth.TRUE),
    (("ball_pair", 1), Truth.TRUE),
    (("path", 3), Truth.FALSE),
    (("path", 3, "ends"), Truth.TRUE),
    (("simplex", 2), Truth.FALSE),
    (("cycle", 5), Truth.TRUE),
    (("dunce_hat",), Truth.FALSE),
    (("bing_house",), Truth.TRUE),
    (("torus_disk",), Truth.TRUE),
])
def test_computable_type_examples(args, expected):
    verdict, reports = computable_type(generate(*args))
    assert verdict.value is expected
    if expected is Truth.FALSE:
        assert verdict.witnesses and all(w.vertex for w in verdict.witnesses)


def test_dunce_hat_fails_at_corner():
    verdict, _ = computable_type(generate("dunce_hat"))
    assert {w.vertex for w in verdict.witnesses} == {"1"}


def test_empty_complex_rejected():
    with pytest.raises(ComplexError):
        computable_type(Pair(EMPTY_COMPLEX, EMPTY_COMPLEX))


def test_isolated_vertex_has_empty_link():
    verdict, reports = computable_type(Pair(from_facets([["a"], ["b", "c"], ["c", "d"], ["b", "d"]]),
                                            EMPTY_COMPLEX))
    assert reports[0].verdict.route == "empty-link"
    assert verdict.value is Truth.TRUE


@pytest.mark.parametrize("name", ["torus7", "rp2_6", "klein8"])
def test_closed_surfaces(name):
    verdict, reports = computable_type(generate(name))
    assert verdict.value is Truth.TRUE
    for r in reports:
        assert r.verdict.fragment == FragmentClass(Fragment.REL_PURE, 1)
        assert r.verdict.checks and all(c.passed for c in r.verdict.checks)


def aggregation_ok(verdict, reports) -> bool:
    values = [r.verdict.value for r in reports]
    if (verdict.value is Truth.FALSE) != (Truth.FALSE in values):
        return False
    return (verdict.value is Truth.TRUE) == all(v is Truth.TRUE for v in values)


def test_monotone_aggregation():
    rng = random.Random(21)
    pairs = [generate(*a) for a in CORPUS if a != ("bing_house",)]
    # a circle hanging off a 2-sphere: the shared vertex has a NotAE link
    pairs.append(Pair(from_facets([list(f) for f in sphere(2).facets]
                                  + [["0", "x"], ["x", "y"], ["0", "y"]]), EMPTY_COMPLEX))
    for _ in range(60):
        X = random_complex(rng, rng.randint(3, 7), rng.randint(1, 8), 3)
        pairs.append(Pair(X, random_subcomplex(rng, X, 0.2)))
    kinds = set()
    for pair in pairs:
        verdict, reports = computable_type(pair)
        kinds.add(verdict.value)
        assert aggregation_ok(verdict, reports)
    assert kinds == {Truth.TRUE, Truth.FALSE, Truth.UNKNOWN}


def test_tip_route_consistency():
    rng = random.Random(5)
    checked = 0
    for _ in range(200):
        X = random_complex(rng, rng.randint(3, 7), rng.randint(2, 7), 3)
        A = random_subcomplex(rng, X, 0.25)
        pair = Pair(X, A)
        for v in X.vertices:
            lp = link_pair(pair, v)
            if lp.N is Marker.TIP and len(lp.L.vertices) > 1:
                tip = cone_pair_surjection(lp.L, Marker.TIP)
                empty = cone_pair_surjection(lp.L, Marker.EMPTY)
                assert tip.value is empty.value
                assert tip.failing_facets == empty.failing_facets
                checked += 1
    assert checked >= 20


# -- graphs ---------------------------------------------------------------------------

def test_graph_oracle_examples():
    tri = sphere(1)
    assert all(graph_edge_criterion_oracle(tri, []).values())
    assert graph_edge_criterion_oracle(from_facets([["a", "b"]]), []) == {("a", "b"): False}
    path = from_facets([["a", "b"], ["b", "c"]])
    assert all(graph_edge_criterion_oracle(path, ["a", "c"]).values())
    # one A-point is enough when the walk returns to it
    assert not any(graph_edge_criterion_oracle(path, ["a"]).values())
    with pytest.raises(ComplexError):
        graph_edge_criterion_oracle(from_facets([["a", "b", "c"]]), [])


def test_graph_agreement():
    for G, A in random_graph_pairs(17, 100):
        pair = Pair(G, vertex_set(A))
        oracle = graph_edge_criterion_oracle(G, A)
        assert oracle == trail_oracle(G, set(A))
        for e in G.simplices_of_dim(1):
            assert cycle_membership_mod(pair, e, 2) == oracle[e], (G, A, e)


# -- totality and odd-subcomplex pairs --------------------------------------------------

def test_pure_and_graph_totality():
    rng = random.Random(31)
    for i in range(100):
        dim = 1 + i % 4
        X = random_pure_complex(rng, dim, rng.randint(dim + 1, dim + 4), rng.randint(1, 5))
        A = random_subcomplex(rng, X, 0.15) if i % 2 else EMPTY_COMPLEX
        verdict, reports = computable_type(Pair(X, A))
        assert verdict.value is not Truth.UNKNOWN
    for G, A in random_graph_pairs(32, 100):
        verdict, _ = computable_type(Pair(G, vertex_set(A)))
        assert verdict.value is not Truth.UNKNOWN


def odd_pair_ok(K) -> bool:
    verdict, reports = computable_type(Pair(K, odd_subcomplex(K)))
    if verdict.value is Truth.FALSE:
        return False
    blocked = any(not r.verdict.fragment.decidable for r in reports
                  if r.verdict.fragment is not None)
    return blocked or verdict.value is Truth.TRUE


def test_odd_subcomplex_pairs_corpus():
    for args in CORPUS:
        assert odd_pair_ok(generate(*args).X), args


def test_odd_subcomplex_pairs_random():
    rng = random.Random(41)
    for i in range(60):
        K = random_complex(rng, rng.randint(4, 8), rng.randint(2, 25), 2 + i % 2, min_dim=1)
        assert odd_pair_ok(K)


def test_odd_of_triangle_gives_ball_pair():
    K = from_facets([["a", "b", "c"]])
    verdict, _ = computable_type(Pair(K, odd_subcomplex(K)))
    assert verdict.value is Truth.TRUE
    assert odd_subcomplex(K) == from_facets([["a", "b"], ["b", "c"], ["a", "c"]])


def test_parallel_matches_sequential():
    for args in [("torus7",), ("dunce_hat",), ("cone_of", "rp2_6")]:
        pair = generate(*args)
        assert computable_type(pair, workers=4) == computable_type(pair)
