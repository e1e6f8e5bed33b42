import random

import pytest
from hypothesis import given, settings, strategies as st

from cmt.cm import is_cohen_macaulay
from cmt.core import (
    Monomial,
    MonomialIdeal,
    NotAFace,
    SimpleGraph,
    SimplicialComplex,
    all_faces,
    dim,
    edge_ideal,
    independence_complex,
    is_pure,
    link,
    stanley_reisner_ideal,
)
from cmt.expansion import (
    Blocks,
    HypothesisNotMet,
    betti_dominates,
    cone_links_acyclic,
    expand_complex,
    expand_face,
    expand_graph,
    expand_ideal,
    expand_monomial,
    link_expansion_decompose,
    require_hypotheses,
    verify_expansion_theorem,
)
from cmt.generate import alphas, complexes_up_to_iso, graphs_up_to_iso, random_ideal
from cmt.harness import ideal_generators_ok
from cmt.homology import GF2, QQ

from conftest import complexes, cx
import oracles


def facet_set(c):
    return {frozenset(f) for f in c.facet_names()}


def edge_set(g):
    return {frozenset(e) for e in g.edge_names()}


@st.composite
def complex_and_alpha(draw, max_vertices=4, entry_max=3):
    c = draw(complexes(max_vertices=max_vertices))
    a = tuple(draw(st.integers(1, entry_max)) for _ in range(c.n))
    return c, a


# ---------------------------------------------------------------- faces and complexes


def test_expand_face():
    c = cx("x1x2x3")
    f = expand_face(c.face(["x1", "x3"]), (2, 1, 1))
    ex = expand_complex(c, (2, 1, 1))
    assert ex.names(f) == ("x1_1", "x1_2", "x3_1")
    assert expand_face(0, (2, 1, 1)) == 0
    assert expand_face(0b101, (1, 1, 1)) == 0b101


def test_expand_remark_instance(path3):
    ex = expand_complex(path3, (2, 1, 1))
    assert facet_set(ex) == {frozenset({"x1_1", "x1_2", "x2_1"}), frozenset({"x2_1", "x3_1"})}
    assert not is_pure(ex)


def test_expand_all_ones_relabels(example4):
    ex = expand_complex(example4, (1,) * 5)
    assert [tuple(v.split("_")[0] for v in f) for f in ex.facet_names()] == example4.facet_names()


def test_points_to_disjoint_edges():
    ex = expand_complex(cx("x1", "x2", "x3"), (2, 2, 2))
    assert facet_set(ex) == {frozenset({f"x{i}_1", f"x{i}_2"}) for i in (1, 2, 3)}


def test_expand_rejects_bad_alpha(path3):
    with pytest.raises(ValueError):
        expand_complex(path3, (1, 1))
    with pytest.raises(ValueError):
        expand_complex(path3, (0, 1, 1))


def test_no_double_expansion(two_edges):
    with pytest.raises(ValueError):
        expand_complex(two_edges, (1, 1, 1, 1))


@given(complex_and_alpha())
def test_facet_count_and_blocks(ca):
    c, a = ca
    ex = expand_complex(c, a)
    assert len(ex.facets) == len(c.facets)
    blocks = Blocks.of(a)
    for f in c.facets:
        assert blocks.project(blocks.expand(f)) == f
        assert bin(blocks.expand(f)).count("1") == sum(a[i] for i in range(c.n) if f >> i & 1)


# ---------------------------------------------------------------- graphs and ideals


def test_expand_graph_examples():
    g = SimpleGraph.build("ab", [("a", "b")])
    assert edge_set(expand_graph(g, (2, 1))) == {frozenset({"a_1", "b_1"}), frozenset({"a_2", "b_1"})}
    tri = SimpleGraph.build("abc", [("a", "b"), ("a", "c"), ("b", "c")])
    assert edge_set(expand_graph(tri, (2, 1, 1))) == {
        frozenset(p) for p in [("a_1", "b_1"), ("a_2", "b_1"), ("a_1", "c_1"), ("a_2", "c_1"), ("b_1", "c_1")]}
    assert len(expand_graph(tri, (1, 1, 1)).edges) == 3


def test_expand_monomial_examples():
    u = Monomial.from_dict({0: 1, 2: 1})
    got = expand_monomial(u, (2, 1, 1))
    # expanded table: x1_1=0, x1_2=1, x2_1=2, x3_1=3
    assert set(got) == {Monomial.from_dict({0: 1, 3: 1}), Monomial.from_dict({1: 1, 3: 1})}
    sq = expand_monomial(Monomial.from_dict({0: 2}), (2,))
    assert set(sq) == {Monomial.from_dict({0: 2}), Monomial.from_dict({0: 1, 1: 1}), Monomial.from_dict({1: 2})}
    assert expand_monomial(u, (1, 1, 1)) == [u]


def test_expand_ideal_examples():
    i = MonomialIdeal.build(["x1", "x2", "x3"], [Monomial.from_dict({0: 1, 2: 1})])
    assert repr(expand_ideal(i, (2, 1, 1))) == "(x1_1*x3_1, x1_2*x3_1)"
    assert expand_ideal(MonomialIdeal.build(["x1"], []), (3,)).is_zero()
    e = MonomialIdeal.build(["x1", "x2"], [Monomial.from_dict({0: 1, 1: 1})])
    assert repr(expand_ideal(e, (2, 1))) == "(x1_1*x2_1, x1_2*x2_1)"


@given(complex_and_alpha())
def test_sr_commutation(ca):
    c, a = ca
    assert expand_ideal(stanley_reisner_ideal(c), a) == stanley_reisner_ideal(expand_complex(c, a))


def test_generator_commutation_random():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        ideal = random_ideal(rng, n, 2)
        a = tuple(rng.randint(1, 3) for _ in range(n))
        assert ideal_generators_ok(ideal, a)


def test_edge_ideal_commutation_small():
    for g in graphs_up_to_iso(4):
        for a in alphas(g.n, 3):
            ge = expand_graph(g, a)
            assert edge_ideal(ge) == expand_ideal(edge_ideal(g), a)
            assert independence_complex(ge) == expand_complex(independence_complex(g), a)


# ---------------------------------------------------------------- links of expansions


def test_link_decompose_expanded_face(path3):
    a = (2, 1, 1)
    ex = expand_complex(path3, a)
    d = link_expansion_decompose(path3, a, ex.face(["x2_1"]))
    assert d.expanded and d.holds
    assert d.base_face == path3.face(["x2"])
    assert facet_set(d.link) == {frozenset({"x1_1", "x1_2"}), frozenset({"x3_1"})}


def test_link_decompose_partial_face(path3):
    a = (2, 1, 1)
    ex = expand_complex(path3, a)
    d = link_expansion_decompose(path3, a, ex.face(["x1_1"]))
    assert not d.expanded and d.holds
    assert str(ex.vertices[d.cone_apex]) == "x1_2"


def test_link_decompose_empty(path3):
    d = link_expansion_decompose(path3, (2, 1, 1), 0)
    assert d.expanded and d.base_face == 0 and d.holds


def test_link_decompose_not_a_face(path3):
    ex = expand_complex(path3, (2, 1, 1))
    with pytest.raises(NotAFace):
        link_expansion_decompose(path3, (2, 1, 1), ex.face(["x1_1", "x3_1"]))


@settings(max_examples=60)
@given(complex_and_alpha(max_vertices=4, entry_max=2))
def test_link_identities_and_cones(ca):
    c, a = ca
    ex = expand_complex(c, a)
    for f in all_faces(ex):
        assert link_expansion_decompose(c, a, f, ex).holds
    assert cone_links_acyclic(c, a) == []
    for fld in (QQ, GF2):
        assert betti_dominates(c, a, fld)


@settings(max_examples=40)
@given(complex_and_alpha(max_vertices=4, entry_max=2))
def test_link_oracle(ca):
    c, a = ca
    ex = expand_complex(c, a)
    faces = oracles.faces_of(ex.facet_names())
    for f in all_faces(ex):
        got = oracles.faces_of(link(ex, f).facet_names())
        assert got == oracles.link_faces(faces, ex.names(f))


# ---------------------------------------------------------------- the expansion theorem


def test_theorem_points_base_case():
    rep = verify_expansion_theorem(cx("x1", "x2", "x3"), (2, 2, 2))
    assert rep.verdict == "pass"
    assert rep.computed == {"t": 0, "e": 2, "k": 2, "t_expanded": 1, "predicted": 1, "upper_bound_holds": True}


def test_theorem_single_edge_all_two():
    # the expansion is a full 3-simplex, which is Cohen-Macaulay, so t' = 0 and not 3
    c = cx("x1x2")
    ex = expand_complex(c, (2, 2))
    assert len(ex.facets) == 1 and dim(ex) == 3
    faces = oracles.faces_of(ex.facet_names())
    assert oracles.min_cm_t(faces) == 0
    rep = verify_expansion_theorem(c, (2, 2))
    assert rep.computed["t_expanded"] == 0
    assert rep.computed["predicted"] == 3
    assert rep.verdict == "fail"
    assert rep.computed["upper_bound_holds"]


def test_theorem_skips():
    rep = verify_expansion_theorem(cx("x1x2", "x3"), (2, 1, 1))
    assert rep.verdict == "skip" and "pure" in rep.reason
    rep = verify_expansion_theorem(cx("x1x2", "x2x3"), (1, 1, 1))
    assert rep.verdict == "skip" and "alpha_nontrivial" in rep.reason
    rep = verify_expansion_theorem(cx("x1x2", "x2x3"), (2, 1, 1))
    assert rep.verdict == "skip" and "expansion_pure" in rep.reason
    with pytest.raises(HypothesisNotMet):
        require_hypotheses(cx("x1x2", "x3"), (2, 1, 1))


def test_theorem_upper_bound_always_holds():
    # the half "Δ^α is CM_{t+e-k+1}" survives every instance we can enumerate
    for c in complexes_up_to_iso(4, pure_only=True):
        if c.n == 0:
            continue
        for a in alphas(c.n, 3, 10):
            rep = verify_expansion_theorem(c, a)
            if rep.verdict != "skip":
                assert rep.computed["upper_bound_holds"], rep.as_record()


def test_theorem_fail_record_reproduces():
    rep = verify_expansion_theorem(cx("x1"), (2,)).as_record()
    assert rep["verdict"] == "fail"
    back = SimplicialComplex.from_facets(rep["instance"]["complex"]["facets"], rep["instance"]["complex"]["vertices"])
    assert back == cx("x1")
    assert rep["instance"]["alpha"] == [2]


def test_cm_expansions_can_stay_cm():
    # simplices expand to simplices, and expanding a cone apex keeps a cone
    # over a Cohen-Macaulay link
    cases = [
        (cx("x1"), (2,)),
        (cx("x1x2"), (2, 2)),
        (cx("x1x2x3"), (1, 3, 2)),
        (cx("x1x2", "x1x3"), (2, 1, 1)),
        (cx("x1x2x3", "x1x2x4"), (1, 2, 1, 1)),
    ]
    for c, a in cases:
        assert is_cohen_macaulay(c)
        ex = expand_complex(c, a)
        assert is_pure(ex) and is_cohen_macaulay(ex)


def test_cm_expansion_split_small():
    kept = lost = 0
    for c in complexes_up_to_iso(4, pure_only=True):
        if c.n == 0 or not is_cohen_macaulay(c):
            continue
        for a in alphas(c.n, 2):
            ex = expand_complex(c, a)
            if max(a) == 1 or not is_pure(ex):
                continue
            if is_cohen_macaulay(ex):
                kept += 1
            else:
                lost += 1
    assert kept > 0 and lost > 0
