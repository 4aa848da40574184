import random

import pytest
from hypothesis import given, settings

from cxlab import fixtures
from cxlab.complex_core import build_complex, render, skeleton
from cxlab.errors import ConditionFailure, FaceCapExceeded, InputError
from cxlab.nerve_ops import (beta_map, check_conditions, star_family_audit, max_simplex_witness,
                             nerve_of_cover, nerve_of_maximal, sigma, sigma_tau_intersection)
from conftest import named_complexes, small_complexes
from oracles import brute_faces, brute_nerve_simplices, brute_isomorphic


def nerve_faces(nerve, labels):
    pos = {l: i for i, l in enumerate(labels)}
    return {frozenset(pos[v] for v in f) for f in brute_faces(nerve.maximal)}


def test_sigma_star(triangle):
    assert sigma(triangle, "a").members == (("a", "b"), ("a", "c"))
    with pytest.raises(InputError):
        sigma(triangle, "q")


def test_cover_nerve_examples():
    assert nerve_of_cover([{1, 2}, {2, 3}, {3, 1}]).maximal == (("U0", "U1"), ("U0", "U2"), ("U1", "U2"))
    assert nerve_of_cover([{1, 2, 3}, {3}, {3, 4}]).maximal == (("U0", "U1", "U2"),)
    assert nerve_of_cover([{1}, {2}]).maximal == (("U0",), ("U1",))
    with pytest.raises(InputError):
        nerve_of_cover([])
    with pytest.raises(InputError):
        nerve_of_cover([{1}, set()])


def test_default_labels_sort_numerically():
    n = nerve_of_cover([{i} for i in range(12)])
    assert n.vertices[:3] == ("U00", "U01", "U02")


def test_cover_nerve_matches_powerset_scan():
    rng = random.Random(3)
    for _ in range(60):
        sets = [set(rng.sample(range(8), rng.randint(1, 4))) for _ in range(rng.randint(1, 8))]
        labels = [f"S{i}" for i in range(len(sets))]
        nerve = nerve_of_cover(sets, labels)
        assert nerve_faces(nerve, labels) == brute_nerve_simplices(sets)


def test_nerve_cap():
    with pytest.raises(FaceCapExceeded):
        nerve_of_cover([set(range(3)) for _ in range(20)], face_cap=100)


def test_nerve_of_triangle_and_octahedron(triangle, octahedron):
    nt = nerve_of_maximal(triangle).nerve
    assert nt.n_vertices == 3 and all(len(s) == 2 for s in nt.maximal) and len(nt.maximal) == 3
    no = nerve_of_maximal(octahedron)
    # each vertex of the octahedron lies on 4 triangles
    assert len(no.nerve.maximal) == 6 and all(len(s) == 4 for s in no.nerve.maximal)
    assert set(no.dictionary.values()) == set(octahedron.maximal)


def test_nerve_of_path_and_simplex(path_cx, simplex3):
    assert nerve_of_maximal(path_cx).nerve.maximal == (("{a,b}", "{b,c}"),)
    n = nerve_of_maximal(simplex3).nerve
    assert n.n_vertices == 1


def test_conditions_witnesses(triangle, path_cx, counterexample, octahedron):
    for cx in (triangle, octahedron):
        rep = check_conditions(cx)
        assert rep.separation_holds and rep.extension_holds
    rep = check_conditions(path_cx)
    assert not rep.separation_holds and rep.separation_witness == ("a", "b")
    rep = check_conditions(counterexample)
    assert rep.separation_holds and rep.extension_holds is False
    w = rep.extension_witness
    res = sigma_tau_intersection(counterexample, w["K"])
    assert w["x"] in res.intersection and w["x"] not in w["K"]


def test_conditions_witness_revalidates():
    for cx in named_complexes().values():
        rep = check_conditions(cx)
        if rep.separation_witness:
            x, y = rep.separation_witness
            assert set(sigma(cx, x).members) <= set(sigma(cx, y).members)
        if rep.extension_witness:
            assert not sigma_tau_intersection(cx, rep.extension_witness["K"]).exact


def test_extension_cap_reported():
    cx = build_complex([[str(i) for i in range(12)]], face_cap=500)
    rep = check_conditions(cx)
    assert rep.extension_holds is None and "cap" in rep.extension_error


@pytest.mark.parametrize("name", ["triangle", "octahedron", "icosahedron"])
def test_beta_isomorphism(name):
    cx = named_complexes()[name]
    res = beta_map(cx)
    assert res.isomorphic
    nn = res.second.nerve
    assert {frozenset(res.mapping[v] for v in s) for s in cx.maximal} == set(map(frozenset, nn.maximal))
    if cx.n_vertices <= 8:
        assert brute_isomorphic(cx.vertices, cx.maximal, nn.vertices, nn.maximal)


def test_beta_refuses_without_separation(path_cx, simplex3):
    for cx in (path_cx, simplex3):
        with pytest.raises(ConditionFailure) as exc:
            beta_map(cx)
        assert exc.value.condition == "separation"
        nn = nerve_of_maximal(nerve_of_maximal(cx).nerve).nerve
        assert nn.n_vertices < cx.n_vertices


def test_max_simplex_witness(octahedron, triangle):
    fam = [s for s in octahedron.maximal if "xp" in s]
    res = max_simplex_witness(octahedron, fam)
    assert res.vertex == "xp" and res.unique and res.all_sigma_maximal
    res = max_simplex_witness(triangle, [("a", "b"), ("a", "c")])
    assert res.vertex == "a"
    with pytest.raises(InputError):
        max_simplex_witness(triangle, [("a", "b")])


def test_max_simplex_witness_not_unique_without_separation(path_cx):
    res = max_simplex_witness(path_cx, [("a", "b"), ("b", "c")])
    assert res.vertex == "b" and res.unique and not res.all_sigma_maximal


def test_sigma_tau(counterexample):
    res = sigma_tau_intersection(counterexample, ["2", "3"])
    assert res.intersection == ("2", "3", "4") and not res.exact
    assert sigma_tau_intersection(counterexample, ["1", "2"]).exact


def test_star_family_audit_counterexample(counterexample):
    out = star_family_audit(counterexample)
    assert out["simplex_iff_stars_meet"] == [] and out["nerve_maximal_is_star"] == []
    taus = [e["tau"] for e in out["star_intersection_not_tau"]]
    assert ["2", "3"] in taus
    assert taus == [["2", "3"], ["2", "4"], ["3", "4"]]


def test_star_family_audit_clean_fixtures():
    for name, cx in named_complexes().items():
        out = star_family_audit(cx)
        assert out["simplex_iff_stars_meet"] == [], name
        ext = check_conditions(cx).extension_holds
        assert (out["star_intersection_not_tau"] == []) == bool(ext), name
        if check_conditions(cx).separation_holds:
            assert out["nerve_maximal_is_star"] == [], name


def test_label_relabel_invariance(octahedron):
    ren = {v: f"w{i}" for i, v in enumerate(reversed(octahedron.vertices))}
    other = octahedron.relabel(ren)
    assert check_conditions(other).separation_holds
    n1, n2 = nerve_of_maximal(octahedron).nerve, nerve_of_maximal(other).nerve
    assert brute_isomorphic(n1.vertices, n1.maximal, n2.vertices, n2.maximal)


@settings(max_examples=120, deadline=None)
@given(small_complexes())
def test_nerve_properties(cx):
    nx = nerve_of_maximal(cx)
    labels = [render(s) for s in cx.maximal]
    assert nerve_faces(nx.nerve, labels) == brute_nerve_simplices(cx.maximal)
    audit = star_family_audit(cx)
    assert audit["simplex_iff_stars_meet"] == []
    rep = check_conditions(cx)
    if rep.separation_holds:
        assert audit["nerve_maximal_is_star"] == []
        res = beta_map(cx)
        nn = res.second.nerve
        assert nn.n_vertices == cx.n_vertices
        assert {frozenset(res.mapping[v] for v in s) for s in cx.maximal} == set(map(frozenset, nn.maximal))
    # a skeleton simplex tau always sits inside its star intersection
    for tau in skeleton(cx)[:20]:
        assert set(tau) <= set(sigma_tau_intersection(cx, tau).intersection)
