import random
from math import factorial

import pytest
from hypothesis import given, settings

from cxlab import fixtures
from cxlab.automorphisms import (PermutationGroup, are_isomorphic, automorphism_group,
                                 compare_aut, compose, find_isomorphism, identity, inverse,
                                 mul, omega, omega_inverse, star_equivariance_audit)
from cxlab.complex_core import build_complex
from cxlab.errors import ConditionFailure, InputError
from cxlab.nerve_ops import check_conditions, nerve_of_maximal
from conftest import named_complexes, small_complexes
from oracles import brute_aut_order, brute_isomorphic


def test_permutation_helpers():
    p, q = (1, 2, 0), (1, 0, 2)
    assert mul(p, q) == tuple(p[q[i]] for i in range(3))
    assert mul(p, inverse(p)) == identity(3)


def test_symmetric_group_order_and_membership():
    g = PermutationGroup(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)])
    assert g.order == 120
    a5 = PermutationGroup(5, [(1, 2, 0, 3, 4), (0, 2, 3, 1, 4), (0, 1, 3, 4, 2)])
    assert a5.order == 60
    assert a5.contains((1, 2, 0, 3, 4)) and not a5.contains((1, 0, 2, 3, 4))
    assert len(set(a5.elements())) == 60


def test_dihedral_group():
    r = tuple((i + 1) % 6 for i in range(6))
    s = tuple((-i) % 6 for i in range(6))
    assert PermutationGroup(6, [r, s]).order == 12
    assert PermutationGroup(6, []).order == 1


@pytest.mark.parametrize("name,order", [("triangle", 6), ("octahedron", 48), ("path", 2),
                                        ("simplex", 6), ("counterexample", 6), ("rp2", 60)])
def test_orders_against_brute_force(name, order):
    cx = named_complexes()[name]
    assert brute_aut_order(cx.vertices, cx.maximal) == order
    assert automorphism_group(cx).order == order


def test_icosahedron_order():
    assert automorphism_group(fixtures.icosahedron()).order == 120


def test_random_orders_against_brute_force():
    rng = random.Random(11)
    for k in range(40):
        cx = fixtures.random_flag_complex(rng.randint(2, 7), rng.random(), seed=k)
        assert automorphism_group(cx).order == brute_aut_order(cx.vertices, cx.maximal)


@settings(max_examples=80, deadline=None)
@given(small_complexes(max_vertices=6))
def test_order_property(cx):
    aut = automorphism_group(cx)
    assert aut.order == brute_aut_order(cx.vertices, cx.maximal)
    maxset = {frozenset(s) for s in cx.maximal}
    for phi in aut.generator_mappings():
        assert {frozenset(phi[v] for v in s) for s in cx.maximal} == maxset


def test_isomorphism_search(octahedron):
    ren = {v: f"q{i}" for i, v in enumerate(reversed(octahedron.vertices))}
    other = octahedron.relabel(ren)
    f = find_isomorphism(octahedron, other)
    assert f is not None
    assert {frozenset(f[v] for v in s) for s in octahedron.maximal} == set(map(frozenset, other.maximal))
    assert not are_isomorphic(fixtures.path_complex(), fixtures.triangle_boundary())
    a = build_complex([["a", "b"], ["b", "c"], ["c", "d"]])
    b = build_complex([["a", "b"], ["a", "c"], ["a", "d"]])
    assert not are_isomorphic(a, b)


def test_isomorphism_random_against_brute_force():
    rng = random.Random(5)
    for k in range(40):
        n = rng.randint(2, 6)
        a = fixtures.random_flag_complex(n, 0.5, seed=2 * k)
        b = fixtures.random_flag_complex(n, 0.5, seed=2 * k + 1)
        assert are_isomorphic(a, b) == brute_isomorphic(a.vertices, a.maximal, b.vertices, b.maximal)


def test_omega_round_trip(octahedron):
    nx = nerve_of_maximal(octahedron)
    aut = automorphism_group(octahedron)
    for phi in aut.generator_mappings():
        g = omega(octahedron, phi, nx)
        assert omega_inverse(octahedron, g, nx) == phi
    with pytest.raises(InputError):
        omega(octahedron, {v: v for v in octahedron.vertices[:-1]})


def test_omega_homomorphism(triangle):
    aut = automorphism_group(triangle)
    perms = [aut.as_mapping(p) for p in aut.group.elements()]
    nx = nerve_of_maximal(triangle)
    for phi in perms:
        for psi in perms:
            assert omega(triangle, compose(phi, psi), nx) == compose(omega(triangle, phi, nx),
                                                                     omega(triangle, psi, nx))


def test_omega_inverse_needs_conditions(simplex3, counterexample):
    with pytest.raises(ConditionFailure):
        omega_inverse(simplex3, {"{a,b,c}": "{a,b,c}"})
    nx = nerve_of_maximal(counterexample)
    g = {v: v for v in nx.nerve.vertices}
    with pytest.raises(ConditionFailure) as exc:
        omega_inverse(counterexample, g, nx)
    assert exc.value.condition == "extension"


def test_compare_aut_fixtures():
    for name, cx in named_complexes().items():
        res = compare_aut(cx)
        rep = check_conditions(cx)
        if rep.separation_holds and rep.extension_holds:
            assert res["order"] == res["nerve_order"] and res["round_trip"], name
    res = compare_aut(fixtures.single_simplex(3))
    assert (res["order"], res["nerve_order"]) == (factorial(3), 1)
    assert not res["omega_injective"]


def test_star_equivariance_audit():
    for name in ("triangle", "octahedron", "path", "counterexample"):
        assert star_equivariance_audit(named_complexes()[name]) == []


def test_compare_aut_random():
    for cx in fixtures.random_flag_complexes(20, seed=1):
        res = compare_aut(cx)
        assert res["omega_homomorphism"]
