import random

import pytest

from cxlab import _kernels
from cxlab._kernels import _pykernels
from oracles import brute_cliques, brute_nerve_simplices

IMPLS = [pytest.param(_pykernels, id="python")]
if _kernels._ckernels is not None:
    IMPLS.append(pytest.param(_kernels._ckernels, id="compiled"))


def random_graph(n, p, rng):
    adj = [0] * n
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                edges.append((i, j))
    return adj, edges


def masks_to_sets(masks):
    return sorted(tuple(i for i in range(64) if m >> i & 1) for m in masks)


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("seed", range(25))
def test_maximal_cliques_match_brute_force(impl, seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    adj, edges = random_graph(n, rng.random(), rng)
    assert masks_to_sets(impl.maximal_cliques(adj)) == brute_cliques(range(n), edges)


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("seed", range(25))
def test_nerve_families_match_brute_force(impl, seed):
    rng = random.Random(seed)
    sets = [rng.sample(range(8), rng.randint(1, 4)) for _ in range(rng.randint(1, 8))]
    masks = [sum(1 << v for v in s) for s in sets]
    maximal, visited = impl.nerve_maximal_families(masks, 10**6)
    every = brute_nerve_simplices(sets)
    assert visited == len(every)
    expected = sorted(tuple(sorted(f)) for f in every if not any(f < g for g in every))
    assert masks_to_sets(maximal) == expected


@pytest.mark.parametrize("impl", IMPLS)
def test_nerve_cap_raises(impl):
    with pytest.raises(OverflowError):
        impl.nerve_maximal_families([1] * 12, 100)


def test_wide_inputs_fall_back_to_python():
    adj = [0] * 70
    adj[0], adj[69] = 1 << 69, 1
    cliques = _kernels.maximal_cliques(adj)
    assert (1 | 1 << 69) in cliques and len(cliques) == 69


@pytest.mark.skipif(_kernels._ckernels is None, reason="compiled kernels not built")
def test_compiled_rejects_wide_input():
    with pytest.raises(ValueError):
        _kernels._ckernels.maximal_cliques([0] * 65)
