"""Named desk-scale complexes and catalogs used by the tests and the CLI corpus."""

from __future__ import annotations

import random
from itertools import combinations

from .complex_core import Complex, build_complex
from .nerve_ops import separation_witness
from .surface_models import CurveCatalog


def triangle_boundary() -> Complex:
    return build_complex([["a", "b"], ["b", "c"], ["c", "a"]])


def path_complex() -> Complex:
    return build_complex([["a", "b"], ["b", "c"]])


def single_simplex(rank: int = 3) -> Complex:
    return build_complex([[chr(ord("a") + i) for i in range(rank)]])


def extension_counterexample() -> Complex:
    return build_complex([["1", "2"], ["1", "3"], ["1", "4"], ["2", "3", "4"]])


OCTAHEDRON_VERTICES = ("xp", "xn", "yp", "yn", "zp", "zn")
ANTIPODES = {("xp", "xn"), ("yp", "yn"), ("zp", "zn")}


def octahedron_edges() -> list[list[str]]:
    v = OCTAHEDRON_VERTICES
    return [[a, b] for i, a in enumerate(v) for b in v[i + 1:] if (a, b) not in ANTIPODES]


def octahedron() -> Complex:
    return build_complex(octahedron_edges(), flag_mode=True)


def icosahedron_edges() -> list[list[str]]:
    top, bottom = "t", "b"
    upper = [f"u{i}" for i in range(5)]
    lower = [f"l{i}" for i in range(5)]
    edges = []
    for i in range(5):
        edges += [[top, upper[i]], [bottom, lower[i]],
                  [upper[i], upper[(i + 1) % 5]], [lower[i], lower[(i + 1) % 5]],
                  [upper[i], lower[i]], [upper[i], lower[(i + 1) % 5]]]
    return edges


def icosahedron() -> Complex:
    return build_complex(icosahedron_edges(), flag_mode=True)


def projective_plane() -> Complex:
    """Six-vertex triangulation of the real projective plane."""
    faces = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    return build_complex([list(f) for f in faces])


def random_flag_complex(n: int, p: float, seed: int) -> Complex:
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    gens = [[v] for v in names]
    gens += [[a, b] for a, b in combinations(names, 2) if rng.random() < p]
    return build_complex(gens, flag_mode=True)


def random_separated_flag_complexes(count: int = 20, seed: int = 0, max_vertices: int = 10):
    """``count`` random flag complexes on <= ``max_vertices`` vertices that satisfy separation."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, max_vertices)
        cx = random_flag_complex(n, rng.uniform(0.3, 0.7), rng.randrange(2**32))
        if separation_witness(cx) is None:
            out.append(cx)
    return out


def random_flag_complexes(count: int = 20, seed: int = 0, max_vertices: int = 10):
    rng = random.Random(seed)
    return [random_flag_complex(rng.randint(3, max_vertices), rng.uniform(0.2, 0.8),
                                rng.randrange(2**32)) for _ in range(count)]


def chain_catalog() -> CurveCatalog:
    """Genus-2 chain c1..c5: consecutive curves meet once, others are disjoint."""
    curves = [f"c{i}" for i in range(1, 6)]
    return CurveCatalog.create(2, curves, [[1 if abs(i - j) == 1 else 0 for j in range(5)]
                                           for i in range(5)])


def octahedron_catalog() -> CurveCatalog:
    """Synthetic saturated stand-in: antipodal pairs meet once, all else disjoint."""
    v = OCTAHEDRON_VERTICES
    anti = ANTIPODES | {(b, a) for a, b in ANTIPODES}
    return CurveCatalog.create(2, v, [[1 if (a, b) in anti else 0 for b in v] for a in v])


def disjoint_catalog() -> CurveCatalog:
    return CurveCatalog.create(2, ["a", "b", "c"], [[0] * 3 for _ in range(3)])


def single_curve_catalog() -> CurveCatalog:
    return CurveCatalog.create(2, ["a"], [[0]])


COMPLEXES = {
    "triangle": triangle_boundary,
    "path": path_complex,
    "simplex": single_simplex,
    "counterexample": extension_counterexample,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "rp2": projective_plane,
}

CATALOGS = {
    "chain": chain_catalog,
    "octahedron": octahedron_catalog,
    "disjoint": disjoint_catalog,
    "single": single_curve_catalog,
}
