"""Curve catalogs, curve-complex patches, pants-graph census and the
curve-to-commensurator-coset embedding.

Intersection numbers are catalog data: nothing here computes them from a
surface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial, prod

from .complex_core import Complex, build_complex, skeleton
from .errors import InputError
from .nerve_ops import check_conditions

MAX_CENSUS_GENUS = 4


@dataclass(frozen=True)
class CurveCatalog:
    genus: int
    curves: tuple[str, ...]
    intersection: tuple[tuple[int, ...], ...]
    index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.curves)
        if self.genus < 2:
            raise InputError("genus must be at least 2")
        if len(set(self.curves)) != n:
            raise InputError("curve labels must be unique")
        if len(self.intersection) != n or any(len(r) != n for r in self.intersection):
            raise InputError("intersection matrix must be square with one row per curve")
        for i in range(n):
            if self.intersection[i][i] != 0:
                raise InputError(f"non-zero diagonal entry for {self.curves[i]}")
            for j in range(n):
                x = self.intersection[i][j]
                if not isinstance(x, int) or x < 0:
                    raise InputError("intersection numbers must be natural numbers")
                if x != self.intersection[j][i]:
                    raise InputError(f"asymmetric entry at ({self.curves[i]}, {self.curves[j]})")
        self.index.update({c: i for i, c in enumerate(self.curves)})

    @classmethod
    def create(cls, genus, curves, intersection):
        return cls(int(genus), tuple(str(c) for c in curves),
                   tuple(tuple(r) for r in intersection))

    def i(self, a: str, b: str) -> int:
        try:
            return self.intersection[self.index[a]][self.index[b]]
        except KeyError as exc:
            raise InputError(f"unknown curve {exc.args[0]!r}") from None

    @property
    def pants_size(self) -> int:
        return 3 * self.genus - 3

    def preserves(self, f: dict) -> bool:
        """True if the relabeling ``f`` is a bijection preserving i(., .)."""
        if set(f) != set(self.curves) or set(f.values()) != set(self.curves):
            return False
        return all(self.i(f[a], f[b]) == self.i(a, b) for a in self.curves for b in self.curves)

    def to_json(self) -> dict:
        return {"genus": self.genus, "curves": list(self.curves),
                "intersection": [list(r) for r in self.intersection]}


def catalog_from_json(data) -> CurveCatalog:
    try:
        return CurveCatalog.create(data["genus"], data["curves"], data["intersection"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed catalog: {exc}") from None


def load_catalog(path) -> CurveCatalog:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return catalog_from_json(data)


@dataclass(frozen=True)
class PatchReport:
    patch: Complex
    saturated: bool
    warnings: tuple[str, ...]

    def to_json(self) -> dict:
        return {"patch": self.patch.to_json(), "saturated": self.saturated,
                "warnings": list(self.warnings),
                "maximal_ranks": [len(s) for s in self.patch.maximal]}


def curve_patch(cat: CurveCatalog) -> PatchReport:
    """Flag complex on the catalog curves with an edge wherever i = 0."""
    gens = [[c] for c in cat.curves]
    gens += [[a, b] for a, b in combinations(cat.curves, 2) if cat.i(a, b) == 0]
    patch = build_complex(gens, flag_mode=True)
    short = [s for s in patch.maximal if len(s) != cat.pants_size]
    warnings = []
    if short:
        warnings.append(f"unsaturated: {len(short)} maximal simplices have rank != "
                        f"{cat.pants_size}; patch-level results do not speak for the full curve complex")
    return PatchReport(patch, not short, tuple(warnings))


def elementary_move_audit(cat: CurveCatalog) -> dict:
    """For each patch simplex C and t in C, catalog curves b meeting t but missing C - {t}."""
    patch = curve_patch(cat).patch
    entries = []
    for c in skeleton(patch):
        for t in c:
            rest = [a for a in c if a != t]
            wit = [b for b in cat.curves
                   if cat.i(b, t) > 0 and all(cat.i(b, a) == 0 for a in rest)]
            entries.append({"C": list(c), "t": t, "witnesses": wit,
                            "status": "found" if wit else "missing"})
    missing = sum(e["status"] == "missing" for e in entries)
    return {"entries": entries, "checked": len(entries), "missing": missing,
            "warnings": [f"{missing} (C, t) pairs have no witness in the catalog"] if missing else []}


def condition_audit_on_patch(cat: CurveCatalog) -> dict:
    rep = curve_patch(cat)
    cond = check_conditions(rep.patch)
    failed = not (cond.separation_holds and cond.extension_holds)
    if not failed:
        label = "both conditions hold on the patch"
    elif not rep.saturated:
        label = "expected: unsaturated patch"
    elif len(rep.patch.maximal) == 1:
        label = "expected: trivial patch with a single pants decomposition"
    else:
        label = "condition fails on a saturated patch"
    return {"saturated": rep.saturated, "warnings": list(rep.warnings),
            "conditions": cond.to_json(), "label": label}


# -- pants graphs --------------------------------------------------------------

@dataclass(frozen=True)
class PantsGraph:
    """Connected trivalent multigraph; ``mult[i][i]`` counts loops at i."""

    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.mult)
        for i in range(n):
            if any(self.mult[i][j] != self.mult[j][i] for j in range(n)):
                raise InputError("multiplicity matrix must be symmetric")
            if self.degree(i) != 3:
                raise InputError(f"vertex {i} has degree {self.degree(i)}, expected 3")
        if not self._connected():
            raise InputError("pants graph must be connected")

    @property
    def n_vertices(self) -> int:
        return len(self.mult)

    def degree(self, i: int) -> int:
        return 2 * self.mult[i][i] + sum(m for j, m in enumerate(self.mult[i]) if j != i)

    @property
    def edges(self) -> list[tuple[int, int]]:
        n = self.n_vertices
        return [(i, j) for i in range(n) for j in range(i, n) for _ in range(self.mult[i][j])]

    def _connected(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            u = stack.pop()
            for v, m in enumerate(self.mult[u]):
                if m and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n_vertices

    def canonical_form(self) -> tuple:
        n = self.n_vertices
        return min(tuple(self.mult[p[i]][p[j]] for i in range(n) for j in range(i, n))
                   for p in permutations(range(n)))

    @property
    def name(self) -> str:
        if self.n_vertices == 2:
            return "theta" if self.mult[0][1] == 3 else "dumbbell"
        return "pants" + "".join(map(str, self.canonical_form()))

    def to_json(self) -> dict:
        return {"name": self.name, "vertices": self.n_vertices,
                "edges": [list(e) for e in self.edges],
                "automorphisms": pants_graph_aut(self)}


def _trivalent_matrices(n):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    mult = [[0] * n for _ in range(n)]
    left = [3] * n

    def fill(k):
        if k == len(pairs):
            if not any(left):
                yield tuple(tuple(r) for r in mult)
            return
        i, j = pairs[k]
        top = left[i] // 2 if i == j else min(left[i], left[j])
        for m in range(top + 1):
            if i == j:
                left[i] -= 2 * m
            else:
                left[i] -= m
                left[j] -= m
            mult[i][j] = mult[j][i] = m
            # vertex i sees no further pairs after (i, n-1)
            if not (j == n - 1 and left[i]):
                yield from fill(k + 1)
            if i == j:
                left[i] += 2 * m
            else:
                left[i] += m
                left[j] += m
        mult[i][j] = mult[j][i] = 0

    yield from fill(0)


def pants_census(genus: int) -> list[PantsGraph]:
    """Connected trivalent multigraphs on 2g-2 vertices, up to isomorphism."""
    if not 2 <= genus <= MAX_CENSUS_GENUS:
        raise InputError(f"census genus must be between 2 and {MAX_CENSUS_GENUS}")
    n = 2 * genus - 2
    classes = {}
    for m in _trivalent_matrices(n):
        try:
            g = PantsGraph(m)
        except InputError:
            continue
        classes.setdefault(g.canonical_form(), g)
    return [PantsGraph(_matrix_from_form(n, key)) for key in sorted(classes)]


def _matrix_from_form(n, form):
    m = [[0] * n for _ in range(n)]
    it = iter(form)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return tuple(tuple(r) for r in m)


def pants_graph_aut(g: PantsGraph) -> int:
    """Automorphisms as (vertex permutation, permutation of parallel edges and loops)."""
    n = g.n_vertices
    stab = sum(all(g.mult[p[i]][p[j]] == g.mult[i][j] for i in range(n) for j in range(n))
               for p in permutations(range(n)))
    return stab * prod(factorial(g.mult[i][j]) for i in range(n) for j in range(i, n))


# -- curve complex into the commensurator-coset complex ------------------------

def target_simplex(cat: CurveCatalog, curves) -> tuple[bool | None, str | None]:
    """Sufficient test for a curve set to span a simplex of the coset complex.

    Returns ``(True, reason)`` when the curves are pairwise disjoint or some
    catalog curve is disjoint from all of them, else ``(None, None)``.
    """
    curves = list(curves)
    if all(cat.i(a, b) == 0 for a, b in combinations(curves, 2)):
        return True, "disjoint"
    for z in cat.curves:
        if all(cat.i(z, w) == 0 for w in curves):
            return True, z
    return None, None


def coset_embedding(cat: CurveCatalog) -> dict:
    """Map each curve to the coset of its twist commensurator and compare simplices.

    Every patch simplex must be a target simplex; target edges between
    intersecting curves are listed as evidence that the map is not onto.
    """
    rep = curve_patch(cat)
    patch = rep.patch
    missing = [list(s) for s in patch.maximal if target_simplex(cat, s)[0] is not True]
    extra, undetermined = [], []
    for a, b in combinations(cat.curves, 2):
        if cat.i(a, b) == 0:
            continue
        verdict, witness = target_simplex(cat, (a, b))
        if verdict:
            extra.append({"edge": [a, b], "intersection": cat.i(a, b), "witness": witness})
        else:
            undetermined.append([a, b])
    return {
        "vertex_map": {c: f"Comm(<T_{c}>)" for c in cat.curves},
        "embedding_holds": not missing,
        "patch_simplices_not_in_target": missing,
        "target_edges_absent_from_patch": extra,
        "undetermined_pairs": undetermined,
        "isomorphism_refuted": bool(extra),
        "saturated": rep.saturated,
    }
