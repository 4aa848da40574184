"""Coset intersection complexes over computable group-pair models.

Three backends ship:

* :class:`AbelianBackend` -- Z^m with a family of sublattices; conjugation is
  trivial, so a coset tuple spans a simplex iff the subgroups it names
  intersect in a lattice of rank >= 1.
* :class:`NerveBackend` -- one coset per maximal simplex Q of a finite
  complex, standing for g Stab(P_t) with g(P_t) = Q.  The stabilizer's free
  abelian part is the coordinate lattice of Q in Z^V; infiniteness means the
  lattice intersection has rank >= 1.
* :class:`MultitwistBackend` -- the same cosets, with subgroups generated by
  twists along Q; infiniteness means the twist supports share a curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .complex_core import DEFAULT_FACE_CAP, Complex, build_complex, is_simplex, render
from .errors import FaceCapExceeded, InputError, TheoremViolation
from .lattice import LatticeSubgroup, coset_equal_lattice, lattice_intersection
from .nerve_ops import nerve_of_maximal
from .surface_models import CurveCatalog


@dataclass(frozen=True, order=True)
class CosetVertex:
    index: int
    representative: tuple
    label: str = field(compare=False)


class GroupPairBackend:
    name = "abstract"
    criterion = ""
    annotations: dict = {}

    def enumerate_vertices(self, radius: int) -> list[CosetVertex]:
        raise NotImplementedError

    def same_coset(self, u: CosetVertex, v: CosetVertex) -> bool:
        raise NotImplementedError

    def infinite_intersection(self, vertices) -> bool:
        raise NotImplementedError


class AbelianBackend(GroupPairBackend):
    name = "abelian"
    criterion = "intersection of the named sublattices has rank >= 1"
    annotations = {"commensurator": "G (conjugation is trivial)", "reduced": False}

    def __init__(self, ambient_rank: int, subgroups):
        self.ambient_rank = ambient_rank
        self.subgroups = [s if isinstance(s, LatticeSubgroup)
                          else LatticeSubgroup.from_generators(ambient_rank, s) for s in subgroups]
        if not self.subgroups:
            raise InputError("at least one subgroup is required")
        for s in self.subgroups:
            if s.ambient_rank != ambient_rank:
                raise InputError("subgroup rank mismatch")
            if s.rank == 0:
                raise InputError("subgroups must be infinite")

    def vertex(self, index: int, g) -> CosetVertex:
        rep = self.subgroups[index].reduce(g)
        return CosetVertex(index, rep, f"A{index}+({','.join(map(str, rep))})")

    def enumerate_vertices(self, radius):
        out = {}
        for i in range(len(self.subgroups)):
            for g in product(range(-radius, radius + 1), repeat=self.ambient_rank):
                v = self.vertex(i, g)
                out.setdefault((v.index, v.representative), v)
        return sorted(out.values())

    def same_coset(self, u, v):
        return u.index == v.index and coset_equal_lattice(u.representative, v.representative,
                                                          self.subgroups[u.index])

    def infinite_intersection(self, vertices):
        indices = sorted({v.index for v in vertices})
        inter = self.subgroups[indices[0]]
        for i in indices[1:]:
            inter = lattice_intersection(inter, self.subgroups[i])
        return inter.rank >= 1


def _orbit_index(cx: Complex) -> dict:
    from .automorphisms import automorphism_group  # deferred: heavy import

    aut = automorphism_group(cx)
    lookup = {m: j for j, m in enumerate(cx.masks)}
    orbit = {}
    t = 0
    for j, m in enumerate(cx.masks):
        if j in orbit:
            continue
        queue = [j]
        orbit[j] = t
        for k in queue:
            for g in aut.group.generators:
                img = 0
                mm = cx.masks[k]
                for i in range(cx.n_vertices):
                    if mm >> i & 1:
                        img |= 1 << g[i]
                nxt = lookup[img]
                if nxt not in orbit:
                    orbit[nxt] = t
                    queue.append(nxt)
        t += 1
    return {cx.maximal[j]: o for j, o in orbit.items()}


class _PantsModel(GroupPairBackend):
    """Shared vertex set: maximal simplices of a reference complex."""

    def __init__(self, reference: Complex):
        self.reference = reference
        self._orbits = _orbit_index(reference)

    def enumerate_vertices(self, radius=0):
        return sorted(CosetVertex(self._orbits[q], q, render(q)) for q in self.reference.maximal)

    def same_coset(self, u, v):
        return u.representative == v.representative


class NerveBackend(_PantsModel):
    name = "nerve"
    criterion = "stabilizer lattices of the maximal simplices meet in rank >= 1"
    annotations = {"commensurator": "Stab(P_i)", "reduced": True}

    def __init__(self, reference):
        super().__init__(reference)
        n = reference.n_vertices
        self._lattices = {
            q: LatticeSubgroup.from_generators(
                n, [[1 if k == reference.index[a] else 0 for k in range(n)] for a in q])
            for q in reference.maximal}

    def infinite_intersection(self, vertices):
        lat = None
        for v in vertices:
            other = self._lattices[v.representative]
            lat = other if lat is None else lattice_intersection(lat, other)
        return lat.rank >= 1


class MultitwistBackend(_PantsModel):
    name = "multitwist"
    criterion = "twist supports share a curve"
    annotations = {"commensurator": "Stab(P_i)", "reduced": True}

    def infinite_intersection(self, vertices):
        return bool(multitwist_subgroup_intersection(self.reference,
                                                     [v.representative for v in vertices]))


@dataclass(frozen=True)
class CIC:
    complex: Complex
    vertices: tuple[CosetVertex, ...]
    provenance: dict

    def to_json(self) -> dict:
        return {"complex": self.complex.to_json(), "provenance": self.provenance,
                "vertices": [v.label for v in self.vertices]}


def build_cic(backend: GroupPairBackend, radius: int = 1, max_arity: int = 4,
              vertex_cap: int = 2000, face_cap: int = DEFAULT_FACE_CAP) -> CIC:
    """Coset intersection complex of ``backend``.

    Tuples up to ``max_arity`` are tested with the backend predicate; larger
    sets are accepted when every ``max_arity``-subset passes (the inferred
    rule).  Provenance records how many simplices each rule produced.
    """
    if max_arity < 1:
        raise InputError("max_arity must be >= 1")
    raw = backend.enumerate_vertices(radius)
    verts: list[CosetVertex] = []
    for v in raw:
        if not any(backend.same_coset(v, w) for w in verts):
            verts.append(v)
    if len(verts) > vertex_cap:
        raise FaceCapExceeded("coset vertex enumeration", vertex_cap)
    if len({v.label for v in verts}) != len(verts):
        raise TheoremViolation("coset labels are canonical", [v.label for v in verts])
    cache: dict = {}

    def passes(idx):
        key = frozenset(idx)
        if key not in cache:
            cache[key] = backend.infinite_intersection([verts[i] for i in sorted(key)])
        return cache[key]

    simplices = []
    counts = {"predicate": 0, "inferred": 0}
    stack = [(i,) for i in range(len(verts) - 1, -1, -1)]
    while stack:
        fam = stack.pop()
        if len(fam) <= max_arity and not passes(fam):
            continue
        simplices.append(fam)
        counts["predicate" if len(fam) <= max_arity else "inferred"] += 1
        if len(simplices) > face_cap:
            raise FaceCapExceeded("coset intersection complex", face_cap)
        for j in range(len(verts) - 1, fam[-1], -1):
            nxt = fam + (j,)
            if len(nxt) > max_arity and not all(
                    passes(sub + (j,)) for sub in combinations(fam, max_arity - 1)):
                continue
            stack.append(nxt)
    for fam in simplices:
        for k in range(1, len(fam)):
            for sub in combinations(fam, k):
                if k <= max_arity and not passes(sub):
                    raise TheoremViolation("infinite_intersection is monotone", [verts[i].label for i in fam])
    cx = build_complex([[verts[i].label for i in fam] for fam in simplices], face_cap=face_cap)
    prov = {"backend": backend.name, "criterion": backend.criterion, "radius": radius,
            "max_arity": max_arity, "simplices_by_rule": counts,
            "annotations": dict(backend.annotations)}
    return CIC(cx, tuple(verts), prov)


# -- multitwists -------------------------------------------------------------

@dataclass(frozen=True)
class MultiTwist:
    support: tuple[str, ...]
    exponents: tuple[tuple[str, int], ...]

    @classmethod
    def create(cls, cat: CurveCatalog, exponents: dict) -> "MultiTwist":
        support = tuple(sorted(exponents, key=cat.index.__getitem__))
        if any(e == 0 for e in exponents.values()):
            raise InputError("multitwist exponents must be non-zero")
        if any(cat.i(a, b) for a, b in combinations(support, 2)):
            raise InputError("multitwist support must be pairwise disjoint")
        return cls(support, tuple((a, int(exponents[a])) for a in support))

    def as_dict(self) -> dict:
        return dict(self.exponents)


def multitwist_conjugate(cat: CurveCatalog, f: dict, w: MultiTwist) -> MultiTwist:
    """f T f^-1 for an intersection-preserving relabeling f."""
    if not cat.preserves(f):
        raise InputError("relabeling does not preserve intersection numbers")
    return MultiTwist.create(cat, {f[a]: e for a, e in w.exponents})


def multitwist_subgroup_intersection(reference: Complex, supports) -> tuple[str, ...]:
    """Common twist support of the subgroups generated along each simplex."""
    supports = [tuple(q) for q in supports]
    if not supports:
        raise InputError("no supports given")
    for q in supports:
        if not q or not is_simplex(reference, q):
            raise InputError(f"{list(q)} is not a simplex of the reference patch")
    common = set(supports[0]).intersection(*supports[1:])
    return tuple(sorted(common, key=reference.index.__getitem__))


def equivalence_audit(cx: Complex, max_arity: int = 4) -> dict:
    """Compare the stabilizer, multitwist and nerve simplex predicates on all
    tuples of maximal simplices up to ``max_arity``."""
    nerve_backend = NerveBackend(cx)
    twist_backend = MultitwistBackend(cx)
    nx = nerve_of_maximal(cx)
    verts = nerve_backend.enumerate_vertices()
    checked = 0
    for k in range(1, min(max_arity, len(verts)) + 1):
        for tup in combinations(verts, k):
            stab = nerve_backend.infinite_intersection(tup)
            twist = twist_backend.infinite_intersection(tup)
            inter = is_simplex(nx.nerve, [v.label for v in tup])
            checked += 1
            if not stab == twist == inter:
                raise TheoremViolation("stabilizer, multitwist and nerve predicates agree",
                                       {"tuple": [v.label for v in tup], "stabilizer": stab,
                                        "multitwist": twist, "nerve": inter})
    return {"tuples_checked": checked, "max_arity": max_arity, "disagreements": 0,
            "agree": True}
