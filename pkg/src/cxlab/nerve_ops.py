"""Nerves of covers, the star families Sigma_x, and reconstruction of a
complex from the nerve of its nerve."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import _kernels
from .complex_core import (DEFAULT_FACE_CAP, Complex, Simplex, build_complex,
                           is_simplex, render, skeleton)
from .errors import ConditionFailure, FaceCapExceeded, InputError, TheoremViolation


@dataclass(frozen=True)
class SigmaStar:
    """Maximal simplices containing ``vertex``."""

    vertex: str
    members: tuple[Simplex, ...]


@dataclass(frozen=True)
class NerveComplex:
    base: Complex
    nerve: Complex
    dictionary: dict  # nerve vertex label -> base maximal simplex

    def label_of(self, simplex: Iterable[str]) -> str:
        return render(tuple(sorted(simplex, key=self.base.index.__getitem__)))


@dataclass(frozen=True)
class ConditionReport:
    separation_holds: bool
    separation_witness: tuple[str, str] | None
    extension_holds: bool | None
    extension_witness: dict | None
    extension_error: str | None = None

    def to_json(self) -> dict:
        return {
            "separation": {"holds": self.separation_holds,
                           "witness": list(self.separation_witness) if self.separation_witness else None},
            "extension": {"holds": self.extension_holds, "witness": self.extension_witness,
                          "error": self.extension_error},
        }


def _sigma_masks(cx: Complex) -> list[int]:
    """Per vertex, the bitmask of maximal-simplex indices containing it."""
    sig = [0] * cx.n_vertices
    for j, m in enumerate(cx.masks):
        for i in range(cx.n_vertices):
            if m >> i & 1:
                sig[i] |= 1 << j
    return sig


def sigma(cx: Complex, x: str) -> SigmaStar:
    bit = cx.mask_of([x])
    return SigmaStar(x, tuple(s for s, m in zip(cx.maximal, cx.masks) if m & bit))


def nerve_of_cover(sets: Sequence[Iterable], labels: Sequence[str] | None = None,
                   face_cap: int = DEFAULT_FACE_CAP) -> Complex:
    """Nerve of a finite family of non-empty sets.

    One vertex per set (``labels`` or ``U0``, ``U1``, ...); a subfamily spans
    a simplex iff its members share a point.
    """
    sets = [list(s) for s in sets]
    if not sets:
        raise InputError("cover is empty")
    if any(not s for s in sets):
        raise InputError("cover contains an empty set")
    if labels is None:
        width = len(str(len(sets) - 1))
        labels = [f"U{i:0{width}d}" for i in range(len(sets))]
    if len(set(labels)) != len(labels):
        raise InputError("cover labels must be distinct")
    universe = {v: i for i, v in enumerate(sorted({str(v) for s in sets for v in s}))}
    masks = [sum(1 << universe[str(v)] for v in s) for s in sets]
    try:
        families, _ = _kernels.nerve_maximal_families(masks, face_cap)
    except OverflowError:
        raise FaceCapExceeded("nerve enumeration", face_cap) from None
    gens = [[labels[j] for j in range(len(sets)) if fam >> j & 1] for fam in families]
    return build_complex(gens, face_cap=face_cap)


def nerve_of_maximal(cx: Complex) -> NerveComplex:
    labels = [render(s) for s in cx.maximal]
    nerve = nerve_of_cover(cx.maximal, labels, face_cap=cx.face_cap)
    return NerveComplex(cx, nerve, dict(zip(labels, cx.maximal)))


def check_conditions(cx: Complex) -> ConditionReport:
    """Exhaustively test separation and extension, returning the first witnesses."""
    sep_witness = separation_witness(cx)
    ext_holds, ext_witness, ext_error = True, None, None
    try:
        faces = skeleton(cx)
    except FaceCapExceeded as exc:
        ext_holds, ext_error = None, str(exc)
        faces = []
    for k in faces:
        inter = _star_intersection(cx, cx.mask_of(k))
        extra = inter & ~cx.mask_of(k)
        if extra:
            x = cx.vertices[(extra & -extra).bit_length() - 1]
            ext_holds, ext_witness = False, {"K": list(k), "x": x}
            break
    return ConditionReport(sep_witness is None, sep_witness, ext_holds, ext_witness, ext_error)


def _star_intersection(cx: Complex, mask: int) -> int:
    inter = -1
    for m in cx.masks:
        if m & mask == mask:
            inter &= m
    if inter == -1:
        raise InputError(f"{cx.simplex_of(mask)} is not a simplex")
    return inter


@dataclass(frozen=True)
class BetaResult:
    mapping: dict  # vertex of X -> vertex label of N(N(X))
    first: NerveComplex
    second: NerveComplex
    isomorphic: bool

    def to_json(self) -> dict:
        return {"isomorphic": self.isomorphic,
                "beta": dict(sorted(self.mapping.items())),
                "nn_vertices": self.second.nerve.n_vertices,
                "nn_maximal_simplices": [list(s) for s in self.second.nerve.maximal]}


def beta_map(cx: Complex) -> BetaResult:
    """The map x -> Sigma_x into N(N(X)), verified to be a simplicial isomorphism."""
    report = separation_witness(cx)
    if report is not None:
        raise ConditionFailure("separation", {"x": report[0], "y": report[1]})
    first = nerve_of_maximal(cx)
    second = nerve_of_maximal(first.nerve)
    by_family = {fam: label for label, fam in second.dictionary.items()}
    mapping = {}
    for x in cx.vertices:
        fam = tuple(sorted(render(s) for s in sigma(cx, x).members))
        label = by_family.get(fam)
        if label is None:
            raise TheoremViolation("Sigma_x is a maximal simplex of N(X) under separation", {"x": x})
        mapping[x] = label
    if len(set(mapping.values())) != len(mapping):
        raise TheoremViolation("beta is injective under separation", mapping)
    if set(mapping.values()) != set(second.nerve.vertices):
        raise TheoremViolation("beta is surjective", sorted(set(second.nerve.vertices) - set(mapping.values())))
    inverse = {v: k for k, v in mapping.items()}
    for s in cx.maximal:
        if not is_simplex(second.nerve, [mapping[v] for v in s]):
            raise TheoremViolation("beta is simplicial", list(s))
    for s in second.nerve.maximal:
        if not is_simplex(cx, [inverse[v] for v in s]):
            raise TheoremViolation("beta inverse is simplicial", list(s))
    return BetaResult(mapping, first, second, True)


def separation_witness(cx: Complex) -> tuple[str, str] | None:
    """First ordered pair (x, y), x != y, with Sigma_x contained in Sigma_y."""
    sig = _sigma_masks(cx)
    for x in range(cx.n_vertices):
        for y in range(cx.n_vertices):
            if x != y and sig[x] & ~sig[y] == 0:
                return cx.vertices[x], cx.vertices[y]
    return None


@dataclass(frozen=True)
class WitnessResult:
    vertex: str
    unique: bool
    all_sigma_maximal: bool


def max_simplex_witness(cx: Complex, family: Iterable[Iterable[str]]) -> WitnessResult:
    """A vertex x with Sigma_x equal to the given maximal simplex of N(X).

    ``family`` is a collection of maximal simplices of ``cx``.  The least
    label wins when several vertices qualify.
    """
    nx = nerve_of_maximal(cx)
    target = tuple(sorted(nx.label_of(s) for s in family))
    if target not in set(nx.nerve.maximal):
        raise InputError(f"{list(target)} is not a maximal simplex of N(X)")
    sig = _sigma_masks(cx)
    lab = {j: render(s) for j, s in enumerate(cx.maximal)}
    fams = [tuple(sorted(lab[j] for j in range(len(cx.maximal)) if sig[i] >> j & 1))
            for i in range(cx.n_vertices)]
    hits = [cx.vertices[i] for i in range(cx.n_vertices) if fams[i] == target]
    if not hits:
        raise TheoremViolation("every maximal simplex of N(X) is some Sigma_x", list(target))
    maximal = set(nx.nerve.maximal)
    all_max = all(f in maximal for f in fams)
    if not all_max and separation_witness(cx) is None:
        raise TheoremViolation("under separation every Sigma_y is maximal in N(X)",
                               [cx.vertices[i] for i, f in enumerate(fams) if f not in maximal])
    return WitnessResult(hits[0], len(hits) == 1, all_max)


@dataclass(frozen=True)
class TauIntersection:
    tau: Simplex
    intersection: Simplex
    exact: bool


def sigma_tau_intersection(cx: Complex, tau: Iterable[str]) -> TauIntersection:
    """Common intersection of the maximal simplices containing ``tau``.

    ``exact`` is False when it is strictly larger than ``tau`` (an extension
    condition violation).
    """
    mask = cx.mask_of(tau)
    inter = _star_intersection(cx, mask)
    return TauIntersection(cx.simplex_of(mask), cx.simplex_of(inter), inter == mask)


def star_family_audit(cx: Complex, max_arity: int = 4) -> dict:
    """Violations of the star-family lemmas, quantified exhaustively.

    * ``simplex_iff_stars_meet``: vertex tuples up to ``max_arity`` where being
      a simplex disagrees with the stars having a common member.
    * ``nerve_maximal_is_star``: maximal simplices of N(X) not of the form Sigma_x.
    * ``star_intersection_not_tau``: simplices tau whose star intersection
      exceeds tau (expected exactly when extension fails).
    """
    sig = _sigma_masks(cx)
    out = {"simplex_iff_stars_meet": [], "nerve_maximal_is_star": [],
           "star_intersection_not_tau": []}
    for r in range(1, min(max_arity, cx.n_vertices) + 1):
        for tup in combinations(range(cx.n_vertices), r):
            meet = -1
            for i in tup:
                meet &= sig[i]
            simplex = is_simplex(cx, [cx.vertices[i] for i in tup])
            if simplex != (meet != 0):
                out["simplex_iff_stars_meet"].append([cx.vertices[i] for i in tup])
    nx = nerve_of_maximal(cx)
    lab = [render(s) for s in cx.maximal]
    stars = {tuple(sorted(lab[j] for j in range(len(lab)) if sig[i] >> j & 1))
             for i in range(cx.n_vertices)}
    for s in nx.nerve.maximal:
        if s not in stars:
            out["nerve_maximal_is_star"].append(list(s))
    for tau in skeleton(cx):
        res = sigma_tau_intersection(cx, tau)
        if not res.exact:
            out["star_intersection_not_tau"].append(
                {"tau": list(tau), "intersection": list(res.intersection)})
    return out
