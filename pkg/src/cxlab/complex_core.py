"""Finite abstract simplicial complexes stored by their maximal simplices.

Simplices are tuples of vertex labels in canonical (sorted) order.  A
simplex's *rank* is its number of vertices; its topological dimension is
``rank - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import _kernels
from .errors import FaceCapExceeded, InputError

DEFAULT_FACE_CAP = 10**6

Simplex = tuple  # tuple[str, ...], sorted


def render(simplex: Iterable[str]) -> str:
    """Stable human-readable label for a simplex, e.g. ``{a,b}``."""
    return "{" + ",".join(simplex) + "}"


def dimension(simplex: Simplex) -> int:
    return len(simplex) - 1


@dataclass(frozen=True)
class Complex:
    """Immutable complex; build with :func:`build_complex`."""

    vertices: tuple[str, ...]
    maximal: tuple[Simplex, ...]
    flag: bool = False
    face_cap: int = DEFAULT_FACE_CAP
    index: dict = field(default_factory=dict, compare=False, repr=False)
    masks: tuple[int, ...] = field(default=(), compare=False, repr=False)

    # -- masks -------------------------------------------------------------
    def mask_of(self, simplex: Iterable[str]) -> int:
        m = 0
        for v in simplex:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise InputError(f"unknown vertex {v!r}") from None
        return m

    def simplex_of(self, mask: int) -> Simplex:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(self.vertices[i])
            mask >>= 1
            i += 1
        return tuple(out)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def rank(self) -> int:
        """Largest simplex cardinality."""
        return max(len(s) for s in self.maximal)

    def adjacency(self) -> list[int]:
        """Neighbour masks of the 1-skeleton."""
        adj = [0] * len(self.vertices)
        for m in self.masks:
            rest = m
            while rest:
                low = rest & -rest
                i = low.bit_length() - 1
                adj[i] |= m & ~low
                rest ^= low
        return adj

    def face_count_bound(self) -> int:
        return sum((1 << len(s)) - 1 for s in self.maximal)

    def relabel(self, mapping: dict) -> "Complex":
        return build_complex([[mapping[v] for v in s] for s in self.maximal],
                             face_cap=self.face_cap, _flag_marker=self.flag)

    def to_json(self) -> dict:
        return {"flag": self.flag, "maximal_simplices": [list(s) for s in self.maximal]}


def _canonical_key(index):
    return lambda s: tuple(index[v] for v in s)


def build_complex(generators: Sequence[Sequence], flag_mode: bool = False, *,
                  face_cap: int = DEFAULT_FACE_CAP, _flag_marker=None) -> Complex:
    """Build a complex from generating simplices.

    With ``flag_mode`` the result is the clique complex of the union of the
    generators' 1-skeleta; otherwise the generators are absorbed into their
    inclusion-maximal members.
    """
    if not generators:
        raise InputError("generator list is empty")
    gens = []
    for g in generators:
        g = [str(v) for v in g]
        if not g:
            raise InputError("empty simplex in generator list")
        if len(set(g)) != len(g):
            raise InputError(f"duplicate vertex in generator {g}")
        gens.append(g)
    vertices = tuple(sorted({v for g in gens for v in g}))
    index = {v: i for i, v in enumerate(vertices)}
    gen_masks = {sum(1 << index[v] for v in g) for g in gens}

    if flag_mode:
        adj = [0] * len(vertices)
        for m in gen_masks:
            for i in range(len(vertices)):
                if m >> i & 1:
                    adj[i] |= m & ~(1 << i)
        max_masks = _kernels.maximal_cliques(adj)
    else:
        ordered = sorted(gen_masks, key=lambda m: -m.bit_count())
        max_masks = []
        for m in ordered:
            if not any(m & k == m for k in max_masks):
                max_masks.append(m)

    cx = Complex(vertices, (), bool(flag_mode if _flag_marker is None else _flag_marker),
                 face_cap, index, ())
    simplices = sorted((cx.simplex_of(m) for m in max_masks), key=_canonical_key(index))
    masks = tuple(cx.mask_of(s) for s in simplices)
    _assert_antichain(masks)
    return Complex(vertices, tuple(simplices), cx.flag, face_cap, index, masks)


def _assert_antichain(masks):
    for a in masks:
        for b in masks:
            if a != b and a & b == a:
                raise AssertionError("maximal simplices do not form an antichain")


def from_json(data: dict, face_cap: int = DEFAULT_FACE_CAP) -> Complex:
    try:
        flag = bool(data.get("flag", False))
        gens = data["maximal_simplices"]
    except (AttributeError, KeyError) as exc:
        raise InputError(f"complex file missing key {exc}") from None
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise InputError("maximal_simplices must be a list of lists")
    return build_complex(gens, flag_mode=flag, face_cap=face_cap)


def load_complex(path, face_cap: int = DEFAULT_FACE_CAP) -> Complex:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return from_json(data, face_cap)


def dump_complex(cx: Complex, path) -> None:
    with open(path, "w") as fh:
        json.dump(cx.to_json(), fh, sort_keys=True, indent=1)
        fh.write("\n")


def maximal_simplices(cx: Complex) -> list[Simplex]:
    return list(cx.maximal)


def is_simplex(cx: Complex, simplex: Iterable[str]) -> bool:
    m = cx.mask_of(simplex)
    if m == 0:
        raise InputError("empty simplex")
    return any(m & k == m for k in cx.masks)


def _face_masks(cx: Complex, max_rank: int | None = None) -> set[int]:
    seen: set[int] = set()
    for s, m in zip(cx.maximal, cx.masks):
        top = len(s) if max_rank is None else min(len(s), max_rank)
        ids = [cx.index[v] for v in s]
        for r in range(1, top + 1):
            for sub in combinations(ids, r):
                seen.add(sum(1 << i for i in sub))
            if len(seen) > cx.face_cap:
                raise FaceCapExceeded("face enumeration", cx.face_cap)
    return seen


def skeleton(cx: Complex, r: int | None = None) -> list[Simplex]:
    """All simplices of rank at most ``r`` (all simplices when ``r`` is None).

    Ordered by rank, then lexicographically by vertex ids.
    """
    if r is not None and r < 1:
        raise InputError("skeleton rank must be >= 1")
    faces = [cx.simplex_of(m) for m in _face_masks(cx, r)]
    key = _canonical_key(cx.index)
    faces.sort(key=lambda s: (len(s), key(s)))
    return faces


def faces_by_rank(cx: Complex) -> dict[int, list[Simplex]]:
    out: dict[int, list[Simplex]] = {}
    for s in skeleton(cx):
        out.setdefault(len(s), []).append(s)
    return out


def disjoint_union(a: Complex, b: Complex, prefixes=("0:", "1:")) -> Complex:
    gens = [[prefixes[0] + v for v in s] for s in a.maximal]
    gens += [[prefixes[1] + v for v in s] for s in b.maximal]
    return build_complex(gens, face_cap=max(a.face_cap, b.face_cap))


def components(cx: Complex) -> list[tuple[str, ...]]:
    """Vertex sets of connected components, in canonical order."""
    adj = cx.adjacency()
    left = (1 << cx.n_vertices) - 1
    out = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~comp
            comp |= nxt
        out.append(cx.simplex_of(comp))
        left &= ~comp
    return out
