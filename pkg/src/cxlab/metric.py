"""Barycentric subdivision, unit-length graph metrics and the map from N(X)
vertices to barycentres of maximal simplices."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .complex_core import Complex, build_complex, render, skeleton
from .errors import InputError, TheoremViolation
from .nerve_ops import nerve_of_maximal

INF = math.inf


@dataclass
class MetricGraph:
    """Undirected simple graph with unit edge lengths."""

    vertices: tuple
    neighbours: dict
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_edges(cls, vertices, edges):
        nb = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise InputError("loops are not allowed")
            nb[u].add(v)
            nb[v].add(u)
        return cls(tuple(vertices), {v: tuple(sorted(n)) for v, n in nb.items()})

    @classmethod
    def one_skeleton(cls, cx: Complex):
        edges = [s for s in skeleton(cx, 2) if len(s) == 2]
        return cls.from_edges(cx.vertices, edges)

    @property
    def n_edges(self) -> int:
        return sum(len(n) for n in self.neighbours.values()) // 2

    def distances_from(self, source) -> dict:
        if source not in self.neighbours:
            raise InputError(f"unknown vertex {source!r}")
        if source not in self._cache:
            dist = {source: 0}
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for w in self.neighbours[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            self._cache[source] = dist
        return self._cache[source]

    def distance(self, u, v):
        if v not in self.neighbours:
            raise InputError(f"unknown vertex {v!r}")
        return self.distances_from(u).get(v, INF)

    def is_connected(self) -> bool:
        return not self.vertices or len(self.distances_from(self.vertices[0])) == len(self.vertices)


def graph_distance(g: MetricGraph, u, v):
    return g.distance(u, v)


def barycentric_subdivision(cx: Complex) -> tuple[Complex, dict]:
    """bsd(X): vertices are simplices of X, simplices are inclusion chains.

    Returns the complex and the map simplex -> bsd vertex label.
    """
    faces = skeleton(cx)
    labels = {s: render(s) for s in faces}
    chains = []
    for top in cx.maximal:
        for order in permutations(top):
            chains.append([labels[tuple(sorted(order[:k], key=cx.index.__getitem__))]
                           for k in range(1, len(order) + 1)])
    return build_complex(chains, face_cap=cx.face_cap), labels


def bsd_one_skeleton(cx: Complex) -> tuple[MetricGraph, dict]:
    """1-skeleton of bsd(X) built directly from strict face inclusions."""
    faces = skeleton(cx)
    labels = {s: render(s) for s in faces}
    edges = []
    for s in faces:
        m = cx.mask_of(s)
        sub = (m - 1) & m
        while sub:
            edges.append((labels[cx.simplex_of(sub)], labels[s]))
            sub = (sub - 1) & m
    return MetricGraph.from_edges([labels[s] for s in faces], edges), labels


@dataclass
class PhiReport:
    patch: str
    injective: bool
    one_dense: bool
    adjacency_to_dist2: bool
    dist2_to_adjacency: bool
    image: list
    counterexamples: dict

    def to_json(self) -> dict:
        return {"patch": self.patch, "injective": self.injective, "one_dense": self.one_dense,
                "adjacency_to_dist2": self.adjacency_to_dist2,
                "dist2_to_adjacency": self.dist2_to_adjacency,
                "image": self.image, "counterexamples": self.counterexamples}


def _phi(cx: Complex):
    nx = nerve_of_maximal(cx)
    bsd, labels = bsd_one_skeleton(cx)
    phi = {v: labels[nx.dictionary[v]] for v in nx.nerve.vertices}
    return nx, MetricGraph.one_skeleton(nx.nerve), bsd, phi


def phi_check(cx: Complex, patch: str = "X") -> PhiReport:
    """Check the four quasi-isometry properties of Phi: N(X) -> bsd(X).

    Any failure raises :class:`TheoremViolation`; they hold on every finite complex.
    """
    nx, ng, bsd, phi = _phi(cx)
    bad: dict = {}
    if len(set(phi.values())) != len(phi):
        bad["injective"] = sorted(phi)
    image = set(phi.values())
    for a in bsd.vertices:
        if a not in image and not image.intersection(bsd.neighbours[a]):
            bad.setdefault("one_dense", []).append(a)
            break
    verts = nx.nerve.vertices
    for i, u in enumerate(verts):
        du = bsd.distances_from(phi[u])
        for v in verts[i + 1:]:
            adjacent = v in ng.neighbours[u]
            close = du.get(phi[v], INF) <= 2
            if adjacent and not close:
                bad.setdefault("adjacency_to_dist2", []).append([u, v])
            if close and not adjacent:
                bad.setdefault("dist2_to_adjacency", []).append([u, v])
    report = PhiReport(patch, "injective" not in bad, "one_dense" not in bad,
                       "adjacency_to_dist2" not in bad, "dist2_to_adjacency" not in bad,
                       sorted(image), bad)
    if bad:
        raise TheoremViolation("Phi properties (1)-(4)", {"patch": patch, **bad})
    return report


def qi_constants(cx: Complex, sample="all", seed: int = 0) -> dict:
    """Empirical distortion of Phi on pairs of N(X) vertices.

    ``multiplicative`` is the least lambda for which
    d_N / lambda <= d_bsd(Phi u, Phi v) <= lambda * d_N holds with zero
    additive slack; ``additive`` is then the least mu (zero by construction).
    ``additive_at_unit`` is the least mu that works with lambda = 1.
    ``sample`` is ``"all"`` or a number of random pairs drawn with ``seed``.
    """
    nx, ng, bsd, phi = _phi(cx)
    verts = nx.nerve.vertices
    pairs = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]]
    if sample != "all":
        rng = random.Random(seed)
        pairs = sorted(rng.sample(pairs, min(int(sample), len(pairs))))
    lam = Fraction(1)
    unit_mu = 0
    disconnected = 0
    for u, v in pairs:
        dn, db = ng.distance(u, v), bsd.distance(phi[u], phi[v])
        if dn == INF or db == INF:
            if (dn == INF) != (db == INF):
                raise TheoremViolation("connectivity is preserved by Phi", [u, v])
            disconnected += 1
            continue
        lam = max(lam, Fraction(db, dn), Fraction(dn, db))
        unit_mu = max(unit_mu, abs(db - dn))
    return {"multiplicative": _num(lam), "additive": 0, "additive_at_unit": unit_mu,
            "pairs": len(pairs), "disconnected_pairs": disconnected,
            "nerve_connected": ng.is_connected(), "bsd_connected": bsd.is_connected()}


def _num(f: Fraction):
    return f.numerator if f.denominator == 1 else float(f)
