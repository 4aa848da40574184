"""Simplicial automorphism groups and the induced action on N(X).

Permutations are tuples ``p`` over vertex indices with ``p[i]`` the image of
vertex ``i``.  Products compose right to left: ``mul(p, q)`` applies ``q``
first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .complex_core import Complex, disjoint_union
from .errors import ConditionFailure, FaceCapExceeded, InputError, TheoremViolation
from .nerve_ops import check_conditions, nerve_of_maximal, sigma

DEFAULT_NODE_CAP = 2 * 10**5


def mul(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity(n):
    return tuple(range(n))


class PermutationGroup:
    """Permutation group stored as a stabilizer chain (deterministic Schreier-Sims)."""

    def __init__(self, degree: int, generators, base_hint=None):
        self.degree = degree
        self.generators = [tuple(g) for g in generators if tuple(g) != identity(degree)]
        self._hint = list(base_hint) if base_hint is not None else list(range(degree))
        self._hint += [i for i in range(degree) if i not in set(self._hint)]
        self.base: list[int] = []
        self.strong: list[list[tuple]] = []
        self.transversals: list[dict] = []
        self._schreier_sims()

    def _moved_point(self, g):
        for b in self._hint:
            if g[b] != b:
                return b
        raise AssertionError("identity has no moved point")

    def _transversal(self, level):
        b = self.base[level]
        trans = {b: identity(self.degree)}
        queue = [b]
        for p in queue:
            for s in self.strong[level]:
                q = s[p]
                if q not in trans:
                    trans[q] = mul(s, trans[p])
                    queue.append(q)
        return trans

    def _sift(self, g, start):
        for j in range(start, len(self.base)):
            u = self.transversals[j].get(g[self.base[j]])
            if u is None:
                return g, j
            g = mul(inverse(u), g)
        return g, len(self.base)

    def _schreier_sims(self):
        ident = identity(self.degree)
        if not self.generators:
            return
        self.base = [self._moved_point(self.generators[0])]
        self.strong = [list(self.generators)]
        self.transversals = [None]
        for g in self.generators:
            while all(g[b] == b for b in self.base):
                self.base.append(self._moved_point(g))
                self.strong.append([])
                self.transversals.append(None)
        # each level holds the generators fixing the earlier base points
        for j in range(1, len(self.base)):
            self.strong[j] = [g for g in self.generators
                              if all(g[b] == b for b in self.base[:j])]
        i = len(self.base) - 1
        while i >= 0:
            self.transversals[i] = self._transversal(i)
            restart = None
            trans = self.transversals[i]
            for p, u in list(trans.items()):
                for s in self.strong[i]:
                    h = mul(inverse(trans[s[p]]), mul(s, u))
                    r, j = self._sift(h, i + 1)
                    if r == ident:
                        continue
                    if j == len(self.base):
                        self.base.append(self._moved_point(r))
                        self.strong.append([])
                        self.transversals.append(None)
                    for lv in range(i + 1, j + 1):
                        self.strong[lv].append(r)
                    restart = j
                    break
                if restart is not None:
                    break
            i = i - 1 if restart is None else restart

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        r, _ = self._sift(g, 0)
        return r == identity(self.degree)

    def elements(self):
        """Every group element, as products of transversal representatives."""
        if not self.base:
            yield identity(self.degree)
            return
        for reps in product(*(list(t.values()) for t in self.transversals)):
            g = identity(self.degree)
            for u in reversed(reps):
                g = mul(u, g)
            yield g


# -- search engine -----------------------------------------------------------

@dataclass
class _Structure:
    n: int
    adj: list
    maxmasks: list
    maxset: set
    incident: list = field(default_factory=list)

    @classmethod
    def of(cls, cx: Complex):
        inc = [[] for _ in range(cx.n_vertices)]
        for j, m in enumerate(cx.masks):
            for i in range(cx.n_vertices):
                if m >> i & 1:
                    inc[i].append(j)
        return cls(cx.n_vertices, cx.adjacency(), list(cx.masks), set(cx.masks), inc)

    def members(self, j):
        m = self.maxmasks[j]
        return [i for i in range(self.n) if m >> i & 1]

    def initial_colors(self):
        keys = [(self.adj[v].bit_count(), tuple(sorted(self.maxmasks[j].bit_count()
                                                        for j in self.incident[v])))
                for v in range(self.n)]
        table = {k: c for c, k in enumerate(sorted(set(keys)))}
        return [table[k] for k in keys]

    def _keys(self, colors):
        simplex_colors = [tuple(sorted(colors[i] for i in self.members(j)))
                          for j in range(len(self.maxmasks))]
        keys = []
        for v in range(self.n):
            nb = self.adj[v]
            keys.append((colors[v],
                         tuple(sorted(colors[u] for u in range(self.n) if nb >> u & 1)),
                         tuple(sorted(simplex_colors[j] for j in self.incident[v]))))
        return keys

    def joint_refine(self, cs, ct):
        """Refine two colorings in lockstep; None if they become incompatible."""
        while True:
            ks, kt = self._keys(cs), self._keys(ct)
            if Counter(ks) != Counter(kt):
                return None
            table = {k: c for c, k in enumerate(sorted(set(ks)))}
            ns, nt = [table[k] for k in ks], [table[k] for k in kt]
            if len(table) == len(set(cs)):
                return ns, nt
            cs, ct = ns, nt

    def is_automorphism(self, p) -> bool:
        for m in self.maxmasks:
            img = 0
            for i in range(self.n):
                if m >> i & 1:
                    img |= 1 << p[i]
            if img not in self.maxset:
                return False
        return True


class _Search:
    def __init__(self, struct: _Structure, node_cap: int):
        self.s = struct
        self.nodes = 0
        self.node_cap = node_cap

    def find(self, cs, ct, mapping):
        """Extend ``mapping`` (source -> target) to a color-respecting automorphism."""
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise FaceCapExceeded("automorphism search", self.node_cap)
        n = self.s.n
        cells = Counter(cs)
        free = [v for v in range(n) if v not in mapping]
        if not free:
            p = tuple(mapping[i] for i in range(n))
            return p if self.s.is_automorphism(p) else None
        if all(cells[cs[v]] == 1 for v in free):
            where = {c: w for w, c in enumerate(ct)}
            p = tuple(mapping[i] if i in mapping else where[cs[i]] for i in range(n))
            return p if self.s.is_automorphism(p) else None
        v = min(free, key=lambda u: (cells[cs[u]] == 1, cells[cs[u]], u))
        image = set(mapping.values())
        for w in range(n):
            if ct[w] != cs[v] or w in image:
                continue
            ok = True
            for a, b in mapping.items():
                if (self.s.adj[v] >> a & 1) != (self.s.adj[w] >> b & 1):
                    ok = False
                    break
            if not ok:
                continue
            tag = max(cs) + 1
            ns, nt = list(cs), list(ct)
            ns[v] = nt[w] = tag
            refined = self.s.joint_refine(ns, nt)
            if refined is None:
                continue
            mapping[v] = w
            found = self.find(refined[0], refined[1], mapping)
            del mapping[v]
            if found is not None:
                return found
        return None


def _individualize(struct, colors, pairs):
    cs, ct = list(colors), list(colors)
    top = max(colors) + 1
    for k, (v, w) in enumerate(pairs):
        cs[v] = ct[w] = top + k
    return struct.joint_refine(cs, ct)


def _automorphism_generators(struct: _Structure, node_cap: int):
    colors = struct.joint_refine(struct.initial_colors(), struct.initial_colors())[0]
    search = _Search(struct, node_cap)
    # base: repeatedly individualize the first vertex of the smallest non-trivial cell
    base = []
    cells_at = []
    cur = colors
    while True:
        counts = Counter(cur)
        open_cells = [v for v in range(struct.n) if counts[cur[v]] > 1]
        if not open_cells:
            break
        b = min(open_cells, key=lambda u: (counts[cur[u]], u))
        cells_at.append([c for c in range(struct.n) if cur[c] == cur[b]])
        base.append(b)
        cur = _individualize(struct, colors, [(x, x) for x in base])[0]
    gens = []
    orbit_sizes = []
    for level in range(len(base) - 1, -1, -1):
        b = base[level]
        fixed = [(x, x) for x in base[:level]]
        orbit = _orbit(b, gens)
        for c in cells_at[level]:
            if c in orbit:
                continue
            start = _individualize(struct, colors, fixed + [(b, c)])
            if start is None:
                continue
            mapping = dict(fixed)
            mapping[b] = c
            g = search.find(start[0], start[1], mapping)
            if g is not None:
                gens.append(g)
                orbit = _orbit(b, gens)
        orbit_sizes.append(len(orbit))
    order = 1
    for k in orbit_sizes:
        order *= k
    return gens, base, order


def _orbit(point, gens):
    seen = {point}
    queue = [point]
    for p in queue:
        for g in gens:
            if g[p] not in seen:
                seen.add(g[p])
                queue.append(g[p])
    return seen


@dataclass
class AutomorphismGroup:
    complex: Complex
    group: PermutationGroup

    @property
    def order(self) -> int:
        return self.group.order

    def as_mapping(self, p) -> dict:
        v = self.complex.vertices
        return {v[i]: v[p[i]] for i in range(len(p))}

    def from_mapping(self, mapping: dict):
        return tuple(self.complex.index[mapping[v]] for v in self.complex.vertices)

    def generator_mappings(self) -> list[dict]:
        return [self.as_mapping(g) for g in self.group.generators]


def automorphism_group(cx: Complex, node_cap: int = DEFAULT_NODE_CAP) -> AutomorphismGroup:
    struct = _Structure.of(cx)
    gens, base, order = _automorphism_generators(struct, node_cap)
    group = PermutationGroup(cx.n_vertices, gens, base_hint=base)
    if group.order != order:
        raise TheoremViolation("stabilizer chain order equals the product of search orbit sizes",
                               {"chain": group.order, "search": order})
    return AutomorphismGroup(cx, group)


def find_isomorphism(a: Complex, b: Complex, node_cap: int = DEFAULT_NODE_CAP) -> dict | None:
    """A vertex bijection a -> b carrying maximal simplices onto maximal simplices.

    Runs the automorphism search on the disjoint union, looking for a
    symmetry that swaps the two colour classes.
    """
    if a.n_vertices != b.n_vertices or sorted(map(len, a.maximal)) != sorted(map(len, b.maximal)):
        return None
    union = disjoint_union(a, b)
    struct = _Structure.of(union)
    side = [0 if v.startswith("0:") else 1 for v in union.vertices]
    inv = struct.initial_colors()
    k = max(inv) + 1
    cs = [inv[v] + k * side[v] for v in range(union.n_vertices)]
    ct = [inv[v] + k * (1 - side[v]) for v in range(union.n_vertices)]
    refined = struct.joint_refine(cs, ct)
    if refined is None:
        return None
    p = _Search(struct, node_cap).find(refined[0], refined[1], {})
    if p is None:
        return None
    names = union.vertices
    return {names[i][2:]: names[p[i]][2:] for i in range(len(p)) if side[i] == 0}


def are_isomorphic(a: Complex, b: Complex) -> bool:
    return find_isomorphism(a, b) is not None


# -- transfer to the nerve ---------------------------------------------------

def _is_automorphism_mapping(cx: Complex, phi: dict) -> bool:
    if set(phi) != set(cx.vertices) or set(phi.values()) != set(cx.vertices):
        return False
    maxset = set(cx.masks)
    return all(cx.mask_of(phi[v] for v in s) in maxset for s in cx.maximal)


def omega(cx: Complex, phi: dict, nerve=None) -> dict:
    """Induced permutation K -> phi(K) of N(X)'s vertices."""
    if not _is_automorphism_mapping(cx, phi):
        raise InputError("mapping is not an automorphism of the complex")
    nx = nerve or nerve_of_maximal(cx)
    out = {label: nx.label_of(phi[v] for v in simplex) for label, simplex in nx.dictionary.items()}
    if not _is_automorphism_mapping(nx.nerve, out):
        raise TheoremViolation("phi_* is a simplicial automorphism of N(X)", phi)
    return out


def omega_inverse(cx: Complex, g: dict, nerve=None) -> dict:
    """The automorphism phi of X with phi_* = g, for X satisfying both conditions."""
    report = check_conditions(cx)
    if not report.separation_holds:
        raise ConditionFailure("separation", {"x": report.separation_witness[0],
                                              "y": report.separation_witness[1]})
    if not report.extension_holds:
        raise ConditionFailure("extension", report.extension_witness or report.extension_error)
    nx = nerve or nerve_of_maximal(cx)
    if not _is_automorphism_mapping(nx.nerve, g):
        raise InputError("mapping is not an automorphism of N(X)")
    phi = {}
    for x in cx.vertices:
        images = [nx.dictionary[g[nx.label_of(s)]] for s in sigma(cx, x).members]
        common = set(images[0]).intersection(*images[1:])
        if len(common) != 1:
            raise TheoremViolation("g(Sigma_x) meets in a single vertex", {"x": x, "meet": sorted(common)})
        phi[x] = common.pop()
    if not _is_automorphism_mapping(cx, phi):
        raise TheoremViolation("omega_inverse yields an automorphism of X", phi)
    if omega(cx, phi, nx) != g:
        raise TheoremViolation("omega(omega_inverse(g)) = g", g)
    return phi


def compose(phi: dict, psi: dict) -> dict:
    """phi after psi."""
    return {x: phi[psi[x]] for x in psi}


def star_equivariance_audit(cx: Complex, aut: AutomorphismGroup | None = None, limit: int = 5000) -> list:
    """Check phi_*(Sigma_x) = Sigma_phi(x) over the group (or its generators if large)."""
    aut = aut or automorphism_group(cx)
    nx = nerve_of_maximal(cx)
    perms = aut.group.elements() if aut.order <= limit else aut.group.generators
    bad = []
    stars = {x: sorted(nx.label_of(s) for s in sigma(cx, x).members) for x in cx.vertices}
    for p in perms:
        phi = aut.as_mapping(p)
        star_img = omega(cx, phi, nx)
        for x in cx.vertices:
            if sorted(star_img[lab] for lab in stars[x]) != stars[phi[x]]:
                bad.append({"phi": phi, "x": x})
    return bad


def compare_aut(cx: Complex, node_cap: int = DEFAULT_NODE_CAP) -> dict:
    report = check_conditions(cx)
    aut = automorphism_group(cx, node_cap)
    nx = nerve_of_maximal(cx)
    naut = automorphism_group(nx.nerve, node_cap)
    gens = aut.generator_mappings()
    images = [omega(cx, phi, nx) for phi in gens]

    homomorphism = True
    for i, phi in enumerate(gens):
        for j, psi in enumerate(gens):
            if omega(cx, compose(phi, psi), nx) != compose(images[i], images[j]):
                homomorphism = False
    image_group = PermutationGroup(nx.nerve.n_vertices, [naut.from_mapping(m) for m in images])
    if not all(naut.group.contains(naut.from_mapping(m)) for m in images):
        raise TheoremViolation("Omega lands in Aut(N(X))", images)
    injective = image_group.order == aut.order
    surjective = image_group.order == naut.order
    both = report.separation_holds and bool(report.extension_holds)
    round_trip = None
    if both:
        round_trip = all(omega_inverse(cx, m, nx) == phi for phi, m in zip(gens, images))
        for g in naut.generator_mappings():
            round_trip &= omega(cx, omega_inverse(cx, g, nx), nx) == g
        if not (injective and surjective and round_trip and aut.order == naut.order):
            raise TheoremViolation("Aut(X) is isomorphic to Aut(N(X)) via Omega",
                                   {"order": aut.order, "nerve_order": naut.order})
    if report.separation_holds and not injective:
        raise TheoremViolation("Omega is injective under separation", {"order": aut.order})
    if not homomorphism:
        raise TheoremViolation("Omega is a homomorphism", gens)
    return {
        "order": aut.order,
        "nerve_order": naut.order,
        "generators": [dict(sorted(m.items())) for m in gens],
        "conditions": report.to_json(),
        "omega_homomorphism": homomorphism,
        "omega_injective": injective,
        "omega_surjective": surjective,
        "omega_bijective": injective and surjective,
        "round_trip": round_trip,
        "theorem_asserted": both,
    }
