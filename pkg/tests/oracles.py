"""Brute-force reference computations, independent of the cxlab code paths."""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf


def powerset(items):
    items = list(items)
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)


def brute_cliques(vertices, edges):
    """Maximal cliques by scanning every vertex subset."""
    es = {frozenset(e) for e in edges}
    cliques = [set(s) for s in powerset(vertices)
               if all(frozenset(p) in es for p in combinations(s, 2))]
    return sorted(tuple(sorted(c)) for c in cliques if not any(c < d for d in cliques))


def brute_faces(maximal):
    return {frozenset(f) for m in maximal for f in powerset(m)}


def brute_nerve_simplices(sets):
    """Index families with non-empty common intersection, by powerset scan."""
    out = set()
    for fam in powerset(range(len(sets))):
        if set.intersection(*(set(sets[i]) for i in fam)):
            out.add(frozenset(fam))
    return out


def brute_aut_order(vertices, maximal):
    mx = {frozenset(m) for m in maximal}
    count = 0
    for perm in permutations(vertices):
        f = dict(zip(vertices, perm))
        if {frozenset(f[v] for v in m) for m in mx} == mx:
            count += 1
    return count


def brute_isomorphic(a_vertices, a_max, b_vertices, b_max):
    if len(a_vertices) != len(b_vertices):
        return False
    bm = {frozenset(m) for m in b_max}
    for perm in permutations(b_vertices):
        f = dict(zip(a_vertices, perm))
        if {frozenset(f[v] for v in m) for m in a_max} == bm:
            return True
    return False


def floyd_warshall(vertices, edges):
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    d = [[0 if i == j else float("inf") for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[idx[u]][idx[v]] = d[idx[v]][idx[u]] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return {(u, v): d[idx[u]][idx[v]] for u in vertices for v in vertices}


def _det(m):
    """Exact determinant by fraction-free expansion over Fractions."""
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def determinantal_factors(rows):
    """Invariant factors from gcds of k x k minors (d_k = D_k / D_{k-1})."""
    if not rows or not rows[0]:
        return []
    m, n = len(rows), len(rows[0])
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, _det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def sympy_invariant_factors(rows):
    from sympy.matrices.normalforms import smith_normal_form
    s = smith_normal_form(Matrix(rows))
    return [abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0]


class SympyLattice:
    """Membership oracle: sympy's column HNF gives a basis; solve and round."""

    def __init__(self, generators, ambient):
        self.ambient = ambient
        if not generators:
            self.basis = np.zeros((0, ambient), dtype=np.int64)
            return
        h = sympy_hnf(Matrix(generators).T)
        self.basis = np.array(h.T.tolist(), dtype=np.int64).reshape(-1, ambient)
        self.basis = self.basis[[any(r) for r in self.basis]]

    def contains(self, v):
        return bool(self.contains_many(np.array([v], dtype=np.int64))[0])

    def contains_many(self, points):
        """Row-wise membership for an (n, m) integer array."""
        points = np.asarray(points, dtype=np.int64)
        if len(self.basis) == 0:
            return ~points.any(axis=1)
        c, *_ = np.linalg.lstsq(self.basis.T.astype(float), points.T.astype(float), rcond=None)
        c = np.rint(c).astype(np.int64)
        return (c.T @ self.basis == points).all(axis=1)


def random_lattice_pair(rng, max_rank=3, lo=-5, hi=5):
    m = rng.randint(1, max_rank)
    gens = [[[rng.randint(lo, hi) for _ in range(m)] for _ in range(rng.randint(1, max_rank))]
            for _ in range(2)]
    return m, gens[0], gens[1]


def box_radius(pivot_product, m, point_budget=40000):
    """4 * (product of pivots), capped so the box holds at most ``point_budget`` points."""
    cap = int((point_budget ** (1 / m) - 1) // 2)
    return max(1, min(4 * pivot_product, cap))


def brute_intersection_check(m, gens_a, gens_b, computed_basis, radius):
    """Compare a claimed basis of A ∩ B with point enumeration in [-radius, radius]^m.

    Membership in A and B comes from the sympy oracle.  Returns a list of
    discrepancies (empty on agreement).
    """
    A, B = SympyLattice(gens_a, m), SympyLattice(gens_b, m)
    I = SympyLattice([list(r) for r in computed_basis], m)
    bad = []
    for row in computed_basis:
        if not (A.contains(row) and B.contains(row)):
            bad.append(("basis vector outside A ∩ B", tuple(row)))
    pts = np.array(list(product(range(-radius, radius + 1), repeat=m)), dtype=np.int64)
    mismatch = (A.contains_many(pts) & B.contains_many(pts)) != I.contains_many(pts)
    if mismatch.any():
        bad.append(("membership", tuple(pts[mismatch.argmax()])))
    return bad
