"""Integer simplicial homology through Smith normal form."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .complex_core import Complex, faces_by_rank, is_simplex, skeleton
from .errors import TheoremViolation
from .nerve_ops import nerve_of_maximal


class IntegerMatrix:
    """Dense matrix of Python ints (arbitrary precision)."""

    def __init__(self, rows: int, cols: int, data=None):
        self.rows, self.cols = rows, cols
        self.data = data if data is not None else [[0] * cols for _ in range(rows)]
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise ValueError("inconsistent matrix dimensions")

    @classmethod
    def from_rows(cls, rows):
        rows = [[int(x) for x in r] for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[sum(self.data[i][k] * other.data[k][j] for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntegerMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def tolist(self):
        return [list(r) for r in self.data]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.data == other.data and \
            (self.rows, self.cols) == (other.rows, other.cols)

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()})"


def smith_normal_form(m: IntegerMatrix) -> list[int]:
    """Invariant factors d_1 | d_2 | ... | d_r of ``m`` (zero factors omitted)."""
    return _sparse_invariant_factors({i: {j: x for j, x in enumerate(r) if x}
                                      for i, r in enumerate(m.data)})


def _sparse_invariant_factors(rows: dict) -> list[int]:
    """Eliminate unit pivots on a sparse row map, then finish densely.

    A +-1 pivot can be cleared from its row and column by unimodular
    operations, contributing a factor 1 and leaving the rest untouched.
    """
    rows = {r: dict(v) for r, v in rows.items() if v}
    cols = defaultdict(set)
    for r, row in rows.items():
        for c in row:
            cols[c].add(r)
    units, progress = 0, True
    while progress:
        progress = False
        for r in sorted(rows):
            row = rows.get(r)
            if row is None:
                continue
            cands = [c for c, v in row.items() if v in (1, -1)]
            if not cands:
                continue
            c = min(cands, key=lambda c: (len(cols[c]), c))
            v = row[c]
            for r2 in sorted(cols[c] - {r}):
                row2 = rows[r2]
                f = row2[c] * v
                for cc, x in row.items():
                    y = row2.get(cc, 0) - f * x
                    if y:
                        row2[cc] = y
                        cols[cc].add(r2)
                    elif cc in row2:
                        del row2[cc]
                        cols[cc].discard(r2)
                if not row2:
                    del rows[r2]
            for cc in row:
                cols[cc].discard(r)
            del rows[r]
            units += 1
            progress = True
    live = sorted({c for row in rows.values() for c in row})
    dense = [[rows[r].get(c, 0) for c in live] for r in sorted(rows)]
    return [1] * units + _dense_invariant_factors(dense)


def _dense_invariant_factors(a) -> list[int]:
    rows, cols = len(a), len(a[0]) if a else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        pivot = _min_entry(a, t, range(t, rows), range(t, cols))
        if pivot is None:
            break
        _move(a, t, *pivot)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    dirty |= a[t][j] != 0
            if dirty:
                cands = [(i, t) for i in range(t, rows) if a[i][t]] + \
                        [(t, j) for j in range(t + 1, cols) if a[t][j]]
                i, j = min(cands, key=lambda ij: (abs(a[ij[0]][ij[1]]), ij))
                _move(a, t, i, j)
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def _min_entry(a, t, rows, cols):
    best = None
    for i in rows:
        for j in cols:
            x = a[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return None if best is None else best[1:]


def _move(a, t, i, j):
    a[t], a[i] = a[i], a[t]
    for r in a:
        r[t], r[j] = r[j], r[t]


def matrix_rank(m: IntegerMatrix) -> int:
    return len(smith_normal_form(m))


def _sparse_boundaries(cx: Complex, by_rank) -> dict:
    """For each rank r >= 2, the boundary as a map column -> {row: sign}.

    Rows and columns follow the canonical simplex order; removing the i-th
    vertex carries sign (-1)**i.  Checks that consecutive boundaries compose
    to zero.
    """
    out = {}
    for r in range(2, max(by_rank) + 1):
        index = {s: i for i, s in enumerate(by_rank[r - 1])}
        out[r] = [{index[s[:i] + s[i + 1:]]: -1 if i % 2 else 1 for i in range(r)}
                  for s in by_rank[r]]
    for r in range(3, max(by_rank) + 1):
        for col in out[r]:
            acc = defaultdict(int)
            for k, x in col.items():
                for i, y in out[r - 1][k].items():
                    acc[i] += x * y
            if any(acc.values()):
                raise TheoremViolation("boundary of a boundary is zero", cx.maximal)
    return out


def _as_rows(columns) -> dict:
    rows = defaultdict(dict)
    for j, col in enumerate(columns):
        for i, x in col.items():
            rows[i][j] = x
    return rows


def boundary_matrices(cx: Complex) -> list[IntegerMatrix]:
    """Dense boundary maps from rank-r to rank-(r-1) simplices, r = 2 .. top rank."""
    by_rank = faces_by_rank(cx)
    out = []
    for r, columns in _sparse_boundaries(cx, by_rank).items():
        mat = IntegerMatrix(len(by_rank[r - 1]), len(by_rank[r]))
        for j, col in enumerate(columns):
            for i, x in col.items():
                mat.data[i][j] = x
        out.append(mat)
    return out


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def homology_profile(cx: Complex) -> HomologyProfile:
    by_rank = faces_by_rank(cx)
    top = max(by_rank)
    factors = {r: _sparse_invariant_factors(_as_rows(cols))
               for r, cols in _sparse_boundaries(cx, by_rank).items()}
    betti, torsion = [], []
    for r in range(1, top + 1):
        out_rank = len(factors.get(r, []))
        in_factors = factors.get(r + 1, [])
        betti.append(len(by_rank[r]) - out_rank - len(in_factors))
        torsion.append(tuple(d for d in in_factors if d > 1))
    while len(betti) > 1 and betti[-1] == 0 and not torsion[-1]:
        betti.pop()
        torsion.pop()
    return HomologyProfile(tuple(betti), tuple(torsion))


def nerve_homology_certificate(cx: Complex) -> dict:
    """Check the good-cover hypothesis, then H_*(X) = H_*(N(X))."""
    nx = nerve_of_maximal(cx)
    for family in skeleton(nx.nerve):
        common = set(nx.dictionary[family[0]])
        for label in family[1:]:
            common &= set(nx.dictionary[label])
        if not common or not is_simplex(cx, common):
            raise TheoremViolation("intersections of maximal simplices are empty or simplices",
                                   list(family))
    hx, hn = homology_profile(cx), homology_profile(nx.nerve)
    if hx != hn:
        raise TheoremViolation("X and N(X) have isomorphic homology",
                               {"X": hx.to_json(), "N(X)": hn.to_json()})
    return {"good_cover": True, "X": hx.to_json(), "nerve": hn.to_json(), "equal": True}
