"""Row-style Hermite normal form and sublattices of Z^m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical row HNF with zero rows dropped.

    Pivots are positive, each pivot lies strictly right of the one above, and
    entries above a pivot are reduced into ``[0, pivot)``.
    """
    a = [[int(x) for x in r] for r in rows]
    if not a:
        return []
    cols = len(a[0])
    if any(len(r) != cols for r in a):
        raise InputError("ragged integer matrix")
    r = 0
    for c in range(cols):
        while True:
            live = [i for i in range(r, len(a)) if a[i][c]]
            if not live:
                break
            p = min(live, key=lambda i: (abs(a[i][c]), i))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done &= a[i][c] == 0
            if done:
                break
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    return [row for row in a[:r] if any(row)]


def _pivot(row):
    return next(j for j, x in enumerate(row) if x)


@dataclass(frozen=True)
class LatticeSubgroup:
    """Subgroup of Z^m generated by the rows of ``generators``."""

    ambient_rank: int
    hermite_form: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, ambient_rank: int, generators) -> "LatticeSubgroup":
        gens = [list(g) for g in generators]
        if any(len(g) != ambient_rank for g in gens):
            raise InputError(f"generators must have length {ambient_rank}")
        return cls(ambient_rank, tuple(tuple(r) for r in hermite_normal_form(gens)))

    @property
    def rank(self) -> int:
        return len(self.hermite_form)

    @property
    def pivots(self) -> list[int]:
        return [r[_pivot(r)] for r in self.hermite_form]

    def reduce(self, v) -> tuple[int, ...]:
        """Canonical representative of the coset v + A."""
        v = list(v)
        if len(v) != self.ambient_rank:
            raise InputError("dimension mismatch")
        for row in self.hermite_form:
            p = _pivot(row)
            q = v[p] // row[p]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))


def lattice_intersection(a: LatticeSubgroup, b: LatticeSubgroup) -> LatticeSubgroup:
    """A ∩ B from the HNF of the stacked matrix [[A, A], [B, 0]]."""
    if a.ambient_rank != b.ambient_rank:
        raise InputError("ambient ranks differ")
    m = a.ambient_rank
    stacked = [list(r) + list(r) for r in a.hermite_form] + [list(r) + [0] * m for r in b.hermite_form]
    if not stacked:
        return LatticeSubgroup(m, ())
    h = hermite_normal_form(stacked)
    return LatticeSubgroup.from_generators(m, [r[m:] for r in h if not any(r[:m])])


def coset_equal_lattice(g, h, a: LatticeSubgroup) -> bool:
    if len(g) != len(h) or len(g) != a.ambient_rank:
        raise InputError("dimension mismatch")
    return a.contains([x - y for x, y in zip(g, h)])
