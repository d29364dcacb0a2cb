"""Exact integer linear algebra: row echelon form over Z with transform tracking.

Everything here works on plain Python ints, so there is no overflow to worry
about.  The central object is a row-space basis in Hermite-style echelon form
together with, for every basis row, its expression in terms of the original
input rows.  That is enough to (a) decide membership of a vector in the
lattice spanned by the input rows, (b) produce the integer combination
witnessing membership, and (c) read off generators of the left kernel (the
relations among the input rows).
"""

from __future__ import annotations

from dataclasses import dataclass


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class LatticeBasis:
    """Echelon basis of the lattice spanned by a list of integer rows.

    pivot_rows holds triples (pivot_column, row, transform) where `row` is an
    echelon basis vector with positive leading entry in `pivot_column` and
    `transform` expresses it as an integer combination of the original rows.
    kernel_transforms are combinations of the original rows summing to zero;
    they generate the full relation lattice.
    """

    ncols: int
    nrows: int
    pivot_rows: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]
    kernel_transforms: tuple[tuple[int, ...], ...]

    def solve(self, target: list[int] | tuple[int, ...]) -> list[int] | None:
        """Integer coefficients over the original rows reproducing `target`.

        Returns None when `target` is not in the lattice.
        """
        if len(target) != self.ncols:
            raise ValueError(f"target has length {len(target)}, expected {self.ncols}")
        residue = list(target)
        combo = [0] * self.nrows
        for col, row, transform in self.pivot_rows:
            value = residue[col]
            if value == 0:
                continue
            q, r = divmod(value, row[col])
            if r:
                return None
            for j in range(self.ncols):
                residue[j] -= q * row[j]
            for j in range(self.nrows):
                combo[j] += q * transform[j]
        if any(residue):
            return None
        return combo

    def __contains__(self, target) -> bool:
        return self.solve(target) is not None


def lattice_basis(rows: list) -> LatticeBasis:
    """Reduce integer rows to echelon form, tracking the unimodular transform."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    work = [list(r) for r in rows]
    trans = [[1 if j == i else 0 for j in range(nrows)] for i in range(nrows)]
    top = 0
    pivots: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []
    for col in range(ncols):
        pivot = -1
        for i in range(top, nrows):
            if work[i][col] == 0:
                continue
            if pivot < 0:
                pivot = i
                continue
            # Combine the two rows so only the pivot keeps a nonzero entry here.
            a, b = work[pivot][col], work[i][col]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            ra, rb = work[pivot], work[i]
            work[pivot] = [s * u + t * v for u, v in zip(ra, rb)]
            work[i] = [-bg * u + ag * v for u, v in zip(ra, rb)]
            ua, ub = trans[pivot], trans[i]
            trans[pivot] = [s * u + t * v for u, v in zip(ua, ub)]
            trans[i] = [-bg * u + ag * v for u, v in zip(ua, ub)]
        if pivot < 0:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        trans[top], trans[pivot] = trans[pivot], trans[top]
        if work[top][col] < 0:
            work[top] = [-u for u in work[top]]
            trans[top] = [-u for u in trans[top]]
        pivots.append((col, tuple(work[top]), tuple(trans[top])))
        top += 1
    kernel = tuple(tuple(trans[i]) for i in range(top, nrows))
    return LatticeBasis(ncols=ncols, nrows=nrows, pivot_rows=tuple(pivots), kernel_transforms=kernel)
