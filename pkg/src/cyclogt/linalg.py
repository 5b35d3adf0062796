"""Exact rational linear algebra on sparse rows.

Two shapes of problem occur in this package: very wide sparse row spaces
(relation ideals in a free algebra, where only the rank and a canonical
reduction matter) and narrow dense systems (graded relation matrices over a
Lyndon coordinate basis, where the nullspace matters).  Both are solved by
plain fraction-exact Gaussian elimination; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Row = dict  # Hashable -> Fraction


class SparseRowSpace:
    """Incremental row space with echelon pivots keyed by the maximal term."""

    def __init__(self):
        self.pivots: dict[Hashable, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                c = row[lead]
                self.pivots[lead] = {k: v / c for k, v in row.items()}
                return True
            c = row.pop(lead)
            for k, v in piv.items():
                if k == lead:
                    continue
                nv = row.get(k, Fraction(0)) - c * v
                if nv:
                    row[k] = nv
                elif k in row:
                    del row[k]
        return False

    def reduce(self, row: Mapping) -> Row:
        """Canonical residue of a row modulo the span (full reduction)."""
        row = {k: Fraction(v) for k, v in row.items() if v}
        done: Row = {}
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                done[lead] = row.pop(lead)
                continue
            c = row.pop(lead)
            for k, v in piv.items():
                if k == lead:
                    continue
                nv = row.get(k, Fraction(0)) - c * v
                if nv:
                    row[k] = nv
                elif k in row:
                    del row[k]
        return done


def nullspace(rows: Iterable[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} for a matrix given by dense rows of length ncols."""
    echelon: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for r in rows:
        row = list(r)
        for prow, pc in zip(echelon, pivot_cols):
            c = row[pc]
            if c:
                for k in range(ncols):
                    if prow[k]:
                        row[k] -= c * prow[k]
        lead = next((k for k in range(ncols) if row[k]), None)
        if lead is None:
            continue
        c = row[lead]
        row = [v / c for v in row]
        # back-substitute into earlier rows to keep a reduced echelon form
        for prow in echelon:
            c2 = prow[lead]
            if c2:
                for k in range(ncols):
                    if row[k]:
                        prow[k] -= c2 * row[k]
        echelon.append(row)
        pivot_cols.append(lead)
    free_cols = [k for k in range(ncols) if k not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pc in zip(echelon, pivot_cols):
            vec[pc] = -prow[fc]
        basis.append(vec)
    return basis


def solve_affine(rows: Iterable[Sequence[Fraction]], rhs: Iterable[Fraction],
                 ncols: int) -> tuple[list[Fraction], int] | None:
    """One solution of M x = b plus the dimension of the solution set.

    Returns None when the system is inconsistent.  The returned solution sets
    every free variable to zero, which makes the output deterministic.
    """
    echelon: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for r, b in zip(rows, rhs):
        row = list(r) + [Fraction(b)]
        for prow, pc in zip(echelon, pivot_cols):
            c = row[pc]
            if c:
                for k in range(ncols + 1):
                    if prow[k]:
                        row[k] -= c * prow[k]
        lead = next((k for k in range(ncols) if row[k]), None)
        if lead is None:
            if row[ncols]:
                return None
            continue
        c = row[lead]
        row = [v / c for v in row]
        for prow in echelon:
            c2 = prow[lead]
            if c2:
                for k in range(ncols + 1):
                    if row[k]:
                        prow[k] -= c2 * row[k]
        echelon.append(row)
        pivot_cols.append(lead)
    x = [Fraction(0)] * ncols
    for prow, pc in zip(echelon, pivot_cols):
        x[pc] = prow[ncols]
    return x, ncols - len(pivot_cols)


def rank_mod_p(rows: Iterable[Mapping], p: int) -> int:
    """Rank of sparse rows over GF(p); a fast probe, never the certified answer."""
    pivots: dict[Hashable, dict] = {}
    rank = 0
    for row in rows:
        r = {}
        for k, v in row.items():
            fv = Fraction(v)
            num = fv.numerator % p
            den = fv.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by the probe prime")
            val = num * pow(den, p - 2, p) % p
            if val:
                r[k] = val
        while r:
            lead = max(r)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(r[lead], p - 2, p)
                pivots[lead] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            c = r.pop(lead)
            for k, v in piv.items():
                if k == lead:
                    continue
                nv = (r.get(k, 0) - c * v) % p
                if nv:
                    r[k] = nv
                elif k in r:
                    del r[k]
    return rank
