"""Exact linear algebra over the package's coefficient fields.

Two complementary tools: an incremental reduced-row-echelon ``RowReducer``
on sparse vectors (used for subspace bases, membership and kernels), and a
fraction-free Bareiss elimination on dense integer rows (used for pure rank
queries over the rationals, after clearing denominators row by row).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .fields import Field

Vec = dict  # dict[int, scalar], zero entries absent


def vec_scale(field: Field, c, u: Vec) -> Vec:
    if field.is_zero(c):
        return {}
    return {k: field.mul(c, v) for k, v in u.items()}


def vec_add_scaled(field: Field, u: Vec, c, v: Vec) -> Vec:
    """u + c*v as a fresh sparse vector."""
    out = dict(u)
    for k, val in v.items():
        acc = field.add(out.get(k, field.zero), field.mul(c, val))
        if field.is_zero(acc):
            out.pop(k, None)
        else:
            out[k] = acc
    return out


class RowReducer:
    """Incrementally maintained reduced row echelon form over an exact field.

    Pivot choice is the smallest coordinate, so bases are deterministic.
    A coordinate-to-rows index keeps insertions proportional to the actual
    fill-in instead of the current rank.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict = {}  # pivot coordinate -> row with leading 1 there
        self._rows_with: dict = {}  # coordinate -> set of pivots whose row hits it

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residual(self, vec: Vec) -> Vec:
        """Reduce ``vec`` against the current rows.

        Rows are in full RREF, so eliminating one pivot coordinate never
        reintroduces another; a single pass over the vector's pivot
        coordinates is complete.
        """
        f = self.field
        out = dict(vec)
        for k in sorted(k for k in vec if k in self.pivots):
            c = out.get(k)
            if c is None or f.is_zero(c):
                continue
            out = vec_add_scaled(f, out, f.neg(c), self.pivots[k])
        return out

    def contains(self, vec: Vec) -> bool:
        return not self.residual(vec)

    def _set_row(self, piv, row: Vec) -> None:
        old = self.pivots.get(piv)
        if old is not None:
            for k in old:
                self._rows_with[k].discard(piv)
        self.pivots[piv] = row
        for k in row:
            self._rows_with.setdefault(k, set()).add(piv)

    def add(self, vec: Vec) -> bool:
        """Insert a vector; returns True when the rank grew."""
        f = self.field
        res = self.residual(vec)
        if not res:
            return False
        piv = min(res)
        row = vec_scale(f, f.inv(res[piv]), res)
        for other_piv in list(self._rows_with.get(piv, ())):
            other = self.pivots[other_piv]
            self._set_row(other_piv, vec_add_scaled(f, other, f.neg(other[piv]), row))
        self._set_row(piv, row)
        return True

    def rows(self) -> list[Vec]:
        return [self.pivots[p] for p in sorted(self.pivots)]


def row_space(field: Field, vectors: Iterable[Vec]) -> RowReducer:
    red = RowReducer(field)
    for v in vectors:
        red.add(v)
    return red


def rank(field: Field, vectors: Iterable[Vec]) -> int:
    return row_space(field, vectors).rank


def _clear_denominators(row: Sequence) -> list[int]:
    denom = 1
    for v in row:
        f = Fraction(v)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    return [int(Fraction(v) * denom) for v in row]


def fraction_free_rank(rows: Iterable[Sequence]) -> int:
    """Rank of a dense rational matrix by Bareiss fraction-free elimination.

    Rows are scaled to integers first; all intermediate divisions are exact
    integer divisions, so no rational arithmetic happens in the elimination.
    """
    m = [_clear_denominators(r) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def nullspace(field: Field, rows: Iterable[Sequence], width: int) -> list[list]:
    """Basis of {x in F^width : M x = 0} for the dense matrix with the given rows.

    The basis is canonical: one vector per free column (in increasing
    order), with 1 in the free position.
    """
    red = RowReducer(field)
    for row in rows:
        red.add({j: v for j, v in enumerate(row) if not field.is_zero(v)})
    pivot_cols = sorted(red.pivots)
    free_cols = [j for j in range(width) if j not in red.pivots]
    basis = []
    for fc in free_cols:
        x = [field.zero] * width
        x[fc] = field.one
        for pc in pivot_cols:
            c = red.pivots[pc].get(fc)
            if c is not None:
                x[pc] = field.neg(c)
        basis.append(x)
    return basis
