"""Sparse exact Gaussian elimination.

Vectors are ``dict[int, value]`` with integer column indices.  The pivot of a
row is its *largest* column, so callers that index a basis in increasing
deglex order get "pivot = greatest word" for free.
"""

from __future__ import annotations

import heapq

from .field import Field


class Echelon:
    """Incrementally maintained echelon form with max-column pivots.

    With ``reduced=True`` the stored rows are kept in reduced row echelon form
    (each pivot column is zero in every other row), which makes the row set a
    canonical description of the span.
    """

    def __init__(self, field: Field, reduced: bool = False):
        self.field = field
        self.reduced = reduced
        self.rows: dict[int, dict] = {}
        # column -> pivots of rows having a nonzero entry there (reduced mode)
        self._occ: dict[int, set] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` modulo the span; ``vec`` is not modified."""
        rows = self.rows
        if not rows:
            return dict(vec)
        f = self.field
        out = dict(vec)
        if self.reduced:
            for col in [c for c in out if c in rows]:
                c = out.get(col)
                if c:
                    f.addmul(out, f.neg(c), rows[col])
            return out
        heap = [-c for c in out if c in rows]
        heapq.heapify(heap)
        while heap:
            col = -heapq.heappop(heap)
            c = out.get(col)
            if not c:
                continue
            row = rows[col]
            f.addmul(out, f.neg(c), row)
            for k in row:
                if k in rows and k != col and k in out:
                    heapq.heappush(heap, -k)
        return out

    def add(self, vec: dict) -> int | None:
        """Insert ``vec``; return its new pivot column, or None if dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        f = self.field
        piv = max(r)
        r = f.scaled(f.inv(r[piv]), r)
        if self.reduced:
            for other in list(self._occ.get(piv, ())):
                row = self.rows[other]
                c = row[piv]
                self._unindex(other, row)
                f.addmul(row, f.neg(c), r)
                self._index(other, row)
            self._index(piv, r)
        self.rows[piv] = r
        return piv

    def _index(self, piv, row):
        for k in row:
            if k != piv:
                self._occ.setdefault(k, set()).add(piv)

    def _unindex(self, piv, row):
        for k in row:
            if k != piv:
                s = self._occ.get(k)
                if s is not None:
                    s.discard(piv)

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def canonical(self) -> list[tuple[int, tuple]]:
        """Sorted (pivot, sorted-row) pairs; needs ``reduced=True``."""
        if not self.reduced:
            raise ValueError("canonical form requires a reduced echelon")
        return sorted((p, tuple(sorted(r.items()))) for p, r in self.rows.items())


def rank(field: Field, rows) -> int:
    e = Echelon(field)
    for r in rows:
        e.add(r)
    return e.rank


def left_kernel(field: Field, rows: list[dict]) -> list[dict]:
    """Basis of {x : sum_r x[r] * rows[r] = 0}, as dicts over row indices.

    Each row is tagged with its own negative column ``-(r+1)``; real columns are
    nonnegative, so a row whose residual pivot is negative has vanished in the
    real part and its tag part is a kernel vector.
    """
    e = Echelon(field)
    kernel = []
    for r, row in enumerate(rows):
        tagged = dict(row)
        tagged[-(r + 1)] = field.one
        res = e.reduce(tagged)
        piv = max(res)
        if piv < 0:
            kernel.append({-k - 1: v for k, v in res.items()})
        else:
            e.rows[piv] = field.scaled(field.inv(res[piv]), res)
    return kernel


def solve_in_span(field: Field, basis: list[dict], target: dict) -> dict | None:
    """Coefficients x with sum x[r] * basis[r] = target, or None."""
    e = Echelon(field)
    for r, row in enumerate(basis):
        tagged = dict(row)
        tagged[-(r + 1)] = field.one
        res = e.reduce(tagged)
        piv = max(res)
        if piv >= 0:
            e.rows[piv] = field.scaled(field.inv(res[piv]), res)
    res = e.reduce(target)
    if any(k >= 0 for k in res):
        return None
    # target - sum(tags) reduced to zero: coefficients are the negated tags
    return {-k - 1: field.neg(v) for k, v in res.items()}
