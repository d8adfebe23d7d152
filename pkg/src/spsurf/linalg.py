"""Sparse exact linear algebra over Z and GF(2).

Columns are dicts mapping a row key to a nonzero integer.  Row keys are
processed in descending order: the leading entry of a column is its largest
key.  Column operations are unimodular throughout, so the stored columns
always span the same lattice as the input columns.

``SparseEchelon`` keeps two pools:

- ``pivots``: fully usable columns whose leading entry is +1 at their pivot
  row and whose remaining support sits strictly below it.
- ``pending``: columns whose leading entry has absolute value > 1.  A later
  column landing on the same row is gcd-combined with it; whatever leading
  values remain at the end are the diagonal of the Hermite form.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Tuple

Column = Dict[int, int]


def _submul(target: Column, source: Column, k: int) -> None:
    """target -= k * source, dropping zeros."""
    if k == 0:
        return
    for row, val in source.items():
        new = target.get(row, 0) - k * val
        if new:
            target[row] = new
        else:
            target.pop(row, None)


class SparseEchelon:
    """Online integer column echelon with unit-pivot preference."""

    __slots__ = ("pivots", "pending", "size")

    def __init__(self, size: int):
        self.pivots: Dict[int, Column] = {}
        self.pending: Dict[int, Column] = {}
        self.size = size

    def rank(self) -> int:
        return len(self.pivots) + len(self.pending)

    def is_full(self) -> bool:
        return not self.pending and len(self.pivots) == self.size

    def add(self, column: Column) -> None:
        """Absorb one column into the echelon."""
        if self.is_full():
            return
        stack = [column]
        while stack:
            col = stack.pop()
            while col:
                r = max(col)
                piv = self.pivots.get(r)
                if piv is not None:
                    # piv has +1 at r, so the subtraction clears row r exactly
                    _submul(col, piv, col[r])
                    continue
                pend = self.pending.get(r)
                if pend is None:
                    self._store(r, col)
                    break
                # gcd-combine with the parked column at this row
                while col.get(r) and pend.get(r):
                    a, b = pend[r], col[r]
                    if abs(a) >= abs(b):
                        _submul(pend, col, a // b)
                    else:
                        _submul(col, pend, b // a)
                if col.get(r):
                    del self.pending[r]
                    stack.append(pend)
                    self._store(r, col)
                    break
                self._restore(r, pend)
                # col lost its entry at r; keep reducing it
        return

    def _store(self, row: int, col: Column) -> None:
        lead = col[row]
        if lead == -1:
            col = {k: -v for k, v in col.items()}
            lead = 1
        if lead == 1:
            self.pivots[row] = col
        else:
            self.pending[row] = col

    def _restore(self, row: int, col: Column) -> None:
        # re-file a parked column whose lead may have shrunk to a unit
        lead = col.get(row)
        if lead is None:
            del self.pending[row]
            return
        if lead in (1, -1):
            del self.pending[row]
            self._store(row, col)

    def reduce(self, vector: Column, rows_desc: Iterable[int]) -> Column:
        """Eliminate all pivot rows from a copy of ``vector``.

        ``rows_desc`` must list the row universe in descending order.
        Eliminating a row only introduces entries at smaller rows, so one
        descending sweep is exact.  Only valid once ``pending`` is empty.
        """
        out = dict(vector)
        for r in rows_desc:
            val = out.get(r)
            if not val:
                continue
            piv = self.pivots.get(r)
            if piv is None:
                continue
            _submul(out, piv, val)
        return out

    def lead_magnitudes(self) -> List[int]:
        """|leading entry| per independent column (1 for each pivot)."""
        return [1] * len(self.pivots) + [
            abs(col[row]) for row, col in self.pending.items()]


class Gf2Echelon:
    """Column echelon over GF(2); columns are bit masks over row slots."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: Dict[int, int] = {}  # leading bit -> column mask

    def add(self, mask: int) -> None:
        while mask:
            lead = 1 << (mask.bit_length() - 1)
            piv = self.pivots.get(lead)
            if piv is None:
                self.pivots[lead] = mask
                return
            mask ^= piv

    def reduce(self, mask: int) -> int:
        out = 0
        while mask:
            lead = 1 << (mask.bit_length() - 1)
            piv = self.pivots.get(lead)
            if piv is None:
                # leading slot is a basis row; keep it, reduce what is below
                out |= lead
                mask &= lead - 1
            else:
                mask ^= piv
        return out

    def rank(self) -> int:
        return len(self.pivots)
