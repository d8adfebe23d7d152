"""Independent rank oracle for the quotient's degree slices.

This is the second route used to certify Betti numbers.  It differs from
the main build in every discretionary choice:

- generators: the brute-force family of ALL relation instances of weight
  >= n+1 in the degree, not the minimal family closed under multiplication
  (that family is already closed under monomial multiplication, since
  multiplying an instance by a letter or by c* yields another instance up
  to sign);
- elimination: fraction-free row reduction computing the rank over the
  rationals, not an integer column Hermite form;
- monomial order: ascending ext masks, the reverse of the build.

Only ranks are produced here; the build's basis never feeds back in.
"""

from __future__ import annotations

from math import comb, gcd
from typing import Dict, List, Tuple

from .macdonald import _sector_of, relation_instances
from .ring import Monomial


def _row_rank(rows: List[List[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        best = None
        for i in range(rank, len(rows)):
            v = rows[i][col]
            if v and (best is None or abs(v) < best):
                pivot, best = i, abs(v)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        pval = prow[col]
        for i in range(rank + 1, len(rows)):
            v = rows[i][col]
            if not v:
                continue
            row = rows[i]
            new = [pval * row[j] - v * prow[j] for j in range(ncols)]
            d = 0
            for x in new:
                if x:
                    d = gcd(d, x)
                    if d == 1:
                        break
            if d > 1:
                new = [x // d for x in new]
            rows[i] = new
        rank += 1
        if rank == len(rows):
            break
    return rank


def oracle_rank(n: int, g: int, q: int) -> int:
    """Rank of H^q(SP^n(M_g); Z), certified independently of the build."""
    if q < 0 or q > 2 * n:
        return 0
    mask_a = sum(1 << (2 * i) for i in range(g))
    monomial_count = 0
    columns_by_sector: Dict[Tuple[int, int], Dict[int, int]] = {}
    for ext in range(1 << (2 * g)):
        rem = q - ext.bit_count()
        if rem < 0 or rem % 2:
            continue
        monomial_count += 1
        sector = _sector_of(ext, mask_a)
        columns_by_sector.setdefault(sector, {})
        columns_by_sector[sector][ext] = len(columns_by_sector[sector])
    matrices: Dict[Tuple[int, int], List[List[int]]] = {}
    for inst in relation_instances(n, g, q, minimal=False):
        elem = inst.element(g)
        if not elem:
            continue
        any_ext = next(iter(elem.terms)).ext
        sector = _sector_of(any_ext, mask_a)
        slots = columns_by_sector[sector]
        row = [0] * len(slots)
        for mono, coeff in elem.terms.items():
            row[slots[mono.ext]] = coeff
        matrices.setdefault(sector, []).append(row)
    ideal_rank = sum(_row_rank(rows) for rows in matrices.values())
    return monomial_count - ideal_rank


def oracle_betti(n: int, g: int) -> List[int]:
    return [oracle_rank(n, g, q) for q in range(2 * n + 1)]


def conjectured_betti(n: int, g: int) -> List[int]:
    """Closed-form monomial count; empirical cross-check only.

    Counts words a_I b_J (c*)^s with l + m + 2s = q and l + m + s <= n,
    weighted C(g,l) C(g,m).  Reported for comparison, never used as the
    source of truth.
    """
    out = []
    for q in range(2 * n + 1):
        total = 0
        for s in range(q // 2 + 1):
            lm = q - 2 * s
            if lm + s > n:
                continue
            for l in range(lm + 1):
                total += comb(g, l) * comb(g, lm - l)
        out.append(total)
    return out
