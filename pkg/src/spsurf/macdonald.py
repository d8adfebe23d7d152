"""Integral cohomology of the n-fold symmetric product of a genus-g surface.

The ring is the quotient of Lambda(a1*, b1*, ..., ag*, bg*) (x) Z[c*] by the
Macdonald relations

    a_{i1}* ... a_{il}* b_{j1}* ... b_{jm}*
        (c* - a_{k1}* b_{k1}*) ... (c* - a_{kr}* b_{kr}*) (c*)^s  =  0

for pairwise distinct indices i, j, k and every weight l + m + 2r + s
reaching n + 1.  Only the minimal instances (weight exactly n + 1) are
expanded; each degree slice of the ideal is then closed under
multiplication by the algebra generators, which inductively reproduces
every monomial multiple of every instance.  Larger-weight instances are
consequences: removing one letter or one c* lowers the weight by one, and a
pure product of (c* - a_k*b_k*) factors telescopes as c*P + b_k*(a_k*P).

Per degree, the ideal slice is block diagonal over "sectors": every term of
a generator shares the same sets of unpaired a-letters and unpaired
b-letters, so elimination runs independently on small blocks.  Integer
column reduction with unit pivots yields a monomial basis as the complement
of the pivot rows and an integral retraction onto it.  Unit pivots are
guaranteed by torsion-freeness of the quotient; the build aborts otherwise.

Monomial processing order inside a degree is by ext mask, descending, so
pure c*-powers land in the basis whenever possible; in particular the top
class is represented by (c*)^n itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import BuildError, ConfigurationError, ResourceGuardError
from .linalg import Gf2Echelon, SparseEchelon
from .ring import Monomial, RingElement

GUARD_LIMIT = 1 << 20

#: The four factor families of the relation word, in the order the factors
#: appear: a-letters, b-letters, (c* - a_k*b_k*) factors, c*-powers.
RELATION_FAMILIES = ("a", "b", "c-minus-ab", "c-power")


def guard_cost(n: int, g: int) -> int:
    """Monomial count 2^(2g) * (n+1) used by the resource guard."""
    return (n + 1) << (2 * g)


def check_guard(n: int, g: int, override: bool = False) -> None:
    if n < 1:
        raise ConfigurationError(f"n must be >= 1, got {n}")
    if g < 0:
        raise ConfigurationError(f"g must be >= 0, got {g}")
    cost = guard_cost(n, g)
    if cost > GUARD_LIMIT and not override:
        raise ResourceGuardError(
            f"(n={n}, g={g}) needs {cost} monomials > limit {GUARD_LIMIT}; "
            "pass override to proceed")


@dataclass(frozen=True)
class RelationInstance:
    """One concrete relation: index sets I, J, K (pairwise disjoint) and s."""

    a_indices: Tuple[int, ...]
    b_indices: Tuple[int, ...]
    k_indices: Tuple[int, ...]
    c_power: int

    @property
    def weight(self) -> int:
        return (len(self.a_indices) + len(self.b_indices)
                + 2 * len(self.k_indices) + self.c_power)

    @property
    def degree(self) -> int:
        return self.weight + self.c_power

    def element(self, g: int) -> RingElement:
        """Expand the relation word in the free algebra."""
        e = RingElement.one(g)
        for i in self.a_indices:
            e = e * RingElement.a(g, i)
        for j in self.b_indices:
            e = e * RingElement.b(g, j)
        for k in self.k_indices:
            e = e * (RingElement.c(g)
                     - RingElement.a(g, k) * RingElement.b(g, k))
        if self.c_power:
            e = e * RingElement.c(g, self.c_power)
        return e


def relation_instances(n: int, g: int, degree: int, *, minimal: bool,
                       drop_family: Optional[str] = None
                       ) -> Iterator[RelationInstance]:
    """Relation instances of one homogeneous degree.

    ``minimal`` restricts to weight exactly n+1 (the build's generating
    family); otherwise every weight >= n+1 appears (the brute-force family
    the rank oracle consumes).  ``drop_family`` removes all instances using
    a factor of that family; it exists for mutation testing only.
    """
    if drop_family is not None and drop_family not in RELATION_FAMILIES:
        raise ConfigurationError(f"unknown relation family {drop_family!r}")
    if degree < n + 1 or degree > 2 * n:
        return
    max_s = degree - (n + 1)
    s_values = (max_s,) if minimal else tuple(range(max_s + 1))
    indices = range(1, g + 1)
    for s in s_values:
        if drop_family == "c-power" and s > 0:
            continue
        body = degree - 2 * s  # l + m + 2r
        for r in range(body // 2 + 1):
            if drop_family == "c-minus-ab" and r > 0:
                continue
            lm = body - 2 * r
            for l in range(lm + 1):
                m = lm - l
                if l + m + r > g:
                    continue
                if drop_family == "a" and l > 0:
                    continue
                if drop_family == "b" and m > 0:
                    continue
                for ii in combinations(indices, l):
                    rest = tuple(x for x in indices if x not in ii)
                    for jj in combinations(rest, m):
                        rest2 = tuple(x for x in rest if x not in jj)
                        for kk in combinations(rest2, r):
                            yield RelationInstance(ii, jj, kk, s)


def _sector_of(ext: int, mask_a: int) -> Tuple[int, int]:
    """Split an ext mask into (unpaired a-bits, unpaired b-bits)."""
    am = ext & mask_a
    bm = ext & ~mask_a
    paired_a = am & (bm >> 1)
    return am ^ paired_a, bm ^ (paired_a << 1)


class MacdonaldRing:
    """Built quotient ring for fixed (n, g): bases, Betti numbers, reduction.

    Instances are immutable once constructed and safe to share.
    """

    def __init__(self, n: int, g: int, *, override_guard: bool = False,
                 drop_family: Optional[str] = None):
        check_guard(n, g, override_guard)
        self.n = n
        self.g = g
        self.drop_family = drop_family
        self._mask_a = sum(1 << (2 * i) for i in range(g))
        # (degree, ua, ub) -> echelon over ext-mask rows, processed descending
        self._ech: Dict[Tuple[int, int, int], SparseEchelon] = {}
        self._rows: Dict[Tuple[int, int, int], Tuple[int, ...]] = {}
        self._gf2: Dict[Tuple[int, int, int], Gf2Echelon] = {}
        self._gf2_built = False
        self._top: Optional[Dict[int, int]] = None
        self._build()
        self._basis = {q: self._collect_basis(q) for q in range(2 * n + 1)}
        top = self._basis[2 * n]
        if drop_family is None and top != (Monomial(0, n),):
            raise BuildError(
                f"top class is not represented by (c*)^n at (n={n}, g={g})")

    # -- construction -------------------------------------------------------

    def _sector_rows(self, q: int, ua: int, ub: int) -> Tuple[int, ...]:
        base = ua | ub
        rem = q - base.bit_count()
        if rem < 0 or rem % 2:
            return ()
        free = [i for i in range(self.g) if not (base >> (2 * i)) & 0b11]
        rows = []
        for p in range(min(len(free), rem // 2) + 1):
            for pick in combinations(free, p):
                ext = base
                for i in pick:
                    ext |= 0b11 << (2 * i)
                rows.append(ext)
        rows.sort(reverse=True)
        return tuple(rows)

    def _get_ech(self, q: int, ua: int, ub: int) -> SparseEchelon:
        key = (q, ua, ub)
        ech = self._ech.get(key)
        if ech is None:
            rows = self._sector_rows(q, ua, ub)
            self._rows[key] = rows
            ech = SparseEchelon(len(rows))
            self._ech[key] = ech
        return ech

    def _build(self) -> None:
        n, g = self.n, self.g
        for q in range(n + 1, 2 * n + 1):
            for inst in relation_instances(n, g, q, minimal=True,
                                           drop_family=self.drop_family):
                elem = inst.element(g)
                if not elem:
                    continue
                col: Dict[int, int] = {}
                sector = None
                for mono, coeff in elem.terms.items():
                    col[mono.ext] = coeff
                    sector = _sector_of(mono.ext, self._mask_a)
                self._get_ech(q, *sector).add(col)
            self._absorb_products(q)
            for key, ech in self._ech.items():
                if key[0] == q and ech.pending:
                    raise BuildError(
                        f"non-unit pivot in the degree-{q} slice at "
                        f"(n={n}, g={g}); quotient would not be torsion-free")

    def _absorb_products(self, q: int) -> None:
        """Add generator multiples of the (q-1)- and (q-2)-slices."""
        # c* times the (q-2)-slice: same ext support, one more c*
        prev2 = [key for key in self._ech if key[0] == q - 2]
        for key in sorted(prev2):
            source = self._ech[key]
            if not source.pivots:
                continue
            target = self._get_ech(q, key[1], key[2])
            if target.is_full():
                continue
            for row in sorted(source.pivots, reverse=True):
                target.add(dict(source.pivots[row]))
        # odd generators times the (q-1)-slice
        prev1 = [key for key in self._ech if key[0] == q - 1]
        for key in sorted(prev1):
            _, ua, ub = key
            source = self._ech[key]
            if not source.pivots:
                continue
            pivot_rows = sorted(source.pivots, reverse=True)
            for beta in range(2 * self.g):
                bit = 1 << beta
                if beta % 2 == 0:  # a-generator
                    if ua & bit:
                        continue  # letter already unpaired in every term
                    partner = bit << 1
                    if ub & partner:
                        tgt_ua, tgt_ub = ua, ub ^ partner
                    else:
                        tgt_ua, tgt_ub = ua | bit, ub
                else:  # b-generator
                    if ub & bit:
                        continue
                    partner = bit >> 1
                    if ua & partner:
                        tgt_ua, tgt_ub = ua ^ partner, ub
                    else:
                        tgt_ua, tgt_ub = ua, ub | bit
                target = self._get_ech(q, tgt_ua, tgt_ub)
                if target.is_full():
                    continue
                low_mask = bit - 1
                for row in pivot_rows:
                    col = source.pivots[row]
                    prod: Dict[int, int] = {}
                    for ext, coeff in col.items():
                        if ext & bit:
                            continue  # letter already paired in this term
                        if (ext & low_mask).bit_count() & 1:
                            prod[ext | bit] = -coeff
                        else:
                            prod[ext | bit] = coeff
                    if prod:
                        target.add(prod)

    def _collect_basis(self, q: int) -> Tuple[Monomial, ...]:
        out = []
        for ext in range(1 << (2 * self.g)):
            rem = q - ext.bit_count()
            if rem < 0 or rem % 2:
                continue
            ua, ub = _sector_of(ext, self._mask_a)
            ech = self._ech.get((q, ua, ub))
            if ech is not None and ext in ech.pivots:
                continue
            out.append(Monomial(ext, rem // 2))
        return tuple(out)

    # -- queries ------------------------------------------------------------

    def betti(self) -> List[int]:
        """Ranks of the cohomology groups in degrees 0..2n."""
        return [len(self._basis[q]) for q in range(2 * self.n + 1)]

    def basis(self, q: int) -> Tuple[Monomial, ...]:
        """Canonical monomial basis of degree q (empty above 2n)."""
        if not 0 <= q <= 2 * self.n:
            return ()
        return self._basis[q]

    def monomials(self, q: int) -> List[Monomial]:
        """All free-algebra monomials of degree q, ascending ext order."""
        out = []
        for ext in range(1 << (2 * self.g)):
            rem = q - ext.bit_count()
            if rem >= 0 and rem % 2 == 0:
                out.append(Monomial(ext, rem // 2))
        return out

    def normal_form(self, x: RingElement) -> RingElement:
        """Canonical coordinates of x in the stored basis.

        Degrees above 2n vanish.  Inhomogeneous input is reduced degree by
        degree.  Elements flagged mod-2 are reduced in the mod-2 ring.
        """
        if x.g != self.g:
            raise ConfigurationError(
                f"element has g={x.g}, ring has g={self.g}")
        if x.mod2:
            return self._normal_form_mod2(x)
        out: Dict[Monomial, int] = {}
        for q, part in x.graded_parts().items():
            if q > 2 * self.n:
                continue
            by_sector: Dict[Tuple[int, int], Dict[int, int]] = {}
            for mono, coeff in part.terms.items():
                sector = _sector_of(mono.ext, self._mask_a)
                by_sector.setdefault(sector, {})[mono.ext] = coeff
            for (ua, ub), vec in sorted(by_sector.items()):
                key = (q, ua, ub)
                ech = self._ech.get(key)
                if ech is not None:
                    vec = ech.reduce(vec, self._rows[key])
                for ext, coeff in vec.items():
                    out[Monomial(ext, (q - ext.bit_count()) // 2)] = coeff
        return RingElement(self.g, out)

    def is_zero(self, x: RingElement) -> bool:
        return not self.normal_form(x)

    # -- mod-2 ring ----------------------------------------------------------

    def _build_gf2(self) -> None:
        # The mod-2 ideal slice is the image of the integral slice, so the
        # reduced integral pivot columns span it.
        for key, ech in self._ech.items():
            gf2 = Gf2Echelon()
            for row in sorted(ech.pivots, reverse=True):
                mask = 0
                for ext, coeff in ech.pivots[row].items():
                    if coeff & 1:
                        mask |= self._ext_bit(ext)
                if mask:
                    gf2.add(mask)
            self._gf2[key] = gf2
        self._gf2_built = True

    @staticmethod
    def _ext_bit(ext: int) -> int:
        # ext masks are compared as integers; use them directly as bit slots
        return 1 << ext

    def _normal_form_mod2(self, x: RingElement) -> RingElement:
        if not self._gf2_built:
            self._build_gf2()
        out: Dict[Monomial, int] = {}
        for q, part in x.graded_parts().items():
            if q > 2 * self.n:
                continue
            by_sector: Dict[Tuple[int, int], int] = {}
            for mono, coeff in part.terms.items():
                if coeff & 1 == 0:
                    continue
                sector = _sector_of(mono.ext, self._mask_a)
                by_sector[sector] = (
                    by_sector.get(sector, 0) ^ self._ext_bit(mono.ext))
            for (ua, ub), mask in sorted(by_sector.items()):
                gf2 = self._gf2.get((q, ua, ub))
                if gf2 is not None:
                    mask = gf2.reduce(mask)
                while mask:
                    low = mask & -mask
                    ext = low.bit_length() - 1
                    out[Monomial(ext, (q - ext.bit_count()) // 2)] = 1
                    mask ^= low
        return RingElement(self.g, out, mod2=True)

    # -- top-degree pairing support ------------------------------------------

    def top_coefficient(self, mono: Monomial) -> int:
        """Coefficient of the top basis class (c*)^n in nf of a monomial."""
        if mono.degree != 2 * self.n:
            raise ConfigurationError("monomial is not of top degree")
        if self._top is None:
            self._top = {}
        cached = self._top.get(mono.ext)
        if cached is None:
            nf = self.normal_form(RingElement.monomial(self.g, mono))
            cached = nf.terms.get(Monomial(0, self.n), 0)
            self._top[mono.ext] = cached
        return cached

    def __repr__(self) -> str:
        tag = f", drop_family={self.drop_family!r}" if self.drop_family else ""
        return f"MacdonaldRing(n={self.n}, g={self.g}{tag})"


def build(n: int, g: int, *, override_guard: bool = False,
          drop_family: Optional[str] = None) -> MacdonaldRing:
    """Construct the cohomology ring of the n-fold symmetric product."""
    return MacdonaldRing(n, g, override_guard=override_guard,
                         drop_family=drop_family)
