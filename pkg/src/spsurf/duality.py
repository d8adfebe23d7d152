"""Top-degree pairing, second-homology evaluation table, and spin data.

H_2(SP^n(M_g)) is free on c and the Pontryagin products a_i.a_j, b_i.b_j
(i < j) and a_i.b_j.  The stored pairing between degree-2 cohomology and
these classes is deliberately partial; only the entries below are
determined, and querying anything else raises instead of guessing:

    <c*, c> = 1        <c*, a_i.b_i> = 0
    <a_i*b_i*, a_j.b_j> = delta_ij        <a_i*b_i*, c> = 1

The last two rows rest on the classical dual-basis identity
(a_i.b_i)* = a_i*b_i* - c* read against the Hom-dual basis; reports flag
this convention.  Spin statuses computed from the parity table are
cross-validated against these evaluations on every call with n >= 2, g >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, Optional, Tuple

from .errors import (ConfigurationError, DegreeError, RuleConflictError,
                     UndeterminedPairingError)
from .charclasses import w2_free
from .macdonald import MacdonaldRing, _sector_of
from .linalg import SparseEchelon
from .ring import MIXED, Monomial, RingElement

H2Key = Tuple


@dataclass(frozen=True)
class H2Class:
    """Integral second-homology class in the Pontryagin basis.

    Keys: ("c",) and ("aa", i, j), ("bb", i, j) with i < j, ("ab", i, j).
    """

    g: int
    coeffs: Dict[H2Key, int] = field(default_factory=dict)

    def __post_init__(self):
        for key, coeff in self.coeffs.items():
            self._validate_key(key)
            if coeff == 0:
                raise ConfigurationError("stored zero coefficient")

    def _validate_key(self, key: H2Key) -> None:
        if key == ("c",):
            return
        if len(key) == 3 and key[0] in ("aa", "bb", "ab"):
            kind, i, j = key
            if not (1 <= i <= self.g and 1 <= j <= self.g):
                raise ConfigurationError(f"index out of range in {key}")
            if kind in ("aa", "bb") and not i < j:
                raise ConfigurationError(f"{kind} keys need i < j: {key}")
            return
        raise ConfigurationError(f"unknown H2 basis key {key}")

    def __add__(self, other: "H2Class") -> "H2Class":
        if self.g != other.g:
            raise ConfigurationError("mixed genus")
        out = dict(self.coeffs)
        for key, coeff in other.coeffs.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return H2Class(self.g, out)

    def __neg__(self) -> "H2Class":
        return H2Class(self.g, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "H2Class") -> "H2Class":
        return self + (-other)


def h2_basis_size(g: int) -> int:
    return 1 + 2 * comb(g, 2) + g * g


def h2_c(g: int) -> H2Class:
    return H2Class(g, {("c",): 1})


def h2_pontryagin(g: int, kind: str, i: int, j: int) -> H2Class:
    return H2Class(g, {(kind, i, j): 1})


def spherical_u(g: int) -> H2Class:
    """The spherical class c - sum_i a_i.b_i."""
    coeffs: Dict[H2Key, int] = {("c",): 1}
    for i in range(1, g + 1):
        coeffs[("ab", i, i)] = -1
    return H2Class(g, coeffs)


def _pair_monomial(mono: Monomial, key: H2Key) -> Optional[int]:
    """Table lookup; None marks an undetermined pair."""
    if mono == Monomial(0, 1):  # c*
        if key == ("c",):
            return 1
        if key[0] == "ab" and key[1] == key[2]:
            return 0
        return None
    if mono.c_exp == 0:
        ext = mono.ext
        low = ext & -ext
        if ext == (low | (low << 1)) and (low.bit_length() - 1) % 2 == 0:
            i = (low.bit_length() - 1) // 2 + 1  # mono is a_i* b_i*
            if key == ("c",):
                return 1
            if key[0] == "ab" and key[1] == key[2]:
                return 1 if key[1] == i else 0
            return None
    return None


def evaluate(x: RingElement, z: H2Class) -> int:
    """Bilinear extension of the stored pairing to <x, z>.

    Every monomial of x actually present must pair with every basis term of
    z through the table; an undetermined combination raises.
    """
    if x.g != z.g:
        raise ConfigurationError("mixed genus")
    if x and x.degree() != 2:
        raise DegreeError(f"evaluation needs degree 2, got {x.degree()}")
    total = 0
    for mono, coeff in x.terms.items():
        for key, zc in z.coeffs.items():
            hit = _pair_monomial(mono, key)
            if hit is None:
                raise UndeterminedPairingError(
                    "pairing-not-determined-by-paper: "
                    f"<{RingElement.monomial(x.g, mono)}, {key}>")
            total += coeff * zc * hit
    return total % 2 if x.mod2 else total


# -- top-degree pairing -------------------------------------------------------

def top_pair(ring: MacdonaldRing, x: RingElement, y: RingElement) -> int:
    """Coefficient of the top class in nf(x*y), oriented so that pure
    c*-power pairs give +1."""
    if not x or not y:
        return 0
    if x.degree() is MIXED or y.degree() is MIXED:
        raise DegreeError("top pairing needs homogeneous inputs")
    if x.degree() + y.degree() != 2 * ring.n:
        raise DegreeError(
            f"degrees {x.degree()} + {y.degree()} != {2 * ring.n}")
    orient = ring.top_coefficient(Monomial(0, ring.n))
    product = ring.normal_form(x * y)
    return orient * product.terms.get(Monomial(0, ring.n), 0)


def _dual_sector(sector: Tuple[int, int]) -> Tuple[int, int]:
    ua, ub = sector
    return ub >> 1, ua << 1


def pairing_determinant_magnitude(ring: MacdonaldRing, q: int) -> int:
    """|det| of the top-pairing matrix between degrees q and 2n - q.

    The matrix is block diagonal over dual sector pairs, so the determinant
    is the product of small block determinants; 0 when blocks fail to be
    square or singular.
    """
    n, g = ring.n, ring.g
    mask_a = sum(1 << (2 * i) for i in range(g))
    rows = ring.basis(q)
    cols = ring.basis(2 * n - q)
    if len(rows) != len(cols):
        return 0
    by_sector_rows: Dict[Tuple[int, int], list] = {}
    for mono in rows:
        by_sector_rows.setdefault(
            _sector_of(mono.ext, mask_a), []).append(mono)
    by_sector_cols: Dict[Tuple[int, int], list] = {}
    for mono in cols:
        by_sector_cols.setdefault(
            _sector_of(mono.ext, mask_a), []).append(mono)
    total = 1
    seen_cols = 0
    for sector, row_monos in sorted(by_sector_rows.items()):
        col_monos = by_sector_cols.get(_dual_sector(sector), [])
        if len(col_monos) != len(row_monos):
            return 0
        seen_cols += len(col_monos)
        slot = {m: i for i, m in enumerate(row_monos)}
        ech = SparseEchelon(len(row_monos))
        for cm in col_monos:
            column: Dict[int, int] = {}
            for rm in row_monos:
                if rm.ext & cm.ext:
                    continue
                prod = Monomial(rm.ext | cm.ext, rm.c_exp + cm.c_exp)
                val = ring.top_coefficient(prod)
                # sign of merging the two sorted odd words
                parity = 0
                ext2 = cm.ext
                while ext2:
                    low = ext2 & -ext2
                    parity ^= (rm.ext >> low.bit_length()).bit_count() & 1
                    ext2 ^= low
                if val:
                    column[slot[rm]] = -val if parity else val
            if column:
                ech.add(column)
        if ech.rank() != len(row_monos):
            return 0
        for mag in ech.lead_magnitudes():
            total *= mag
    if seen_cols != len(cols):
        return 0
    return total


# -- spin ---------------------------------------------------------------------

@dataclass(frozen=True)
class SpinStatus:
    manifold_spin: bool
    cover_spin: bool
    note: str = ""


def spin_status(n: int, g: int) -> SpinStatus:
    """Spin status of the manifold and its universal cover.

    Parity table: never spin for g > 0; cover spin iff n - g is odd.  For
    g = 0 the complex projective space rule applies (spin iff n odd), and
    n = 1 degenerates to the surface itself, which is always spin.  For
    n >= 2, g >= 1 the table answer is cross-validated against the partial
    evaluation table; disagreement raises.
    """
    if n < 1 or g < 0:
        raise ConfigurationError("need n >= 1, g >= 0")
    if n == 1:
        return SpinStatus(True, True,
                          "degenerate case: SP^1(M_g) is the surface M_g")
    if g == 0:
        odd = n % 2 == 1
        return SpinStatus(odd, odd, "projective space: spin iff n is odd")
    table = SpinStatus(False, (n - g) % 2 == 1)
    w2f = w2_free(n, g)
    ev_u = evaluate(w2f, spherical_u(g))
    ev_ab = evaluate(w2f, h2_pontryagin(g, "ab", 1, 1))
    if ev_u != (n - g + 1) % 2:
        raise RuleConflictError(
            f"<w2, u> = {ev_u} but n-g+1 = {(n - g + 1) % 2} mod 2 "
            f"at (n={n}, g={g})")
    cover_by_eval = ev_u == 0
    manifold_by_eval = ev_ab == 0
    if (manifold_by_eval, cover_by_eval) != (table.manifold_spin,
                                             table.cover_spin):
        raise RuleConflictError(
            f"evaluation route {(manifold_by_eval, cover_by_eval)} "
            f"disagrees with parity table {(table.manifold_spin, table.cover_spin)} "
            f"at (n={n}, g={g})")
    return table


def spin_cover_sheets(n: int, g: int) -> Optional[int]:
    """Sheet count of the smallest certified spin covering.

    1 when the manifold is already spin, 2^g when only the n - g odd
    covering trick applies, None when the universal cover is not spin.
    """
    status = spin_status(n, g)
    if status.manifold_spin:
        return 1
    if status.cover_spin:
        return 2 ** g
    return None
