"""Per-(n, g) invariant report assembled from the classification rules.

Every field carries a citation string naming the rule that produced it, so
reports are self-documenting.  Statuses the rule table cannot decide are
emitted as "unknown", never guessed.  Contradictory rule firings abort with
a diagnostic; the only near-miss, (n, g) = (1, 1), is absorbed by the n = 1
degenerate branch (SP^1 of a surface is the surface itself).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import RuleConflictError
from .macdonald import MacdonaldRing, build
from .ring import Monomial, RingElement
from . import duality
from .tensor import tc_certificate

EXISTS = "exists"
NOT_EXISTS = "not_exists"
UNKNOWN = "unknown"


def cup_length_search(ring: MacdonaldRing) -> int:
    """Longest nonzero product of generators a_i*, b_i*, c*, c*, ...

    A product of distinct odd generators and t copies of c* is a single
    monomial up to sign, so the search space is exactly (odd subset, t);
    the scan runs by factor count, longest first.
    """
    n, g = ring.n, ring.g
    for factors in range(2 * n, 0, -1):
        for mask in range(1 << (2 * g)):
            t = factors - mask.bit_count()
            if t < 0 or t > n or mask.bit_count() + 2 * t > 2 * n:
                continue
            candidate = RingElement.monomial(g, Monomial(mask, t))
            if ring.normal_form(candidate):
                return factors
    return 0


@dataclass(frozen=True)
class InvariantReport:
    """Full answer record for one (n, g); values plus rule citations."""

    n: int
    g: int
    real_dimension: int
    betti: Tuple[int, ...]
    euler: int
    pi1: str
    pi2: str
    cat: int
    tc: Optional[int]
    rationally_essential: bool
    manifold_spin: bool
    cover_spin: bool
    spin_cover_sheets: Optional[int]
    dim_MC: int
    dim_mc: Dict[str, int]            # {"exact": v} or {"upper_bound": v}
    psc: str
    kahler_psc: str
    nonpositive_hsc_kahler: str
    symplectically_aspherical: str
    citations: Dict[str, str] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    FIELD_ORDER = (
        "real_dimension", "betti", "euler", "pi1", "pi2", "cat", "tc",
        "rationally_essential", "manifold_spin", "cover_spin",
        "spin_cover_sheets", "dim_MC", "dim_mc", "psc", "kahler_psc",
        "nonpositive_hsc_kahler", "symplectically_aspherical",
    )

    def to_dict(self) -> dict:
        """Deterministic serialization; field order fixed for snapshots."""
        out = {"n": self.n, "g": self.g}
        for name in self.FIELD_ORDER:
            value = getattr(self, name)
            if isinstance(value, tuple):
                value = list(value)
            out[name] = {"value": value, "rule": self.citations[name]}
        out["notes"] = list(self.notes)
        return out


def _psc_status(n: int, g: int) -> Tuple[str, str]:
    if n == 1:
        if g == 0:
            return EXISTS, "degenerate case: SP^1(M_0) = S^2 carries psc"
        return NOT_EXISTS, ("degenerate case: SP^1(M_g) = M_g, a surface "
                            "of genus >= 1, carries no psc metric")
    verdicts: List[Tuple[str, str]] = []
    if n <= g and (n - g) % 2:
        verdicts.append((NOT_EXISTS,
                         "n <= g with n-g odd: spin hypereuclidean cover"))
    if n <= min(g, 4):
        verdicts.append((NOT_EXISTS,
                         "n <= min(g, 4): degree-one torus map obstruction"))
    if n >= 2 * g - 1:
        verdicts.append((EXISTS,
                         "n >= 2g-1: projectivized-bundle Kahler metric"))
    if n > g and (n - g) % 2 == 0:
        verdicts.append((EXISTS,
                         "n > g with n-g even: totally non-spin and "
                         "null-homologous image class"))
    statuses = {v for v, _ in verdicts}
    if EXISTS in statuses and NOT_EXISTS in statuses:
        raise RuleConflictError(
            f"psc rules conflict at (n={n}, g={g}): {verdicts}")
    if verdicts:
        return verdicts[0]
    return UNKNOWN, "no psc rule applies in the range g < n < 2g-1, n-g odd"


def _kahler_psc_status(n: int, g: int) -> Tuple[str, str]:
    if g >= n:
        return NOT_EXISTS, ("g >= n: any Kahler metric has negative total "
                            "scalar curvature")
    if n >= 2 * g - 1 and (n, g) != (1, 1):
        return EXISTS, "n >= 2g-1: projectivized-bundle Kahler metric"
    return UNKNOWN, "no Kahler psc rule applies for g < n < 2g-1"


def _nonpositive_hsc_status(n: int, g: int) -> Tuple[str, str]:
    if g >= 2 * n - 1:
        return ("exists_generic",
                "g >= 2n-1: flat-metric pullback along the torus embedding, "
                "generic complex structure")
    if n >= g:
        return (NOT_EXISTS,
                "n >= g: rational curves force positive holomorphic "
                "sectional curvature somewhere")
    # complement of g >= 2n-1 is exactly n >= floor((g+1)/2) + 1
    return ("not_exists_generic",
            "n >= floor((g+1)/2)+1: generic curves admit no such metric")


def _symplectically_aspherical_status(n: int, g: int) -> Tuple[str, str]:
    if g >= 2 * n - 1:
        return ("yes_generic",
                "g >= 2n-1: aspherical Kahler form pulled back from the "
                "Jacobian torus, generic complex structure")
    if (n, g) == (2, 2):
        return ("no", "SP^2(M_2) is a one-point torus blowup; the bound "
                      "g >= 2n-1 is sharp")
    return UNKNOWN, "undetermined for g < 2n-1 except (2,2)"


def classify(n: int, g: int, *, ring: Optional[MacdonaldRing] = None,
             override_guard: bool = False) -> InvariantReport:
    """Assemble the invariant report; pure function of (n, g)."""
    if ring is None:
        ring = build(n, g, override_guard=override_guard)
    citations: Dict[str, str] = {}
    notes: List[str] = []
    degenerate = n == 1
    if degenerate:
        notes.append("degenerate case: SP^1(M_g) = M_g; surface facts "
                     "apply, not the n >= 2 formulas")

    betti = tuple(ring.betti())
    citations["real_dimension"] = "closed manifold of real dimension 2n"
    citations["betti"] = ("ranks of the relation quotient, one integer "
                          "column reduction per degree")
    euler = sum(b if q % 2 == 0 else -b for q, b in enumerate(betti))
    citations["euler"] = "alternating sum of the Betti numbers"

    if degenerate and g >= 2:
        pi1 = f"genus-{g} surface group"
        citations["pi1"] = "degenerate case: fundamental group of M_g"
    else:
        pi1 = f"Z^{2 * g}"
        citations["pi1"] = ("free abelian of rank 2g; the degree-one map "
                            "to the Jacobian torus is a pi_1-isomorphism")
    if degenerate:
        pi2 = "Z" if g == 0 else "0"
        citations["pi2"] = "degenerate case: pi_2 of the surface"
    elif n == 2:
        pi2 = f"Z[Z^{2 * g}]-module generated by one element"
        citations["pi2"] = ("n = 2: generated over the deck action by one "
                            "rational curve")
    else:
        pi2 = "Z"
        citations["pi2"] = "n >= 3: pi_2 = Z"

    cat = 2 * n if n <= g else n + g
    citations["cat"] = ("cat = 2n if n <= g (essential manifold), "
                        "n + g if n > g; generator cup products attain it")
    searched = cup_length_search(ring)
    if searched != cat:
        raise RuleConflictError(
            f"cup-length search found {searched}, formula says {cat} "
            f"at (n={n}, g={g})")

    if n >= 2:
        tc: Optional[int] = 2 * cat
        citations["tc"] = ("tc = 2 cat for n >= 2: zero-divisor "
                           "certificate meets the cat(X x X) bound")
        cert = tc_certificate(ring)
        if cert.length != tc or not cert.product:
            raise RuleConflictError(
                f"tc certificate of length {cert.length} (nonzero: "
                f"{bool(cert.product)}) does not match tc = {tc} "
                f"at (n={n}, g={g})")
    else:
        tc = None
        citations["tc"] = ("undetermined: the tc = 2 cat theorem requires "
                           "n >= 2")

    essential = n <= g
    citations["rationally_essential"] = (
        "essential iff n <= g: the fundamental class survives in the "
        "Jacobian torus; inessential above by dimension")

    spin = duality.spin_status(n, g)
    sheets = duality.spin_cover_sheets(n, g)
    citations["manifold_spin"] = ("never spin for g > 0 (w2 evaluates to 1 "
                                  "on a1.b1); for g = 0 spin iff n odd")
    citations["cover_spin"] = ("cover spin iff n - g odd: w2 reduces to "
                               "the theta class, which kills spherical "
                               "classes")
    citations["spin_cover_sheets"] = ("2^g-sheeted covering halving the "
                                      "a-loops is spin when n - g is odd")
    if g >= 1 and not degenerate:
        notes.append("spin fields cross-validated through the partial "
                     "H2 evaluation table (Hom-dual basis convention)")

    if degenerate:
        if g == 0:
            dim_mc_pair: Dict[str, int] = {"exact": 0}
            dim_MC = 0
        else:
            dim_mc_pair = {"exact": 2}
            dim_MC = 2
        citations["dim_MC"] = "degenerate case: universal cover of a surface"
        citations["dim_mc"] = "degenerate case: universal cover of a surface"
    elif n >= g:
        dim_MC = 2 * g
        dim_mc_pair = {"exact": 2 * g}
        citations["dim_MC"] = ("n >= g: both macroscopic dimensions equal "
                               "2g via the Jacobian fibration")
        citations["dim_mc"] = citations["dim_MC"]
    else:
        dim_MC = 2 * n
        bound = 2 * n - 2 if (g - n) % 2 == 0 else 2 * n - 1
        dim_mc_pair = {"upper_bound": bound}
        citations["dim_MC"] = ("n < g: rationally essential with amenable "
                               "pi_1, so dim_MC is the full dimension 2n")
        citations["dim_mc"] = ("n < g: duality-group gap gives <= 2n-1, "
                               "sharpened to <= 2n-2 when g - n is even "
                               "(totally non-spin)")

    psc, psc_rule = _psc_status(n, g)
    citations["psc"] = psc_rule
    kpsc, kpsc_rule = _kahler_psc_status(n, g)
    citations["kahler_psc"] = kpsc_rule
    if psc == NOT_EXISTS and kpsc == EXISTS:
        raise RuleConflictError(
            f"kahler psc exists but psc does not at (n={n}, g={g})")
    nhsc, nhsc_rule = _nonpositive_hsc_status(n, g)
    citations["nonpositive_hsc_kahler"] = nhsc_rule
    sympl, sympl_rule = _symplectically_aspherical_status(n, g)
    citations["symplectically_aspherical"] = sympl_rule

    return InvariantReport(
        n=n, g=g, real_dimension=2 * n, betti=betti, euler=euler,
        pi1=pi1, pi2=pi2, cat=cat, tc=tc, rationally_essential=essential,
        manifold_spin=spin.manifold_spin, cover_spin=spin.cover_spin,
        spin_cover_sheets=sheets, dim_MC=dim_MC, dim_mc=dim_mc_pair,
        psc=psc, kahler_psc=kpsc, nonpositive_hsc_kahler=nhsc,
        symplectically_aspherical=sympl,
        citations=citations, notes=tuple(notes))
