"""Machine checks for every ring-level identity behind the classifications.

Each check re-derives one identity inside the built ring (or in exact
rational arithmetic for the coefficient-count argument) and reports a
pass/fail ledger entry per grid point, with a witness string.  Grid points
where a check's hypothesis fails are recorded as skipped.  Failures are
data: the suite never raises, so deliberately mutated rings produce red
entries instead of crashes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple

from . import charclasses, duality
from .classifier import cup_length_search
from .macdonald import MacdonaldRing, build
from .ring import Monomial, RingElement, render
from .oracle import oracle_betti
from .tensor import expected_tc_coefficient, tc_certificate, zero_divisor

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    point: str
    status: str
    witness: str

    def to_dict(self) -> dict:
        return {"check_id": self.check_id, "description": self.description,
                "point": self.point, "status": self.status,
                "witness": self.witness}


def suite_passes(results: List[CheckResult]) -> bool:
    return all(r.status != FAIL for r in results)


class RingCache:
    """Shared store of built rings, one per (n, g, drop_family)."""

    def __init__(self, drop_family: Optional[str] = None,
                 override_guard: bool = False):
        self.drop_family = drop_family
        self.override_guard = override_guard
        self._store: Dict[Tuple[int, int], MacdonaldRing] = {}

    def get(self, n: int, g: int) -> MacdonaldRing:
        key = (n, g)
        if key not in self._store:
            self._store[key] = build(n, g, drop_family=self.drop_family,
                                     override_guard=self.override_guard)
        return self._store[key]


def _prod_ab(g: int, upto: int) -> RingElement:
    e = RingElement.one(g)
    for i in range(1, upto + 1):
        e = e * RingElement.a(g, i) * RingElement.b(g, i)
    return e


def _point(n: int, g: int) -> str:
    return f"(n={n}, g={g})"


# -- the ten checks -----------------------------------------------------------

def _check_01(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """a1*b1*...an*bn* = (c*)^n != 0 for n <= g, over the integers."""
    ring = rings.get(n, g)
    lhs = ring.normal_form(_prod_ab(g, n))
    rhs = ring.normal_form(RingElement.c(g, n))
    if lhs == rhs and lhs:
        return PASS, f"both reduce to {render(rhs)}"
    return FAIL, f"lhs {render(lhs)} vs rhs {render(rhs)}"


def _check_02(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """(c*)^(n-k) a1*b1*...ak*bk* = (c*)^n mod 2 for 0 <= k <= g <= n."""
    ring = rings.get(n, g)
    target = ring.normal_form(RingElement.c(g, n).reduce_mod2())
    if not target:
        return FAIL, "(c*)^n vanished mod 2"
    for k in range(g + 1):
        lhs = (RingElement.c(g, n - k) * _prod_ab(g, k)).reduce_mod2()
        got = ring.normal_form(lhs)
        if got != target:
            return FAIL, f"k={k}: {render(got)} != {render(target)}"
    return PASS, f"all k in 0..{g} reduce to {render(target)} mod 2"


def _check_03(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """The three reduced degree-2 relation families vanish for n = 2."""
    ring = rings.get(n, g)
    a, b, c = RingElement.a, RingElement.b, RingElement.c
    count = 0
    for i, j, k in permutations(range(1, g + 1), 3):
        for word in (a(g, i) * b(g, j) * b(g, k),
                     a(g, i) * a(g, j) * b(g, k)):
            count += 1
            if ring.normal_form(word):
                return FAIL, f"family 1 survivor {render(word)}"
    for i, j in permutations(range(1, g + 1), 2):
        for w in (a(g, i) * a(g, j), b(g, i) * b(g, j), a(g, i) * b(g, j)):
            count += 1
            if ring.normal_form(w * c(g)):
                return FAIL, f"family 2 survivor {render(w)}c*"
    for k in range(1, g + 1):
        rel = c(g) - a(g, k) * b(g, k)
        words = [c(g)]
        for i in range(1, g + 1):
            if i != k:
                words.extend([a(g, i), b(g, i)])
        for w in words:
            count += 1
            if ring.normal_form(w * rel):
                return FAIL, f"family 3 survivor k={k}, w={render(w)}"
    return PASS, f"{count} products vanish"


def _check_04(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """Degree-2 and degree-4 parts of the total Chern class match c1, c2."""
    ring = rings.get(n, g)
    total = charclasses.chern_total(ring)
    d2 = total.graded_part(2)
    d4 = total.graded_part(4)
    first = charclasses.c1(ring)
    second = charclasses.c2(ring)
    if d2 != first:
        return FAIL, f"degree 2: {render(d2)} != {render(first)}"
    if 4 <= 2 * n and d4 != second:
        return FAIL, f"degree 4: {render(d4)} != {render(second)}"
    return PASS, f"c1 = {render(first)}"


def _check_05(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """theta-power identities in the free algebra.

    theta^2 = 2 sum_{i<j} (a_i*b_i*)(a_j*b_j*) and theta^g = g! prod of all
    blocks; at g = 2 the two coincide as theta^2 = 2 a1*b1*a2*b2*.
    """
    th = charclasses.theta(g)
    pair_sum = RingElement.zero(g)
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            pair_sum = pair_sum + (RingElement.a(g, i) * RingElement.b(g, i)
                                   * RingElement.a(g, j) * RingElement.b(g, j))
    if th * th != 2 * pair_sum:
        return FAIL, "theta^2 != 2 * (sum over block pairs)"
    if th ** g != factorial(g) * _prod_ab(g, g):
        return FAIL, "theta^g != g! * (product of all blocks)"
    return PASS, "theta^2 = 2*sum(pairs); theta^g = g!*prod(blocks)"


def _check_06(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """Coefficient contradiction for hypothetical product covers.

    Writing F1 = f*(c*), F3 = f*(theta) as independent commuting
    indeterminates, the second Chern classes of the two sides force
    ((n-g+1)(n-g)/2) (F1 - F3/(n-g+1))^2 to match
    ((n-g+1)(n-g)/2) F1^2 - (n-g) F1 F3 + F3^2/2.  The F1^2 and F1*F3
    coefficients agree; the F3^2 coefficients cannot.
    """
    d = Fraction(n - g)
    e = Fraction(n - g + 1)
    lead = e * d / 2
    rhs_f1f1 = lead
    rhs_f1f3 = lead * 2 * Fraction(-1, n - g + 1)
    rhs_f3f3 = lead * Fraction(1, (n - g + 1) ** 2)
    lhs_f1f1 = lead
    lhs_f1f3 = -d
    lhs_f3f3 = Fraction(1, 2)
    if rhs_f1f1 != lhs_f1f1 or rhs_f1f3 != lhs_f1f3:
        return FAIL, ("F1^2 or F1*F3 coefficients disagree: "
                      f"{rhs_f1f1} vs {lhs_f1f1}, {rhs_f1f3} vs {lhs_f1f3}")
    if rhs_f3f3 == lhs_f3f3:
        return FAIL, "F3^2 coefficients agree; contradiction vanished"
    return PASS, (f"F3^2 coefficient {lhs_f3f3} vs {rhs_f3f3}; "
                  f"the gap 1/{2 * (n - g + 1)} is nonzero")


def _check_07(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """Zero-divisor certificates: exact length and leading coefficient,
    and maximality within the generator family."""
    ring = rings.get(n, g)
    cert = tc_certificate(ring)
    want_len = 4 * n if n <= g else 2 * n + 2 * g
    want_coeff = expected_tc_coefficient(n, g)
    if not cert.product:
        return FAIL, "certificate product vanished"
    if cert.length != want_len:
        return FAIL, f"length {cert.length} != {want_len}"
    if cert.leading_coefficient != want_coeff:
        return FAIL, (f"leading coefficient {cert.leading_coefficient} "
                      f"!= {want_coeff}")
    bars = [zero_divisor(ring, RingElement.c(g))]
    for i in range(1, g + 1):
        bars.append(zero_divisor(ring, RingElement.a(g, i)))
        bars.append(zero_divisor(ring, RingElement.b(g, i)))
    for bar in bars:
        if cert.product * bar:
            return FAIL, "certificate extends by another zero divisor"
    return PASS, (f"length {cert.length}, coefficient "
                  f"{cert.leading_coefficient} on "
                  f"({render(cert.diagonal_class)}) (x) (same); maximal")


def _check_08(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """w2 evaluations against the spin parity table."""
    w2f = charclasses.w2_free(n, g)
    ev_u = duality.evaluate(w2f, duality.spherical_u(g))
    if ev_u != (n - g + 1) % 2:
        return FAIL, f"<w2, u> = {ev_u}, expected {(n - g + 1) % 2}"
    witness = [f"<w2, u> = {ev_u}"]
    if g > 0:
        ev_ab = duality.evaluate(w2f, duality.h2_pontryagin(g, "ab", 1, 1))
        if ev_ab != 1:
            return FAIL, f"<w2, a1.b1> = {ev_ab}, expected 1"
        witness.append("<w2, a1.b1> = 1")
    status = duality.spin_status(n, g)  # raises on route disagreement
    want_cover = (n - g) % 2 == 1 if g > 0 else n % 2 == 1
    want_manifold = False if g > 0 else n % 2 == 1
    if (status.manifold_spin, status.cover_spin) != (want_manifold,
                                                     want_cover):
        return FAIL, f"table {status} disagrees with parity"
    witness.append(f"manifold_spin={status.manifold_spin}, "
                   f"cover_spin={status.cover_spin}")
    return PASS, "; ".join(witness)


def _check_09(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """Betti symmetry and unimodular top pairing in every degree pair."""
    ring = rings.get(n, g)
    betti = ring.betti()
    for q in range(2 * n + 1):
        if betti[q] != betti[2 * n - q]:
            return FAIL, f"b_{q} = {betti[q]} != b_{2 * n - q}"
    for q in range(n + 1):
        mag = duality.pairing_determinant_magnitude(ring, q)
        if mag != 1:
            return FAIL, f"pairing det magnitude {mag} in degrees ({q}, {2 * n - q})"
    return PASS, f"b symmetric, dets +-1 in all {n + 1} degree pairs"


def _check_10(n: int, g: int, rings: RingCache) -> Tuple[str, str]:
    """Betti numbers agree with the independent rank oracle."""
    got = rings.get(n, g).betti()
    want = oracle_betti(n, g)
    if got != want:
        return FAIL, f"build {got} != oracle {want}"
    return PASS, f"betti {got}"


@dataclass(frozen=True)
class _CheckSpec:
    check_id: str
    description: str
    run: Callable[[int, int, RingCache], Tuple[str, str]]
    applies: Callable[[int, int], bool]
    skip_reason: str


_CHECKS: Tuple[_CheckSpec, ...] = (
    _CheckSpec("01-odd-top-product",
               "a1*b1*...an*bn* equals (c*)^n and is nonzero",
               _check_01, lambda n, g: 1 <= n <= g,
               "requires n <= g"),
    _CheckSpec("02-mixed-top-product-mod2",
               "(c*)^(n-k) times k blocks equals (c*)^n mod 2",
               _check_02, lambda n, g: n >= g,
               "requires n >= g"),
    _CheckSpec("03-degree2-relation-families",
               "the three reduced relation families vanish at n = 2",
               _check_03, lambda n, g: n == 2 and g >= 1,
               "stated for n = 2 with g >= 1"),
    _CheckSpec("04-chern-consistency",
               "total Chern class graded parts match the c1/c2 closed forms",
               _check_04, lambda n, g: g > 1,
               "c2 closed form stated for g > 1"),
    _CheckSpec("05-theta-identities",
               "theta-power expansion identities in the free algebra",
               _check_05, lambda n, g: g > 1 and n == 1,
               "free-algebra fact, run once per genus (at n = 1)"),
    _CheckSpec("06-no-product-coefficients",
               "second-Chern coefficient match fails over any product cover",
               _check_06, lambda n, g: g > 1 and n >= 2 * g - 1,
               "stated for g > 1 and n >= 2g-1"),
    _CheckSpec("07-tc-certificates",
               "zero-divisor certificates have exact leading coefficients",
               _check_07, lambda n, g: n >= 2,
               "tc theorem requires n >= 2"),
    _CheckSpec("08-spin-evaluations",
               "w2 evaluations reproduce the spin parity table",
               _check_08, lambda n, g: n >= 2,
               "spin table stated for n >= 2"),
    _CheckSpec("09-poincare-duality",
               "Betti symmetry and unimodular top pairing",
               _check_09, lambda n, g: True, ""),
    _CheckSpec("10-rank-oracle-agreement",
               "Betti numbers equal the independent oracle ranks",
               _check_10, lambda n, g: True, ""),
)


def run_suite(max_n: int, max_g: int, *,
              drop_family: Optional[str] = None,
              override_guard: bool = False) -> List[CheckResult]:
    """Run every check over the grid 1 <= n <= max_n, 0 <= g <= max_g.

    The ledger order is (check, n, g); identical arguments produce an
    identical ledger.  A mutated ideal (drop_family) affects the built
    rings but never the oracle, so mutations surface as failures.
    """
    rings = RingCache(drop_family=drop_family, override_guard=override_guard)
    results: List[CheckResult] = []
    for spec in _CHECKS:
        for n in range(1, max_n + 1):
            for g in range(max_g + 1):
                point = _point(n, g)
                if not spec.applies(n, g):
                    results.append(CheckResult(
                        spec.check_id, spec.description, point,
                        SKIPPED, spec.skip_reason))
                    continue
                try:
                    status, witness = spec.run(n, g, rings)
                except Exception as exc:  # failures are data, not exceptions
                    status, witness = FAIL, f"error: {exc}"
                results.append(CheckResult(
                    spec.check_id, spec.description, point, status, witness))
    return results
