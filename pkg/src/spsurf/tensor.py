"""Tensor square of the cohomology ring and the TC certificates.

Elements are sparse integer combinations of ordered pairs of basis
monomials; every product reduces both components to Macdonald normal form
immediately, which keeps term growth bounded by the ring itself.

Components multiply term-wise: (x (x) y) * (x' (x) y') = (x x') (x) (y y').
Each component product carries its own internal Koszul signs, but no sign
is exchanged between the tensor factors.  This is the calculus in which the
zero-divisor certificates have their stated nonzero coefficients; with the
fully graded cross sign every square of an odd-degree zero divisor would
vanish identically and no certificate of the required length could exist.

The diagonal map multiplies the two components inside the ring; elements of
its kernel are the zero divisors whose cup-length bounds the topological
complexity from below.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Tuple

from .errors import ConfigurationError, DegreeError
from .macdonald import MacdonaldRing
from .ring import MIXED, Monomial, RingElement, mul_monomials, render

TensorTerms = Dict[Tuple[Monomial, Monomial], int]


class TensorElement:
    """Sparse element of H* (x) H* with both components in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: MacdonaldRing, terms: TensorTerms):
        self.ring = ring
        self.terms = {pair: coeff for pair, coeff in terms.items() if coeff}

    @staticmethod
    def zero(ring: MacdonaldRing) -> "TensorElement":
        return TensorElement(ring, {})

    @staticmethod
    def of(ring: MacdonaldRing, x: RingElement, y: RingElement
           ) -> "TensorElement":
        """Outer product x (x) y, components reduced to normal form."""
        xr = ring.normal_form(x)
        yr = ring.normal_form(y)
        terms: TensorTerms = {}
        for mx, cx in xr.terms.items():
            for my, cy in yr.terms.items():
                terms[(mx, my)] = terms.get((mx, my), 0) + cx * cy
        return TensorElement(ring, terms)

    def _check(self, other: "TensorElement") -> None:
        if self.ring is not other.ring:
            raise ConfigurationError("operands built over different rings")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for pair, coeff in other.terms.items():
            out[pair] = out.get(pair, 0) + coeff
        return TensorElement(self.ring, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for pair, coeff in other.terms.items():
            out[pair] = out.get(pair, 0) - coeff
        return TensorElement(self.ring, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.ring,
                             {p: -c for p, c in self.terms.items()})

    def __mul__(self, other) -> "TensorElement":
        if isinstance(other, int):
            return TensorElement(
                self.ring, {p: c * other for p, c in self.terms.items()})
        self._check(other)
        ring = self.ring
        g = ring.g
        out: TensorTerms = {}
        for (lx, ly), c1 in self.terms.items():
            for (rx, ry), c2 in other.terms.items():
                hx = mul_monomials(lx, rx)
                if hx is None:
                    continue
                hy = mul_monomials(ly, ry)
                if hy is None:
                    continue
                sx, mx = hx
                sy, my = hy
                left = ring.normal_form(RingElement.monomial(g, mx))
                right = ring.normal_form(RingElement.monomial(g, my))
                base = c1 * c2 * sx * sy
                for bx, cx in left.terms.items():
                    for by, cy in right.terms.items():
                        pair = (bx, by)
                        out[pair] = out.get(pair, 0) + base * cx * cy
        return TensorElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TensorElement":
        out = TensorElement.of(self.ring, RingElement.one(self.ring.g),
                               RingElement.one(self.ring.g))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TensorElement) and self.ring is other.ring
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def diagonal(self) -> RingElement:
        """Image under the diagonal map: multiply the components."""
        total = RingElement.zero(self.ring.g)
        for (mx, my), coeff in self.terms.items():
            prod = (RingElement.monomial(self.ring.g, mx)
                    * RingElement.monomial(self.ring.g, my))
            total = total + coeff * prod
        return self.ring.normal_form(total)

    def __repr__(self) -> str:
        if not self.terms:
            return "TensorElement(0)"
        bits = []
        for (mx, my) in sorted(self.terms,
                               key=lambda p: (p[0].degree, p[1].degree,
                                              p[0].ext, p[1].ext,
                                              p[0].c_exp, p[1].c_exp)):
            coeff = self.terms[(mx, my)]
            lx = render(RingElement.monomial(self.ring.g, mx))
            ly = render(RingElement.monomial(self.ring.g, my))
            bits.append(f"{coeff}*({lx})(x)({ly})")
        return "TensorElement(" + " + ".join(bits) + ")"


def zero_divisor(ring: MacdonaldRing, x: RingElement) -> TensorElement:
    """x (x) 1 - 1 (x) x, a kernel element of the diagonal map."""
    if x.degree() is MIXED:
        raise DegreeError("zero divisors are built from homogeneous classes")
    one = RingElement.one(ring.g)
    return TensorElement.of(ring, x, one) - TensorElement.of(ring, one, x)


@dataclass(frozen=True)
class TcCertificate:
    """Nonzero zero-divisor product certifying the TC lower bound."""

    product: TensorElement
    length: int
    leading_coefficient: int
    diagonal_class: RingElement  # the ring class whose tensor square carries it


def expected_tc_coefficient(n: int, g: int) -> int:
    """Leading coefficient the certificate must realize."""
    if n <= g:
        return 2 ** (2 * n)
    return (-1) ** (n - g) * 2 ** (2 * g) * comb(2 * n - 2 * g, n - g)


def tc_certificate(ring: MacdonaldRing) -> TcCertificate:
    """Build the zero-divisor product of length 4n (n <= g) or 2n + 2g.

    The product collapses to a single diagonal tensor term T (x) T where T
    is the normal form of a1*b1*...c*-power word; the certificate records
    its exact coefficient.
    """
    n, g = ring.n, ring.g
    if n < 2:
        raise ConfigurationError(
            "the topological complexity certificate requires n >= 2")
    pairs = min(n, g)
    product = TensorElement.of(ring, RingElement.one(g), RingElement.one(g))
    length = 0
    base = RingElement.one(g)
    for i in range(1, pairs + 1):
        za = zero_divisor(ring, RingElement.a(g, i))
        zb = zero_divisor(ring, RingElement.b(g, i))
        product = product * za * za * zb * zb
        length += 4
        base = base * RingElement.a(g, i) * RingElement.b(g, i)
    if n > g:
        zc = zero_divisor(ring, RingElement.c(g))
        for _ in range(2 * (n - g)):
            product = product * zc
        length += 2 * (n - g)
        base = base * RingElement.c(g, n - g)
    diag = ring.normal_form(base)
    reference = TensorElement.of(ring, diag, diag)
    if not product:
        return TcCertificate(product, length, 0, diag)
    pair, ref_coeff = next(iter(reference.terms.items()))
    lead, rem = divmod(product.terms.get(pair, 0), ref_coeff)
    if rem or product != lead * reference:
        raise ConfigurationError(
            f"certificate at (n={n}, g={g}) is not a multiple of the "
            "diagonal tensor square")
    return TcCertificate(product, length, lead, diag)
