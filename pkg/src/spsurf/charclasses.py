"""Chern and Stiefel-Whitney classes of SP^n(M_g).

Closed forms, with theta denoting the sum of the a_i*b_i* blocks:

    c1 = (n - g + 1) c* - theta
    c2 = ((n-g+1)(n-g)/2) (c*)^2 - (n-g) c* theta + theta^2 / 2
    w2 = c1 mod 2
    total Chern class = (1 + c*)^(n-2g+1) * prod_i (1 + c* - a_i* b_i*)

The binomial exponent n - 2g + 1 may be negative; (1 + c*) is a unit in the
degree-truncated ring, so the factor is expanded as the geometric series
(1 + c*)^-1 = sum (-c*)^k cut off above degree 2n.  theta^2 always has even
coefficients, which makes the c2 formula integral for every g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .macdonald import MacdonaldRing
from .ring import Monomial, RingElement


def theta(g: int) -> RingElement:
    """Free-algebra element a1*b1* + ... + ag*bg*."""
    terms = {Monomial(0b11 << (2 * i), 0): 1 for i in range(g)}
    return RingElement(g, terms)


def _truncate(x: RingElement, max_degree: int) -> RingElement:
    return RingElement(
        x.g, {m: c for m, c in x.terms.items() if m.degree <= max_degree},
        x.mod2)


def _unit_c_power(g: int, exponent: int, max_degree: int) -> RingElement:
    """(1 + c*)^exponent truncated, for any integer exponent."""
    one_plus_c = RingElement.one(g) + RingElement.c(g)
    if exponent >= 0:
        out = RingElement.one(g)
        for _ in range(exponent):
            out = _truncate(out * one_plus_c, max_degree)
        return out
    inverse = RingElement(
        g, {Monomial(0, k): (-1) ** k for k in range(max_degree // 2 + 1)})
    out = RingElement.one(g)
    for _ in range(-exponent):
        out = _truncate(out * inverse, max_degree)
    return out


def chern_total_free(n: int, g: int) -> RingElement:
    """Total Chern class expanded in the free algebra, degrees 0..2n."""
    top = 2 * n
    out = _unit_c_power(g, n - 2 * g + 1, top)
    c = RingElement.c(g)
    one = RingElement.one(g)
    for i in range(1, g + 1):
        factor = one + c - RingElement.a(g, i) * RingElement.b(g, i)
        out = _truncate(out * factor, top)
    return out


def chern_total(ring: MacdonaldRing) -> RingElement:
    """Normal form of the total Chern class, all degrees 0..2n."""
    return ring.normal_form(chern_total_free(ring.n, ring.g))


def c1_free(n: int, g: int) -> RingElement:
    return (n - g + 1) * RingElement.c(g) - theta(g)


def c2_free(n: int, g: int) -> RingElement:
    """Second Chern class closed form; integral for every g."""
    th = theta(g)
    csq = RingElement.c(g, 2)
    half_theta_sq = (th * th).scale_exact_div(2)
    d = n - g
    return ((d + 1) * d // 2) * csq - d * (RingElement.c(g) * th) \
        + half_theta_sq


def c1(ring: MacdonaldRing) -> RingElement:
    return ring.normal_form(c1_free(ring.n, ring.g))


def c2(ring: MacdonaldRing) -> RingElement:
    return ring.normal_form(c2_free(ring.n, ring.g))


def w2(ring: MacdonaldRing) -> RingElement:
    """Second Stiefel-Whitney class: c1 reduced mod 2."""
    return c1(ring).reduce_mod2()


def w2_free(n: int, g: int) -> RingElement:
    return c1_free(n, g).reduce_mod2()


@dataclass(frozen=True)
class CharClassSet:
    """Bundle of the characteristic classes of one ring, in normal form."""

    total_chern: RingElement
    c1: RingElement
    c2: RingElement
    theta: RingElement
    w2: RingElement


def char_classes(ring: MacdonaldRing) -> CharClassSet:
    total = chern_total(ring)
    first = c1(ring)
    return CharClassSet(
        total_chern=total,
        c1=first,
        c2=c2(ring),
        theta=ring.normal_form(theta(ring.g)),
        w2=first.reduce_mod2(),
    )
