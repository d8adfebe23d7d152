"""Free graded-commutative algebra Lambda(a1*, b1*, ..., ag*, bg*) (x) Z[c*].

The 2g degree-1 generators anticommute and square to zero; c* has degree 2
and is central.  A monomial is a subset of the odd generators (stored as a
2g-bit mask) together with a c*-exponent.  Elements are sparse integer
combinations of monomials, either over the integers or with coefficients
reduced mod 2.

Generator order is fixed as a1* < b1* < a2* < b2* < ...; bit 2(i-1) of the
mask is ai* and bit 2(i-1)+1 is bi*.  Interleaving the a/b letters keeps the
ai*bi* blocks contiguous, so Koszul signs come from popcounts.

Elements are immutable values: every operation returns a fresh element and
never mutates its operands.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Optional, Tuple, Union

from .errors import ConfigurationError

MIXED = "mixed"


class GeneratorId(NamedTuple):
    """One odd generator: kind 'a' or 'b', index in [1, g]."""

    kind: str
    index: int

    @property
    def bit(self) -> int:
        """Position of this generator in the 2g-bit mask."""
        return 2 * (self.index - 1) + (0 if self.kind == "a" else 1)

    @staticmethod
    def from_bit(bit: int) -> "GeneratorId":
        return GeneratorId("a" if bit % 2 == 0 else "b", bit // 2 + 1)

    def validate(self, g: int) -> None:
        if self.kind not in ("a", "b"):
            raise ConfigurationError(f"unknown generator kind {self.kind!r}")
        if not 1 <= self.index <= g:
            raise ConfigurationError(
                f"generator index {self.index} out of range for g={g}")


class Monomial(NamedTuple):
    """A basis word: odd-generator subset (bit mask) and c*-exponent."""

    ext: int
    c_exp: int

    @property
    def degree(self) -> int:
        return self.ext.bit_count() + 2 * self.c_exp

    def generators(self) -> Tuple[GeneratorId, ...]:
        out = []
        ext = self.ext
        while ext:
            low = ext & -ext
            out.append(GeneratorId.from_bit(low.bit_length() - 1))
            ext ^= low
        return tuple(out)


ONE_MONOMIAL = Monomial(0, 0)


def mul_monomials(m1: Monomial, m2: Monomial) -> Optional[Tuple[int, Monomial]]:
    """Product of two monomials written in the order m1*m2.

    Returns (sign, monomial), or None when a shared odd generator kills the
    product.  The sign is the Koszul sign of merging the two sorted odd
    words: one -1 per pair (x in m1, y in m2) with x > y.
    """
    if m1.ext & m2.ext:
        return None
    parity = 0
    ext2 = m2.ext
    while ext2:
        low = ext2 & -ext2
        parity ^= (m1.ext >> low.bit_length()).bit_count() & 1
        ext2 ^= low
    sign = -1 if parity else 1
    return sign, Monomial(m1.ext | m2.ext, m1.c_exp + m2.c_exp)


TermMap = Mapping[Monomial, int]


class RingElement:
    """Sparse integer combination of monomials for a fixed genus g.

    ``mod2`` elements keep coefficients in {0, 1}.  Instances are treated as
    immutable; ``terms`` must not be mutated after construction.
    """

    __slots__ = ("g", "mod2", "terms")

    def __init__(self, g: int, terms: TermMap, mod2: bool = False):
        clean = {}
        for mono, coeff in terms.items():
            if mod2:
                coeff &= 1
            if coeff:
                clean[mono] = coeff
        self.g = g
        self.mod2 = mod2
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(g: int, mod2: bool = False) -> "RingElement":
        return RingElement(g, {}, mod2)

    @staticmethod
    def one(g: int, mod2: bool = False) -> "RingElement":
        return RingElement(g, {ONE_MONOMIAL: 1}, mod2)

    @staticmethod
    def monomial(g: int, mono: Monomial, coeff: int = 1,
                 mod2: bool = False) -> "RingElement":
        return RingElement(g, {mono: coeff}, mod2)

    @staticmethod
    def generator(g: int, gen: GeneratorId) -> "RingElement":
        gen.validate(g)
        return RingElement(g, {Monomial(1 << gen.bit, 0): 1})

    @staticmethod
    def a(g: int, i: int) -> "RingElement":
        return RingElement.generator(g, GeneratorId("a", i))

    @staticmethod
    def b(g: int, i: int) -> "RingElement":
        return RingElement.generator(g, GeneratorId("b", i))

    @staticmethod
    def c(g: int, power: int = 1) -> "RingElement":
        return RingElement(g, {Monomial(0, power): 1})

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other: "RingElement") -> None:
        if self.g != other.g:
            raise ConfigurationError(
                f"mixed genus: g={self.g} vs g={other.g}")
        if self.mod2 != other.mod2:
            raise ConfigurationError("mixed integer and mod-2 elements")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return RingElement(self.g, out, self.mod2)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) - coeff
        return RingElement(self.g, out, self.mod2)

    def __neg__(self) -> "RingElement":
        return RingElement(self.g, {m: -c for m, c in self.terms.items()},
                           self.mod2)

    def __mul__(self, other: Union["RingElement", int]) -> "RingElement":
        if isinstance(other, int):
            return RingElement(self.g,
                               {m: c * other for m, c in self.terms.items()},
                               self.mod2)
        self._check_compatible(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = mul_monomials(m1, m2)
                if hit is None:
                    continue
                sign, mono = hit
                out[mono] = out.get(mono, 0) + sign * c1 * c2
        return RingElement(self.g, out, self.mod2)

    def __rmul__(self, other: int) -> "RingElement":
        return self * other

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ConfigurationError("negative powers are not defined")
        out = RingElement.one(self.g, self.mod2)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RingElement) and self.g == other.g
                and self.mod2 == other.mod2 and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.g, self.mod2, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- grading -----------------------------------------------------------

    def degree(self):
        """Common degree of all terms, MIXED if inhomogeneous, None if zero."""
        degs = {m.degree for m in self.terms}
        if not degs:
            return None
        if len(degs) == 1:
            return degs.pop()
        return MIXED

    def is_homogeneous(self) -> bool:
        return self.degree() is not MIXED

    def graded_part(self, q: int) -> "RingElement":
        return RingElement(
            self.g, {m: c for m, c in self.terms.items() if m.degree == q},
            self.mod2)

    def graded_parts(self) -> dict:
        out: dict = {}
        for mono, coeff in self.terms.items():
            out.setdefault(mono.degree, {})[mono] = coeff
        return {q: RingElement(self.g, terms, self.mod2)
                for q, terms in sorted(out.items())}

    def max_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    # -- coefficient arithmetic --------------------------------------------

    def reduce_mod2(self) -> "RingElement":
        return RingElement(self.g, self.terms, mod2=True)

    def scale_exact_div(self, d: int) -> "RingElement":
        """Divide every coefficient by d; all divisions must be exact."""
        out = {}
        for mono, coeff in self.terms.items():
            q, r = divmod(coeff, d)
            if r:
                raise ConfigurationError(
                    f"coefficient {coeff} not divisible by {d}")
            out[mono] = q
        return RingElement(self.g, out, self.mod2)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        tag = ", mod2" if self.mod2 else ""
        return f"RingElement(g={self.g}{tag}: {render(self)})"


def render_monomial(mono: Monomial) -> str:
    """`a1*b2*c*^3` style rendering; the empty monomial renders as `1`."""
    parts = [f"{gen.kind}{gen.index}*" for gen in mono.generators()]
    if mono.c_exp == 1:
        parts.append("c*")
    elif mono.c_exp > 1:
        parts.append(f"c*^{mono.c_exp}")
    return "".join(parts) if parts else "1"


def render(elem: RingElement) -> str:
    """Deterministic text form: terms sorted by (degree, ext, c_exp)."""
    if not elem.terms:
        return "0"
    keys = sorted(elem.terms, key=lambda m: (m.degree, m.ext, m.c_exp))
    chunks = []
    for mono in keys:
        coeff = elem.terms[mono]
        body = render_monomial(mono)
        mag = abs(coeff)
        if body == "1":
            word = str(mag)
        elif mag == 1:
            word = body
        else:
            word = f"{mag}{body}"
        if not chunks:
            chunks.append(word if coeff > 0 else f"-{word}")
        else:
            chunks.append(f"+ {word}" if coeff > 0 else f"- {word}")
    return " ".join(chunks)


def monomials_of_degree(g: int, q: int, max_c: Optional[int] = None
                        ) -> Iterable[Monomial]:
    """All monomials of degree q, optionally capping the c*-exponent."""
    for ext in _masks_by_popcount(2 * g, q if q <= 2 * g else 2 * g):
        rem = q - ext.bit_count()
        if rem < 0 or rem % 2:
            continue
        c_exp = rem // 2
        if max_c is not None and c_exp > max_c:
            continue
        yield Monomial(ext, c_exp)


def _masks_by_popcount(width: int, max_bits: int):
    # ascending mask order, any popcount <= max_bits
    for mask in range(1 << width):
        if mask.bit_count() <= max_bits:
            yield mask
