import pytest
from hypothesis import given, settings, strategies as st

from spsurf.errors import ConfigurationError
from spsurf.ring import (MIXED, GeneratorId, Monomial, RingElement,
                         mul_monomials, render)


def a(g, i):
    return RingElement.a(g, i)


def b(g, i):
    return RingElement.b(g, i)


def c(g, k=1):
    return RingElement.c(g, k)


class TestGeneratorOrder:
    def test_bit_positions_interleave(self):
        assert GeneratorId("a", 1).bit == 0
        assert GeneratorId("b", 1).bit == 1
        assert GeneratorId("a", 3).bit == 4
        assert GeneratorId.from_bit(5) == GeneratorId("b", 3)

    def test_index_range_enforced(self):
        with pytest.raises(ConfigurationError):
            RingElement.a(2, 3)
        with pytest.raises(ConfigurationError):
            RingElement.b(2, 0)


class TestMultiplication:
    def test_odd_generator_squares_to_zero(self):
        assert a(2, 1) * a(2, 1) == RingElement.zero(2)

    def test_anticommutation_of_degree_one(self):
        # b1* a1* = -(a1* b1*)
        assert b(2, 1) * a(2, 1) == -(a(2, 1) * b(2, 1))

    def test_c_is_central(self):
        assert c(2) * a(2, 1) == a(2, 1) * c(2)

    def test_c_exponents_add(self):
        assert c(1, 2) * c(1, 3) == c(1, 5)

    def test_monomial_product_sign(self):
        hit = mul_monomials(Monomial(0b10, 0), Monomial(0b01, 0))
        assert hit == (-1, Monomial(0b11, 0))
        assert mul_monomials(Monomial(0b01, 1), Monomial(0b01, 0)) is None

    def test_mixed_genus_rejected(self):
        with pytest.raises(ConfigurationError):
            a(1, 1) * a(2, 1)

    def test_mixed_modulus_rejected(self):
        with pytest.raises(ConfigurationError):
            a(1, 1) * a(1, 1).reduce_mod2()


class TestDegree:
    def test_two_odd_letters(self):
        assert (a(1, 1) * b(1, 1)).degree() == 2

    def test_c_has_degree_two(self):
        assert c(1).degree() == 2

    def test_inhomogeneous_sum_is_mixed(self):
        assert (a(1, 1) + c(1)).degree() is MIXED

    def test_zero_degree_is_bottom(self):
        assert RingElement.zero(1).degree() is None
        assert RingElement.zero(1).is_homogeneous()


class TestMod2:
    def test_even_coefficient_drops(self):
        assert (2 * (a(1, 1) * b(1, 1))).reduce_mod2() == RingElement.zero(
            1, mod2=True)

    def test_odd_coefficient_survives(self):
        assert (3 * c(1)).reduce_mod2() == c(1).reduce_mod2()

    def test_unit_coefficients_unchanged(self):
        theta = a(2, 1) * b(2, 1) + a(2, 2) * b(2, 2)
        assert theta.reduce_mod2().terms == theta.terms


class TestRendering:
    def test_examples(self):
        assert render(3 * c(1) - a(1, 1) * b(1, 1)) == "3c* - a1*b1*"
        assert render(RingElement.zero(1)) == "0"
        assert render(RingElement.one(1)) == "1"
        assert render(c(1, 3) * -2) == "-2c*^3"


def elements(g, max_degree=4, max_terms=3):
    monos = st.builds(
        Monomial,
        st.integers(min_value=0, max_value=(1 << (2 * g)) - 1),
        st.integers(min_value=0, max_value=2),
    ).filter(lambda m: m.degree <= max_degree)
    return st.dictionaries(
        monos, st.integers(min_value=-5, max_value=5), max_size=max_terms,
    ).map(lambda terms: RingElement(g, terms))


def homogeneous(g, degree):
    monos = [Monomial(ext, (degree - bin(ext).count("1")) // 2)
             for ext in range(1 << (2 * g))
             if ext.bit_count() <= degree
             and (degree - ext.bit_count()) % 2 == 0]
    return st.dictionaries(
        st.sampled_from(monos), st.integers(min_value=-5, max_value=5),
        max_size=3,
    ).map(lambda terms: RingElement(g, terms))


@settings(max_examples=60, deadline=None)
@given(x=elements(3), y=elements(3), z=elements(3))
def test_mul_distributes_and_associates(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(p=st.integers(min_value=1, max_value=3),
       q=st.integers(min_value=1, max_value=3), data=st.data())
def test_graded_commutativity(p, q, data):
    g = 4
    x = data.draw(homogeneous(g, p))
    y = data.draw(homogeneous(g, q))
    sign = -1 if (p * q) % 2 else 1
    assert x * y == sign * (y * x)


@settings(max_examples=80, deadline=None)
@given(ext=st.integers(min_value=0, max_value=(1 << 8) - 1),
       c_exp=st.integers(min_value=0, max_value=2), data=st.data())
def test_sign_consistency_generator_by_generator(ext, c_exp, data):
    # multiplying the letters one at a time, in any order, reproduces the
    # monomial with exactly the permutation sign of the odd letters
    g = 4
    mono = Monomial(ext, c_exp)
    gens = [(gid.bit, RingElement.generator(g, gid))
            for gid in mono.generators()]
    gens += [(None, RingElement.c(g))] * c_exp
    order = data.draw(st.permutations(range(len(gens))))
    prod = RingElement.one(g)
    odd_sequence = []
    for idx in order:
        bit, elem = gens[idx]
        prod = prod * elem
        if bit is not None:
            odd_sequence.append(bit)
    inversions = sum(1 for i in range(len(odd_sequence))
                     for j in range(i + 1, len(odd_sequence))
                     if odd_sequence[i] > odd_sequence[j])
    sign = -1 if inversions % 2 else 1
    assert prod == RingElement.monomial(g, mono, sign)
