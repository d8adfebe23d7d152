from math import comb, factorial

from spsurf.charclasses import (c1, c1_free, c2, c2_free, char_classes,
                                chern_total, chern_total_free, theta, w2,
                                w2_free)
from spsurf.ring import Monomial, RingElement, render


def prod_ab(g, upto):
    e = RingElement.one(g)
    for i in range(1, upto + 1):
        e = e * RingElement.a(g, i) * RingElement.b(g, i)
    return e


class TestTotalChernClass:
    def test_projective_space_binomials(self):
        # g = 0: the class is (1 + c*)^(n+1) cut off at degree 2n
        for n in range(1, 7):
            total = chern_total_free(n, 0)
            want = {Monomial(0, k): comb(n + 1, k) for k in range(n + 1)}
            assert total.terms == want

    def test_degree_zero_part_is_one(self, rings):
        for (n, g) in [(2, 2), (3, 1), (4, 3)]:
            total = chern_total(rings(n, g))
            assert total.graded_part(0) == RingElement.one(g)

    def test_degree_two_part_is_c1(self, rings):
        for n in range(1, 5):
            for g in range(0, 5):
                R = rings(n, g)
                assert chern_total(R).graded_part(2) == c1(R)

    def test_degree_four_part_is_c2(self, rings):
        # the closed form agrees for every genus, not only g > 1
        for n in range(2, 5):
            for g in range(0, 5):
                R = rings(n, g)
                assert chern_total(R).graded_part(4) == c2(R)

    def test_negative_exponent_branch(self, rings):
        # n < 2g - 1 exercises the inverted (1 + c*) factor
        R = rings(2, 3)
        total = chern_total(R)
        assert total.graded_part(2) == c1(R)
        assert total.graded_part(4) == c2(R)


class TestClosedForms:
    def test_c1_example(self, rings):
        assert render(c1(rings(3, 1))) == "3c* - a1*b1*"

    def test_c1_formula(self):
        g = 2
        want = 3 * RingElement.c(g) - theta(g)  # n = 4, g = 2
        assert c1_free(4, g) == want

    def test_w2_is_mod2_reduction_of_c1(self, rings):
        for (n, g) in [(2, 1), (3, 2), (4, 2), (2, 3)]:
            R = rings(n, g)
            assert w2(R) == c1(R).reduce_mod2()

    def test_w2_is_theta_when_difference_odd(self):
        for (n, g) in [(3, 2), (4, 1), (2, 1), (6, 3)]:
            assert (n - g) % 2 == 1
            assert w2_free(n, g) == theta(g).reduce_mod2()


class TestThetaIdentities:
    def test_theta_squared_is_twice_pair_sum(self):
        for g in range(2, 7):
            th = theta(g)
            pair_sum = RingElement.zero(g)
            blocks = [RingElement.a(g, i) * RingElement.b(g, i)
                      for i in range(1, g + 1)]
            for i in range(g):
                for j in range(i + 1, g):
                    pair_sum = pair_sum + blocks[i] * blocks[j]
            assert th * th == 2 * pair_sum

    def test_theta_power_is_factorial_times_block_product(self):
        for g in range(2, 7):
            assert theta(g) ** g == factorial(g) * prod_ab(g, g)

    def test_genus_two_literal_form(self):
        th = theta(2)
        assert th * th == 2 * prod_ab(2, 2)

    def test_c2_closed_form_uses_half_theta_squared(self):
        for g in range(0, 5):
            for n in range(2, 6):
                d = n - g
                half = ((theta(g) * theta(g)).scale_exact_div(2))
                want = ((d + 1) * d // 2) * RingElement.c(g, 2) \
                    - d * (RingElement.c(g) * theta(g)) + half
                assert c2_free(n, g) == want


def test_char_class_bundle_is_consistent(rings):
    R = rings(3, 2)
    bundle = char_classes(R)
    assert bundle.c1 == bundle.total_chern.graded_part(2)
    assert bundle.c2 == bundle.total_chern.graded_part(4)
    assert bundle.w2 == bundle.c1.reduce_mod2()
    assert bundle.theta == R.normal_form(theta(2))
