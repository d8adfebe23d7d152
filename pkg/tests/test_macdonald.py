import pytest
from hypothesis import given, settings, strategies as st

from spsurf.errors import ConfigurationError, ResourceGuardError
from spsurf.linalg import SparseEchelon
from spsurf.macdonald import (GUARD_LIMIT, MacdonaldRing, RELATION_FAMILIES,
                              RelationInstance, _sector_of, build, guard_cost,
                              relation_instances)
from spsurf.oracle import conjectured_betti, oracle_betti
from spsurf.ring import Monomial, RingElement


def prod_ab(g, upto):
    e = RingElement.one(g)
    for i in range(1, upto + 1):
        e = e * RingElement.a(g, i) * RingElement.b(g, i)
    return e


class TestRelationInstances:
    def test_weight_and_degree(self):
        inst = RelationInstance((1,), (2,), (3,), 1)
        assert inst.weight == 5
        assert inst.degree == 6

    def test_minimal_weight_is_n_plus_one(self):
        for inst in relation_instances(3, 3, 5, minimal=True):
            assert inst.weight == 4

    def test_indices_pairwise_disjoint(self):
        for inst in relation_instances(2, 3, 3, minimal=False):
            pool = inst.a_indices + inst.b_indices + inst.k_indices
            assert len(pool) == len(set(pool))

    def test_expansion_has_unit_coefficients(self):
        for inst in relation_instances(2, 2, 4, minimal=True):
            elem = inst.element(2)
            assert set(elem.terms.values()) <= {1, -1}
            assert elem.degree() == 4


class TestBuild:
    def test_projective_space(self, rings):
        # SP^n of the sphere is complex projective n-space
        for n in range(1, 9):
            R = build(n, 0)
            want = [1 if q % 2 == 0 else 0 for q in range(2 * n + 1)]
            assert R.betti() == want

    def test_sp1_is_the_surface(self, rings):
        for g in range(5):
            assert rings(1, g).betti() == [1, 2 * g, 1]

    def test_sp2_genus2(self, rings):
        # matches the one-point blowup of the 4-torus: (1, 4, 7, 4, 1)
        assert rings(2, 2).betti() == [1, 4, 7, 4, 1]

    def test_guard(self):
        assert guard_cost(2, 10) > GUARD_LIMIT
        with pytest.raises(ResourceGuardError):
            build(2, 10)
        with pytest.raises(ConfigurationError):
            build(0, 1)

    def test_top_and_bottom_rank_one(self, rings):
        for n in range(1, 5):
            for g in range(5):
                b = rings(n, g).betti()
                assert b[0] == 1 and b[2 * n] == 1

    def test_top_class_is_c_power(self, rings):
        R = rings(3, 2)
        assert R.basis(6) == (Monomial(0, 3),)
        nf = R.normal_form(RingElement.c(2, 3))
        assert nf.terms == {Monomial(0, 3): 1}

    def test_unit_pivots_everywhere(self, rings):
        # torsion-freeness in practice: every pivot entry is +1, no pending
        for (n, g) in [(2, 2), (3, 3), (4, 2)]:
            R = rings(n, g)
            for key, ech in R._ech.items():
                assert not ech.pending
                for row, col in ech.pivots.items():
                    assert col[row] == 1


class TestNormalForm:
    def test_triple_products_vanish_in_sp2(self, rings):
        R = rings(2, 3)
        g = 3
        word = RingElement.a(g, 1) * RingElement.b(g, 2) * RingElement.b(g, 3)
        assert R.is_zero(word)
        word = RingElement.a(g, 1) * RingElement.a(g, 2) * RingElement.b(g, 3)
        assert R.is_zero(word)

    def test_degree2_relation_vanishes_in_sp2(self, rings):
        for g in (2, 3):
            R = rings(2, g)
            rel = RingElement.a(g, 1) * (
                RingElement.c(g)
                - RingElement.a(g, 2) * RingElement.b(g, 2))
            assert R.is_zero(rel)

    def test_full_odd_product_equals_c_power(self, rings):
        for g in range(1, 5):
            for n in range(1, g + 1):
                R = rings(n, g)
                lhs = R.normal_form(prod_ab(g, n))
                rhs = R.normal_form(RingElement.c(g, n))
                assert lhs == rhs and lhs

    def test_above_top_degree_vanishes(self, rings):
        R = rings(2, 1)
        assert R.is_zero(RingElement.c(1, 3))

    def test_genus_mismatch_rejected(self, rings):
        with pytest.raises(ConfigurationError):
            rings(2, 2).normal_form(RingElement.c(3))

    def test_retraction_on_basis(self, rings):
        R = rings(2, 3)
        for q in range(5):
            for mono in R.basis(q):
                elem = RingElement.monomial(3, mono)
                assert R.normal_form(elem) == elem

    def test_mod2_matches_integral_reduction(self, rings):
        import random
        rng = random.Random(11)
        R = rings(3, 2)
        for _ in range(120):
            q = rng.randrange(0, 7)
            monos = R.monomials(q)
            terms = {m: rng.randrange(-5, 6)
                     for m in rng.sample(monos, min(4, len(monos)))}
            x = RingElement(2, terms)
            assert R.normal_form(x).reduce_mod2() == R.normal_form(
                x.reduce_mod2())


@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_normal_form_linear_and_idempotent(data, rings):
    R = rings(2, 2)
    q = data.draw(st.integers(min_value=0, max_value=4))
    monos = R.monomials(q)
    pick = st.dictionaries(st.sampled_from(monos),
                           st.integers(min_value=-4, max_value=4), max_size=3)
    x = RingElement(2, data.draw(pick))
    y = RingElement(2, data.draw(pick))
    nf = R.normal_form
    assert nf(x + y) == nf(x) + nf(y)
    assert nf(nf(x)) == nf(x)


@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_normal_form_is_multiplicative(data, rings):
    R = rings(2, 2)
    q1 = data.draw(st.integers(min_value=0, max_value=2))
    q2 = data.draw(st.integers(min_value=0, max_value=2))
    pick1 = st.dictionaries(st.sampled_from(R.monomials(q1)),
                            st.integers(min_value=-3, max_value=3), max_size=3)
    pick2 = st.dictionaries(st.sampled_from(R.monomials(q2)),
                            st.integers(min_value=-3, max_value=3), max_size=3)
    x = RingElement(2, data.draw(pick1))
    y = RingElement(2, data.draw(pick2))
    nf = R.normal_form
    assert nf(x * y) == nf(nf(x) * nf(y))


class TestMinimalFamilySufficiency:
    def test_lattice_equality_small_grid(self, rings):
        # both inclusions between the minimal-closure lattice and the
        # lattice of all weight >= n+1 instances, degree by degree
        for n in range(1, 4):
            for g in range(0, 4):
                R = rings(n, g)
                mask_a = sum(1 << (2 * i) for i in range(g))
                for q in range(n + 1, 2 * n + 1):
                    cols_by_sector = {}
                    for inst in relation_instances(n, g, q, minimal=False):
                        elem = inst.element(g)
                        assert R.is_zero(elem)  # instance lies in the build
                        sec = _sector_of(next(iter(elem.terms)).ext, mask_a)
                        cols_by_sector.setdefault(sec, []).append(
                            {m.ext: c for m, c in elem.terms.items()})
                    for sec, cols in cols_by_sector.items():
                        key = (q,) + sec
                        rows = R._rows.get(key, ())
                        ech = SparseEchelon(len(rows))
                        for col in cols:
                            ech.add(dict(col))
                        assert not ech.pending
                        # build pivots lie in the all-instances lattice
                        build_ech = R._ech.get(key)
                        if build_ech is not None:
                            for col in build_ech.pivots.values():
                                assert not ech.reduce(dict(col), rows)


class TestOracleAgreement:
    def test_small_grid(self, rings):
        for n in range(1, 5):
            for g in range(0, 5):
                assert rings(n, g).betti() == oracle_betti(n, g)

    def test_conjectured_count_matches(self, rings):
        # empirical validation of the closed-form monomial count; the
        # echelon basis and oracle stay the sources of truth
        for n in range(1, 5):
            for g in range(0, 5):
                assert rings(n, g).betti() == conjectured_betti(n, g)


class TestMutations:
    def test_every_family_changes_the_ring_at_2_3(self):
        honest = oracle_betti(2, 3)
        for family in RELATION_FAMILIES:
            mutated = build(2, 3, drop_family=family)
            assert mutated.betti() != honest

    def test_unknown_family_rejected(self):
        with pytest.raises(ConfigurationError):
            build(2, 2, drop_family="nope")
