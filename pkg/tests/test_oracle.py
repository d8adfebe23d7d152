from spsurf.oracle import conjectured_betti, oracle_betti, oracle_rank


def test_projective_space_ranks():
    for n in (1, 3, 5):
        for k in range(n + 1):
            assert oracle_rank(n, 0, 2 * k) == 1
        for k in range(n):
            assert oracle_rank(n, 0, 2 * k + 1) == 0


def test_sp2_genus2_middle_rank():
    assert oracle_rank(2, 2, 2) == 7


def test_out_of_range_degrees_vanish():
    assert oracle_rank(2, 1, 5) == 0
    assert oracle_rank(2, 1, -1) == 0


def test_duality_symmetry_of_ranks():
    for n in range(1, 5):
        for g in range(0, 5):
            b = oracle_betti(n, g)
            assert b == b[::-1]


def test_surface_ranks():
    assert oracle_betti(1, 4) == [1, 8, 1]


def test_conjectured_count_examples():
    assert conjectured_betti(2, 2) == [1, 4, 7, 4, 1]
    assert conjectured_betti(3, 0) == [1, 0, 1, 0, 1, 0, 1]
