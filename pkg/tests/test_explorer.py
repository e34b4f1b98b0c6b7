import pytest

from mutlab import (
    ExchangeMatrix,
    bfs_explore,
    cartan_from_acyclic,
    initial_seed,
    random_walks,
    real_roots_up_to_height,
    verify_step,
)
from mutlab.errors import FrontierBudgetExceeded, NotAcyclic
from mutlab.explorer import CHECK_NAMES
from mutlab.oracle import figure1_matrix

from conftest import A2, B2


class TestVerifyStep:
    def test_all_checks_pass(self, a3_seed):
        A0 = cartan_from_acyclic(a3_seed.matrix)
        _, record = verify_step(a3_seed, 1, A0)
        assert record.passed
        assert set(record.checks) == set(CHECK_NAMES)

    def test_involution_returns_to_start(self, a3_seed):
        A0 = cartan_from_acyclic(a3_seed.matrix)
        seed, r1 = verify_step(a3_seed, 0, A0)
        seed, r2 = verify_step(seed, 0, A0)
        assert r1.passed and r2.passed
        assert seed == a3_seed

    def test_b2_step(self):
        B = ExchangeMatrix.from_entries(B2)
        A0 = cartan_from_acyclic(B)
        seed, record = verify_step(initial_seed(B), 0, A0)
        assert record.passed
        assert [c.coords for c in seed.cvectors] == [(-1, 0), (2, 1)]


class TestRandomWalks:
    def test_a3_walks_all_pass(self, a3_matrix):
        reports = random_walks(a3_matrix, depth=8, trials=100, rng_seed=1)
        assert len(reports) == 100
        assert all(r.verdict for r in reports)

    def test_non_acyclic_rejected(self):
        with pytest.raises(NotAcyclic):
            random_walks(figure1_matrix(), depth=2, trials=1, rng_seed=0)

    def test_shape(self):
        reports = random_walks(ExchangeMatrix.from_entries(B2), 1, 1, 0)
        assert len(reports) == 1 and len(reports[0].records) == 1

    def test_reproducible(self, a3_matrix):
        a = random_walks(a3_matrix, 5, 5, 42)
        b = random_walks(a3_matrix, 5, 5, 42)
        assert [r.word for r in a] == [r.word for r in b]

    def test_no_immediate_backtracking(self, a3_matrix):
        for report in random_walks(a3_matrix, 10, 20, 7):
            assert all(a != b for a, b in zip(report.word, report.word[1:]))


class TestBfsExplore:
    def test_depth_zero(self, a3_matrix):
        result = bfs_explore(a3_matrix, 0)
        assert result.seeds == {initial_seed(a3_matrix)}
        assert result.level_counts == (1,)

    def test_a2_cvectors_are_roots(self):
        B = ExchangeMatrix.from_entries(A2)
        roots = real_roots_up_to_height(cartan_from_acyclic(B), 2)
        assert bfs_explore(B, 10).cvectors <= roots

    def test_b2_cvectors_are_roots(self):
        B = ExchangeMatrix.from_entries(B2)
        roots = real_roots_up_to_height(cartan_from_acyclic(B), 3)
        assert bfs_explore(B, 12).cvectors <= roots

    def test_budget(self, a3_matrix):
        with pytest.raises(FrontierBudgetExceeded):
            bfs_explore(a3_matrix, 6, budget=3)

    def test_level_counts_sum(self, a3_matrix):
        result = bfs_explore(a3_matrix, 4)
        assert sum(result.level_counts) == len(result.seeds)

    def test_canonical_count_bounds(self, a3_matrix):
        from mutlab.explorer import count_up_to_permutation

        result = bfs_explore(a3_matrix, 3)
        canonical = count_up_to_permutation(result.seeds)
        assert 1 <= canonical <= len(result.seeds)
        # permuting a seed's indices must not create a new class
        assert count_up_to_permutation([initial_seed(a3_matrix)]) == 1
