import numpy as np
import pytest

from gamedecomp import GameSpec, build_D, build_E
from gamedecomp.game import ConstraintError, FiniteGame, from_payoff_tables
from gamedecomp.perm import Permutation
from gamedecomp.symmetry import (
    MAX_DEF_CHECKS,
    is_asymmetric,
    is_invariant_psi,
    is_skew_def,
    is_skew_thm,
    is_symmetric_def,
    is_symmetric_thm,
    is_zero_sum,
    verdict,
)

from conftest import (
    skew33_game,
    delta_game,
    perturb,
    random_game,
    random_skew,
    random_symmetric,
    symmetric32_game,
    skew32_game,
)

GRID = [(2, 2), (2, 3), (3, 2), (3, 3)]


def fixtures():
    return [symmetric32_game(), skew32_game(), delta_game(), skew33_game(),
            FiniteGame.zero(GameSpec(3, 2))]


def assert_routes_agree(g):
    skew = bool(is_skew_def(g))
    assert is_skew_thm(g) == skew
    assert is_invariant_psi(g) == skew
    assert is_symmetric_thm(g) == bool(is_symmetric_def(g))


class TestFixtures:
    def test_symmetric_fixture(self):
        g = symmetric32_game()
        assert is_symmetric_def(g) and is_symmetric_thm(g)
        assert not is_skew_def(g)

    def test_skew_fixture(self):
        g = skew32_game(g=1, h=2)
        assert is_skew_def(g) and is_skew_thm(g) and is_invariant_psi(g)
        assert not is_symmetric_def(g)

    def test_zero_game_is_everything(self):
        for n, kappa in GRID:
            z = FiniteGame.zero(GameSpec(n, kappa))
            v = verdict(z)
            assert v.is_symmetric and v.is_skew and v.is_asymmetric
            assert is_symmetric_def(z) and is_skew_def(z) and is_invariant_psi(z, exhaustive=True)

    def test_delta_game_neither(self):
        g = delta_game()
        check = is_symmetric_def(g)
        assert not check and check.witness is not None
        assert not is_skew_def(g)
        assert not is_asymmetric(g)

    def test_skew33_fixture(self):
        g = skew33_game()
        assert is_skew_def(g) and is_skew_thm(g) and is_invariant_psi(g)

    def test_skew33_from_first_row_only(self):
        # player 1 row with the (a,b,c) pattern; nothing about players 2, 3 is transcribed
        g = skew33_game()
        assert list(g.payoffs[0, :9]) == [0, 1, 2, -1, 0, 3, -2, -3, 0]

    def test_all_fixtures_agree(self):
        for g in fixtures():
            assert_routes_agree(g)


class TestTwoPlayer:
    def test_skew_condition(self):
        assert is_skew_thm(from_payoff_tables([[1, 2, 3, 4], [-1, -3, -2, -4]]))
        assert not is_skew_thm(from_payoff_tables([[1, 2, 3, 4], [-1, -2, -3, -4]]))

    def test_symmetric_condition(self):
        assert is_symmetric_thm(from_payoff_tables([[1, 2, 3, 4], [1, 3, 2, 4]]))
        assert not is_symmetric_thm(from_payoff_tables([[1, 2, 3, 4], [1, 2, 3, 4]]))


class TestDifferential:
    @pytest.mark.parametrize("n,kappa", GRID)
    def test_random_games(self, n, kappa, rng):
        for _ in range(25):
            assert_routes_agree(random_game(rng, n, kappa, lo=-2, hi=2))

    @pytest.mark.parametrize("n,kappa", GRID)
    def test_subspace_members_and_perturbations(self, n, kappa, rng):
        for _ in range(10):
            s, k = random_symmetric(rng, n, kappa), random_skew(rng, n, kappa)
            assert is_symmetric_def(s) and is_symmetric_thm(s)
            assert is_skew_def(k) and is_skew_thm(k) and is_invariant_psi(k)
            for g in (perturb(rng, s), perturb(rng, k), s + k):
                assert_routes_agree(g)
            assert not is_symmetric_thm(perturb(rng, s))
            assert not is_skew_thm(perturb(rng, k))

    @pytest.mark.parametrize("n,kappa", [(2, 2), (3, 2)])
    def test_psi_exhaustive_matches_generators(self, n, kappa, rng):
        for _ in range(10):
            g = random_skew(rng, n, kappa)
            assert is_invariant_psi(g, exhaustive=True)
            g = perturb(rng, g)
            assert not is_invariant_psi(g, exhaustive=True) and not is_invariant_psi(g)


class TestStructure:
    def test_no_skew_games_when_too_many_players(self, rng):
        # n > kappa + 1: only the zero game is skew-symmetric
        assert len(build_D(4, 2)) == 0
        for _ in range(20):
            g = random_game(rng, 4, 2, lo=-1, hi=1)
            assert bool(is_skew_def(g)) == g.is_zero()
            assert is_skew_thm(g) == g.is_zero()

    def test_zero_sum_examples(self):
        assert is_zero_sum(skew32_game())
        assert not is_zero_sum(symmetric32_game(a=1))

    def test_skew_games_are_zero_sum_at_boundary(self, rng):
        for _ in range(20):
            assert is_zero_sum(random_skew(rng, 3, 2))
            assert is_zero_sum(random_skew(rng, 4, 3))

    @pytest.mark.parametrize("n,kappa", [(3, 2), (3, 3)])
    def test_generators_suffice(self, n, kappa, rng):
        games = [random_game(rng, n, kappa, lo=-1, hi=1) for _ in range(10)]
        games += [random_skew(rng, n, kappa), random_symmetric(rng, n, kappa)]
        games += [perturb(rng, random_symmetric(rng, n, kappa)) for _ in range(5)]
        for g in games:
            assert bool(is_symmetric_def(g, generators_only=True)) == bool(is_symmetric_def(g))
            assert bool(is_skew_def(g, generators_only=True)) == bool(is_skew_def(g))

    def test_basis_rows_are_members(self):
        for n, kappa in GRID + [(4, 2), (4, 3)]:
            spec = GameSpec(n, kappa)
            for row in build_D(n, kappa).rows:
                assert is_skew_def(FiniteGame.from_vector(spec, row))
            for row in build_E(n, kappa).rows:
                assert is_symmetric_def(FiniteGame.from_vector(spec, row))


class TestWitness:
    def test_first_violation_is_reported(self):
        g = delta_game()
        w = is_symmetric_def(g).witness
        # first permutation in lexicographic order is the identity, which never fails
        assert w.sigma == Permutation((1, 3, 2))
        assert w.lhs != w.rhs
        assert g.payoff(w.player, w.profile) == w.lhs

    def test_witness_is_deterministic(self):
        g = delta_game()
        assert is_symmetric_def(g).witness == is_symmetric_def(g).witness

    def test_verdict_with_witnesses(self):
        v = verdict(delta_game(), witnesses=True)
        assert set(v.witnesses) == {"symmetric", "skew"}
        assert "sigma=" in str(v.witnesses["skew"])
        assert verdict(skew32_game(), witnesses=True).witnesses.keys() == {"symmetric"}

    def test_size_guard(self):
        # 8! * 3^8 * 8 comparisons exceeds the guard
        g = FiniteGame.zero(GameSpec(8, 3))
        assert 40320 * 3**8 * 8 > MAX_DEF_CHECKS
        with pytest.raises(ConstraintError):
            is_symmetric_def(g)
        assert is_symmetric_def(g, generators_only=True)
