import json
from fractions import Fraction

import numpy as np
import pytest
import sympy

from gamedecomp.game import (
    ConstraintError,
    FiniteGame,
    GameError,
    GameSpec,
    dump_game,
    dumps_game,
    format_decimal,
    from_payoff_tables,
    game_from_dict,
    load_game,
    profile_index,
    profile_of_index,
    profile_vector,
    render_table,
    to_payoff_tables,
    two_player_matrices,
)
from gamedecomp.stp import delta, row_stack

from conftest import delta_game, random_game, skew32_game


class TestSpec:
    @pytest.mark.parametrize("n,kappa", [(1, 2), (2, 1), (0, 3)])
    def test_too_small(self, n, kappa):
        with pytest.raises(ConstraintError):
            GameSpec(n, kappa)

    def test_size_guard(self):
        with pytest.raises(ConstraintError, match="size guard"):
            GameSpec(20, 2)
        assert GameSpec(19, 2).num_profiles == 2**19

    def test_dim(self):
        assert GameSpec(3, 2).dim == 24


class TestProfiles:
    def test_examples(self):
        assert profile_index((1, 1, 1), GameSpec(3, 2)) == 1
        assert profile_index((1, 2), GameSpec(2, 2)) == 2
        assert profile_index((2, 1), GameSpec(2, 2)) == 3
        assert profile_index((2, 1, 1), GameSpec(3, 2)) == 5

    def test_out_of_range(self):
        with pytest.raises(GameError):
            profile_index((1, 3), GameSpec(2, 2))
        with pytest.raises(GameError):
            profile_index((1, 1, 1), GameSpec(2, 2))
        with pytest.raises(GameError):
            profile_of_index(5, GameSpec(2, 2))

    @pytest.mark.parametrize("n,kappa", [(2, 2), (2, 5), (3, 3), (4, 4), (6, 4), (12, 2)])
    def test_round_trip_exhaustive(self, n, kappa):
        spec = GameSpec(n, kappa)
        for idx in range(1, spec.num_profiles + 1):
            assert profile_index(profile_of_index(idx, spec), spec) == idx

    def test_canonical_order(self):
        labels = ["".join(map(str, p)) for p in GameSpec(3, 2).profiles()]
        assert labels == ["111", "112", "121", "122", "211", "212", "221", "222"]
        assert np.array_equal(GameSpec(3, 2).profile_array()[4], [2, 1, 1])

    @pytest.mark.parametrize("n,kappa", [(2, 3), (3, 2), (3, 3), (4, 2)])
    def test_matches_stp_form(self, n, kappa):
        spec = GameSpec(n, kappa)
        for s in spec.profiles():
            assert np.array_equal(profile_vector(s, spec), delta(spec.num_profiles, profile_index(s, spec)))

    def test_mixed_sizes(self):
        assert profile_index((2, 3), (2, 3)) == 6
        assert profile_of_index(4, (2, 3)) == (2, 1)


class TestPayoffs:
    def test_basis_vector_payoff(self):
        g = delta_game()
        assert g.payoff(1, (1, 2, 1)) == 1
        assert g.payoff(1, (1, 1, 2)) == 0
        assert g.payoff(3, (2, 2, 1)) == 1

    def test_skew_fixture_entry(self):
        assert skew32_game(g=1, h=2).payoff(2, (2, 2, 1)) == 2

    def test_invalid_player(self):
        with pytest.raises(GameError):
            delta_game().payoff(4, (1, 1, 1))

    def test_read_only(self):
        g = delta_game()
        with pytest.raises(ValueError):
            g.payoffs[0, 0] = 5

    def test_arithmetic(self, rng):
        a, b = random_game(rng, 3, 2), random_game(rng, 3, 2)
        assert (a + b) - b == a
        assert Fraction(1, 2) * (a + a) == a
        assert -a + a == FiniteGame.zero(a.spec)
        with pytest.raises(GameError):
            a + random_game(rng, 2, 3)


class TestTables:
    def test_bimatrix_layout(self):
        al, be, ga, de, xi, et, la, mu = sympy.symbols("alpha beta gamma delta xi eta lambda mu")
        # cells (1,1), (1,2), (2,1), (2,2) hold (alpha,beta), (gamma,delta), (xi,eta), (lambda,mu)
        cells = {(1, 1): (al, be), (1, 2): (ga, de), (2, 1): (xi, et), (2, 2): (la, mu)}
        spec = GameSpec(2, 2)
        rows = [[cells[p][i] for p in spec.profiles()] for i in range(2)]
        assert rows == [[al, ga, xi, la], [be, de, et, mu]]

    def test_round_trip(self, rng):
        g = random_game(rng, 3, 3)
        assert from_payoff_tables(to_payoff_tables(g)) == g
        assert from_payoff_tables(to_payoff_tables(g), n=3, kappa=3) == g

    def test_shape_mismatch(self):
        with pytest.raises(GameError):
            from_payoff_tables([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(GameError):
            from_payoff_tables([[1, 2, 3, 4]] * 2, n=2, kappa=3)

    def test_two_player_matrices(self):
        a, b, c, d = 1, 2, 3, 4
        sym = from_payoff_tables([[a, b, c, d], [a, c, b, d]])
        A, B = two_player_matrices(sym)
        assert np.array_equal(A, [[a, b], [c, d]]) and np.array_equal(B, A.T)
        assert np.array_equal(row_stack(A).T[0], sym.payoffs[0])
        skew = from_payoff_tables([[a, b, c, d], [-a, -c, -b, -d]])
        A, B = two_player_matrices(skew)
        assert np.array_equal(B, -A.T)
        A, B = two_player_matrices(FiniteGame.zero(GameSpec(2, 3)))
        assert not A.any() and not B.any()
        with pytest.raises(GameError):
            two_player_matrices(delta_game())


class TestFileFormat:
    def test_round_trip(self, tmp_path, rng):
        g = random_game(rng, 2, 3)
        path = tmp_path / "g.game.json"
        dump_game(g, path)
        assert load_game(path) == g
        data = json.loads(path.read_text())
        assert set(data) == {"n", "kappa", "payoffs"}
        assert all(isinstance(x, (int, str)) for row in data["payoffs"] for x in row)

    def test_fraction_strings(self):
        g = game_from_dict({"n": 2, "kappa": 2, "payoffs": [["1/3", 0, 1, 2], [0, "-2/4", 0, 0]]})
        assert g.payoffs[0, 0] == Fraction(1, 3) and g.payoffs[1, 1] == Fraction(-1, 2)
        assert '"1/3"' in dumps_game(g)

    @pytest.mark.parametrize("bad", [0.5, "0.5", "1e2", True, "x"])
    def test_rejects_inexact(self, bad):
        with pytest.raises(GameError):
            game_from_dict({"n": 2, "kappa": 2, "payoffs": [[bad, 0, 0, 0], [0, 0, 0, 0]]})

    @pytest.mark.parametrize(
        "doc",
        [[], {"n": 2, "kappa": 2}, {"n": 2, "kappa": 2, "payoffs": [[0, 0, 0, 0]]},
         {"n": "2", "kappa": 2, "payoffs": []}],
    )
    def test_rejects_malformed(self, doc):
        with pytest.raises(GameError):
            game_from_dict(doc)

    def test_constraints_are_distinct(self):
        with pytest.raises(ConstraintError):
            game_from_dict({"n": 1, "kappa": 2, "payoffs": [[0, 0]]})

    def test_bad_files(self, tmp_path):
        with pytest.raises(GameError):
            load_game(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(GameError):
            load_game(bad)


class TestRendering:
    def test_format_decimal(self):
        assert format_decimal(Fraction(1, 6)) == "0.1667"
        assert format_decimal(Fraction(2, 3)) == "0.6667"
        assert format_decimal(Fraction(-1, 3)) == "-0.3333"
        assert format_decimal(Fraction(-1, 100000)) == "0.0000"
        assert format_decimal(Fraction(1, 8), 2) == "0.13"

    def test_table(self):
        text = render_table(delta_game())
        lines = text.splitlines()
        assert lines[0] == "delta game"
        assert [c.strip() for c in lines[1].split(" | ")[1:]] == ["111", "112", "121", "122", "211", "212", "221", "222"]
        assert lines[3].split(" | ")[3].strip() == "1.0000"
        assert render_table(delta_game()) == text

    def test_exact_table(self):
        g = from_payoff_tables([["1/3", 0, 0, 0], [0, 0, 0, 0]])
        assert "1/3" in render_table(g, exact=True)
        assert "0.33" in render_table(g, precision=2)
