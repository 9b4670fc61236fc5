from fractions import Fraction

import itertools

import numpy as np
import pytest
import sympy

from gamedecomp import FiniteGame, GameSpec, build_D, build_E, from_payoff_tables
from gamedecomp.basis import skew_extension
from gamedecomp.stp import matmul


def random_rational(rng, lo=-9, hi=9, max_den=4):
    num = int(rng.integers(lo, hi + 1))
    den = int(rng.integers(1, max_den + 1))
    v = Fraction(num, den)
    return v.numerator if v.denominator == 1 else v


def random_game(rng, n, kappa, **kw):
    spec = GameSpec(n, kappa)
    arr = np.empty((n, spec.num_profiles), dtype=object)
    for idx in np.ndindex(arr.shape):
        arr[idx] = random_rational(rng, **kw)
    return FiniteGame(spec, arr)


def random_combination(rng, rows, spec):
    coeffs = np.array([[random_rational(rng) for _ in range(rows.shape[0])]], dtype=object)
    if rows.shape[0] == 0:
        return FiniteGame.zero(spec)
    return FiniteGame.from_vector(spec, matmul(coeffs, rows)[0])


def random_symmetric(rng, n, kappa):
    return random_combination(rng, build_E(n, kappa).rows, GameSpec(n, kappa))


def random_skew(rng, n, kappa):
    return random_combination(rng, build_D(n, kappa).rows, GameSpec(n, kappa))


def perturb(rng, game):
    arr = game.payoffs.copy()
    i = int(rng.integers(game.n))
    j = int(rng.integers(arr.shape[1]))
    arr[i, j] = arr[i, j] + random_rational(rng, 1, 5)
    return FiniteGame(game.spec, arr)


def symmetric32_game(a=1, b=2, c=3, d=4, e=5, f=6):
    """Symmetric game in G_[3;2] with the six free parameters a..f."""
    return from_payoff_tables(
        [
            [a, b, b, d, c, e, e, f],
            [a, b, c, e, b, d, e, f],
            [a, c, b, e, b, e, d, f],
        ],
        name="symmetric 3x2",
    )


def skew32_game(g=1, h=2):
    """Skew-symmetric game in G_[3;2] with parameters g, h."""
    return from_payoff_tables(
        [
            [0, g, -g, 0, 0, h, -h, 0],
            [0, -g, 0, -h, g, 0, h, 0],
            [0, 0, g, h, -g, -h, 0, 0],
        ],
        name="skew 3x2",
    )


def delta_game():
    """V^c_1 = delta_8^3, V^c_2 = delta_8^6, V^c_3 = delta_8^7."""
    rows = np.zeros((3, 8), dtype=int)
    rows[0, 2] = rows[1, 5] = rows[2, 6] = 1
    return from_payoff_tables(rows.tolist(), name="delta game")


def skew33_first_row(a=(1, 2, 3), b=(4, 5, 6), c=(7, 8, 9)):
    out = []
    for x1, x2, x3 in (a, b, c):
        out += [0, x1, x2, -x1, 0, x3, -x2, -x3, 0]
    return out


def skew33_game():
    v1 = np.array([skew33_first_row()], dtype=object)
    return FiniteGame.from_vector(GameSpec(3, 3), skew_extension(v1, 3, 3)[0], "skew 3x3")


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def _index(profile, kappa):
    idx = 0
    for x in profile:
        idx = idx * kappa + x - 1
    return idx


def constraint_matrix(n, kappa, signed):
    """Rows c_i(x) - s c_{sigma(i)}(x_{sigma^-1(1)}, ...) over all sigma, x, i.

    Variables are ordered like the structure vector.  Built from itertools
    alone so it shares no code with the library.
    """
    k_n = kappa**n
    rows = []
    for perm in itertools.permutations(range(n)):
        inv = [perm.index(t) for t in range(n)]
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        s = -1 if signed and inversions % 2 else 1
        for x in itertools.product(range(1, kappa + 1), repeat=n):
            moved = tuple(x[inv[t]] for t in range(n))
            for i in range(n):
                row = [0] * (n * k_n)
                row[i * k_n + _index(x, kappa)] += 1
                row[perm[i] * k_n + _index(moved, kappa)] -= s
                if any(row):
                    rows.append(row)
    return sympy.Matrix(rows)


def same_row_space(basis_rows, constraints):
    """Row space of ``basis_rows`` equals the nullspace of ``constraints``."""
    null = constraints.nullspace()
    b = sympy.Matrix([[sympy.Rational(str(x)) for x in row] for row in basis_rows])
    if b.rows == 0:
        return len(null) == 0
    contained = (constraints * b.T).is_zero_matrix
    return bool(contained) and b.rank() == len(null)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
