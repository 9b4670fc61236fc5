"""Deciding whether a game is symmetric, skew-symmetric or asymmetric.

Two independent routes are provided.  The ``*_def`` predicates enumerate
permutations and profiles directly; the ``*_thm`` predicates test the
swap-matrix conditions on the structure vector.  ``is_invariant_psi`` tests
invariance under the linear representation psi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .basis import build_D, build_E, skew_chain, symmetric_chain
from .game import ConstraintError, FiniteGame, GameSpec
from .perm import Permutation, enumerate_perms, generators, psi_logical, sign, t_sigma
from .stp import Logical, delta, kron, matmul, stp, swap_matrix

__all__ = [
    "Check",
    "MAX_DEF_CHECKS",
    "SymmetryVerdict",
    "Witness",
    "is_asymmetric",
    "is_invariant_psi",
    "is_skew_def",
    "is_skew_thm",
    "is_symmetric_def",
    "is_symmetric_thm",
    "is_zero_sum",
    "verdict",
]

# n! * kappa^n * n payoff comparisons allowed in a brute-force check
MAX_DEF_CHECKS = 20_000_000


@dataclass(frozen=True)
class Witness:
    """A violated instance: c_player(profile) disagrees with its image under sigma."""

    sigma: Permutation
    profile: tuple[int, ...]
    player: int
    lhs: object
    rhs: object

    def __str__(self):
        return (
            f"sigma={self.sigma.images} profile={self.profile} player={self.player}: "
            f"{self.lhs} != {self.rhs}"
        )


class Check(NamedTuple):
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds


def _permuted_indices(spec: GameSpec, sigma: Permutation) -> np.ndarray:
    # 0-based index of (x_{sigma^-1(1)}, ..., x_{sigma^-1(n)}) for every profile x
    profiles = spec.profile_array()
    inv = [0] * spec.n
    for i in range(1, spec.n + 1):
        inv[sigma(i) - 1] = i
    moved = profiles[:, [inv[j] - 1 for j in range(spec.n)]]
    powers = spec.kappa ** np.arange(spec.n - 1, -1, -1)
    return ((moved - 1) * powers).sum(axis=1)


def _def_check(game: FiniteGame, signed: bool, perms: Optional[Sequence[Permutation]]) -> Check:
    spec = game.spec
    if perms is None:
        cost = math.factorial(spec.n) * spec.num_profiles * spec.n
        if cost > MAX_DEF_CHECKS:
            raise ConstraintError(
                f"size guard: brute-force check needs {cost} comparisons (limit {MAX_DEF_CHECKS})"
            )
        perms = enumerate_perms(spec.n)
    c = game.payoffs
    profiles = spec.profile_array()
    for sigma in perms:
        idx = _permuted_indices(spec, sigma)
        factor = sign(sigma) if signed else 1
        image = c[[sigma(i) - 1 for i in range(1, spec.n + 1)]][:, idx]
        if factor < 0:
            image = -image
        bad = c != image
        if bad.any():
            # first violation in (profile, player) order
            prof, player = np.argwhere(bad.T)[0]
            return Check(
                False,
                Witness(sigma, tuple(int(x) for x in profiles[prof]), int(player) + 1,
                        c[player, prof], image[player, prof]),
            )
    return Check(True)


def is_symmetric_def(game: FiniteGame, generators_only: bool = False) -> Check:
    """c_i(x) = c_{sigma(i)}(x_{sigma^-1(1)}, ..., x_{sigma^-1(n)}) for all sigma, x, i."""
    return _def_check(game, False, generators(game.n) if generators_only else None)


def is_skew_def(game: FiniteGame, generators_only: bool = False) -> Check:
    """As :func:`is_symmetric_def` with the extra factor sign(sigma)."""
    return _def_check(game, True, generators(game.n) if generators_only else None)


def _equal(a, b) -> bool:
    return bool(np.all(np.asarray(a, dtype=object) == np.asarray(b, dtype=object)))


@lru_cache(maxsize=None)
def _swap_2_i(n: int, kappa: int, i: int) -> Logical:
    """Bracket operator of the player-1 skew condition: swaps factors 2 and i.

    Built from swap matrices and checked against T_sigma of the transposition
    acting on the last n - 1 factors.
    """
    chain = stp(swap_matrix(kappa ** (i - 2), kappa), swap_matrix(kappa, kappa ** (i - 3)))
    op = chain.kron(Logical.identity(kappa ** (n - i)))
    ref = t_sigma(Permutation.transposition(n - 1, 1, i - 1), kappa).matrix
    if op != ref:
        raise AssertionError(f"swap chain for factor pair (2, {i}) disagrees with T_sigma")
    return op


def is_skew_thm(game: FiniteGame) -> bool:
    """Swap-matrix test for skew-symmetry.

    Every V^c_i must equal -V^c_1 W_[k^(i-2),k] W_[k,k^(i-1)], and for n > 2
    each slice V^c_1 delta_k^s must be antisymmetric under exchanging the
    factors 2 and i, i = 3..n.
    """
    n, kappa = game.n, game.kappa
    v1 = game.row(1)
    for i in range(2, n + 1):
        if not _equal(game.row(i), -stp(v1, skew_chain(kappa, i))):
            return False
    for s in range(1, kappa + 1):
        r = stp(v1, delta(kappa, s))
        for i in range(3, n + 1):
            if not _equal(r + stp(r, _swap_2_i(n, kappa, i)), 0):
                return False
    return True


def is_symmetric_thm(game: FiniteGame) -> bool:
    """Swap-matrix test for symmetry.

    V^c_1 must be fixed by I_k (x) W_[k^(s-2),k] W_[k,k^(s-1)] for s = 2..n-1,
    and V^c_i = V^c_1 W_[k^(i-1),k] for i = 2..n.
    """
    n, kappa = game.n, game.kappa
    v1 = game.row(1)
    for s in range(2, n):
        chain = stp(swap_matrix(kappa ** (s - 2), kappa), swap_matrix(kappa, kappa ** (s - 1)))
        op = kron(Logical.identity(kappa), chain)
        if not _equal(stp(v1, op), v1):
            return False
    for i in range(2, n + 1):
        if not _equal(game.row(i), stp(v1, symmetric_chain(kappa, i))):
            return False
    return True


def is_invariant_psi(game: FiniteGame, exhaustive: bool = False) -> bool:
    """V_G psi(sigma) = V_G for the generators (1, i), or for all of S_n.

    Checking generators suffices because psi is a homomorphism.
    """
    n, kappa = game.n, game.kappa
    if exhaustive:
        cost = math.factorial(n) * game.spec.dim
        if cost > MAX_DEF_CHECKS:
            raise ConstraintError(
                f"size guard: exhaustive psi check needs {cost} entries (limit {MAX_DEF_CHECKS})"
            )
        perms = enumerate_perms(n)
    else:
        perms = generators(n)
    v = game.vector.reshape(1, -1)
    for sigma in perms:
        s, mat = psi_logical(sigma, kappa)
        image = stp(v, mat)
        if s < 0:
            image = -image
        if not _equal(image, v):
            return False
    return True


def is_zero_sum(game: FiniteGame) -> bool:
    """sum_i c_i(x) = 0 at every profile x."""
    return all(x == 0 for x in game.payoffs.sum(axis=0))


def is_asymmetric(game: FiniteGame) -> bool:
    """V_G is orthogonal to every basis vector of both symmetric subspaces."""
    v = game.vector.reshape(1, -1)
    for basis in (build_D(game.n, game.kappa), build_E(game.n, game.kappa)):
        if len(basis) and not _equal(matmul(v, basis.rows.T), 0):
            return False
    return True


@dataclass(frozen=True)
class SymmetryVerdict:
    is_symmetric: bool
    is_skew: bool
    is_asymmetric: bool
    witnesses: dict = field(default_factory=dict)


def verdict(game: FiniteGame, witnesses: bool = False) -> SymmetryVerdict:
    """Classify ``game``; with ``witnesses`` the brute-force counterexamples are kept.

    The swap-matrix predicates decide membership; the brute-force route only
    runs when witnesses are requested.
    """
    sym = is_symmetric_thm(game)
    skew = is_skew_thm(game)
    found = {}
    if witnesses:
        for name, check in (("symmetric", is_symmetric_def(game)), ("skew", is_skew_def(game))):
            if check.witness is not None:
                found[name] = check.witness
    return SymmetryVerdict(sym, skew, is_asymmetric(game), found)
