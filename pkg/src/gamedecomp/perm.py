"""Permutations of players and their matrix representations.

A permutation acts on players; ``T_sigma`` acts on strategy profiles written
in STP form, and ``psi(sigma) = P_sigma (x) sign(sigma) T_sigma`` acts on
structure vectors of games.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator

import numpy as np

from .stp import Logical, khatri_rao, kron

__all__ = [
    "MAX_ENUMERATE",
    "Permutation",
    "ProfilePermutation",
    "compose",
    "enumerate_perms",
    "generators",
    "inverse",
    "perm_matrix",
    "phi",
    "psi",
    "sign",
    "t_sigma",
]

MAX_ENUMERATE = 9


@dataclass(frozen=True)
class Permutation:
    """Element of S_n in one-line notation: ``images[i - 1] == sigma(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycle(cls, n: int, *cycle: int) -> "Permutation":
        """Permutation of 1..n sending cycle[0] -> cycle[1] -> ... -> cycle[0]."""
        images = list(range(1, n + 1))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def sign(self) -> int:
        return sign(self)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __repr__(self):
        return f"Permutation{self.images}"


def compose(mu: Permutation, sigma: Permutation) -> Permutation:
    """``mu o sigma``, i.e. ``i -> mu(sigma(i))``."""
    if mu.n != sigma.n:
        raise ValueError(f"cannot compose permutations of {mu.n} and {sigma.n} points")
    return Permutation(tuple(mu(sigma(i)) for i in range(1, sigma.n + 1)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, j in enumerate(p.images, start=1):
        inv[j - 1] = i
    return Permutation(tuple(inv))


def sign(p: Permutation) -> int:
    """Parity of ``p`` as +1 or -1, from its cycle decomposition."""
    seen = [False] * p.n
    transpositions = 0
    for start in range(p.n):
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p.images[i] - 1
            length += 1
        if length:
            transpositions += length - 1
    return -1 if transpositions % 2 else 1


def enumerate_perms(n: int) -> list[Permutation]:
    """All n! permutations of 1..n in lexicographic one-line order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATE:
        raise ValueError(f"refusing to enumerate S_{n}: n! is too large (limit n <= {MAX_ENUMERATE})")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def generators(n: int) -> list[Permutation]:
    """The transpositions (1, i), 2 <= i <= n, which generate S_n."""
    return [Permutation.transposition(n, 1, i) for i in range(2, n + 1)]


def perm_matrix(p: Permutation) -> Logical:
    """P_sigma = delta_n[sigma(1), ..., sigma(n)]."""
    return Logical(p.n, p.images)


@lru_cache(maxsize=None)
def phi(n: int, kappa: int, i: int) -> Logical:
    """Phi_i = 1^T_{kappa^(i-1)} (x) I_kappa (x) 1^T_{kappa^(n-i)}.

    Maps the STP form of a profile to the strategy vector of player ``i``.
    """
    if not 1 <= i <= n:
        raise ValueError(f"player index {i} outside 1..{n}")
    return reduce(
        kron,
        [Logical.ones_row(kappa ** (i - 1)), Logical.identity(kappa), Logical.ones_row(kappa ** (n - i))],
    )


@dataclass(frozen=True)
class ProfilePermutation:
    """T_sigma for ``n`` players with ``kappa`` strategies each.

    ``matrix`` sends the STP form of (x_1, ..., x_n) to that of
    (x_{sigma^-1(1)}, ..., x_{sigma^-1(n)}).
    """

    n: int
    kappa: int
    matrix: Logical

    def apply_index(self, idx: int) -> int:
        """Image of the profile with 1-based STP index ``idx``."""
        return self.matrix.apply(idx)

    def dense(self) -> np.ndarray:
        return self.matrix.dense()


@lru_cache(maxsize=None)
def t_sigma(p: Permutation, kappa: int) -> ProfilePermutation:
    """T_sigma as the Khatri-Rao chain Phi_{sigma^-1(1)} * ... * Phi_{sigma^-1(n)}."""
    inv = inverse(p)
    blocks = [phi(p.n, kappa, inv(i)) for i in range(1, p.n + 1)]
    mat = reduce(khatri_rao, blocks)
    assert mat.is_permutation()
    return ProfilePermutation(p.n, kappa, mat)


def psi_logical(p: Permutation, kappa: int) -> tuple[int, Logical]:
    """``(sign, P_sigma (x) T_sigma)`` so that ``psi(sigma) = sign * matrix``."""
    return sign(p), perm_matrix(p).kron(t_sigma(p, kappa).matrix)


def psi(p: Permutation, kappa: int) -> np.ndarray:
    """The linear representation psi(sigma) = P_sigma (x) sign(sigma) T_sigma, dense."""
    s, mat = psi_logical(p, kappa)
    out = mat.dense()
    if s < 0:
        out = -out
    return out
