"""Bases of the skew-symmetric and symmetric subspaces of G_[n; kappa].

Player 1's payoff row of a skew-symmetric game is determined by its values on
profiles ``(j, z)`` where ``z`` runs over strictly increasing (n-1)-tuples; for
a symmetric game ``z`` runs over non-decreasing tuples.  The rows of B (resp.
H) are indicator-like vectors over the orbits of such tuples, and D (resp. E)
extends each row to all players.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .game import GameSpec, profile_index
from .perm import enumerate_perms, sign
from .stp import Logical, matmul, stp, swap_matrix, zeros

__all__ = [
    "BasisMatrix",
    "Dimensions",
    "WeakTuple",
    "build_B",
    "build_D",
    "build_E",
    "build_H",
    "build_Q",
    "dims",
    "enum_strict",
    "enum_weak",
    "eta",
    "gram",
    "orbit",
    "orbit_size",
    "skew_chain",
    "skew_extension",
    "symmetric_chain",
    "symmetric_extension",
    "zeta",
]


def enum_strict(n: int, kappa: int) -> list[tuple[int, ...]]:
    """Strictly increasing (n-1)-tuples over 1..kappa in lexicographic order.

    Empty when n - 1 > kappa.
    """
    return list(itertools.combinations(range(1, kappa + 1), n - 1))


def orbit(z: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct rearrangements of ``z``, sorted lexicographically."""
    return sorted(set(itertools.permutations(z)))


def orbit_size(z: tuple[int, ...]) -> int:
    """(n-1)! / prod_j (#j in z)!, the number of distinct rearrangements."""
    size = math.factorial(len(z))
    for mult in Counter(z).values():
        size //= math.factorial(mult)
    return size


@dataclass(frozen=True)
class WeakTuple:
    values: tuple[int, ...]

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.values))

    @property
    def q(self) -> int:
        return orbit_size(self.values)

    @property
    def orbit(self) -> list[tuple[int, ...]]:
        return orbit(self.values)


def enum_weak(n: int, kappa: int) -> list[WeakTuple]:
    """Non-decreasing (n-1)-tuples over 1..kappa in lexicographic order."""
    return [WeakTuple(z) for z in itertools.combinations_with_replacement(range(1, kappa + 1), n - 1)]


@dataclass(frozen=True)
class Dimensions:
    n: int
    kappa: int
    ell: int
    beta: int
    p: int
    alpha: int
    q: tuple[int, ...]
    dim_e: int

    @property
    def total(self) -> int:
        return self.n * self.kappa**self.n


def dims(n: int, kappa: int) -> Dimensions:
    """Subspace dimensions; ``ell``/``p`` come from the closed-form binomials."""
    spec = GameSpec(n, kappa)
    ell = math.comb(kappa, n - 1)
    p = math.comb(n + kappa - 2, n - 1)
    q = tuple(w.q for w in enum_weak(n, kappa))
    beta, alpha = kappa * ell, kappa * p
    return Dimensions(n, kappa, ell, beta, p, alpha, q, spec.dim - alpha - beta)


def _row(kappa: int, n: int, entries: dict[tuple[int, ...], int]) -> np.ndarray:
    out = zeros(1, kappa**n)
    for profile, v in entries.items():
        out[0, profile_index(profile, (kappa,) * n) - 1] += v
    return out


def eta(n: int, kappa: int, i: int, j: int) -> np.ndarray:
    """Row eta^i_j: sign(s) at profile (j, z^i_s) for every s in S_{n-1}.

    ``i`` is the 1-based position of the strict tuple in :func:`enum_strict`.
    """
    tuples = enum_strict(n, kappa)
    if not 1 <= i <= len(tuples) or not 1 <= j <= kappa:
        raise ValueError(f"eta index ({i}, {j}) out of range for n={n}, kappa={kappa}")
    z = tuples[i - 1]
    entries = {}
    for s in enumerate_perms(n - 1):
        entries[(j,) + tuple(z[s(t) - 1] for t in range(1, n))] = sign(s)
    return _row(kappa, n, entries)


def zeta(n: int, kappa: int, i: int, j: int) -> np.ndarray:
    """Row zeta^i_j: 1 at profile (j, w) for each distinct rearrangement w of z^i."""
    tuples = enum_weak(n, kappa)
    if not 1 <= i <= len(tuples) or not 1 <= j <= kappa:
        raise ValueError(f"zeta index ({i}, {j}) out of range for n={n}, kappa={kappa}")
    return _row(kappa, n, {(j,) + w: 1 for w in tuples[i - 1].orbit})


@dataclass(frozen=True)
class BasisMatrix:
    """Basis vectors stacked as rows, with the (tuple, strategy) label of each row."""

    rows: np.ndarray
    labels: tuple[tuple[int, int], ...]
    kind: str

    def __post_init__(self):
        self.rows.setflags(write=False)

    def __len__(self):
        return self.rows.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.shape

    def gram(self) -> np.ndarray:
        return gram(self.rows)


def gram(rows) -> np.ndarray:
    return matmul(rows, np.asarray(rows, dtype=object).T)


def _stack(rows: list[np.ndarray], width: int) -> np.ndarray:
    if not rows:
        return zeros(0, width)
    return np.vstack(rows)


@lru_cache(maxsize=None)
def build_B(n: int, kappa: int) -> BasisMatrix:
    """Stack eta^1_1 .. eta^1_kappa, ..., eta^ell_1 .. eta^ell_kappa."""
    GameSpec(n, kappa)
    ell = len(enum_strict(n, kappa))
    labels = tuple((i, j) for i in range(1, ell + 1) for j in range(1, kappa + 1))
    rows = _stack([eta(n, kappa, i, j) for i, j in labels], kappa**n)
    return BasisMatrix(rows, labels, "B")


@lru_cache(maxsize=None)
def build_H(n: int, kappa: int) -> BasisMatrix:
    """Stack zeta^1_1 .. zeta^1_kappa, ..., zeta^p_1 .. zeta^p_kappa."""
    GameSpec(n, kappa)
    p = len(enum_weak(n, kappa))
    labels = tuple((i, j) for i in range(1, p + 1) for j in range(1, kappa + 1))
    rows = _stack([zeta(n, kappa, i, j) for i, j in labels], kappa**n)
    return BasisMatrix(rows, labels, "H")


def skew_chain(kappa: int, i: int) -> Logical:
    """W_[kappa^(i-2), kappa] |x W_[kappa, kappa^(i-1)], mapping V^c_1 to -V^c_i."""
    return stp(swap_matrix(kappa ** (i - 2), kappa), swap_matrix(kappa, kappa ** (i - 1)))


def symmetric_chain(kappa: int, i: int) -> Logical:
    """W_[kappa^(i-1), kappa], mapping V^c_1 to V^c_i of a symmetric game."""
    return swap_matrix(kappa ** (i - 1), kappa)


def skew_extension(v1, n: int, kappa: int) -> np.ndarray:
    """[V^c_1, -V^c_1 C_2, ..., -V^c_1 C_n] for the skew swap chains C_i."""
    v1 = np.asarray(v1, dtype=object)
    blocks = [v1] + [-stp(v1, skew_chain(kappa, i)) for i in range(2, n + 1)]
    return np.hstack(blocks)


def symmetric_extension(v1, n: int, kappa: int) -> np.ndarray:
    """[V^c_1, V^c_1 W_[kappa,kappa], ..., V^c_1 W_[kappa^(n-1),kappa]]."""
    v1 = np.asarray(v1, dtype=object)
    blocks = [v1] + [stp(v1, symmetric_chain(kappa, i)) for i in range(2, n + 1)]
    return np.hstack(blocks)


@lru_cache(maxsize=None)
def build_D(n: int, kappa: int) -> BasisMatrix:
    """Basis of the skew-symmetric subspace; zero rows when n > kappa + 1."""
    b = build_B(n, kappa)
    if len(b) == 0:
        rows = zeros(0, n * kappa**n)
    else:
        rows = skew_extension(b.rows, n, kappa)
    return BasisMatrix(rows, b.labels, "D")


@lru_cache(maxsize=None)
def build_E(n: int, kappa: int) -> BasisMatrix:
    """Basis of the symmetric subspace."""
    h = build_H(n, kappa)
    return BasisMatrix(symmetric_extension(h.rows, n, kappa), h.labels, "E")


@lru_cache(maxsize=None)
def build_Q(n: int, kappa: int) -> BasisMatrix:
    """D stacked over E."""
    d, e = build_D(n, kappa), build_E(n, kappa)
    return BasisMatrix(np.vstack([d.rows, e.rows]), d.labels + e.labels, "Q")
