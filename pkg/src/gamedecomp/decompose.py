"""Orthogonal decomposition of a game into symmetric, skew and asymmetric parts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .basis import build_D, build_E, build_Q, dims
from .game import FiniteGame, GameError, GameSpec
from .stp import matmul, stp, swap_matrix, zeros
from .symmetry import SymmetryVerdict, verdict

__all__ = ["Classification", "Decomposition", "classify", "decompose", "two_player_decompose"]


def _as_row(v) -> np.ndarray:
    return np.asarray(v, dtype=object).reshape(1, -1)


def _dot(a, b):
    return matmul(_as_row(a), _as_row(b).T)[0, 0]


@dataclass(frozen=True)
class Decomposition:
    """V_G = v_s + v_k + v_e with coordinates x1 (against D) and x2 (against E).

    All vectors are 1-D object arrays of exact rationals.
    """

    spec: GameSpec
    v_s: np.ndarray
    v_k: np.ndarray
    v_e: np.ndarray
    x1: np.ndarray
    x2: np.ndarray

    @property
    def symmetric(self) -> FiniteGame:
        return FiniteGame.from_vector(self.spec, self.v_s, "symmetric part")

    @property
    def skew(self) -> FiniteGame:
        return FiniteGame.from_vector(self.spec, self.v_k, "skew-symmetric part")

    @property
    def asymmetric(self) -> FiniteGame:
        return FiniteGame.from_vector(self.spec, self.v_e, "asymmetric part")

    def games(self) -> tuple[FiniteGame, FiniteGame, FiniteGame]:
        return self.symmetric, self.skew, self.asymmetric

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.spec == other.spec and all(
            np.array_equal(getattr(self, f), getattr(other, f))
            for f in ("v_s", "v_k", "v_e", "x1", "x2")
        )

    __hash__ = None


def _diagonal(gram: np.ndarray) -> list:
    off = gram.copy()
    diag = [gram[i, i] for i in range(gram.shape[0])]
    for i in range(gram.shape[0]):
        off[i, i] = 0
    if any(x != 0 for x in off.flat):
        raise ArithmeticError("basis Gram matrix is not diagonal")
    if any(d == 0 for d in diag):
        raise ArithmeticError("basis contains a zero row")
    return diag


@lru_cache(maxsize=None)
def _q_diagonal(n: int, kappa: int) -> tuple:
    q = build_Q(n, kappa).rows
    return tuple(_diagonal(matmul(q, q.T))) if q.shape[0] else ()


def _coordinates(v: np.ndarray, rows: np.ndarray, diag=None) -> np.ndarray:
    """Coefficients of the orthogonal projection of ``v`` onto the row space of ``rows``.

    ``diag`` is the (diagonal) Gram matrix of ``rows`` if already known.
    """
    if rows.shape[0] == 0:
        return np.empty(0, dtype=object)
    if diag is None:
        diag = _diagonal(matmul(rows, rows.T))
    proj = matmul(_as_row(v), rows.T)[0]
    out = np.empty(len(diag), dtype=object)
    for i, (num, den) in enumerate(zip(proj, diag)):
        q = Fraction(num) / den
        out[i] = q.numerator if q.denominator == 1 else q
    return out


def _combine(x: np.ndarray, rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return zeros(1, rows.shape[1])[0]
    return matmul(_as_row(x), rows)[0]


def decompose(game: FiniteGame) -> Decomposition:
    """Project V_G onto span(D) and span(E); the remainder is the asymmetric part.

    The Gram matrix of Q = [D; E] is diagonal, so each coordinate is
    <V_G, row> / <row, row>.
    """
    n, kappa = game.n, game.kappa
    d, e, q = build_D(n, kappa), build_E(n, kappa), build_Q(n, kappa)
    v = game.vector
    x = _coordinates(v, q.rows, _q_diagonal(n, kappa))
    x1, x2 = x[: len(d)], x[len(d):]
    v_k = _combine(x1, d.rows)
    v_s = _combine(x2, e.rows)
    v_e = _normalized(v - v_s - v_k)
    return Decomposition(game.spec, v_s, v_k, v_e, x1, x2)


def two_player_decompose(game: FiniteGame) -> Decomposition:
    """Closed form for two players: S = (V1 + V2 W)/2 and K = (V1 - V2 W)/2."""
    if game.n != 2:
        raise GameError(f"two_player_decompose needs n = 2, got n = {game.n}")
    kappa = game.kappa
    w = swap_matrix(kappa, kappa)
    v1, v2 = game.row(1), game.row(2)
    v2w = stp(v2, w)
    half = Fraction(1, 2)
    s = _normalized((v1 + v2w) * half)
    k = _normalized((v1 - v2w) * half)
    v_s = np.hstack([s, stp(s, w)])[0]
    v_k = np.hstack([k, -stp(k, w)])[0]
    v = game.vector
    v_e = _normalized(v - v_s - v_k)
    d, e = build_D(2, kappa), build_E(2, kappa)
    return Decomposition(game.spec, v_s, v_k, v_e, _coordinates(v_k, d.rows), _coordinates(v_s, e.rows))


def _normalized(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x
    return out


@dataclass(frozen=True)
class Classification:
    """Squared norms of the three parts, purity flags and the symmetry verdict."""

    norms: dict
    pure: dict
    zero: dict
    verdict: SymmetryVerdict
    dim_e: int


def classify(game: FiniteGame) -> Classification:
    dec = decompose(game)
    parts = {"symmetric": dec.v_s, "skew": dec.v_k, "asymmetric": dec.v_e}
    norms = {k: _dot(v, v) for k, v in parts.items()}
    v = game.vector
    pure = {k: bool(np.array_equal(p, v)) for k, p in parts.items()}
    zero = {k: norms[k] == 0 for k in parts}
    return Classification(norms, pure, zero, verdict(game), dims(game.n, game.kappa).dim_e)
