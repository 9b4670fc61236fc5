"""Finite normal-form games stored as structure vectors.

Profiles are ordered the way the semi-tensor product orders them: player 1 is
the most significant digit, so for three players with two strategies the
columns run 111, 112, 121, 122, 211, ...
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import reduce
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from .stp import delta, format_rational, rational, rmatrix, stp

__all__ = [
    "ConstraintError",
    "FiniteGame",
    "GameError",
    "GameSpec",
    "MAX_PROFILES",
    "dump_game",
    "dumps_game",
    "format_decimal",
    "from_payoff_tables",
    "game_from_dict",
    "game_to_dict",
    "load_game",
    "profile_index",
    "profile_label",
    "profile_of_index",
    "profile_vector",
    "render_table",
    "to_payoff_tables",
    "two_player_matrices",
]

MAX_PROFILES = 10**6


class GameError(ValueError):
    """Malformed game data (bad shape, non-exact payoff, unreadable file)."""


class ConstraintError(ValueError):
    """A structural constraint is violated (n < 2, kappa < 2, size guard)."""


@dataclass(frozen=True)
class GameSpec:
    """``n`` players, each with strategies 1..kappa."""

    n: int
    kappa: int

    def __post_init__(self):
        if self.n < 2:
            raise ConstraintError(f"need at least 2 players, got n={self.n}")
        if self.kappa < 2:
            raise ConstraintError(f"need at least 2 strategies, got kappa={self.kappa}")
        if self.kappa**self.n > MAX_PROFILES:
            raise ConstraintError(
                f"size guard: kappa^n = {self.kappa}^{self.n} exceeds {MAX_PROFILES} profiles"
            )

    @property
    def num_profiles(self) -> int:
        return self.kappa**self.n

    @property
    def dim(self) -> int:
        """Dimension n * kappa^n of the space of games."""
        return self.n * self.num_profiles

    def profiles(self) -> Iterator[tuple[int, ...]]:
        for idx in range(1, self.num_profiles + 1):
            yield profile_of_index(idx, (self.kappa,) * self.n)

    def profile_array(self) -> np.ndarray:
        """All profiles as an int array of shape (kappa^n, n), in canonical order."""
        idx = np.arange(self.num_profiles)
        powers = self.kappa ** np.arange(self.n - 1, -1, -1)
        return (idx[:, None] // powers[None, :]) % self.kappa + 1


def _sizes(sizes) -> tuple[int, ...]:
    if isinstance(sizes, GameSpec):
        return (sizes.kappa,) * sizes.n
    return tuple(sizes)


def profile_index(profile: Sequence[int], sizes) -> int:
    """1-based position of ``x_1 |x ... |x x_n`` among the columns of I_k.

    ``sizes`` is a :class:`GameSpec` or the per-player strategy counts.
    """
    sizes = _sizes(sizes)
    if len(profile) != len(sizes):
        raise GameError(f"profile {tuple(profile)} has {len(profile)} entries, expected {len(sizes)}")
    idx = 0
    for x, k in zip(profile, sizes):
        if not 1 <= x <= k:
            raise GameError(f"strategy {x} outside 1..{k} in profile {tuple(profile)}")
        idx = idx * k + (x - 1)
    return idx + 1


def profile_of_index(index: int, sizes) -> tuple[int, ...]:
    sizes = _sizes(sizes)
    total = 1
    for k in sizes:
        total *= k
    if not 1 <= index <= total:
        raise GameError(f"profile index {index} outside 1..{total}")
    rem = index - 1
    out = []
    for k in reversed(sizes):
        rem, x = divmod(rem, k)
        out.append(x + 1)
    return tuple(reversed(out))


def profile_vector(profile: Sequence[int], sizes) -> np.ndarray:
    """STP form of a profile: delta_{k_1}^{x_1} |x ... |x delta_{k_n}^{x_n}."""
    sizes = _sizes(sizes)
    return reduce(stp, [delta(k, x) for x, k in zip(profile, sizes)])


def profile_label(profile: Sequence[int]) -> str:
    if max(profile) < 10:
        return "".join(str(x) for x in profile)
    return ",".join(str(x) for x in profile)


class FiniteGame:
    """A game in G_[n; kappa] given by its per-player payoff rows.

    ``payoffs[i - 1]`` is V^c_i, the payoff of player ``i`` at every profile
    in canonical order.  The array is read-only.
    """

    def __init__(self, spec: GameSpec, payoffs, name: Optional[str] = None):
        arr = rmatrix(payoffs)
        if arr.shape != (spec.n, spec.num_profiles):
            raise GameError(
                f"payoff table has shape {arr.shape}, expected ({spec.n}, {spec.num_profiles})"
            )
        arr.setflags(write=False)
        self.spec = spec
        self.payoffs = arr
        self.name = name

    @classmethod
    def from_vector(cls, spec: GameSpec, vector, name: Optional[str] = None) -> "FiniteGame":
        """Build from a structure vector V_G = [V^c_1, ..., V^c_n]."""
        v = np.asarray(vector, dtype=object).reshape(-1)
        if v.size != spec.dim:
            raise GameError(f"structure vector has length {v.size}, expected {spec.dim}")
        return cls(spec, rmatrix(v.reshape(spec.n, spec.num_profiles)), name)

    @classmethod
    def zero(cls, spec: GameSpec, name: Optional[str] = None) -> "FiniteGame":
        arr = np.empty((spec.n, spec.num_profiles), dtype=object)
        arr.fill(0)
        return cls(spec, arr, name)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def kappa(self) -> int:
        return self.spec.kappa

    @property
    def vector(self) -> np.ndarray:
        """Structure vector V_G as a 1-D object array of length n * kappa^n."""
        return self.payoffs.reshape(-1).copy()

    def row(self, i: int) -> np.ndarray:
        """V^c_i as a 1 x kappa^n matrix."""
        if not 1 <= i <= self.n:
            raise GameError(f"player {i} outside 1..{self.n}")
        return self.payoffs[i - 1 : i].copy()

    def payoff(self, i: int, profile: Sequence[int]):
        """c_i(profile)."""
        if not 1 <= i <= self.n:
            raise GameError(f"player {i} outside 1..{self.n}")
        return self.payoffs[i - 1, profile_index(profile, self.spec) - 1]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.payoffs.flat)

    def _check_compatible(self, other: "FiniteGame"):
        if self.spec != other.spec:
            raise GameError(f"games live in different spaces: {self.spec} vs {other.spec}")

    def __add__(self, other: "FiniteGame") -> "FiniteGame":
        self._check_compatible(other)
        return FiniteGame(self.spec, self.payoffs + other.payoffs)

    def __sub__(self, other: "FiniteGame") -> "FiniteGame":
        self._check_compatible(other)
        return FiniteGame(self.spec, self.payoffs - other.payoffs)

    def __neg__(self) -> "FiniteGame":
        return FiniteGame(self.spec, -self.payoffs)

    def __rmul__(self, scalar) -> "FiniteGame":
        return FiniteGame(self.spec, rmatrix(rational(scalar) * self.payoffs))

    def __eq__(self, other):
        if not isinstance(other, FiniteGame):
            return NotImplemented
        return self.spec == other.spec and bool(np.all(self.payoffs == other.payoffs))

    __hash__ = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteGame{label} n={self.n} kappa={self.kappa}>"



def from_payoff_tables(tables, n: Optional[int] = None, kappa: Optional[int] = None,
                       name: Optional[str] = None) -> FiniteGame:
    """Game from an n x kappa^n table whose columns follow the canonical profile order.

    ``n`` and ``kappa`` default to what the table shape implies.
    """
    try:
        arr = rmatrix(tables)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GameError(str(exc)) from exc
    rows, cols = arr.shape
    n = rows if n is None else n
    if kappa is None:
        kappa = round(cols ** (1.0 / n)) if cols > 0 else 0
    if rows != n or kappa**n != cols:
        raise GameError(f"table of shape {arr.shape} does not fit n={n}, kappa={kappa}")
    return FiniteGame(GameSpec(n, kappa), arr, name)


def to_payoff_tables(game: FiniteGame) -> np.ndarray:
    return game.payoffs.copy()


def two_player_matrices(game: FiniteGame) -> tuple[np.ndarray, np.ndarray]:
    """Payoff matrices (A, B) of a two-player game, rows indexed by player 1."""
    if game.n != 2:
        raise GameError(f"two_player_matrices needs n = 2, got n = {game.n}")
    k = game.kappa
    return game.payoffs[0].reshape(k, k).copy(), game.payoffs[1].reshape(k, k).copy()


# --- file format ----------------------------------------------------------


def game_to_dict(game: FiniteGame) -> dict:
    out = {"n": game.n, "kappa": game.kappa}
    if game.name is not None:
        out["name"] = game.name
    out["payoffs"] = [
        [x if isinstance(x, int) else format_rational(x) for x in row] for row in game.payoffs
    ]
    return out


def _payoff_entry(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise GameError(f"payoff {x!r} is not exact; write integers or 'p/q' strings")
    if isinstance(x, str) and ("." in x or "e" in x.lower()):
        raise GameError(f"decimal payoff {x!r} rejected; write 'p/q' instead")
    try:
        return rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GameError(str(exc)) from exc


def game_from_dict(data: dict) -> FiniteGame:
    if not isinstance(data, dict):
        raise GameError("game document must be a JSON object")
    for key in ("n", "kappa", "payoffs"):
        if key not in data:
            raise GameError(f"game document is missing {key!r}")
    n, kappa = data["n"], data["kappa"]
    if not isinstance(n, int) or not isinstance(kappa, int) or isinstance(n, bool):
        raise GameError("'n' and 'kappa' must be integers")
    spec = GameSpec(n, kappa)
    rows = data["payoffs"]
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != spec.num_profiles for r in rows
    ):
        raise GameError(f"'payoffs' must be {n} lists of {spec.num_profiles} entries")
    arr = np.empty((n, spec.num_profiles), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            arr[i, j] = _payoff_entry(x)
    return FiniteGame(spec, arr, data.get("name"))


def load_game(path) -> FiniteGame:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GameError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return game_from_dict(data)


def dumps_game(game: FiniteGame) -> str:
    return json.dumps(game_to_dict(game), indent=2) + "\n"


def dump_game(game: FiniteGame, path) -> None:
    Path(path).write_text(dumps_game(game))


# --- rendering ------------------------------------------------------------


def format_decimal(x, precision: int = 4) -> str:
    """Fixed-point rendering of an exact rational, rounded half away from zero."""
    x = Fraction(rational(x))
    q = Decimal(10) ** -precision
    d = (Decimal(x.numerator) / Decimal(x.denominator)).quantize(q, rounding="ROUND_HALF_UP")
    if d == 0:
        d = abs(d)
    return f"{d:.{precision}f}"


def render_table(game: FiniteGame, precision: int = 4, exact: bool = False) -> str:
    """Payoff table: one row per player, one column per profile."""
    header = ["c\\s"] + [profile_label(p) for p in game.spec.profiles()]
    body = []
    for i, row in enumerate(game.payoffs, start=1):
        cells = [format_rational(x) if exact else format_decimal(x, precision) for x in row]
        body.append([f"c_{i}"] + cells)
    widths = [max(len(r[c]) for r in [header] + body) for c in range(len(header))]
    lines = []
    if game.name:
        lines.append(game.name)
    for r in [header] + body:
        lines.append(" | ".join(cell.rjust(w) for cell, w in zip(r, widths)))
        if r is header:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
