"""Exact-rational matrix algebra built around the semi-tensor product.

Matrices are 2-D numpy arrays of ``dtype=object`` holding Python ``int`` or
``fractions.Fraction`` entries, so every operation here is exact.  Logical
matrices (every column a column of an identity matrix) are kept in a compact
index form by :class:`Logical`; products between logical matrices stay in that
form and a dense matrix times a logical matrix is a column gather.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "Logical",
    "MatrixLike",
    "col_stack",
    "delta",
    "format_rational",
    "identity",
    "is_zero",
    "khatri_rao",
    "kron",
    "matmul",
    "ones_row",
    "rational",
    "rmatrix",
    "row_stack",
    "stp",
    "stp_chain",
    "swap_matrix",
    "zeros",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def rational(value) -> Union[int, Fraction]:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions (or any ``numbers.Rational``) and strings of the
    form ``"p"`` or ``"p/q"``.  Floats and decimal strings are rejected, since
    they would silently smuggle rounding into exact computations.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not accepted as payoffs")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        frac = Fraction(value.numerator, value.denominator)
        return frac.numerator if frac.denominator == 1 else frac
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise ValueError(f"not an exact rational: {value!r} (use 'p' or 'p/q')")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        frac = Fraction(num, den)
        return frac.numerator if frac.denominator == 1 else frac
    raise TypeError(f"cannot convert {type(value).__name__} {value!r} to an exact rational")


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


_normalize_array = np.frompyfunc(_normalize, 1, 1)


def format_rational(x) -> str:
    """Render an exact rational as ``"p"`` or ``"p/q"``."""
    x = rational(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def rmatrix(data) -> np.ndarray:
    """Build an exact 2-D matrix (object array) from nested sequences or arrays.

    A 1-D input becomes a single row.  :class:`Logical` inputs are densified.
    """
    if isinstance(data, Logical):
        return data.dense()
    arr = np.array(data, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got {arr.ndim} dimensions")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = rational(v)
    return out


def zeros(m: int, n: int) -> np.ndarray:
    out = np.empty((m, n), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def ones_row(n: int) -> np.ndarray:
    out = np.empty((1, n), dtype=object)
    out.fill(1)
    return out


def delta(n: int, i: int) -> np.ndarray:
    """The column vector delta_n^i (1-based ``i``) as an n x 1 matrix."""
    if not 1 <= i <= n:
        raise ValueError(f"delta index {i} outside 1..{n}")
    out = zeros(n, 1)
    out[i - 1, 0] = 1
    return out


def is_zero(a) -> bool:
    a = _dense(a)
    return all(x == 0 for x in a.flat)


def _integerize(a: np.ndarray) -> tuple[np.ndarray, int]:
    """Return (integer array, d) with ``a == ints / d``."""
    den = 1
    for x in a.flat:
        d = x.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    if den == 1:
        return a, 1
    ints = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        ints[idx] = x.numerator * (den // x.denominator)
    return ints, den


def matmul(a, b) -> np.ndarray:
    """Exact conventional matrix product.

    Both operands are rescaled to integer arrays over a common denominator
    first, so the inner loop only touches Python ints.
    """
    a, b = _dense(a), _dense(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch for product: {a.shape} x {b.shape}")
    ai, da = _integerize(a)
    bi, db = _integerize(b)
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    prod = ai @ bi
    den = da * db
    if den == 1:
        return prod
    out = np.empty(prod.shape, dtype=object)
    for idx, v in np.ndenumerate(prod):
        out[idx] = _normalize(Fraction(v, den))
    return out


def kron(a, b):
    """Kronecker product; stays in index form when both factors are logical."""
    if isinstance(a, Logical) and isinstance(b, Logical):
        return a.kron(b)
    a, b = _dense(a), _dense(b)
    return _normalize_array(np.kron(a, b)).astype(object)


@dataclass(frozen=True)
class Logical:
    """Logical matrix ``delta_m[i_1, ..., i_r]`` in compact index form.

    ``index[c]`` is the 1-based row holding the single 1 of column ``c``.
    """

    m: int
    index: tuple[int, ...]

    # make ``ndarray @ Logical`` dispatch to __rmatmul__
    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "index", tuple(int(i) for i in self.index))
        if self.m < 1:
            raise ValueError("logical matrix needs at least one row")
        if any(not 1 <= i <= self.m for i in self.index):
            raise ValueError(f"logical column index outside 1..{self.m}")

    @classmethod
    def identity(cls, n: int) -> "Logical":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def ones_row(cls, n: int) -> "Logical":
        """The 1 x n all-ones row, which is logical."""
        return cls(1, (1,) * n)

    @classmethod
    def from_dense(cls, a) -> "Logical":
        a = _dense(a)
        index = []
        for c in range(a.shape[1]):
            col = a[:, c]
            nz = [r for r in range(a.shape[0]) if col[r] != 0]
            if len(nz) != 1 or col[nz[0]] != 1:
                raise ValueError(f"column {c + 1} is not a column of an identity matrix")
            index.append(nz[0] + 1)
        return cls(a.shape[0], tuple(index))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, len(self.index))

    def dense(self) -> np.ndarray:
        out = zeros(self.m, len(self.index))
        for c, r in enumerate(self.index):
            out[r - 1, c] = 1
        return out

    def __array__(self, dtype=None, copy=None):
        out = self.dense()
        return out if dtype is None else out.astype(dtype)

    def is_permutation(self) -> bool:
        return len(self.index) == self.m and len(set(self.index)) == self.m

    @property
    def T(self) -> "Logical":
        if not self.is_permutation():
            raise ValueError("only permutation matrices have a logical transpose")
        inv = [0] * self.m
        for c, r in enumerate(self.index):
            inv[r - 1] = c + 1
        return Logical(self.m, tuple(inv))

    def kron(self, other: "Logical") -> "Logical":
        p = other.m
        return Logical(
            self.m * p,
            tuple((i - 1) * p + j for i in self.index for j in other.index),
        )

    def __matmul__(self, other):
        if isinstance(other, Logical):
            if self.shape[1] != other.m:
                raise ValueError(f"shape mismatch for product: {self.shape} x {other.shape}")
            return Logical(self.m, tuple(self.index[j - 1] for j in other.index))
        return matmul(self.dense(), other)

    def __rmatmul__(self, other):
        return _times_logical(_dense(other), self)

    def apply(self, col: int) -> int:
        """Row hit by column ``col`` (both 1-based): ``L delta^col = delta^row``."""
        return self.index[col - 1]

    def __repr__(self):
        return f"delta_{self.m}{list(self.index)}"


MatrixLike = Union[np.ndarray, Logical, Sequence]


def _dense(a) -> np.ndarray:
    if isinstance(a, Logical):
        return a.dense()
    if isinstance(a, np.ndarray) and a.dtype == object and a.ndim == 2:
        return a
    return rmatrix(a)


def _times_logical(a: np.ndarray, lg: Logical) -> np.ndarray:
    # column c of a @ L is column index[c] of a
    if a.shape[1] != lg.m:
        raise ValueError(f"shape mismatch for product: {a.shape} x {lg.shape}")
    return a[:, np.asarray(lg.index, dtype=np.intp) - 1]


def stp(a, b):
    """Left semi-tensor product ``(a (x) I_{t/n}) (b (x) I_{t/p})``, t = lcm(n, p).

    Reduces to the ordinary product when the inner dimensions agree.  The
    result is :class:`Logical` when both factors are.
    """
    a = a if isinstance(a, Logical) else _dense(a)
    b = b if isinstance(b, Logical) else _dense(b)
    n, p = a.shape[1], b.shape[0]
    t = math.lcm(n, p)
    ka, kb = t // n, t // p
    if isinstance(a, Logical):
        a2 = a.kron(Logical.identity(ka)) if ka > 1 else a
    else:
        a2 = kron(a, identity(ka)) if ka > 1 else a
    if isinstance(b, Logical):
        b2 = b.kron(Logical.identity(kb)) if kb > 1 else b
        if isinstance(a2, Logical):
            return a2 @ b2
        return _times_logical(a2, b2)
    b2 = kron(b, identity(kb)) if kb > 1 else b
    return matmul(a2, b2)


def stp_chain(factors: Iterable) -> object:
    """Left-to-right semi-tensor product of several factors."""
    return reduce(stp, factors)


def swap_matrix(m: int, n: int) -> Logical:
    """The swap matrix W_[m,n] with ``W (x |x y) = y |x x`` for x in R^m, y in R^n.

    ``swap_matrix(m, 1)`` and ``swap_matrix(1, m)`` are both ``I_m``.
    """
    if m < 1 or n < 1:
        raise ValueError("swap matrix dimensions must be positive")
    # column for delta_m^i |x delta_n^j holds delta_n^j |x delta_m^i
    return Logical(m * n, tuple((j - 1) * m + i for i in range(1, m + 1) for j in range(1, n + 1)))


def khatri_rao(a, b):
    """Column-wise semi-tensor product of two matrices with equal column count."""
    a = a if isinstance(a, Logical) else _dense(a)
    b = b if isinstance(b, Logical) else _dense(b)
    if a.shape[1] != b.shape[1]:
        raise ValueError(
            f"Khatri-Rao product needs equal column counts, got {a.shape[1]} and {b.shape[1]}"
        )
    if isinstance(a, Logical) and isinstance(b, Logical):
        q = b.m
        return Logical(a.m * q, tuple((i - 1) * q + j for i, j in zip(a.index, b.index)))
    a, b = _dense(a), _dense(b)
    cols = [kron(a[:, [c]], b[:, [c]]) for c in range(a.shape[1])]
    if not cols:
        return zeros(a.shape[0] * b.shape[0], 0)
    return np.hstack(cols)


def row_stack(a) -> np.ndarray:
    """V_R(A): the entries of ``a`` read row by row, as a column vector.

    For an m x n matrix, ``row_stack(a) == stp(swap_matrix(n, m), col_stack(a))``.
    """
    a = _dense(a)
    return a.reshape(-1, 1).copy()


def col_stack(a) -> np.ndarray:
    """V_C(A): the entries of ``a`` read column by column, as a column vector."""
    a = _dense(a)
    return a.T.reshape(-1, 1).copy()
