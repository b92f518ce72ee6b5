"""Exact Catalan arithmetic for k-winnable 321-avoiding permutations.

Notation used in this module, all for a fixed size N:

* ``T_i(N)``: partial Dyck paths from (0,0) to (N-1-i, N-1).
* ``S_i(N)``: Dyck paths whose column N-i lies weakly right of the
  next-to-last corner and strictly left of the last corner, i.e. the number of
  (N-i)-winnable 321-avoiding permutations.

Both satisfy linear recurrences in which the only N-dependence is a shift
``N -> N-1`` (``delta``), so each is an integer combination of
``C_{N-1}, C_{N-2}, ...``; :class:`CatalanCombo` holds such combinations.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .dyck import count_partial_paths

COMBO_MEMO_LIMIT = 64
EXACT_RATIO_LIMIT = 5000


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan({n}) undefined")
    return math.comb(2 * n, n) // (n + 1)


class CatalanCombo:
    """Symbolic ``sum_j c_j * C_{N-j}`` keyed by shift ``j``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for j, c in items:
            if j < 0:
                raise ValueError(f"negative shift {j}")
            clean[j] = clean.get(j, 0) + int(c)
        self._coeffs = {j: c for j, c in sorted(clean.items()) if c}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    @property
    def max_shift(self) -> int:
        return max(self._coeffs, default=0)

    def delta(self) -> "CatalanCombo":
        return CatalanCombo({j + 1: c for j, c in self._coeffs.items()})

    def __add__(self, other: "CatalanCombo") -> "CatalanCombo":
        return CatalanCombo(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self) -> "CatalanCombo":
        return CatalanCombo({j: -c for j, c in self._coeffs.items()})

    def __sub__(self, other: "CatalanCombo") -> "CatalanCombo":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "CatalanCombo":
        return CatalanCombo({j: scalar * c for j, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._coeffs == CatalanCombo(other)._coeffs
        return isinstance(other, CatalanCombo) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __iter__(self):
        return iter(self._coeffs.items())

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for j, c in self._coeffs.items():
            term = f"C[N-{j}]" if j else "C[N]"
            mag = abs(c)
            body = term if mag == 1 else f"{mag}*{term}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        return text + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self) -> str:
        return f"CatalanCombo({self._coeffs})"


def delta(x: CatalanCombo) -> CatalanCombo:
    return x.delta()


_combo_lock = threading.Lock()
_T_COMBOS: list[CatalanCombo] = [CatalanCombo(), CatalanCombo({1: 1}), CatalanCombo({1: 1, 2: -1})]
_S_COMBOS: list[CatalanCombo] = [CatalanCombo(), CatalanCombo({1: 1})]


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if i > COMBO_MEMO_LIMIT:
        raise ValueError(f"symbolic forms are kept only up to index {COMBO_MEMO_LIMIT}")


def T_combo(i: int) -> CatalanCombo:
    """``T_i = T_{i-1} - delta T_{i-2}`` from ``T_1 = C_{N-1}``, ``T_2 = C_{N-1} - C_{N-2}``."""
    _check_index(i)
    with _combo_lock:
        while len(_T_COMBOS) <= i:
            m = len(_T_COMBOS)
            _T_COMBOS.append(_T_COMBOS[m - 1] - _T_COMBOS[m - 2].delta())
    return _T_COMBOS[i]


def S_combo(i: int) -> CatalanCombo:
    """``S_i = i T_i + delta S_{i-1}`` from ``S_1 = C_{N-1}``."""
    _check_index(i)
    for m in range(2, i + 1):
        T_combo(m)
    with _combo_lock:
        while len(_S_COMBOS) <= i:
            m = len(_S_COMBOS)
            _S_COMBOS.append(m * _T_COMBOS[m] + _S_COMBOS[m - 1].delta())
    return _S_COMBOS[i]


def eval_combo(x: CatalanCombo, n: int) -> int:
    if x.max_shift > n:
        raise ValueError(f"combination needs C_{{N-{x.max_shift}}}, undefined at N={n}")
    return sum(c * catalan(n - j) for j, c in x)


def T_closed(i: int, n: int) -> int:
    """Catalan-triangle entry ``(i+1)/N * binom(2(N-1)-i, N-1)``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= N-1, got i={i}, N={n}")
    return (i + 1) * math.comb(2 * (n - 1) - i, n - 1) // n


def S_closed(k: int, n: int) -> int:
    """Number of k-winnable 321-avoiding permutations of size n.

    Sums over the point (k-1, b) where the path crosses column k-1, for
    ``b = k .. n-1``; each such partial path completes in ``b-k+1`` winnable ways.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= N-1, got k={k}, N={n}")
    return sum(count_partial_paths(k - 1, b) * (b - k + 1) for b in range(k, n))


@lru_cache(maxsize=None)
def _s_row(n: int) -> tuple[int, ...]:
    # S_i(n) for i = 0..n-1 via S_i(N) = i*T_i(N) + S_{i-1}(N-1); index 0 unused
    if n < 2:
        return (0,)
    prev = _s_row(n - 1)
    row = [0, catalan(n - 1)]
    for i in range(2, n):
        row.append(i * T_closed(i, n) + prev[i - 1])
    return tuple(row)


def winnable_counts_321(n: int) -> list[int]:
    """Exact k-winnable 321-avoider counts for ``k = 0..n-1``.

    Built from the integer recurrence, row by row, so it stays cheap for a
    few hundred N.  ``k = 0`` wins only on ``N 1 2 ... N-1``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [1]
    for m in range(2, n):
        _s_row(m)
    row = _s_row(n)
    return [1] + [row[n - k] for k in range(1, n)]


def catalan_ratio(j: int, n: int) -> float:
    """``C_{N-j} / C_N`` as a float, via a telescoping product.

    Uses ``C_{m-1}/C_m = (m+1) / (2(2m-1))`` so nothing large is formed.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= N, got j={j}, N={n}")
    ratio = 1.0
    for m in range(n, n - j, -1):
        ratio *= (m + 1) / (2.0 * (2 * m - 1))
    return ratio


def catalan_ratio_exact(j: int, n: int) -> Fraction:
    if n > EXACT_RATIO_LIMIT:
        raise ValueError(f"exact ratios are limited to N <= {EXACT_RATIO_LIMIT}")
    return Fraction(catalan(n - j), catalan(n))


@dataclass(frozen=True)
class ExactProb:
    """Unreduced ``numerator/denominator`` with a float view."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if not 0 <= self.numerator <= self.denominator:
            raise ValueError(f"{self.numerator}/{self.denominator} is not a probability")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def float_view(self) -> float:
        return self.numerator / self.denominator

    @property
    def percent(self) -> float:
        return 100 * self.numerator / self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def win_probability_321(k: int, n: int) -> ExactProb:
    if n < 2 or not 0 <= k <= n - 1:
        raise ValueError(f"need N >= 2 and 0 <= k <= N-1, got k={k}, N={n}")
    count = 1 if k == 0 else S_closed(k, n)
    return ExactProb(count, catalan(n))


def win_fraction_321(k: int, n: int) -> float:
    """Float win probability for large N (ratio mode).

    For ``N-k`` within the symbolic range this is ``sum_j c_j C_{N-j}/C_N``
    with product-form ratios; otherwise it falls back to exact counts.
    """
    if n < 2 or not 0 <= k <= n - 1:
        raise ValueError(f"need N >= 2 and 0 <= k <= N-1, got k={k}, N={n}")
    i = n - k
    if k >= 1 and i <= COMBO_MEMO_LIMIT:
        return sum(c * catalan_ratio(j, n) for j, c in S_combo(i))
    if n > EXACT_RATIO_LIMIT:
        raise ValueError(f"N={n}, k={k} is beyond both ratio mode and exact mode")
    return win_probability_321(k, n).float_view


# figure layout: columns k - N = -11 .. -1
TABLE_OFFSETS = tuple(range(-11, 0))


@dataclass(frozen=True)
class WinCell:
    n: int
    k: int
    count: int | None  # None for ratio-mode rows
    total: int | None
    probability: float

    @property
    def percent(self) -> float:
        return 100.0 * self.probability

    @property
    def exact(self) -> ExactProb | None:
        if self.count is None:
            return None
        return ExactProb(self.count, self.total)


@dataclass
class WinTable:
    """Rows of k-winnable counts keyed by N, cells keyed by ``k - N``."""

    rows: dict[int, dict[int, WinCell]]
    offsets: tuple[int, ...] = TABLE_OFFSETS

    @property
    def sizes(self) -> list[int]:
        return sorted(self.rows)

    def cell(self, n: int, offset: int) -> WinCell | None:
        return self.rows.get(n, {}).get(offset)

    def row_argmax(self, n: int) -> int | None:
        """Offset of the row maximum (smallest k on ties)."""
        row = self.rows[n]
        if not row:
            return None
        best = max(row.values(), key=lambda c: (c.count if c.count is not None else c.probability, -c.k))
        return best.k - n


def win_row(n: int, offsets: Iterable[int] = TABLE_OFFSETS, ratio_mode: bool | None = None) -> dict[int, WinCell]:
    if ratio_mode is None:
        ratio_mode = n > EXACT_RATIO_LIMIT
    cells = {}
    total = None if ratio_mode else catalan(n)
    for off in offsets:
        k = n + off
        if not 1 <= k <= n - 1:
            continue
        if ratio_mode:
            cells[off] = WinCell(n, k, None, None, win_fraction_321(k, n))
        else:
            count = S_closed(k, n)
            cells[off] = WinCell(n, k, count, total, count / total)
    return cells


def win_table(n_max: int, n_min: int = 2, extra_sizes: Iterable[int] = (),
              offsets: Iterable[int] = TABLE_OFFSETS) -> WinTable:
    if n_max < 2 or n_min < 2 or n_min > n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    offsets = tuple(offsets)
    rows = {n: win_row(n, offsets) for n in range(n_min, n_max + 1)}
    for n in extra_sizes:
        rows[n] = win_row(n, offsets)
    return WinTable(rows, offsets)
