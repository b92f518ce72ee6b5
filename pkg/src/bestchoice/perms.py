"""Permutations, size-3 pattern containment, and positional play.

Permutations are written in one-line notation with values 1..N.  Positions
are 1-based throughout, so a strategy parameter ``k`` means "reject the first
``k`` candidates".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple


class Permutation(tuple):
    """An immutable permutation of 1..N, validated on construction."""

    def __new__(cls, values: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in values))
        n = len(self)
        if n < 1:
            raise ValueError("a permutation needs at least one entry")
        if sorted(self) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {tuple(self)}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"574239618"`` or ``"5 7 4 2 3 9 6 1 8"`` / ``"5,7,4"``."""
        text = text.strip()
        if any(sep in text for sep in " ,"):
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            return cls(int(x) for x in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


class PatternId(enum.Enum):
    P321 = (3, 2, 1)
    P231 = (2, 3, 1)

    @classmethod
    def parse(cls, text: "str | PatternId") -> "PatternId":
        if isinstance(text, PatternId):
            return text
        key = str(text).upper().lstrip("P")
        for member in cls:
            if member.name[1:] == key:
                return member
        raise ValueError(f"unknown pattern {text!r}; expected 321 or 231")

    def __str__(self) -> str:
        return self.name[1:]


class LrMax(NamedTuple):
    position: int
    value: int


@dataclass(frozen=True)
class StrategyOutcome:
    hired_position: int | None
    hired_value: int | None
    win: bool


def standardize(values: Iterable[int]) -> tuple[int, ...]:
    """Relative order of ``values`` as a permutation of 1..len(values)."""
    values = tuple(values)
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


def contains_pattern_scan(p: Iterable[int], q: PatternId | tuple) -> bool:
    """Triple scan over all index triples; works for any size-3 pattern."""
    target = q.value if isinstance(q, PatternId) else tuple(q)
    return any(standardize(t) == target for t in combinations(tuple(p), 3))


def _contains_321(p) -> bool:
    # 321-avoiding iff the entries that are not LR maxima increase
    top = 0
    last_small = 0
    for x in p:
        if x > top:
            top = x
        elif x < last_small:
            return True
        else:
            last_small = x
    return False


def _contains_231(p) -> bool:
    # stack-sortability: a popped value exceeding a later entry is the "2" of a 231
    stack: list[int] = []
    floor = 0
    for x in p:
        if x < floor:
            return True
        while stack and stack[-1] < x:
            floor = max(floor, stack.pop())
        stack.append(x)
    return False


_FAST = {PatternId.P321: _contains_321, PatternId.P231: _contains_231}


def contains_pattern(p: Iterable[int], q: PatternId) -> bool:
    """True iff ``p`` has a subsequence order-isomorphic to ``q``."""
    q = PatternId.parse(q)
    return _FAST[q](tuple(p))


def avoids(p: Iterable[int], q: PatternId) -> bool:
    return not contains_pattern(p, q)


def left_to_right_maxima(p: Iterable[int]) -> list[LrMax]:
    out = []
    top = 0
    for pos, x in enumerate(p, start=1):
        if x > top:
            out.append(LrMax(pos, x))
            top = x
    return out


def _check_k(p, k: int) -> None:
    if not 0 <= k <= len(p) - 1:
        raise ValueError(f"k={k} outside 0..{len(p) - 1}")


def play_positional(p: Iterable[int], k: int) -> StrategyOutcome:
    """Reject the first ``k`` candidates, then hire the next LR maximum.

    If no LR maximum appears after position ``k`` nobody is hired and the game
    is lost.
    """
    p = tuple(p)
    _check_k(p, k)
    best_seen = max(p[:k], default=0)
    for pos in range(k, len(p)):
        if p[pos] > best_seen:
            return StrategyOutcome(pos + 1, p[pos], p[pos] == len(p))
    return StrategyOutcome(None, None, False)


def is_k_winnable(p: Iterable[int], k: int) -> bool:
    return play_positional(p, k).win


def winnable_interval(p: Iterable[int]) -> tuple[int, int]:
    """Half-open range ``[lo, hi)`` of the k values that win on ``p``."""
    maxima = left_to_right_maxima(p)
    hi = maxima[-1].position
    lo = maxima[-2].position if len(maxima) > 1 else 0
    return lo, hi


def prefix_signature(p: Iterable[int]) -> list[Permutation]:
    """What the interviewer sees after each candidate: the prefix's relative order."""
    p = tuple(p)
    return [Permutation(standardize(p[:j])) for j in range(1, len(p) + 1)]
