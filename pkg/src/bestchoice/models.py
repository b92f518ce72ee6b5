"""The two filtered game models and their optimal positional strategies.

``MODEL_231`` restricts interview orders to 231-avoiders (every improvement
raises the bar for all later candidates); ``MODEL_321`` restricts them to
321-avoiders (no candidate is worse than an earlier disappointment).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import CatalanCombo, ExactProb, S_combo, catalan, winnable_counts_321
from .perms import Permutation, PatternId, contains_pattern


class ModelId(enum.Enum):
    MODEL_231 = PatternId.P231
    MODEL_321 = PatternId.P321

    @classmethod
    def parse(cls, text: "str | ModelId | PatternId") -> "ModelId":
        if isinstance(text, ModelId):
            return text
        pattern = PatternId.parse(text if isinstance(text, PatternId) else str(text).replace("MODEL_", ""))
        return cls(pattern)


@dataclass(frozen=True)
class OptimalStrategy:
    n: int
    k_star: int
    win_prob: ExactProb
    ties: tuple[int, ...] = field(default=())

    def as_record(self) -> dict:
        return {
            "N": self.n,
            "k_star": self.k_star,
            "ties": list(self.ties),
            "prob_num": str(self.win_prob.numerator),
            "prob_den": str(self.win_prob.denominator),
            "prob_float": self.win_prob.float_view,
        }


def extend_231(p, k: int) -> Permutation:
    """The unique k-winnable 231-avoiding extension of ``p`` by the value N.

    N goes directly before the first entry after position k that beats the
    best of the first k entries (or at the end if there is none).
    """
    p = tuple(p)
    n = len(p) + 1
    if p:
        Permutation(p)
    if contains_pattern(p, PatternId.P231):
        raise ValueError(f"{p} contains 231")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} outside 0..{n - 1}")
    best = max(p[:k], default=0)
    w = next((i for i in range(k, len(p)) if p[i] > best), len(p))
    return Permutation(p[:w] + (n,) + p[w:])


def winnable_count_231(n: int, k: int = 0) -> int:
    """C_{N-1}, whatever k is."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} outside 0..{n - 1}")
    return catalan(n - 1)


def win_probability_231(n: int) -> ExactProb:
    if n < 1:
        raise ValueError("n must be >= 1")
    return ExactProb(catalan(n - 1), catalan(n))


def optimal_k_321(n: int) -> OptimalStrategy:
    """Argmax over k = 0..N-1 of the exact 321 win count.

    All maximizers are reported in ``ties``.  ``k_star`` is the smallest tied
    k >= 1; k = 0 is chosen only if it is the sole maximizer (at N = 2 it ties
    with k = 1, both winning on exactly one of 12 and 21).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    counts = winnable_counts_321(n)
    best = max(counts)
    ties = tuple(k for k, c in enumerate(counts) if c == best)
    k_star = next((k for k in ties if k >= 1), ties[0])
    return OptimalStrategy(n, k_star, ExactProb(best, catalan(n)), ties)


def expected_optimal_k_321(n: int) -> int:
    """Closed piecewise law for the optimal k."""
    if n == 2:
        return 1
    if 3 <= n <= 8:
        return n - 2
    return n - 3


def limit_of_combo(x: CatalanCombo) -> Fraction:
    """Limit of ``eval_combo(x, N) / C_N``: each ``C_{N-j}/C_N`` tends to ``4**-j``."""
    return sum((Fraction(c, 4**j) for j, c in x), Fraction(0))


def asymptotic_success(model: ModelId | str) -> Fraction:
    model = ModelId.parse(model)
    if model is ModelId.MODEL_231:
        return limit_of_combo(CatalanCombo({1: 1}))
    return limit_of_combo(S_combo(3))


@dataclass
class DominanceReport:
    n_max: int
    checked: int
    violation: tuple[int, int, int, int] | None  # (N, i, S_3(N), S_i(N))

    @property
    def ok(self) -> bool:
        return self.violation is None


def dominance_check_321(n_max: int, n_min: int = 9) -> DominanceReport:
    """Exact check that S_3(N) beats every S_i(N), i >= 4, for n_min <= N <= n_max."""
    if n_max < 9:
        raise ValueError("n_max must be >= 9")
    checked = 0
    for n in range(n_min, n_max + 1):
        counts = winnable_counts_321(n)
        s3 = counts[n - 3]
        for i in range(4, n):
            checked += 1
            if not s3 > counts[n - i]:
                return DominanceReport(n_max, checked, (n, i, s3, counts[n - i]))
    return DominanceReport(n_max, checked, None)
