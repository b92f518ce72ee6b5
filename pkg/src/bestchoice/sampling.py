"""Uniform sampling of pattern-avoiding permutations and Monte Carlo play.

Random streams use numpy's Philox4x64 counter-based generator seeded through
``SeedSequence(seed, spawn_key=(stream_id,))``; the bit stream for a given
(seed, stream_id) is fixed across platforms, which makes every estimate here
reproducible from its parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import stats

from .dyck import DyckPath
from .exact import catalan
from .perms import Permutation, PatternId

ALGORITHM = "philox4x64"
CHUNK = 1 << 16


@dataclass
class RngStream:
    seed: int
    stream_id: int = 0
    algorithm: str = ALGORITHM
    position: int = 0  # number of sampling calls served
    _gen: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        if self.algorithm != ALGORITHM:
            raise ValueError(f"unsupported algorithm {self.algorithm!r}")
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        self._gen = np.random.Generator(np.random.Philox(seq))

    @property
    def generator(self) -> np.random.Generator:
        self.position += 1
        return self._gen


def randbelow(gen: np.random.Generator, n: int) -> int:
    """Exactly uniform integer in ``[0, n)`` for arbitrarily large ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bits = n.bit_length()
    words = -(-bits // 32)
    while True:
        chunks = gen.integers(0, 1 << 32, size=words, dtype=np.uint64)
        value = 0
        for c in chunks:
            value = (value << 32) | int(c)
        value >>= words * 32 - bits
        if value < n:
            return value


def dyck_batch(n: int, size: int, gen: np.random.Generator) -> np.ndarray:
    """``size`` uniform Dyck paths as rows of +1 (north) / -1 (east).

    Shuffle n+1 norths and n easts, rotate each row to start just after the
    last minimum of its prefix sums (the one rotation whose partial sums stay
    positive), then drop the leading north.
    """
    length = 2 * n + 1
    order = np.argsort(gen.random((size, length)), axis=1)
    steps = np.where(order <= n, 1, -1).astype(np.int8)
    sums = np.zeros((size, length), dtype=np.int64)
    np.cumsum(steps[:, :-1], axis=1, out=sums[:, 1:])
    start = length - 1 - np.argmin(sums[:, ::-1], axis=1)
    idx = (start[:, None] + np.arange(length)[None, :]) % length
    rotated = np.take_along_axis(steps, idx, axis=1)
    return rotated[:, 1:]


def dyck_rows_to_perms(steps: np.ndarray) -> np.ndarray:
    """Vectorized corner-labelling map from path rows to 321-avoider rows."""
    size, length = steps.shape
    n = length // 2
    north = steps == 1
    heights = np.cumsum(north, axis=1)
    rows, east_at = np.nonzero(~north)
    east_at = east_at.reshape(size, n)
    col_height = np.take_along_axis(heights, east_at, axis=1)
    corner = np.take_along_axis(north, east_at - 1, axis=1)
    perms = np.zeros((size, n), dtype=np.int64)
    perms[corner] = col_height[corner]
    used = np.zeros((size, n + 1), dtype=bool)
    r_idx, _ = np.nonzero(corner)
    used[r_idx, col_height[corner]] = True
    used[:, 0] = True
    # leftover values per row are ascending in row-major order, as are the
    # non-corner columns, and both have the same count per row
    perms[~corner] = np.nonzero(~used)[1]
    return perms


def sample_dyck_uniform(n: int, r: RngStream) -> DyckPath:
    if n < 1:
        raise ValueError("n must be >= 1")
    row = dyck_batch(n, 1, r.generator)[0]
    return DyckPath("".join("N" if s > 0 else "E" for s in row))


@lru_cache(maxsize=None)
def _split_weights(n: int) -> np.ndarray:
    # P(|L| = j) for n-avoider L n R: C_j C_{n-1-j} / C_n
    total = catalan(n)
    return np.array([float(Fraction(catalan(j) * catalan(n - 1 - j), total)) for j in range(n)])


def _split_exact(n: int, gen: np.random.Generator) -> int:
    r = randbelow(gen, catalan(n))
    for j in range(n):
        w = catalan(j) * catalan(n - 1 - j)
        if r < w:
            return j
        r -= w
    raise AssertionError("split weights do not sum to C_n")


def avoider_231_batch(n: int, size: int, gen: np.random.Generator, exact: bool = False) -> np.ndarray:
    """Uniform 231-avoiders: max placed after a uniform-weighted low block."""
    out = np.empty((size, n), dtype=np.int64)
    if n == 0 or size == 0:
        return out
    if exact:
        splits = np.array([_split_exact(n, gen) for _ in range(size)])
    else:
        splits = gen.choice(n, size=size, p=_split_weights(n))
    for j in np.unique(splits):
        j = int(j)
        rows = np.nonzero(splits == j)[0]
        out[rows, :j] = avoider_231_batch(j, len(rows), gen, exact)
        out[rows, j] = n
        out[rows, j + 1:] = avoider_231_batch(n - 1 - j, len(rows), gen, exact) + j
    return out


def avoider_batch(n: int, q: PatternId | str, size: int, gen: np.random.Generator,
                  exact: bool = False) -> np.ndarray:
    q = PatternId.parse(q)
    if n < 1:
        raise ValueError("n must be >= 1")
    if q is PatternId.P321:
        return dyck_rows_to_perms(dyck_batch(n, size, gen))
    return avoider_231_batch(n, size, gen, exact)


def sample_avoider(n: int, q: PatternId | str, r: RngStream, exact: bool = False) -> Permutation:
    return Permutation(avoider_batch(n, q, 1, r.generator, exact)[0].tolist())


def play_rows(perms: np.ndarray, k: int) -> np.ndarray:
    """Win mask of the k-positional strategy on each row."""
    size, n = perms.shape
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} outside 0..{n - 1}")
    best = perms[:, :k].max(axis=1) if k else np.zeros(size, dtype=perms.dtype)
    later = perms[:, k:]
    beats = later > best[:, None]
    first = np.argmax(beats, axis=1)
    hired = later[np.arange(size), first]
    return beats.any(axis=1) & (hired == n)


@dataclass(frozen=True)
class WinEstimate:
    trials: int
    wins: int

    def __post_init__(self):
        if not 0 <= self.wins <= self.trials:
            raise ValueError("need 0 <= wins <= trials")

    @property
    def p_hat(self) -> float:
        return self.wins / self.trials if self.trials else 0.0

    @property
    def stderr(self) -> float:
        if not self.trials:
            return 0.0
        p = self.p_hat
        return math.sqrt(p * (1 - p) / self.trials)

    def __add__(self, other: "WinEstimate") -> "WinEstimate":
        return WinEstimate(self.trials + other.trials, self.wins + other.wins)

    def to_dict(self) -> dict:
        return {"trials": self.trials, "wins": self.wins, "p_hat": self.p_hat, "stderr": self.stderr}


def estimate_win_rate(n: int, k: int, q: PatternId | str, trials: int, r: RngStream,
                      chunk: int = CHUNK) -> WinEstimate:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} outside 0..{n - 1}")
    wins = 0
    done = 0
    while done < trials:
        size = min(chunk, trials - done)
        wins += int(play_rows(avoider_batch(n, q, size, r.generator), k).sum())
        done += size
    return WinEstimate(trials, wins)


def estimate_win_rate_streams(n: int, k: int, q: PatternId | str, trials: int, seed: int,
                              streams: int = 1) -> WinEstimate:
    """Split ``trials`` over independent streams 0..streams-1 and merge the counts."""
    if streams < 1:
        raise ValueError("streams must be >= 1")
    share, extra = divmod(trials, streams)
    total = WinEstimate(0, 0)
    for sid in range(streams):
        t = share + (sid < extra)
        if t:
            total = total + estimate_win_rate(n, k, q, t, RngStream(seed, sid))
    return total


def avoider_frequencies(n: int, q: PatternId | str, samples: int, r: RngStream,
                        chunk: int = 1 << 18) -> dict[Permutation, int]:
    counts: dict[Permutation, int] = {}
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        batch = avoider_batch(n, q, size, r.generator)
        if n <= 15:
            # pack rows into integer codes; much faster than unique(axis=0)
            weights = (n + 1) ** np.arange(n, dtype=np.int64)
            codes, freq = np.unique(batch @ weights, return_counts=True)
            rows = (codes[:, None] // weights[None, :]) % (n + 1)
        else:
            rows, freq = np.unique(batch, axis=0, return_counts=True)
        for row, f in zip(rows, freq):
            p = Permutation(row.tolist())
            counts[p] = counts.get(p, 0) + int(f)
        done += size
    return counts


def uniformity_pvalue(counts: dict, support) -> float:
    """Chi-square p-value of ``counts`` against the uniform law on ``support``."""
    support = list(support)
    observed = np.array([counts.get(s, 0) for s in support], dtype=float)
    if sum(counts.values()) != observed.sum():
        return 0.0  # mass outside the support
    if len(support) == 1:
        return 1.0
    return float(stats.chisquare(observed).pvalue)
