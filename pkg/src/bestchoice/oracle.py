"""Exhaustive ground truth at small N.

Two enumeration backends:

``filter``
    Every permutation of 1..N is considered; prefixes are extended one entry
    at a time and dropped as soon as the new entry completes a pattern
    occurrence (checked against all earlier pairs).  Containment is inherited
    by extensions, so this visits exactly the N! filter's survivors.
``catalan``
    Direct structural generation: Dyck-path images for 321, and the
    ``L N R`` decomposition (everything in L below everything in R) for 231.
``scan``
    The literal N! scan with the triple-scan containment test; slow, used to
    validate the other two.
"""

from __future__ import annotations

import json
import os
from itertools import permutations
from pathlib import Path
from typing import Iterator

from .dyck import enumerate_dyck, perm_from_dyck
from .models import extend_231
from .perms import Permutation, PatternId, contains_pattern, contains_pattern_scan, is_k_winnable

FILTER_BOUND = 10
FILTER_BOUND_OPT_IN = 12
CATALAN_BOUND = 16
SCAN_BOUND = 9
CACHE_ENV = "BESTCHOICE_CACHE_DIR"
CACHE_VERSION = 1


def _check_bound(n: int, backend: str, allow_large: bool) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    limit = {
        "filter": FILTER_BOUND_OPT_IN if allow_large else FILTER_BOUND,
        "catalan": CATALAN_BOUND,
        "scan": SCAN_BOUND,
    }.get(backend)
    if limit is None:
        raise ValueError(f"unknown backend {backend!r}")
    if n > limit:
        raise OverflowError(f"N={n} exceeds the {backend} enumeration bound {limit}")


def _filter_avoiders(n: int, target: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []
    unused = set(range(1, n + 1))
    # order-isomorphism to target <=> same pairwise comparisons
    t1, t2, t3 = target
    want = (t1 < t2, t1 < t3, t2 < t3)

    def completes_pattern(x: int) -> bool:
        m = len(prefix)
        for a in range(m):
            pa = prefix[a]
            for b in range(a + 1, m):
                pb = prefix[b]
                if (pa < pb, pa < x, pb < x) == want:
                    return True
        return False

    def extend():
        if not unused:
            yield tuple(prefix)
            return
        for x in sorted(unused):
            if completes_pattern(x):
                continue
            prefix.append(x)
            unused.discard(x)
            yield from extend()
            unused.add(x)
            prefix.pop()

    yield from extend()


def _avoiders_231(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # values sorted ascending; max goes between a low block and a high block
    if not values:
        yield ()
        return
    top, rest = values[-1], values[:-1]
    for j in range(len(rest) + 1):
        for left in _avoiders_231(rest[:j]):
            for right in _avoiders_231(rest[j:]):
                yield left + (top,) + right


def enumerate_avoiders(n: int, q: PatternId | str, backend: str = "filter",
                       allow_large: bool = False) -> Iterator[Permutation]:
    q = PatternId.parse(q)
    _check_bound(n, backend, allow_large)
    if backend == "filter":
        source = _filter_avoiders(n, q.value)
    elif backend == "scan":
        source = (p for p in permutations(range(1, n + 1)) if not contains_pattern_scan(p, q))
    elif q is PatternId.P321:
        source = (perm_from_dyck(d) for d in enumerate_dyck(n, bound=CATALAN_BOUND))
    else:
        source = _avoiders_231(tuple(range(1, n + 1)))
    for p in source:
        yield Permutation(p)


def brute_count_winnable(n: int, k: int, q: PatternId | str, backend: str = "filter") -> int:
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} outside 0..{n - 1}")
    return sum(1 for p in enumerate_avoiders(n, q, backend) if is_k_winnable(p, k))


def brute_count_row(n: int, q: PatternId | str, backend: str = "filter") -> list[int]:
    """Counts for every ``k = 0..n-1`` from a single pass over the avoiders."""
    row = [0] * n
    for p in enumerate_avoiders(n, q, backend):
        for k in range(n):
            if is_k_winnable(p, k):
                row[k] += 1
    return row


def _cache_path(n: int, q: PatternId, backend: str, cache_dir: str | os.PathLike | None) -> Path | None:
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if not cache_dir:
        return None
    return Path(cache_dir) / f"row-v{CACHE_VERSION}-{q}-{backend}-{n}.json"


def cached_count_row(n: int, q: PatternId | str, backend: str = "filter",
                     cache_dir: str | os.PathLike | None = None) -> list[int]:
    """:func:`brute_count_row`, memoized on disk when a cache directory is set."""
    q = PatternId.parse(q)
    path = _cache_path(n, q, backend, cache_dir)
    if path is not None and path.exists():
        return [int(x) for x in json.loads(path.read_text())["row"]]
    row = brute_count_row(n, q, backend)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"N": n, "pattern": str(q), "backend": backend, "version": CACHE_VERSION,
                   "row": [str(x) for x in row]}
        path.write_text(json.dumps(payload, sort_keys=True))
    return row


def brute_count_grid(n_min: int, n_max: int, q: PatternId | str, backend: str = "filter",
                     cache_dir=None) -> dict[tuple[int, int], int]:
    """Map ``(N, k)`` to the brute-force count, all k in ``0..N-1``."""
    grid = {}
    for n in range(n_min, n_max + 1):
        for k, c in enumerate(cached_count_row(n, q, backend, cache_dir)):
            grid[n, k] = c
    return grid


def verify_unique_extension(n: int) -> bool:
    """Every 231-avoider of size N-1 has exactly one k-winnable 231-avoiding
    extension for each k, and :func:`extend_231` finds it."""
    if n < 2 or n > 11:
        raise ValueError("verify_unique_extension supports 2 <= N <= 11")
    for base in enumerate_avoiders(n - 1, PatternId.P231):
        base = tuple(base)
        extensions = [base[:pos] + (n,) + base[pos:] for pos in range(n)]
        for k in range(n):
            good = [q for q in extensions
                    if not contains_pattern(q, PatternId.P231) and is_k_winnable(q, k)]
            if len(good) != 1 or good[0] != extend_231(base, k):
                return False
    return True

