"""Dyck paths, northeast corners, and the 321-avoider bijection.

A path of size N is a string of ``N`` (north) and ``E`` (east) steps from
(0,0) to (N,N) that never dips below the diagonal.  A northeast corner is an
``NE`` pair, labelled (column, height) at the end of its east step.  Corner
labels are exactly the (position, value) pairs of the left-to-right maxima of
the matching 321-avoiding permutation.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .perms import Permutation, PatternId, contains_pattern, left_to_right_maxima

NORTH = "N"
EAST = "E"

ENUMERATION_BOUND = 14

Corner = tuple[int, int]


class DyckPath(str):
    """Step string over {N, E}; every prefix has at least as many N as E."""

    def __new__(cls, steps: str | Iterable[str]):
        if not isinstance(steps, str):
            steps = "".join(steps)
        steps = steps.strip().upper()
        height = 0
        for s in steps:
            if s == NORTH:
                height += 1
            elif s == EAST:
                height -= 1
            else:
                raise ValueError(f"bad step {s!r} in {steps!r}")
            if height < 0:
                raise ValueError(f"path {steps!r} dips below the diagonal")
        if height != 0 or not steps:
            raise ValueError(f"path {steps!r} does not end on the diagonal")
        return super().__new__(cls, steps)

    @property
    def n(self) -> int:
        return len(self) // 2

    def __repr__(self) -> str:
        return f"DyckPath({str(self)!r})"


def ne_corners(d: str) -> list[Corner]:
    corners = []
    norths = easts = 0
    for step, nxt in zip(d, d[1:] + " "):
        if step == NORTH:
            norths += 1
            if nxt == EAST:
                corners.append((easts + 1, norths))
        else:
            easts += 1
    return corners


def check_corners(corners: Sequence[Corner], n: int) -> None:
    """Raise ValueError unless ``corners`` is the corner set of some size-n path."""
    if not corners:
        raise ValueError("a corner set is never empty")
    if corners[0][0] != 1:
        raise ValueError("first corner must be in column 1")
    if corners[-1][1] != n:
        raise ValueError(f"last corner must reach height {n}")
    prev_col, prev_h = 0, 0
    for col, h in corners:
        if col <= prev_col or h <= prev_h:
            raise ValueError(f"corners not strictly increasing at {(col, h)}")
        if col > h:
            raise ValueError(f"corner {(col, h)} lies below the diagonal")
        # easts taken since the previous corner cannot pass its height
        if col - 1 > prev_h and prev_col:
            raise ValueError(f"corner {(col, h)} unreachable after height {prev_h}")
        prev_col, prev_h = col, h


def dyck_from_corners(corners: Sequence[Corner], n: int) -> DyckPath:
    corners = [tuple(c) for c in corners]
    check_corners(corners, n)
    steps = []
    norths = easts = 0
    for col, h in corners:
        steps.append(EAST * (col - 1 - easts))
        steps.append(NORTH * (h - norths))
        steps.append(EAST)
        norths, easts = h, col
    steps.append(EAST * (n - easts))
    return DyckPath("".join(steps))


def perm_from_corners(corners: Sequence[Corner], n: int) -> Permutation:
    """Put each corner height at its column, fill the rest increasingly."""
    values = [0] * n
    for col, h in corners:
        values[col - 1] = h
    used = {h for _, h in corners}
    rest = iter(v for v in range(1, n + 1) if v not in used)
    return Permutation(v or next(rest) for v in values)


def perm_from_dyck(d: str) -> Permutation:
    d = DyckPath(d)
    return perm_from_corners(ne_corners(d), d.n)


def dyck_from_perm(p: Sequence[int]) -> DyckPath:
    if contains_pattern(p, PatternId.P321):
        raise ValueError(f"{p} contains 321; it is not determined by its maxima")
    return dyck_from_corners([tuple(m) for m in left_to_right_maxima(p)], len(p))


def count_partial_paths(a: int, b: int) -> int:
    """Lattice paths (0,0) -> (a,b) staying weakly above y = x (ballot numbers)."""
    if a < 0 or a > b:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    return math.comb(a + b, a) * (b - a + 1) // (b + 1)


def enumerate_dyck(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[DyckPath]:
    """All size-n paths in lexicographic order (N before E)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise OverflowError(f"refusing to enumerate C_{n} paths (bound {bound})")

    def walk(prefix: list[str], norths: int, easts: int):
        if easts == n:
            yield DyckPath("".join(prefix))
            return
        if norths < n:
            prefix.append(NORTH)
            yield from walk(prefix, norths + 1, easts)
            prefix.pop()
        if easts < norths:
            prefix.append(EAST)
            yield from walk(prefix, norths, easts + 1)
            prefix.pop()

    yield from walk([], 0, 0)
