"""Cross-module consistency checks run by ``bestchoice verify``.

Each check returns ``None`` on success or a short counterexample string.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator

from .dyck import count_partial_paths, dyck_from_perm, enumerate_dyck, ne_corners, perm_from_dyck
from .exact import S_closed, S_combo, T_closed, T_combo, catalan, eval_combo
from .models import (
    ModelId,
    asymptotic_success,
    dominance_check_321,
    expected_optimal_k_321,
    limit_of_combo,
    optimal_k_321,
)
from .oracle import cached_count_row, enumerate_avoiders, verify_unique_extension
from .perms import (
    PatternId,
    contains_pattern,
    contains_pattern_scan,
    is_k_winnable,
    left_to_right_maxima,
    winnable_interval,
)

Check = Callable[[], "str | None"]


def check_containment(n_max: int) -> str | None:
    for n in range(1, min(n_max, 8) + 1):
        for p in permutations(range(1, n + 1)):
            for q in PatternId:
                if contains_pattern(p, q) != contains_pattern_scan(p, q):
                    return f"containment of {q} disagrees on {p}"
    return None


def check_play_vs_interval(n_max: int) -> str | None:
    for n in range(1, min(n_max, 8) + 1):
        for p in permutations(range(1, n + 1)):
            lo, hi = winnable_interval(p)
            for k in range(n):
                if is_k_winnable(p, k) != (lo <= k < hi):
                    return f"play and interval disagree on {p}, k={k}"
    return None


def check_backends(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        for q in PatternId:
            filtered = set(enumerate_avoiders(n, q, "filter"))
            structural = list(enumerate_avoiders(n, q, "catalan"))
            if len(filtered) != catalan(n):
                return f"{len(filtered)} {q}-avoiders of size {n}, expected C_{n}={catalan(n)}"
            if len(structural) != len(set(structural)) or set(structural) != filtered:
                return f"filter and catalan backends disagree for {q}, N={n}"
    return None


def check_brute_321(n_max: int) -> str | None:
    for n in range(2, n_max + 1):
        row = cached_count_row(n, PatternId.P321)
        if row[0] != 1:
            return f"N={n}, k=0: brute {row[0]} != 1"
        for k in range(1, n):
            if row[k] != S_closed(k, n):
                return f"N={n}, k={k}: brute {row[k]} != closed form {S_closed(k, n)}"
    return None


def check_brute_231(n_max: int) -> str | None:
    for n in range(2, n_max + 1):
        row = cached_count_row(n, PatternId.P231)
        for k, c in enumerate(row):
            if c != catalan(n - 1):
                return f"N={n}, k={k}: {c} winnable 231-avoiders, expected C_{n - 1}"
    return None


def check_unique_extension(n_max: int) -> str | None:
    for n in range(2, min(n_max, 11) + 1):
        if not verify_unique_extension(n):
            return f"unique-extension property fails at N={n}"
    return None


def check_dyck_roundtrip(n_max: int) -> str | None:
    for n in range(1, min(n_max, 8) + 1):
        for d in enumerate_dyck(n):
            p = perm_from_dyck(d)
            if contains_pattern(p, PatternId.P321) or dyck_from_perm(p) != d:
                return f"roundtrip fails for {d} -> {p}"
            if ne_corners(d) != [tuple(m) for m in left_to_right_maxima(p)]:
                return f"corners of {d} are not the maxima of {p}"
    return None


def check_forms(n_max: int = 29) -> str | None:
    for n in range(2, n_max + 1):
        for i in range(1, n):
            t = T_closed(i, n)
            if not t == eval_combo(T_combo(i), n) == count_partial_paths(n - 1 - i, n - 1):
                return f"T_{i}({n}) forms disagree"
            if S_closed(n - i, n) != eval_combo(S_combo(i), n):
                return f"S_{i}({n}) forms disagree"
    return None


def check_optimal_k(n_max: int = 200) -> str | None:
    for n in range(2, n_max + 1):
        best = optimal_k_321(n)
        if best.k_star != expected_optimal_k_321(n):
            return f"N={n}: optimal k {best.k_star}, piecewise law says {expected_optimal_k_321(n)}"
    report = dominance_check_321(max(n_max, 9))
    if not report.ok:
        n, i, s3, si = report.violation
        return f"S_3({n}) = {s3} does not beat S_{i}({n}) = {si}"
    return None


def check_limits() -> str | None:
    if limit_of_combo(S_combo(3)) != Fraction(31, 64):
        return f"limit of S_3/C_N is {limit_of_combo(S_combo(3))}"
    if asymptotic_success(ModelId.MODEL_231) != Fraction(1, 4):
        return "231 limit is not 1/4"
    return None


def check_bounds(n_ratio: int = 2000, n_t: int = 200) -> str | None:
    for n in range(5, n_ratio + 1):
        r = Fraction(catalan(n - 1), catalan(n))
        if not (Fraction(1, 4) < r <= Fraction(1, 3)) or (r == Fraction(1, 3)) != (n == 5):
            return f"C_{n - 1}/C_{n} = {r} breaks (1/4, 1/3]"
    for n in range(6, n_t + 1):
        counts = [T_closed(i, n) for i in range(1, n)]
        if any(a <= b for a, b in zip(counts, counts[1:])):
            return f"T_i({n}) not strictly decreasing"
        for i in range(1, n - 4):
            if Fraction(counts[i - 1], catalan(n)) > Fraction(1, 3) * Fraction(3, 4) ** (i - 1):
                return f"T_{i}({n})/C_{n} exceeds (1/3)(3/4)^{i - 1}"
    return None


def checks(n_max: int = 10) -> list[tuple[str, Check]]:
    return [
        ("pattern containment: linear test matches triple scan", lambda: check_containment(n_max)),
        ("k-winnable by play matches maxima interval", lambda: check_play_vs_interval(n_max)),
        ("filter and catalan enumerations agree, counts are Catalan", lambda: check_backends(n_max)),
        ("brute 321 counts match closed form", lambda: check_brute_321(n_max)),
        ("brute 231 counts equal C_{N-1} for every k", lambda: check_brute_231(n_max)),
        ("231 extension is unique and constructive", lambda: check_unique_extension(n_max)),
        ("Dyck path <-> 321-avoider roundtrip", lambda: check_dyck_roundtrip(n_max)),
        ("T/S closed forms, recurrences, lattice counts agree (N <= 29)", check_forms),
        ("optimal k piecewise law and S_3 dominance (N <= 200)", check_optimal_k),
        ("limits 31/64 and 1/4", check_limits),
        ("Catalan ratio and T_i bounds", check_bounds),
    ]


def run_checks(n_max: int = 10, stop_on_failure: bool = True) -> Iterator[tuple[str, str | None]]:
    for name, fn in checks(n_max):
        result = fn()
        yield name, result
        if result is not None and stop_on_failure:
            return

