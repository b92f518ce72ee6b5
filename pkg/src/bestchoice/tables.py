"""Count/percentage grids in the figure layout and their text renderings."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .exact import TABLE_OFFSETS, WinCell, WinTable, catalan, win_row
from .oracle import cached_count_row
from .perms import PatternId

FORMATS = ("csv", "json", "pretty")


def pattern_table(sizes: Iterable[int], pattern: PatternId | str = PatternId.P321,
                  source: str = "closed", offsets: Iterable[int] = TABLE_OFFSETS) -> WinTable:
    """Build a :class:`WinTable` for either pattern.

    ``source="closed"`` uses the exact formulas (321) or C_{N-1} (231);
    ``source="brute"`` recounts every cell by exhaustive play.
    """
    pattern = PatternId.parse(pattern)
    offsets = tuple(offsets)
    rows = {}
    for n in sizes:
        if n < 2:
            raise ValueError("table sizes must be >= 2")
        if source == "closed" and pattern is PatternId.P321:
            rows[n] = win_row(n, offsets)
            continue
        if source == "brute":
            counts = cached_count_row(n, pattern)
        elif source == "closed":
            counts = [catalan(n - 1)] * n
        else:
            raise ValueError(f"unknown source {source!r}")
        total = catalan(n)
        rows[n] = {off: WinCell(n, n + off, counts[n + off], total, counts[n + off] / total)
                   for off in offsets if 1 <= n + off <= n - 1}
    return WinTable(rows, offsets)


def three_sig(x: float) -> str:
    return format(x, "#.3g").rstrip(".") if x else "0"


def _cell_text(cell: WinCell | None, kind: str, machine: bool) -> str:
    if cell is None:
        return ""
    if kind == "counts":
        if cell.count is None:
            raise ValueError(f"row N={cell.n} has no exact counts (ratio mode)")
        return str(cell.count)
    return repr(cell.percent) if machine else three_sig(cell.percent)


def render_table(t: WinTable, fmt: str = "csv", kind: str = "counts", mark_max: bool | None = None) -> str:
    """Render ``t`` as csv, json or pretty text.

    ``kind`` is ``"counts"`` or ``"probs"``.  Row maxima are marked with ``*``
    by default only in pretty mode; csv can opt in with ``mark_max=True``.
    """
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    if kind not in ("counts", "probs"):
        raise ValueError("kind must be 'counts' or 'probs'")
    if mark_max is None:
        mark_max = fmt == "pretty"
    if fmt == "json":
        return _render_json(t, kind)

    header = ["N"] + [f"k_offset_{off}" for off in t.offsets]
    body = []
    for n in t.sizes:
        best = t.row_argmax(n) if mark_max else None
        line = [str(n)]
        for off in t.offsets:
            text = _cell_text(t.cell(n, off), kind, machine=fmt == "csv")
            if text and off == best:
                text += "*"
            line.append(text)
        body.append(line)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()

    pretty_header = ["N\\k"] + [str(off) for off in t.offsets]
    widths = [max(len(r[c]) for r in [pretty_header] + body) for c in range(len(pretty_header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip()
             for r in [pretty_header] + body]
    return "\n".join(lines) + "\n"


def _render_json(t: WinTable, kind: str) -> str:
    rows = []
    for n in t.sizes:
        cells = {}
        for off in t.offsets:
            cell = t.cell(n, off)
            if cell is None:
                continue
            entry = {"k": cell.k, "percent": cell.percent}
            if cell.count is not None:
                entry["count"] = str(cell.count)
                entry["total"] = str(cell.total)
            elif kind == "counts":
                raise ValueError(f"row N={n} has no exact counts (ratio mode)")
            cells[str(off)] = entry
        rows.append({"N": n, "row_max_offset": t.row_argmax(n), "cells": cells})
    return json.dumps({"kind": kind, "offsets": list(t.offsets), "rows": rows}, sort_keys=True, indent=1) + "\n"
