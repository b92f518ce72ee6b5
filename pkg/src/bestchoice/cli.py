"""
Command-line interface for bestchoice.

Usage:
    bestchoice counts --pattern 321 --n 2..12 --format csv
    bestchoice probs --n 2..18,100000 --format pretty
    bestchoice optimal-k --n 9
    bestchoice limits
    bestchoice verify --n-max 10
    bestchoice simulate --n 8 --k 6 --trials 100000 --seed 42
    bestchoice bijection --perm 41728356
"""

from __future__ import annotations

import json
import sys

import click

from .dyck import DyckPath, dyck_from_perm, ne_corners, perm_from_dyck
from .exact import S_combo, catalan_ratio, win_fraction_321
from .models import ModelId, asymptotic_success, optimal_k_321
from .perms import Permutation, PatternId, contains_pattern, left_to_right_maxima, winnable_interval
from .sampling import ALGORITHM, estimate_win_rate_streams
from .tables import FORMATS, pattern_table, render_table, three_sig
from .verify import run_checks

__all__ = ["cli", "parse_sizes"]


def parse_sizes(text: str) -> list[int]:
    """Parse ``"2..12"``, ``"9"`` or ``"2..18,100000"`` into a sorted size list."""
    sizes: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = (int(x) for x in part.split("..", 1))
            if lo > hi:
                raise ValueError(f"empty range {part!r}")
            sizes.update(range(lo, hi + 1))
        elif part:
            sizes.add(int(part))
    if not sizes:
        raise ValueError("no sizes given")
    return sorted(sizes)


class SizesType(click.ParamType):
    name = "sizes"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            sizes = parse_sizes(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)
        if sizes[0] < 2:
            self.fail("sizes must be >= 2", param, ctx)
        return sizes


class PatternType(click.ParamType):
    name = "pattern"

    def convert(self, value, param, ctx):
        try:
            return PatternId.parse(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


SIZES = SizesType()
PATTERN = PatternType()

format_option = click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True)
output_option = click.option("--output", "-o", default="-", show_default=True,
                             help="Output file, '-' for standard output.")
pattern_option = click.option("--pattern", type=PATTERN, default="321", show_default=True)


def emit(text: str, output: str) -> None:
    if output == "-":
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Positional strategies for best choice on 321- and 231-avoiding orders.

    Brute-force rows are cached on disk when BESTCHOICE_CACHE_DIR is set.
    """


@cli.command()
@pattern_option
@click.option("--n", "sizes", type=SIZES, default="2..12", show_default=True)
@click.option("--source", type=click.Choice(["closed", "brute"]), default="closed", show_default=True,
              help="Exact formulas, or exhaustive enumeration (N <= 10).")
@click.option("--mark-max", is_flag=True, default=None, help="Mark row maxima with '*' in csv too.")
@format_option
@output_option
def counts(pattern, sizes, source, mark_max, fmt, output):
    """Grid of k-winnable counts, columns k - N = -11 .. -1."""
    if source == "brute" and sizes[-1] > 10:
        raise click.BadParameter("brute source supports N <= 10", param_hint="--n")
    table = pattern_table(sizes, pattern, source)
    emit(render_table(table, fmt, "counts", mark_max), output)


@cli.command()
@pattern_option
@click.option("--n", "sizes", type=SIZES, default="2..18,100000", show_default=True,
              help="Sizes above 5000 are evaluated in ratio mode.")
@click.option("--mark-max", is_flag=True, default=None, help="Mark row maxima with '*' in csv too.")
@format_option
@output_option
def probs(pattern, sizes, mark_max, fmt, output):
    """Grid of win percentages in the same layout as ``counts``."""
    if pattern is PatternId.P231 and sizes[-1] > 5000:
        raise click.BadParameter("231 rows are exact only; use N <= 5000", param_hint="--n")
    table = pattern_table(sizes, pattern, "closed")
    emit(render_table(table, fmt, "probs", mark_max), output)


@cli.command("optimal-k")
@click.option("--n", "sizes", type=SIZES, required=True)
@format_option
@output_option
def optimal_k(sizes, fmt, output):
    """Optimal positional strategy for the 321 model, one record per N."""
    records = []
    for n in sizes:
        rec = optimal_k_321(n).as_record()
        rec["prob"] = f"{rec['prob_num']}/{rec['prob_den']}"
        records.append(rec)
    if fmt == "json":
        text = "".join(dumps(r) + "\n" for r in records)
    elif fmt == "csv":
        lines = ["N,k_star,ties,prob_num,prob_den,prob_float"]
        lines += [f"{r['N']},{r['k_star']},{' '.join(map(str, r['ties']))},{r['prob_num']},"
                  f"{r['prob_den']},{r['prob_float']!r}" for r in records]
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(f"N={r['N']:<4} k*={r['k_star']:<4} (N{r['k_star'] - r['N']:+d})  "
                       f"P(win)={three_sig(100 * r['prob_float'])}%  ties={r['ties']}\n" for r in records)
    emit(text, output)


@cli.command()
@click.option("--n", "check_n", type=int, default=100000, show_default=True,
              help="Finite N at which to show the ratio-mode value next to each limit.")
@format_option
@output_option
def limits(check_n, fmt, output):
    """Asymptotic success probabilities of both models."""
    rows = []
    for model, combo, k in ((ModelId.MODEL_231, "C[N-1]", None), (ModelId.MODEL_321, str(S_combo(3)), 3)):
        value = asymptotic_success(model)
        at_n = catalan_ratio(1, check_n) if k is None else win_fraction_321(check_n - k, check_n)
        rows.append({"model": model.name, "combo": combo, "limit": str(value),
                     "limit_float": float(value), "N": check_n, "value_at_N": at_n})
    if fmt == "json":
        text = "".join(dumps(r) + "\n" for r in rows)
    elif fmt == "csv":
        text = "model,combo,limit,limit_float,N,value_at_N\n" + "".join(
            f"{r['model']},{r['combo']},{r['limit']},{r['limit_float']!r},{r['N']},{r['value_at_N']!r}\n"
            for r in rows)
    else:
        text = "".join(f"{r['model']}: lim ({r['combo']})/C[N] = {r['limit']} = {r['limit_float']}"
                       f"  (N={r['N']}: {r['value_at_N']:.6f})\n" for r in rows)
    emit(text, output)


@cli.command()
@click.option("--n-max", type=click.IntRange(2, 10), default=10, show_default=True)
def verify(n_max):
    """Run every cross-check; exit 1 at the first failure."""
    for name, failure in run_checks(n_max):
        if failure is None:
            click.echo(f"PASS  {name}")
        else:
            click.echo(f"FAIL  {name}: {failure}")
            sys.exit(1)


@cli.command()
@pattern_option
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--k", type=click.IntRange(min=0), required=True)
@click.option("--trials", type=click.IntRange(min=1), default=100000, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--streams", type=click.IntRange(min=1), default=1, show_default=True)
@output_option
def simulate(pattern, n, k, trials, seed, streams, output):
    """Monte Carlo win rate of the k-positional strategy."""
    if k > n - 1:
        raise click.BadParameter(f"k must be at most N-1={n - 1}", param_hint="--k")
    est = estimate_win_rate_streams(n, k, pattern, trials, seed, streams)
    record = {"N": n, "k": k, "pattern": str(pattern), "seed": seed, "streams": streams,
              "rng": ALGORITHM, "estimate": est.to_dict()}
    emit(dumps(record) + "\n", output)


@cli.command()
@click.option("--perm", default=None, help="A 321-avoiding permutation, e.g. 41728356.")
@click.option("--path", default=None, help="A Dyck path over N/E, e.g. NNEENE.")
@format_option
@output_option
def bijection(perm, path, fmt, output):
    """Show permutation <-> Dyck path <-> corner set for one input."""
    if (perm is None) == (path is None):
        raise click.UsageError("give exactly one of --perm or --path")
    try:
        if perm is not None:
            p = Permutation.parse(perm)
            if contains_pattern(p, PatternId.P321):
                raise ValueError(f"{p} contains 321")
            d = dyck_from_perm(p)
        else:
            d = DyckPath(path)
            p = perm_from_dyck(d)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None
    lo, hi = winnable_interval(p)
    record = {
        "permutation": str(p),
        "path": str(d),
        "corners": [list(c) for c in ne_corners(d)],
        "lr_maxima": [list(m) for m in left_to_right_maxima(p)],
        "winnable_k": [lo, hi - 1],
    }
    if fmt == "json":
        text = dumps(record) + "\n"
    elif fmt == "csv":
        corners = " ".join(f"({c},{h})" for c, h in record["corners"])
        text = f"permutation,path,corners,winnable_k_min,winnable_k_max\n{p},{d},\"{corners}\",{lo},{hi - 1}\n"
    else:
        corners = ",".join(f"({c},{h})" for c, h in record["corners"])
        text = (f"permutation: {p}\npath:        {d}\ncorners:     {corners}\n"
                f"k-winnable:  {lo} <= k <= {hi - 1}\n")
    emit(text, output)


main = cli

if __name__ == "__main__":
    cli()
