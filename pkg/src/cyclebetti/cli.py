"""Command-line interface.

Subcommands cover the Betti table, both directions of the bijection, the
exhaustive verifier, and tableau enumeration.  Data goes to stdout in
text, json, or csv; diagnostics go to stderr.  Exit status is 0 when all
requested checks pass, 1 when a verification fails, and 2 for usage
errors.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Any

import click

from .bijection import (
    format_marked_subset,
    marked_subset_to_tableau,
    tableau_to_marked_subset,
    transpose_duality_holds,
    verify_bijection,
)
from .errors import (
    DomainError,
    InvalidMarkedSubsetError,
    TableauParseError,
    TableauValidationError,
    WrongShapeError,
)
from .hochster import MAX_CYCLE_SIZE, betti_table
from .tableaux import (
    enumerate_standard_tableaux,
    format_tableau,
    hook_length_count,
    hook_shape,
    parse_tableau,
)

FORMATS = click.Choice(["text", "json", "csv"])
VERIFY_MAX = 14  # tableau counts explode combinatorially past this


def _emit_text(columns: list[str], records: list[dict[str, Any]], none: str = "-") -> None:
    grid = [[str(c) for c in columns]]
    grid.extend(
        [none if record[c] is None else str(record[c]) for c in columns] for record in records
    )
    widths = [max(len(row[k]) for row in grid) for k in range(len(columns))]
    for row in grid:
        click.echo("  ".join(cell.rjust(width) for cell, width in zip(row, widths)))


def _emit_csv(columns: list[str], records: list[dict[str, Any]]) -> None:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow({c: ("" if record[c] is None else record[c]) for c in columns})
    click.echo(buffer.getvalue(), nl=False)


@click.group()
def main() -> None:
    """Exact Betti numbers of cycle graphs and the tableau bijection behind them."""


@main.command(name="table")
@click.option("--n", "n", type=int, required=True, help=f"Cycle size, 4..{MAX_CYCLE_SIZE}.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def cmd_table(n: int, fmt: str) -> None:
    """Print the nonzero graded Betti numbers of the n-cycle.

    Every cell is computed by brute force over all vertex subsets.  Linear
    strand rows also carry the count of standard tableaux of the matching
    hook-plus-column shape, which equals the Betti number.
    """
    if not 4 <= n <= MAX_CYCLE_SIZE:
        raise click.UsageError(f"--n must be in 4..{MAX_CYCLE_SIZE}, got {n}")
    table = betti_table(n)
    records = []
    for (i, j), value in table.nonzero().items():
        on_strand = i == j - 1 and 2 <= j <= n - 2
        records.append(
            {
                "i": i,
                "j": j,
                "betti": value,
                "syt": hook_length_count(hook_shape(n, j)) if on_strand else None,
            }
        )
    columns = ["i", "j", "betti", "syt"]
    if fmt == "json":
        click.echo(json.dumps({"n": n, "entries": records}))
    elif fmt == "csv":
        _emit_csv(columns, records)
    else:
        _emit_text(columns, records)


@main.command(name="map")
@click.argument("tableau_text")
def cmd_map(tableau_text: str) -> None:
    """Map a standard tableau to its marked subset.

    TABLEAU_TEXT uses ';' between rows and ',' between entries, for
    example "1,2;3,4;5".  The output looks like "{2,4}|4".
    """
    try:
        ms = tableau_to_marked_subset(parse_tableau(tableau_text))
    except (
        TableauParseError,
        TableauValidationError,
        WrongShapeError,
        InvalidMarkedSubsetError,
    ) as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(format_marked_subset(ms))


@main.command(name="unmap")
@click.option("--n", "n", type=int, required=True, help="Cycle size.")
@click.option("--j", "j", type=int, required=True, help="Subset size.")
@click.option("--set", "subset_text", required=True, help='Vertex subset, e.g. "2,4,6".')
@click.option("--a", "marker", type=int, required=True, help="Marker; must be admissible for the subset.")
def cmd_unmap(n: int, j: int, subset_text: str, marker: int) -> None:
    """Rebuild the standard tableau for a marked subset."""
    try:
        vertices = [int(tok) for tok in subset_text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise click.UsageError(f'--set expects comma-separated integers, got {subset_text!r}')
    try:
        tableau = marked_subset_to_tableau(n, j, vertices, marker)
    except (InvalidMarkedSubsetError, DomainError) as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(format_tableau(tableau))


def _parse_size_range(text: str) -> tuple[int, int]:
    pieces = text.split("..")
    try:
        if len(pieces) == 1:
            low = high = int(pieces[0])
        elif len(pieces) == 2:
            low, high = int(pieces[0]), int(pieces[1])
        else:
            raise ValueError
    except ValueError:
        raise click.UsageError(f'--n expects "N" or "LOW..HIGH", got {text!r}')
    if not 4 <= low <= high <= VERIFY_MAX:
        raise click.UsageError(f"--n must lie within 4..{VERIFY_MAX}, got {text!r}")
    return low, high


@main.command(name="verify")
@click.option("--n", "size_range", required=True, help=f'Cycle size or range, e.g. "6" or "5..8" (4..{VERIFY_MAX}).')
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def cmd_verify(size_range: str, fmt: str) -> None:
    """Exhaustively check the bijection and transpose duality.

    For every size in the range and every subset size j, checks that the
    forward map is a bijection onto the marked subsets, that both round
    trips are the identity, and that transposing complements the subset.
    Exit status 0 when everything passes, 1 otherwise.
    """
    low, high = _parse_size_range(size_range)
    records = []
    all_passed = True
    for n in range(low, high + 1):
        for j in range(2, n - 1):
            report = verify_bijection(n, j)
            duality_ok = all(
                transpose_duality_holds(t)
                for t in enumerate_standard_tableaux(hook_shape(n, j))
            )
            passed = report.passed and duality_ok
            all_passed &= passed
            records.append(
                {
                    "n": n,
                    "j": j,
                    "tableaux": report.tableau_count,
                    "marked": report.marked_count,
                    "bijection": "pass" if report.passed else "FAIL",
                    "duality": "pass" if duality_ok else "FAIL",
                    "mismatches": report.mismatches,
                }
            )
    columns = ["n", "j", "tableaux", "marked", "bijection", "duality"]
    if fmt == "json":
        click.echo(json.dumps({"results": records, "passed": all_passed}))
    elif fmt == "csv":
        _emit_csv(columns, [{c: r[c] for c in columns} for r in records])
    else:
        _emit_text(columns, [{c: r[c] for c in columns} for r in records])
        for record in records:
            for mismatch in record["mismatches"]:
                click.echo(f"  {mismatch}", err=True)
        click.echo("all checks passed" if all_passed else "CHECKS FAILED")
    if not all_passed:
        sys.exit(1)


@main.command(name="syt")
@click.option("--n", "n", type=int, required=True, help="Number of cells.")
@click.option("--j", "j", type=int, required=True, help="First row length, 2..n-2.")
@click.option("--count-only", is_flag=True, help="Print the enumerated and hook-length counts only.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def cmd_syt(n: int, j: int, count_only: bool, fmt: str) -> None:
    """List the standard tableaux of shape (j, 2, 1, ..., 1) on n cells.

    Output order is canonical: lexicographic on the row-major reading
    word.  With --count-only, both the enumerated count and the
    hook-length-formula count are printed so they can be compared.
    """
    try:
        shape = hook_shape(n, j)
    except DomainError as exc:
        raise click.UsageError(str(exc)) from exc
    tableaux = enumerate_standard_tableaux(shape)
    if count_only:
        enumerated, closed_form = len(tableaux), hook_length_count(shape)
        if fmt == "json":
            click.echo(json.dumps({"n": n, "j": j, "enumerated": enumerated, "hook_length": closed_form}))
        elif fmt == "csv":
            _emit_csv(
                ["enumerated", "hook_length"],
                [{"enumerated": enumerated, "hook_length": closed_form}],
            )
        else:
            click.echo(f"{enumerated} {closed_form}")
        return
    texts = [format_tableau(t) for t in tableaux]
    if fmt == "json":
        click.echo(json.dumps({"n": n, "j": j, "tableaux": texts}))
    elif fmt == "csv":
        _emit_csv(["tableau"], [{"tableau": text} for text in texts])
    else:
        for text in texts:
            click.echo(text)


if __name__ == "__main__":
    main()
