"""Integer partitions, standard Young tableaux, and their text format.

Tableaux are drawn in English orientation: the longest row on top, rows
numbered downward, columns rightward, and cells addressed 1-based.  The
text format writes rows separated by ';' and entries by ',', so the
5-cell filling with rows (1, 2), (3, 4), (5) reads "1,2;3,4;5".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DomainError, TableauParseError, TableauValidationError


@dataclass(frozen=True)
class Shape:
    """An integer partition: weakly decreasing positive row lengths."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise DomainError("partitions need at least one part")
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise DomainError(f"parts must be positive integers, got {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise DomainError(f"parts must be weakly decreasing, got {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Shape":
        """The reflected partition: column lengths become row lengths."""
        return Shape(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))


def hook_shape(n: int, j: int) -> Shape:
    """The hook-plus-column partition (j, 2, 1, ..., 1) of n.

    The first row has length j and the remaining n - j cells hang below it
    in the first column, except for one cell widening the second row.
    Needs n >= 4 and 2 <= j <= n - 2 so that both the row and the column
    are genuinely there.
    """
    if n < 4 or not 2 <= j <= n - 2:
        raise DomainError(f"hook shapes need n >= 4 and 2 <= j <= n-2, got n={n}, j={j}")
    return Shape((j, 2) + (1,) * (n - j - 2))


@dataclass(frozen=True)
class Tableau:
    """A standard filling: entries 1..n, rows and columns strictly increasing.

    Validation happens at construction, so every Tableau in existence is
    standard.  Note the smallest entry is forced into the top-left cell by
    the increase constraints, so entry(1, 1) == 1 always holds.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = tuple(len(row) for row in rows)
        if not rows or any(length == 0 for length in lengths):
            raise TableauValidationError("tableaux need at least one entry in every row")
        if any(lengths[k] < lengths[k + 1] for k in range(len(lengths) - 1)):
            raise TableauValidationError(f"row lengths must be weakly decreasing, got {lengths}")
        n = sum(lengths)
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise TableauValidationError(f"entries must be exactly 1..{n}, each once")
        for i, row in enumerate(rows):
            if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
                raise TableauValidationError(f"row {i + 1} is not strictly increasing: {row}")
        for i in range(1, len(rows)):
            for c in range(len(rows[i])):
                if rows[i][c] <= rows[i - 1][c]:
                    raise TableauValidationError(
                        f"column {c + 1} is not strictly increasing at row {i + 1}"
                    )

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def reading_word(self) -> tuple[int, ...]:
        """All entries in row-major order; the canonical sort key."""
        return tuple(v for row in self.rows for v in row)

    def entry(self, i: int, j: int) -> int:
        """The entry in row i, column j (1-based)."""
        if not (1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1])):
            raise ValueError(f"no cell at ({i}, {j})")
        return self.rows[i - 1][j - 1]

    def position_of(self, value: int) -> tuple[int, int]:
        """The (row, column) cell holding a value, 1-based."""
        for i, row in enumerate(self.rows):
            if value in row:
                return i + 1, row.index(value) + 1
        raise ValueError(f"{value} does not appear in the tableau")

    def __str__(self) -> str:
        return format_tableau(self)


def transpose(tableau: Tableau) -> Tableau:
    """Reflect across the main diagonal; the shape becomes its conjugate."""
    cols = tableau.shape.conjugate().parts
    return Tableau(
        tuple(tuple(tableau.rows[i][c] for i in range(cols[c])) for c in range(len(cols)))
    )


def enumerate_standard_tableaux(shape: Shape) -> list[Tableau]:
    """All standard tableaux of a shape, sorted by reading word.

    Entries 1..n are placed in increasing order; at each step a value may
    extend any row that is still short of its part and no longer than the
    row above, which is exactly the condition keeping the filling standard.
    """
    parts = shape.parts
    n = shape.size
    rows: list[list[int]] = [[] for _ in parts]
    found: list[Tableau] = []

    def place(value: int) -> None:
        if value > n:
            found.append(Tableau(tuple(tuple(row) for row in rows)))
            return
        for r, part in enumerate(parts):
            filled = len(rows[r])
            if filled < part and (r == 0 or len(rows[r - 1]) > filled):
                rows[r].append(value)
                place(value + 1)
                rows[r].pop()

    place(1)
    found.sort(key=lambda t: t.reading_word)
    return found


def hook_length_count(shape: Shape) -> int:
    """Number of standard tableaux of a shape, by the hook length formula.

    The hook of a cell covers the cell, everything to its right, and
    everything below; the count is n! divided by the product of all hook
    lengths.  Serves as the closed-form cross-check for the enumeration.
    """
    parts = shape.parts
    cols = shape.conjugate().parts
    product = 1
    for i, part in enumerate(parts):
        for c in range(part):
            product *= (part - c) + (cols[c] - i) - 1
    total = factorial(shape.size)
    assert total % product == 0
    return total // product


def parse_tableau(text: str) -> Tableau:
    """Parse "1,2;3,4;5" style text into a validated tableau.

    Whitespace around entries is tolerated.  Malformed text raises a parse
    error; syntactically fine text with a non-standard filling raises a
    validation error naming the broken invariant.
    """
    rows = []
    for row_text in text.split(";"):
        cells = [cell.strip() for cell in row_text.split(",")]
        if any(not cell for cell in cells):
            raise TableauParseError(f"empty entry in row {row_text!r}")
        try:
            rows.append(tuple(int(cell) for cell in cells))
        except ValueError as exc:
            raise TableauParseError(f"non-integer entry in row {row_text!r}") from exc
    return Tableau(tuple(rows))


def format_tableau(tableau: Tableau) -> str:
    """Render a tableau in the "1,2;3,4;5" text format."""
    return ";".join(",".join(str(v) for v in row) for row in tableau.rows)
