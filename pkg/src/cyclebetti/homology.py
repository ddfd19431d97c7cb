"""Simplicial complexes and exact reduced-homology dimensions.

All linear algebra here is over the rationals and carried out fraction-free
on arbitrary-precision integers; nothing touches floating point.  The
complexes that matter downstream are restrictions of cycle graphs, which
are at most one-dimensional and torsion-free, so these dimensions do not
depend on the field.

Conventions.  A complex is a downward-closed family of faces; a nonempty
complex always contains the empty face, whose dimension is -1.  The void
complex (no faces at all) is distinct from the irrelevant complex (only
the empty face): reduced homology separates them in degree -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .cycle import cycle_edges
from .errors import InvalidCycleError, VertexRangeError


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix carrying its shape explicitly.

    Zero-row and zero-column matrices come up constantly as boundary maps
    in degenerate degrees, so the shape cannot be inferred from the data.
    """

    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.nrows or any(len(row) != self.ncols for row in rows):
            raise ValueError(
                f"row data does not match declared shape {self.nrows}x{self.ncols}"
            )


def matrix_rank(matrix: IntMatrix) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination.

    Row operations use the two-pivot update divided by the previous pivot;
    every intermediate entry is a minor of the input, so the divisions are
    exact and everything stays an integer.
    """
    a = [list(row) for row in matrix.rows]
    rank = 0
    prev_pivot = 1
    for col in range(matrix.ncols):
        pivot_row = next((r for r in range(rank, matrix.nrows) if a[r][col]), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        lead = a[rank]
        pivot = lead[col]
        for r in range(rank + 1, matrix.nrows):
            row = a[r]
            factor = row[col]
            for c in range(col + 1, matrix.ncols):
                row[c] = (pivot * row[c] - factor * lead[c]) // prev_pivot
            row[col] = 0
        prev_pivot = pivot
        rank += 1
        if rank == matrix.nrows:
            break
    return rank


def nullity(matrix: IntMatrix) -> int:
    """Dimension of the kernel: columns minus rank."""
    return matrix.ncols - matrix_rank(matrix)


def mat_mul(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    if left.ncols != right.nrows:
        raise ValueError(f"cannot multiply {left.nrows}x{left.ncols} by {right.nrows}x{right.ncols}")
    rows = tuple(
        tuple(
            sum(left.rows[i][k] * right.rows[k][j] for k in range(left.ncols))
            for j in range(right.ncols)
        )
        for i in range(left.nrows)
    )
    return IntMatrix(left.nrows, right.ncols, rows)


def is_zero_matrix(matrix: IntMatrix) -> bool:
    return all(entry == 0 for row in matrix.rows for entry in row)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces on labelled vertices 1..vertex_count.

    Construction validates closure, so instances are complexes by the time
    they exist.  Use from_faces to close a family of generators downward.
    """

    vertex_count: int
    faces: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        faces = frozenset(frozenset(face) for face in self.faces)
        object.__setattr__(self, "faces", faces)
        if self.vertex_count < 0:
            raise ValueError(f"vertex_count must be nonnegative, got {self.vertex_count}")
        for face in faces:
            bad = sorted(v for v in face if not 1 <= v <= self.vertex_count)
            if bad:
                raise VertexRangeError(f"face vertices {bad} fall outside 1..{self.vertex_count}")
            for v in face:
                if face - {v} not in faces:
                    raise ValueError(
                        f"not downward closed: {sorted(face)} present but {sorted(face - {v})} missing"
                    )

    @classmethod
    def from_faces(
        cls, vertex_count: int, generators: Iterable[Iterable[int]]
    ) -> "SimplicialComplex":
        """The smallest complex containing every generator face."""
        closed: set[frozenset[int]] = set()
        for gen in generators:
            face = tuple(sorted(set(gen)))
            for k in range(len(face) + 1):
                closed.update(frozenset(sub) for sub in itertools.combinations(face, k))
        return cls(vertex_count, frozenset(closed))

    @property
    def max_dim(self) -> int:
        """Largest face dimension; -1 for the irrelevant complex, -2 for the void one."""
        return max((len(face) - 1 for face in self.faces), default=-2)

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        """The d-dimensional faces as sorted tuples, in lexicographic order."""
        return sorted(tuple(sorted(face)) for face in self.faces if len(face) == d + 1)

    def restriction(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """The subcomplex of faces contained in the given vertex set."""
        vs = frozenset(vertices)
        return SimplicialComplex(
            self.vertex_count, frozenset(face for face in self.faces if face <= vs)
        )


def boundary_matrix(complex_: SimplicialComplex, d: int) -> IntMatrix:
    """Boundary operator from d-faces to (d-1)-faces as an integer matrix.

    Rows are the (d-1)-faces and columns the d-faces, each in lexicographic
    order of the sorted vertex tuple.  The column of a d-face has entry
    (-1)^p at the face obtained by deleting its p-th smallest vertex.  For
    d = 0 this is the augmentation map sending every vertex to the empty
    face with weight +1.  Any d works; out-of-range degrees simply have no
    faces on one side and yield a zero-by-k matrix of the right shape.
    """
    row_faces = complex_.faces_of_dim(d - 1)
    col_faces = complex_.faces_of_dim(d)
    index = {face: r for r, face in enumerate(row_faces)}
    entries = [[0] * len(col_faces) for _ in row_faces]
    for c, face in enumerate(col_faces):
        for p in range(len(face)):
            entries[index[face[:p] + face[p + 1 :]]][c] = (-1) ** p
    return IntMatrix(len(row_faces), len(col_faces), tuple(tuple(row) for row in entries))


def reduced_betti_dim(complex_: SimplicialComplex, d: int) -> int:
    """Dimension of the degree-d reduced homology over the rationals.

    Computed as nullity of the d-th boundary map minus rank of the
    (d+1)-st.  The irrelevant complex has dimension 1 in degree -1 and 0
    elsewhere; the void complex vanishes in every degree.
    """
    kernel = nullity(boundary_matrix(complex_, d))
    image = matrix_rank(boundary_matrix(complex_, d + 1))
    dim = kernel - image
    assert dim >= 0, "boundary image escapes the kernel; input is not a complex"
    return dim


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle as a one-dimensional simplicial complex."""
    return SimplicialComplex.from_faces(n, cycle_edges(n))


def restriction_complex(n: int, vertices: Iterable[int]) -> SimplicialComplex:
    """Faces of the n-cycle contained in the given vertex subset.

    The empty face is always included, so the empty subset yields the
    irrelevant complex rather than the void complex.
    """
    vs = _checked_vertices(n, vertices)
    generators: list[frozenset[int]] = [frozenset()]
    generators.extend(frozenset((v,)) for v in vs)
    generators.extend(edge for edge in cycle_edges(n) if edge <= vs)
    return SimplicialComplex.from_faces(n, generators)


def graph_homology_oracle(n: int, vertices: Iterable[int]) -> tuple[int, int, int]:
    """Reduced homology of a cycle restriction in degrees -1, 0, 1, by counting.

    A graph has no homology above degree 1, so counting components c,
    vertices v, and edges e settles everything: a nonempty restriction has
    (0, c - 1, e - v + c), and the empty one is the irrelevant complex with
    (1, 0, 0).  This path never builds a matrix, which keeps it independent
    of the boundary-operator computation it cross-checks.
    """
    vs = _checked_vertices(n, vertices)
    if not vs:
        return (1, 0, 0)
    edge_count = sum(1 for v in vs if v % n + 1 in vs)
    seen: set[int] = set()
    components = 0
    for v in vs:
        if v in seen:
            continue
        components += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in (u % n + 1, (u - 2) % n + 1):
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return (0, components - 1, edge_count - len(vs) + components)


def _checked_vertices(n: int, vertices: Iterable[int]) -> frozenset[int]:
    if n < 3:
        raise InvalidCycleError(f"cycle graphs need n >= 3, got n={n}")
    vs = frozenset(vertices)
    bad = sorted(v for v in vs if not 1 <= v <= n)
    if bad:
        raise VertexRangeError(f"vertices {bad} fall outside 1..{n}")
    return vs
