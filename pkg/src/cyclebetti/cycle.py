"""Cycle graphs, vertex-subset restrictions, and marked subsets.

The cycle graph on n >= 3 vertices has vertex set {1, ..., n} and an edge
between i and j exactly when i - j is congruent to +-1 mod n.  Restricting
to a vertex subset W splits W into maximal cyclically contiguous arcs.  The
arc minima of W, or of its complement when vertex 1 lies in W, are the
markers; choosing one marker other than the smallest yields a marked
subset, and those pairs are what the linear strand of the Betti table
counts.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    InvalidCycleError,
    InvalidMarkedSubsetError,
    UndefinedMarkerError,
    VertexRangeError,
)


def _check_cycle_size(n: int) -> None:
    if n < 3:
        raise InvalidCycleError(f"cycle graphs need n >= 3, got n={n}")


def _as_vertex_set(n: int, vertices: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vertices)
    bad = sorted(v for v in vs if not 1 <= v <= n)
    if bad:
        raise VertexRangeError(f"vertices {bad} fall outside 1..{n}")
    return vs


def cycle_edges(n: int) -> set[frozenset[int]]:
    """Edge set of the cycle graph on vertices 1..n, as unordered pairs."""
    _check_cycle_size(n)
    return {frozenset((i, i % n + 1)) for i in range(1, n + 1)}


@dataclass(frozen=True)
class CycleRestriction:
    """A vertex subset of a cycle, decomposed into contiguous arcs.

    components holds the maximal arcs of the induced subgraph.  Each arc is
    listed in walk order, so consecutive entries are adjacent on the cycle
    (an arc may wrap past n back to 1), and the arcs themselves are sorted
    by their minimum element.
    """

    n: int
    vertices: frozenset[int]
    components: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.components)


def restrict(n: int, vertices: Iterable[int]) -> CycleRestriction:
    """Decompose the subgraph of the n-cycle induced on a vertex subset."""
    _check_cycle_size(n)
    vs = _as_vertex_set(n, vertices)
    if len(vs) == n:
        # The whole cycle is one component; walk it once from vertex 1.
        return CycleRestriction(n, vs, (tuple(range(1, n + 1)),))
    arcs = []
    for start in sorted(vs):
        if (start - 2) % n + 1 in vs:
            continue  # predecessor present, not the start of an arc
        arc = [start]
        while arc[-1] % n + 1 in vs:
            arc.append(arc[-1] % n + 1)
        arcs.append(tuple(arc))
    arcs.sort(key=min)
    return CycleRestriction(n, vs, tuple(arcs))


def marker_set(n: int, vertices: Iterable[int]) -> frozenset[int]:
    """Arc minima of the restriction, taken on the side avoiding vertex 1.

    For a proper nonempty subset W this is the set of component minima of
    the restriction to W when 1 is not in W, and of the restriction to the
    complement of W when 1 is in W.  Both sides split into the same number
    of arcs, so either way there is one marker per component.
    """
    _check_cycle_size(n)
    vs = _as_vertex_set(n, vertices)
    if not vs or len(vs) == n:
        raise UndefinedMarkerError(
            f"markers need a proper nonempty subset of 1..{n}, got {sorted(vs)}"
        )
    side = vs if 1 not in vs else frozenset(range(1, n + 1)) - vs
    return frozenset(min(arc) for arc in restrict(n, side).components)


def admissible_markers(n: int, vertices: Iterable[int]) -> frozenset[int]:
    """Markers other than the smallest; the valid choices for a marked subset."""
    markers = marker_set(n, vertices)
    return markers - {min(markers)}


@dataclass(frozen=True)
class MarkedSubset:
    """A vertex subset together with a distinguished non-minimal marker.

    The marker must be admissible for the subset, which forces the induced
    restriction into at least two components and pins down the containment
    law: vertex 1 lies in the subset exactly when the marker does not.
    """

    n: int
    vertices: frozenset[int]
    marker: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        try:
            admissible = admissible_markers(self.n, self.vertices)
        except (InvalidCycleError, VertexRangeError, UndefinedMarkerError) as exc:
            raise InvalidMarkedSubsetError(str(exc)) from exc
        if self.marker not in admissible:
            raise InvalidMarkedSubsetError(
                f"marker {self.marker} is not admissible for {sorted(self.vertices)} "
                f"on the {self.n}-cycle (admissible: {sorted(admissible)})"
            )

    @property
    def size(self) -> int:
        return len(self.vertices)


def marked_subsets(n: int, j: int) -> list[MarkedSubset]:
    """All marked subsets of size j, in lexicographic subset order.

    Pairs sharing a subset are listed with markers ascending.  A size j
    outside 2..n-2 admits no marked subsets; that case returns an empty
    list after a warning rather than raising.
    """
    if not 2 <= j <= n - 2:
        warnings.warn(
            f"no marked subsets of size {j} on the {n}-cycle (need 2 <= j <= n-2)",
            stacklevel=2,
        )
        return []
    out = []
    for combo in itertools.combinations(range(1, n + 1), j):
        vs = frozenset(combo)
        for marker in sorted(admissible_markers(n, vs)):
            out.append(MarkedSubset(n, vs, marker))
    return out
