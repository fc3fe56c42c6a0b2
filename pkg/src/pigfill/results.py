"""Completion results and their certificates."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeSet, Graph, non_edges_within


@dataclass(frozen=True)
class CliqueBipartition:
    """Two vertex sets that are cliques in the completed graph."""

    s1: tuple[int, ...]
    s2: tuple[int, ...]


@dataclass(frozen=True)
class PointPlacement:
    """Integer-point model of a completed caterpillar.

    Spine vertex ``spine[i]`` occupies the unit interval [i, i+1]; every leaf
    sits on an integer point and ``points`` lists (leaf, point) pairs sorted by
    leaf id.
    """

    spine: tuple[int, ...]
    points: tuple[tuple[int, int], ...]

    def point_of(self) -> dict[int, int]:
        return dict(self.points)


Certificate = CliqueBipartition | PointPlacement


@dataclass(frozen=True)
class CompletionResult:
    """A set of fill edges, its size, and the structure that produced it.

    ``fill`` is None only in cost-only mode.  For a CliqueBipartition
    certificate the fill is exactly the non-edges inside the two parts; any
    vertex outside both parts was isolated in the input and untouched.
    """

    fill: EdgeSet | None
    cost: int
    certificate: Certificate | None
    algorithm: str
    lower_bound_for: str | None = None


def validate_completion(g: Graph, result: CompletionResult) -> None:
    """Raise ValueError when a result's fill/cost/certificate are inconsistent."""
    if result.fill is None:
        return
    if result.cost != len(result.fill):
        raise ValueError(f"cost {result.cost} != |fill| {len(result.fill)}")
    for u, v in result.fill:
        if g.has_edge(u, v):
            raise ValueError(f"fill edge ({u}, {v}) already in the graph")
        if not (0 <= u < v < g.n):
            raise ValueError(f"fill edge ({u}, {v}) not canonical for n={g.n}")
    cert = result.certificate
    if isinstance(cert, CliqueBipartition):
        s1, s2 = set(cert.s1), set(cert.s2)
        if s1 & s2:
            raise ValueError("certificate parts overlap")
        outside = set(range(g.n)) - s1 - s2
        if any(g.degree(v) > 0 for v in outside):
            raise ValueError("non-isolated vertex missing from both parts")
        want = non_edges_within(g, s1) | non_edges_within(g, s2)
        if want != result.fill:
            raise ValueError("fill does not match the non-edges inside the parts")
    elif isinstance(cert, PointPlacement):
        from .caterpillar import materialize_fill_edges

        if materialize_fill_edges(g, cert) != result.fill:
            raise ValueError("fill does not match the point placement")
