from __future__ import annotations

from collections.abc import Mapping

from pydantic import BaseModel, model_validator

from app.models.graph import Graph

Chord = tuple[int, int]


def normalize_chord(u: int, v: int) -> Chord:
    return (u, v) if u < v else (v, u)


def chords_cross(position: Mapping[int, int], a: Chord, b: Chord) -> bool:
    """True when two chords of the same polygon cross in its interior.

    Chords sharing an endpoint never cross.
    """
    if set(a) & set(b):
        return False
    a0, a1 = sorted((position[a[0]], position[a[1]]))
    b0, b1 = sorted((position[b[0]], position[b[1]]))
    return (a0 < b0 < a1 < b1) or (b0 < a0 < b1 < a1)


class MaxOuterplanarRep(BaseModel):
    """Triangulated outerplanar graph: Hamiltonian boundary plus n - 3 chords."""

    cycle: tuple[int, ...]
    chords: frozenset[Chord]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_triangulation(self) -> MaxOuterplanarRep:
        n = len(self.cycle)
        if n < 3:
            raise ValueError(f"boundary needs at least 3 vertices, got {n}")
        if sorted(self.cycle) != list(range(n)):
            raise ValueError("boundary must list each vertex 0..n-1 exactly once")
        if len(self.chords) != n - 3:
            raise ValueError(f"expected {n - 3} chords, got {len(self.chords)}")
        boundary = self.boundary_edges()
        for u, v in self.chords:
            if u >= v:
                raise ValueError(f"chord ({u}, {v}) is not normalized as u < v")
            if (u, v) in boundary:
                raise ValueError(f"chord ({u}, {v}) duplicates a boundary edge")
        position = self.position
        ordered = sorted(self.chords)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                if chords_cross(position, a, b):
                    raise ValueError(f"chords {a} and {b} cross")
        return self

    @property
    def n(self) -> int:
        return len(self.cycle)

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.cycle)}

    def boundary_edges(self) -> set[Chord]:
        n = len(self.cycle)
        return {normalize_chord(self.cycle[i], self.cycle[(i + 1) % n]) for i in range(n)}

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, sorted(self.boundary_edges() | self.chords))
