from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, model_validator

from app.models.graph import Graph, VertexSet


class Algorithm(str, Enum):
    EXACT = "exact"
    TREE = "tree"
    GREEDY = "greedy"
    SUBCUBIC = "subcubic"
    SPARSE3 = "sparse3"
    CAROWEI = "carowei"
    PARTITION = "partition"
    OUTERPLANAR = "outerplanar"
    ALL_VERTICES = "all_vertices"  # k = 1, handled by the CLI only


class CoverResult(BaseModel):
    k: int
    algorithm: Algorithm
    cover: VertexSet

    @property
    def size(self) -> int:
        return len(self.cover)


class ExactResult(BaseModel):
    psi: int
    cover: VertexSet

    @model_validator(mode="after")
    def _check_size(self) -> ExactResult:
        if len(self.cover) != self.psi:
            raise ValueError(f"cover has {len(self.cover)} vertices, psi is {self.psi}")
        return self


class Partition(BaseModel):
    p: int
    t: int  # target bound on same-class neighbours
    classes: tuple[int, ...]
    intra: tuple[int, ...]
    moves: int = 0

    @model_validator(mode="after")
    def _check_classes(self) -> Partition:
        if len(self.classes) != len(self.intra):
            raise ValueError("classes and intra must have one entry per vertex")
        if any(not 0 <= c < self.p for c in self.classes):
            raise ValueError(f"class index outside [0, {self.p})")
        return self

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.p
        for c in self.classes:
            sizes[c] += 1
        return sizes

    def members(self, c: int) -> list[int]:
        return [v for v, cls in enumerate(self.classes) if cls == c]

    @property
    def max_intra(self) -> int:
        return max(self.intra, default=0)


class ReductionMap(BaseModel):
    gadget: Graph
    original_of: tuple[int | None, ...]

    @model_validator(mode="after")
    def _check_mapping(self) -> ReductionMap:
        if len(self.original_of) != self.gadget.n:
            raise ValueError("original_of must have one entry per gadget vertex")
        return self

    @property
    def original_vertices(self) -> list[int]:
        return [v for v, o in enumerate(self.original_of) if o is not None]


class BoundReport(BaseModel):
    k: int
    bounds: dict[str, float] = {}
    psi_known: int | None = None

    def violations(self, tolerance: float) -> list[str]:
        """Names of bounds that fall below the known optimum."""
        if self.psi_known is None:
            return []
        return [
            name
            for name, value in self.bounds.items()
            if value + tolerance < self.psi_known
        ]


class RunRecord(BaseModel):
    input: str
    algorithm: Algorithm
    k: int
    size: int
    cover: list[int]
    seed: int | None = None
    note: str | None = None
    elapsed_seconds: float | None = None

    model_config = {
        "json_schema_extra": {
            "example": {
                "input": "graphs/p7.txt",
                "algorithm": "tree",
                "k": 3,
                "size": 2,
                "cover": [1, 4],
                "seed": None,
            }
        }
    }
