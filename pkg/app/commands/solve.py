from __future__ import annotations

import argparse
import logging
import time
from collections.abc import Callable

from app.commands.io import load_embedding, load_graph, write_output
from app.config import settings
from app.models.graph import Graph, VertexSet
from app.models.result import Algorithm, CoverResult, RunRecord
from app.services.approx import (
    caro_wei_best,
    greedy_k_approx,
    sparse3,
    subcubic_cover3,
)
from app.services.oracle import psi_exact
from app.services.outerplanar import outerplanar_cover3
from app.services.partition import cover3_via_partition
from app.services.paths import uncovered_path
from app.services.tree import pvcp_tree
from app.utils.errors import PreconditionError, VerificationError
from app.utils.formats import serialize_vertex_set

logger = logging.getLogger("commands.solve")

# Algorithms whose guarantee only concerns paths on three vertices.
_K3_ONLY = {Algorithm.SUBCUBIC, Algorithm.SPARSE3, Algorithm.PARTITION, Algorithm.OUTERPLANAR}

_SOLVERS: dict[Algorithm, Callable[[Graph, int], VertexSet]] = {
    Algorithm.EXACT: lambda g, k: psi_exact(g, k).cover,
    Algorithm.TREE: pvcp_tree,
    Algorithm.GREEDY: greedy_k_approx,
    Algorithm.SUBCUBIC: lambda g, k: subcubic_cover3(g),
    Algorithm.SPARSE3: lambda g, k: sparse3(g),
    Algorithm.PARTITION: lambda g, k: cover3_via_partition(g),
}


def parse_seed_range(text: str) -> list[int]:
    """'a..b' (inclusive) or a single integer."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise PreconditionError(f"seed range must look like 'a..b', got '{text}'")
    if low < 0 or high < low:
        raise PreconditionError(f"seed range {low}..{high} is empty or negative")
    if high - low + 1 > settings.max_sweep_seeds:
        raise PreconditionError(
            f"seed range of {high - low + 1} exceeds max_sweep_seeds={settings.max_sweep_seeds}"
        )
    return list(range(low, high + 1))


def verify_cover(g: Graph, result: CoverResult) -> None:
    """Raise VerificationError unless the result covers every k-path of g."""
    if result.k == 1:
        if len(result.cover) != g.n:
            raise VerificationError("a 1-path cover must contain every vertex")
        return
    witness = uncovered_path(g, result.cover, result.k)
    if witness is not None:
        raise VerificationError(
            f"{result.algorithm.value} returned a set missing path "
            f"{' '.join(map(str, witness.vertices))}"
        )


def solve(
    g: Graph,
    algorithm: Algorithm,
    k: int,
    seeds: list[int] | None = None,
) -> tuple[CoverResult, int | None]:
    """Run one algorithm on a plain graph; returns the result and the winning seed."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if k == 1:
        return CoverResult(k=1, algorithm=Algorithm.ALL_VERTICES, cover=VertexSet.of(range(g.n))), None
    if algorithm in _K3_ONLY and k != 3:
        raise PreconditionError(f"algorithm '{algorithm.value}' solves k = 3 only, got k={k}")
    if algorithm == Algorithm.OUTERPLANAR:
        raise PreconditionError("algorithm 'outerplanar' needs an embedding input")

    if algorithm == Algorithm.CAROWEI:
        trace = caro_wei_best(g, k, seeds or [settings.default_seed])
        return CoverResult(k=k, algorithm=algorithm, cover=trace.cover), trace.seed
    return CoverResult(k=k, algorithm=algorithm, cover=_SOLVERS[algorithm](g, k)), None


def cmd_solve(args: argparse.Namespace) -> int:
    algorithm = Algorithm(args.algo)
    if (args.seed is not None or args.seeds is not None) and algorithm != Algorithm.CAROWEI:
        raise PreconditionError(
            f"--seed and --seeds only apply to carowei, not '{algorithm.value}'"
        )
    if args.seed is not None and args.seed < 0:
        raise PreconditionError(f"seed must be non-negative, got {args.seed}")
    start = time.perf_counter()

    if algorithm == Algorithm.OUTERPLANAR:
        h = load_embedding(args.input)
        g = h.to_graph()
        if args.k == 1:
            result, seed = solve(g, algorithm, 1)
        elif args.k != 3:
            raise PreconditionError(f"algorithm 'outerplanar' solves k = 3 only, got k={args.k}")
        else:
            result, seed = CoverResult(k=3, algorithm=algorithm, cover=outerplanar_cover3(h)), None
    else:
        g = load_graph(args.input)
        seeds = None
        if args.seeds is not None:
            seeds = parse_seed_range(args.seeds)
        elif args.seed is not None:
            seeds = [args.seed]
        result, seed = solve(g, algorithm, args.k, seeds)

    verify_cover(g, result)
    elapsed = time.perf_counter() - start
    logger.info(f"{result.algorithm.value} k={result.k}: size {result.size} in {elapsed:.3f}s")

    record = RunRecord(
        input=args.input,
        algorithm=result.algorithm,
        k=result.k,
        size=result.size,
        cover=list(result.cover.members),
        seed=seed,
        note="k = 1: every vertex is a path of order 1" if result.k == 1 else None,
        elapsed_seconds=round(elapsed, 6) if args.timing else None,
    )
    if args.out:
        write_output(serialize_vertex_set(result.cover), args.out)

    if args.json:
        write_output(record.model_dump_json(exclude_none=True), None)
    else:
        lines = [f"algorithm {record.algorithm.value}", f"k {record.k}", f"size {record.size}"]
        lines.append("cover " + serialize_vertex_set(result.cover) if record.cover else "cover")
        if record.seed is not None:
            lines.append(f"seed {record.seed}")
        if record.note:
            lines.append(f"note {record.note}")
        if record.elapsed_seconds is not None:
            lines.append(f"elapsed {record.elapsed_seconds}")
        write_output("\n".join(lines), None)
    return 0
