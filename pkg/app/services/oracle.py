from __future__ import annotations

import logging
from itertools import combinations

import networkx as nx

from app.config import settings
from app.models.graph import Graph, VertexSet
from app.models.result import ExactResult
from app.services.graph_ops import components
from app.services.paths import enumerate_path_vertex_sets
from app.utils.errors import OracleTooLargeError, PreconditionError

logger = logging.getLogger("oracle")


def _component_minimum(g: Graph, k: int, members: list[int]) -> list[int]:
    """Lexicographically least minimum k-path cover of one component."""
    masks = enumerate_path_vertex_sets(g, k, members)
    if not masks:
        return []
    union = 0
    for mask in masks:
        union |= mask
    # A vertex on no k-path never belongs to a minimum cover.
    candidates = [v for v in members if union >> v & 1]
    for size in range(len(candidates) + 1):
        for chosen in combinations(candidates, size):
            selected = 0
            for v in chosen:
                selected |= 1 << v
            if all(mask & selected for mask in masks):
                return list(chosen)
    raise AssertionError("the full candidate set is always a cover")


def psi_exact(g: Graph, k: int, budget: int | None = None) -> ExactResult:
    """Exact psi_k(g) by ascending-size subset enumeration.

    ``budget`` replaces the configured vertex cap for this call. The returned
    cover is the lexicographically least among minimum covers.
    """
    if k < 2:
        raise PreconditionError(f"oracle needs k >= 2, got {k}")
    cap = budget if budget is not None else settings.oracle_max_vertices
    if g.n > cap:
        raise OracleTooLargeError(g.n, cap)

    cover: list[int] = []
    for members in components(g):
        if len(members) < k:
            continue
        part = _component_minimum(g, k, members)
        logger.debug(f"Component of {len(members)} vertices needs {len(part)}")
        cover.extend(part)

    logger.info(f"psi_{k} = {len(cover)} on n={g.n}, m={g.m}")
    return ExactResult(psi=len(cover), cover=VertexSet.of(cover))


def min_vertex_cover_size(g: Graph) -> int:
    """n minus the maximum independent set, via a maximum clique of the complement."""
    if g.n == 0:
        return 0
    _, independent = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    return g.n - independent


def dissociation_number(g: Graph) -> int:
    """Largest vertex set inducing maximum degree at most 1, by brute force."""
    for size in range(g.n, 0, -1):
        for chosen in combinations(range(g.n), size):
            inside = set(chosen)
            if all(len(g.adj[v] & inside) <= 1 for v in chosen):
                return size
    return 0
