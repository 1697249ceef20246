from __future__ import annotations

import logging
from collections.abc import Callable
from itertools import combinations

import networkx as nx

from app.models.graph import Graph
from app.models.outerplanar import MaxOuterplanarRep, normalize_chord
from app.models.result import ReductionMap
from app.services.graph_ops import disjoint_union
from app.utils.errors import PreconditionError
from app.utils.rng import make_rng

logger = logging.getLogger("generators")

# K6 minus this perfect matching is H6.
H6_REMOVED_MATCHING = ((0, 1), (2, 3), (4, 5))


def reduce_vc_to_kpvc(g: Graph, k: int) -> ReductionMap:
    """Hang a path of floor((k-1)/2) new vertices from every original vertex.

    Original vertex v keeps index v; its path occupies n + v*L .. n + v*L + L - 1,
    listed from the end attached to v.
    """
    if k < 3:
        raise PreconditionError(f"reduction needs k >= 3, got {k}")
    hang = (k - 1) // 2
    edges = list(g.edges())
    original_of: list[int | None] = list(range(g.n))
    for v in range(g.n):
        previous = v
        for step in range(hang):
            new = g.n + v * hang + step
            edges.append((previous, new))
            previous = new
    original_of.extend([None] * (g.n * hang))
    gadget = Graph.from_edges(g.n * (1 + hang), edges)
    logger.debug(f"Reduction k={k}: {g.n} -> {gadget.n} vertices, {g.m} -> {gadget.m} edges")
    return ReductionMap(gadget=gadget, original_of=tuple(original_of))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """K_{1,n}: centre 0 and leaves 1..n."""
    if n < 0:
        raise PreconditionError(f"star needs n >= 0 leaves, got {n}")
    return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise PreconditionError(f"edgeless graph needs n >= 0, got {n}")
    return Graph.empty(n)


def matching_graph(n: int) -> Graph:
    """n disjoint edges."""
    if n < 0:
        raise PreconditionError(f"matching needs n >= 0 edges, got {n}")
    return Graph.from_edges(2 * n, ((2 * i, 2 * i + 1) for i in range(n)))


def h6_graph() -> Graph:
    removed = set(H6_REMOVED_MATCHING)
    return Graph.from_edges(6, (e for e in combinations(range(6), 2) if e not in removed))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise PreconditionError(f"random tree needs n >= 1, got {n}")
    if n == 1:
        return Graph.empty(1)
    sequence = make_rng(seed).integers(0, n, size=n - 2).tolist()
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def tight_sparse3(x: int, y: int) -> Graph:
    """x copies of C4 followed by y copies of H6."""
    if x < 0 or y < 0:
        raise PreconditionError(f"tight family needs x, y >= 0, got ({x}, {y})")
    return disjoint_union(*([cycle_graph(4)] * x), *([h6_graph()] * y))


def tight_ratio(a: int, b: int) -> Graph:
    """Tight family with edge/vertex ratio exactly a/b, for b <= a <= 2b."""
    if not (0 < b <= a <= 2 * b):
        raise PreconditionError(f"tight ratio needs 0 < b <= a <= 2b, got a={a}, b={b}")
    return tight_sparse3(3 * (2 * b - a), 2 * (a - b))


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise PreconditionError(f"G(n, p) needs n >= 0 and 0 <= p <= 1, got ({n}, {p})")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def bounded_degree_graph(n: int, d: int, seed: int) -> Graph:
    """Random graph with maximum degree at most d.

    Candidate pairs are visited in a seeded random order and kept while both
    ends have spare degree.
    """
    if n < 0 or d < 0:
        raise PreconditionError(f"bounded-degree graph needs n, d >= 0, got ({n}, {d})")
    pairs = list(combinations(range(n), 2))
    rng = make_rng(seed)
    rng.shuffle(pairs)
    degree = [0] * n
    edges = []
    for u, v in pairs:
        if degree[u] < d and degree[v] < d:
            edges.append((int(u), int(v)))
            degree[u] += 1
            degree[v] += 1
    return Graph.from_edges(n, edges)


def gen_random_mop(n: int, seed: int) -> MaxOuterplanarRep:
    """Maximal outerplanar graph grown from a triangle by random ear insertion.

    Each new vertex subdivides a random boundary edge, which becomes a chord.
    """
    if n < 3:
        raise PreconditionError(f"maximal outerplanar graph needs n >= 3, got {n}")
    rng = make_rng(seed)
    cycle = [0, 1, 2]
    chords: set[tuple[int, int]] = set()
    for v in range(3, n):
        i = int(rng.integers(0, len(cycle)))
        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
        chords.add(normalize_chord(a, b))
        cycle.insert(i + 1, v)
    return MaxOuterplanarRep(cycle=tuple(cycle), chords=frozenset(chords))


def gen_outerplanar_doubled(h: MaxOuterplanarRep) -> Graph:
    """Add vertex n + i adjacent to both ends of boundary edge i."""
    edges = h.to_graph().edges()
    for i, v in enumerate(h.cycle):
        w = h.cycle[(i + 1) % h.n]
        edges.extend([(h.n + i, v), (h.n + i, w)])
    return Graph.from_edges(2 * h.n, edges)


def outerplanar_doubled(n: int, seed: int) -> Graph:
    return gen_outerplanar_doubled(gen_random_mop(n, seed))


_FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[type, ...]]] = {
    "path": (path_graph, (int,)),
    "cycle": (cycle_graph, (int,)),
    "star": (star_graph, (int,)),
    "complete": (complete_graph, (int,)),
    "empty": (empty_graph, (int,)),
    "matching": (matching_graph, (int,)),
    "h6": (h6_graph, ()),
    "random_tree": (random_tree, (int, int)),
    "tight_sparse3": (tight_sparse3, (int, int)),
    "tight_ratio": (tight_ratio, (int, int)),
    "gnp": (gnp_graph, (int, float, int)),
    "bounded_degree": (bounded_degree_graph, (int, int, int)),
    "outerplanar_doubled": (outerplanar_doubled, (int, int)),
}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def gen_family(name: str, *params: str | int | float) -> Graph:
    """Build a named family; parameters may be given as strings (from the CLI)."""
    entry = _FAMILIES.get(name)
    if entry is None:
        raise PreconditionError(
            f"unknown family '{name}'. Known: {', '.join(family_names())}"
        )
    builder, types = entry
    if len(params) != len(types):
        raise PreconditionError(
            f"family '{name}' takes {len(types)} parameter(s), got {len(params)}"
        )
    try:
        args = [kind(value) for kind, value in zip(types, params)]
    except ValueError:
        raise PreconditionError(f"invalid parameters for '{name}': {list(params)}")
    return builder(*args)
