from __future__ import annotations

import logging
from fractions import Fraction

from app.models.graph import Graph
from app.models.result import BoundReport
from app.utils.errors import PreconditionError

logger = logging.getLogger("bounds")


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def bound_caro_wei_vc(g: Graph) -> float:
    """psi_2 <= n - sum 1/(1 + d(v))."""
    return g.n - sum(1.0 / (1 + g.degree(v)) for v in range(g.n))


def bound_goering(g: Graph) -> float:
    """psi_3 <= n - sum 1/(1 + d(v)) - sum over edges 2/(|N(u) + N(v)| (|N(u) + N(v)| - 1))."""
    value = bound_caro_wei_vc(g)
    for u, v in g.edges():
        joint = len(g.adj[u] | g.adj[v])
        value -= 2.0 / (joint * (joint - 1))
    return value


def bound_generalized_cw(g: Graph, k: int) -> float:
    """psi_k <= n - (k-1)/k * sum 2/(1 + d(v)); may be negative, reported raw."""
    if k < 2:
        raise PreconditionError(f"generalized Caro-Wei bound needs k >= 2, got {k}")
    spread = sum(2.0 / (1 + g.degree(v)) for v in range(g.n))
    return g.n - (k - 1) / k * spread


def expected_degenerate_size(g: Graph) -> float:
    """sum 2/(1 + d(v)): the expected size of the randomly ordered 1-degenerate set."""
    return sum(2.0 / (1 + g.degree(v)) for v in range(g.n))


def bound_sparse3(g: Graph) -> Fraction:
    """psi_3 <= (2n + m)/6, exact."""
    return Fraction(2 * g.n + g.m, 6)


def bound_cubic_half(g: Graph) -> Fraction:
    """psi_3 <= ceil((D-1)/2) / ceil((D+1)/2) * n for maximum degree D >= 1."""
    delta = g.max_degree
    if delta == 0:
        return Fraction(0)
    return Fraction(_ceil_half(delta - 1), _ceil_half(delta + 1)) * g.n


def bound_tree(g: Graph, k: int) -> Fraction:
    """psi_k <= n/k on forests."""
    if not g.is_forest():
        raise PreconditionError("tree bound applies to forests only")
    return Fraction(g.n, k)


def bound_report(g: Graph, k: int, psi_known: int | None = None) -> BoundReport:
    """Every bound that applies to psi_k of g."""
    if k < 2:
        raise PreconditionError(f"bounds need k >= 2, got {k}")
    bounds: dict[str, float] = {"generalized_caro_wei": bound_generalized_cw(g, k)}
    if k == 2:
        bounds["caro_wei"] = bound_caro_wei_vc(g)
    if k == 3:
        bounds["goering"] = bound_goering(g)
        bounds["sparse3"] = float(bound_sparse3(g))
        bounds["cubic_half"] = float(bound_cubic_half(g))
    if g.is_forest():
        bounds["tree"] = float(bound_tree(g, k))
    report = BoundReport(k=k, bounds=dict(sorted(bounds.items())), psi_known=psi_known)
    logger.debug(f"Bounds for k={k}: {report.bounds}")
    return report
