"""Text formats: edge lists, cover files and outerplanar embeddings."""

from __future__ import annotations

from collections.abc import Iterator

from app.models.graph import Graph, VertexSet
from app.models.outerplanar import MaxOuterplanarRep, normalize_chord
from app.utils.errors import GraphParseError


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (1-based line number, tokens), skipping blanks and '#' comments."""
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _ints(tokens: list[str], count: int, line: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise GraphParseError(
            f"expected {count} integers for {what}, got {len(tokens)}", line
        )
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"non-integer token in {what}: {' '.join(tokens)}", line)


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by edge lines "u v".

    Repeated edges (in either orientation) are merged; the header's m must
    equal the number of distinct edges.
    """
    lines = _content_lines(text)
    try:
        header_line, header = next(lines)
    except StopIteration:
        raise GraphParseError("missing 'n m' header")
    n, m = _ints(header, 2, header_line, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphParseError("n and m must be non-negative", header_line)

    edges: set[tuple[int, int]] = set()
    for number, tokens in lines:
        u, v = _ints(tokens, 2, number, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u}, {v}) has an index outside [0, {n})", number)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", number)
        edges.add(normalize_chord(u, v))

    if len(edges) != m:
        raise GraphParseError(
            f"header declares {m} edges but {len(edges)} distinct edges follow",
            header_line,
        )
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)])


def parse_vertex_set(text: str, n: int | None = None) -> VertexSet:
    """Whitespace-separated vertex indices; '#' lines are comments."""
    members: list[int] = []
    for number, tokens in _content_lines(text):
        for token in tokens:
            try:
                v = int(token)
            except ValueError:
                raise GraphParseError(f"non-integer vertex '{token}'", number)
            if v < 0 or (n is not None and v >= n):
                bound = f"[0, {n})" if n is not None else "non-negative range"
                raise GraphParseError(f"vertex {v} outside {bound}", number)
            members.append(v)
    return VertexSet.of(members)


def serialize_vertex_set(s: VertexSet) -> str:
    return " ".join(str(v) for v in s.members)


def parse_embedding(text: str) -> tuple[list[int], set[tuple[int, int]]]:
    """Parse "n", the cyclic order, then one chord per line.

    Returns the raw (cycle, chords); chords may be fewer than n - 3, callers
    triangulate when needed.
    """
    lines = _content_lines(text)
    try:
        n_line, n_tokens = next(lines)
        (n,) = _ints(n_tokens, 1, n_line, "vertex count")
        cycle_line, cycle_tokens = next(lines)
    except StopIteration:
        raise GraphParseError("embedding needs a vertex count and a cyclic order")
    cycle = _ints(cycle_tokens, n, cycle_line, "cyclic order")
    if sorted(cycle) != list(range(n)):
        raise GraphParseError(f"cyclic order must list 0..{n - 1} once each", cycle_line)

    chords: set[tuple[int, int]] = set()
    for number, tokens in lines:
        u, v = _ints(tokens, 2, number, "chord 'u v'")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphParseError(f"invalid chord ({u}, {v})", number)
        chords.add(normalize_chord(u, v))
    return cycle, chords


def serialize_embedding(h: MaxOuterplanarRep) -> str:
    return "\n".join(
        [
            str(h.n),
            " ".join(str(v) for v in h.cycle),
            *(f"{u} {v}" for u, v in sorted(h.chords)),
        ]
    )
