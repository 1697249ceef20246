from __future__ import annotations

import logging
import sys
from pathlib import Path

from app.models.graph import Graph, VertexSet
from app.models.outerplanar import MaxOuterplanarRep
from app.services.outerplanar import triangulate
from app.utils.errors import GraphParseError
from app.utils.formats import parse_edge_list, parse_embedding, parse_vertex_set

logger = logging.getLogger("commands.io")


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphParseError(f"cannot read {path}: {e.strerror or e}")


def load_graph(path: str) -> Graph:
    g = parse_edge_list(read_text(path))
    logger.info(f"Loaded {path}: n={g.n}, m={g.m}")
    return g


def load_vertex_set(path: str, n: int) -> VertexSet:
    return parse_vertex_set(read_text(path), n)


def load_embedding(path: str) -> MaxOuterplanarRep:
    """Read an embedding and triangulate it when chords are missing."""
    cycle, chords = parse_embedding(read_text(path))
    h = triangulate(cycle, chords)
    if len(h.chords) > len(chords):
        logger.info(f"Triangulated {path}: added {len(h.chords) - len(chords)} chords")
    return h


def write_output(text: str, out: str | None) -> None:
    """Write to ``out`` or, without one, to stdout. Always ends with a newline."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")
