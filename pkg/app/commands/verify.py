from __future__ import annotations

import argparse
import json
import logging

from app.commands.io import load_graph, load_vertex_set, write_output
from app.services.paths import uncovered_path
from app.utils.errors import PreconditionError

logger = logging.getLogger("commands.verify")


def cmd_verify(args: argparse.Namespace) -> int:
    """Exit 0 when the cover file is a k-path vertex cover, 1 with a witness otherwise."""
    if args.k < 1:
        raise PreconditionError(f"k must be at least 1, got {args.k}")
    g = load_graph(args.input)
    cover = load_vertex_set(args.cover, g.n)
    witness = uncovered_path(g, cover, args.k)
    valid = witness is None
    logger.info(f"Cover of {len(cover)} vertices for k={args.k}: {'valid' if valid else 'invalid'}")

    if args.json:
        payload = {
            "valid": valid,
            "k": args.k,
            "size": len(cover),
            "witness": list(witness.vertices) if witness else None,
        }
        write_output(json.dumps(payload), None)
    elif valid:
        write_output("valid", None)
    else:
        write_output(f"invalid\nwitness {' '.join(map(str, witness.vertices))}", None)
    return 0 if valid else 1
