from __future__ import annotations

import argparse
import logging

from app.commands.io import load_graph, write_output
from app.services.generators import gen_family, gen_random_mop, reduce_vc_to_kpvc
from app.utils.errors import PreconditionError
from app.utils.formats import serialize_edge_list, serialize_embedding

logger = logging.getLogger("commands.generate")


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "random_mop":
        if len(args.params) != 2:
            raise PreconditionError("family 'random_mop' takes 2 parameter(s): n seed")
        try:
            n, seed = (int(p) for p in args.params)
        except ValueError:
            raise PreconditionError(f"invalid parameters for 'random_mop': {args.params}")
        text = serialize_embedding(gen_random_mop(n, seed))
    else:
        g = gen_family(args.family, *args.params)
        logger.info(f"Generated {args.family} {' '.join(args.params)}: n={g.n}, m={g.m}")
        text = serialize_edge_list(g)
    write_output(text, args.out)
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    """Write the gadget; a leading comment maps every gadget vertex to its original."""
    g = load_graph(args.input)
    reduction = reduce_vc_to_kpvc(g, args.k)
    mapping = " ".join("-" if o is None else str(o) for o in reduction.original_of)
    text = f"# original_of {mapping}\n" + serialize_edge_list(reduction.gadget)
    logger.info(
        f"Reduced n={g.n} to gadget n={reduction.gadget.n} for k={args.k}, "
        f"{len(reduction.original_vertices)} gadget vertices map back to the input"
    )
    write_output(text, args.out)
    return 0
