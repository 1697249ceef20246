from __future__ import annotations

import argparse
import json
import logging
import sys

from app.commands.bound import cmd_bound
from app.commands.generate import cmd_generate, cmd_reduce
from app.commands.io import write_output
from app.commands.solve import cmd_solve
from app.commands.verify import cmd_verify
from app.config import settings
from app.models.result import Algorithm
from app.services.generators import family_names
from app.utils.errors import GraphParseError, PathCoverError, error_response

logger = logging.getLogger("app")

SOLVE_ALGORITHMS = [a.value for a in Algorithm if a != Algorithm.ALL_VERTICES]


def _configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s | %(name)-20s | %(levelname)-7s | %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcover",
        description="Minimum k-path vertex cover: exact, tree, approximate and bounded solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a verified k-path vertex cover")
    solve.add_argument("input", help="edge-list file, or embedding file for --algo outerplanar")
    solve.add_argument("--algo", required=True, choices=SOLVE_ALGORITHMS)
    solve.add_argument("--k", type=int, required=True)
    solve.add_argument("--seed", type=int, default=None)
    solve.add_argument("--seeds", default=None, help="inclusive seed range a..b (carowei)")
    solve.add_argument("--out", default=None, help="also write the cover to this file")
    solve.add_argument("--json", action="store_true")
    solve.add_argument("--timing", action="store_true", help="report elapsed wall time")
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser("verify", help="check a cover file against a graph")
    verify.add_argument("input")
    verify.add_argument("cover")
    verify.add_argument("--k", type=int, required=True)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    bound = sub.add_parser("bound", help="evaluate the closed-form upper bounds")
    bound.add_argument("input")
    bound.add_argument("--k", type=int, required=True)
    bound.add_argument("--exact", action="store_true", help="add the oracle value")
    bound.add_argument("--json", action="store_true")
    bound.set_defaults(handler=cmd_bound)

    generate = sub.add_parser("generate", help="write a graph family instance")
    generate.add_argument("family", choices=[*family_names(), "random_mop"])
    generate.add_argument("params", nargs="*")
    generate.add_argument("--out", default=None)
    generate.set_defaults(handler=cmd_generate, json=False)

    reduce = sub.add_parser("reduce", help="build the vertex-cover reduction gadget")
    reduce.add_argument("input")
    reduce.add_argument("--k", type=int, required=True)
    reduce.add_argument("--out", default=None)
    reduce.set_defaults(handler=cmd_reduce, json=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except PathCoverError as e:
        logger.error(f"{type(e).__name__}: {e}")
        if args.json:
            detail = {"line": e.line} if isinstance(e, GraphParseError) and e.line else None
            write_output(json.dumps(error_response(e.exit_code, str(e), detail)), None)
        else:
            print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
