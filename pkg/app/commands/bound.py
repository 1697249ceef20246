from __future__ import annotations

import argparse
import logging

from app.commands.io import load_graph, write_output
from app.config import settings
from app.services.bounds import bound_report
from app.services.oracle import psi_exact

logger = logging.getLogger("commands.bound")


def format_value(value: float) -> str:
    return f"{value:.10g}"


def cmd_bound(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    psi = psi_exact(g, args.k).psi if args.exact else None
    report = bound_report(g, args.k, psi_known=psi)
    for name in report.violations(settings.bound_tolerance):
        logger.warning(f"Bound {name} = {report.bounds[name]:.10g} is below psi = {psi}")

    if args.json:
        write_output(report.model_dump_json(), None)
    else:
        lines = [f"{name} {format_value(value)}" for name, value in report.bounds.items()]
        if psi is not None:
            lines.append(f"psi {psi}")
        write_output("\n".join(lines), None)
    return 0
