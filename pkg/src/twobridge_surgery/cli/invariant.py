from __future__ import annotations

import agentyper as typer

from ..errors import TwoBridgeError
from ..knotpoly import knot_invariants
from . import common


def command(
    ctx: typer.Context,
    word: str = typer.Argument(..., help="Conway word closing to a knot"),  # noqa: B008
) -> None:
    """Print the Conway and Alexander polynomials of a word, computed by both routes."""
    del ctx
    parsed = common.word_argument(word)
    try:
        report = knot_invariants(parsed)
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)
    if not report.routes_agree:
        common.exit_with_error(
            f"Fox and Seifert routes disagree on {parsed}",
            code=common.EXIT_BREACH,
            error_type="InvariantBreach",
        )
    typer.output(report, title="Knot Invariants")
