from __future__ import annotations

import agentyper as typer

from ..diagram import diagram_from_word, pd_text
from ..errors import TwoBridgeError
from . import common


def command(
    ctx: typer.Context,
    word: str = typer.Argument(..., help="Conway word closing to a knot"),  # noqa: B008
) -> None:
    """Print the PD code and crossing records of the word's two-bridge diagram."""
    del ctx
    parsed = common.word_argument(word)
    try:
        d = diagram_from_word(parsed)
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)
    if common.STATE.debug:
        for index, crossing in enumerate(d.crossings):
            print(
                f"X{index}: over {crossing.over}, under {crossing.under_in} -> "
                f"{crossing.under_out}, sign {crossing.sign:+d}"
            )
    typer.output(
        {
            "word": parsed.to_text(),
            "pd": pd_text(d),
            "crossings": [c.model_dump() for c in d.crossings],
            "arcs": d.arcs,
            "components": d.components,
            "writhe": d.writhe,
        },
        title="Diagram",
    )
