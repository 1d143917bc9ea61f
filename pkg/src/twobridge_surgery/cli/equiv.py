from __future__ import annotations

import agentyper as typer

from ..conway import classify
from ..errors import TwoBridgeError
from . import common


def command(
    ctx: typer.Context,
    first: str = typer.Argument(..., help="First Conway word"),  # noqa: B008
    second: str = typer.Argument(..., help="Second Conway word"),  # noqa: B008
    fold_mirror: bool = common.FOLD_MIRROR_OPTION,
) -> None:
    """Decide whether two words give the same two-bridge knot."""
    del ctx
    w1 = common.word_argument(first)
    w2 = common.word_argument(second)
    try:
        c1 = classify(w1, fold_mirror=fold_mirror)
        c2 = classify(w2, fold_mirror=fold_mirror)
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)
    typer.output(
        {
            "first": f"{w1.to_text()} -> {c1.to_text()}",
            "second": f"{w2.to_text()} -> {c2.to_text()}",
            "result": "equivalent" if c1 == c2 else "distinct",
        },
        title="Equivalence",
    )
