from __future__ import annotations

import logging

import agentyper as typer

from ..conway import classify, evaluate
from ..errors import TwoBridgeError
from . import common

logger = logging.getLogger(__name__)


def command(
    ctx: typer.Context,
    word: str = typer.Argument(..., help="Conway word, e.g. 'C(2,2)@plus'"),  # noqa: B008
    fold_mirror: bool = common.FOLD_MIRROR_OPTION,
) -> None:
    """Print the two-bridge class p/q of a word."""
    del ctx
    parsed = common.word_argument(word)
    try:
        c = classify(parsed, fold_mirror=fold_mirror)
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)
    logger.info("%s evaluates to %s", parsed, evaluate(parsed))
    typer.output(
        {
            "word": parsed.to_text(),
            "value": evaluate(parsed).to_text(),
            "class": c.to_text(),
            "knot": c.is_knot,
            "fold_mirror": fold_mirror,
        },
        title="Two-Bridge Class",
    )
