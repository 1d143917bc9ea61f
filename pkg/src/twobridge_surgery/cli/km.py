from __future__ import annotations

import agentyper as typer

from ..convention import default_convention
from ..conway import classify
from ..errors import TwoBridgeError
from ..families import is_km_expressible
from ..models import TwoBridgeClass
from . import common


def _target(text: str) -> TwoBridgeClass:
    """Accepts either a Conway word or a fraction p/q."""
    if "/" in text and not text.lstrip().upper().startswith("C"):
        p, _, q = text.partition("/")
        try:
            return TwoBridgeClass(p=int(p), q=int(q))
        except ValueError as exc:
            common.exit_with_error(f"Invalid class '{text}': {exc}")
    try:
        return classify(common.word_argument(text))
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)


def command(
    ctx: typer.Context,
    target: str = typer.Argument(..., help="Conway word or class p/q"),  # noqa: B008
    max_length: int = typer.Option(
        8,
        "--max-length",
        help="Longest palindromic word searched",
    ),  # noqa: B008
    max_entry: int = typer.Option(
        4,
        "--max-entry",
        help="Largest |entry| searched",
    ),  # noqa: B008
    fold_mirror: bool = common.FOLD_MIRROR_OPTION,
) -> None:
    """Search for a palindromic unknotting-number-one word representing a class."""
    del ctx
    c = _target(target)
    result = is_km_expressible(
        c,
        max_length=max_length,
        max_entry=max_entry,
        fold_mirror=fold_mirror,
        convention=default_convention(),
    )
    typer.output(result, title="Unknotting-Number-One Form")
