from __future__ import annotations

import logging

import agentyper as typer

from ..errors import TwoBridgeError
from ..families import FamilyStrategy, family_records, generate_family
from . import common

logger = logging.getLogger(__name__)


def command(
    ctx: typer.Context,
    count: int = typer.Option(5, "--count", help="Number of family members"),  # noqa: B008
    strategy: str = typer.Option(
        FamilyStrategy.LADDER.value,
        "--strategy",
        help="ladder (all entries +-2), twist (C(b,2)) or random",
    ),  # noqa: B008
    seed: int | None = typer.Option(
        None,
        "--seed",
        help="Seed for the random strategy",
    ),  # noqa: B008
    start: int | None = typer.Option(
        None,
        "--start",
        help="First k (ladder) or b (twist)",
    ),  # noqa: B008
    no_cache: bool = common.NO_CACHE_OPTION,
) -> None:
    """List unknotting-number-one two-bridge knots with strictly increasing Conway degree."""
    del ctx
    try:
        chosen = FamilyStrategy(strategy)
    except ValueError:
        options = ", ".join(s.value for s in FamilyStrategy)
        common.exit_with_error(f"Unknown strategy '{strategy}' (expected {options})")
    try:
        members = generate_family(
            count, strategy=chosen, seed=seed, start=start, use_cache=not no_cache
        )
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)

    records = family_records(members)
    if common.current_format() == "json":
        for record in records:
            common.emit_json_event(record.model_dump())
        return
    typer.output(
        {
            "strategy": chosen.value,
            "count": len(records),
            "members": [
                f"{r.index:>3}  {r.word:<40} {r.p}/{r.q}  deg {r.degree}" for r in records
            ],
        },
        title="Family",
    )
