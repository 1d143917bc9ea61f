from __future__ import annotations

import logging

import agentyper as typer

from ..errors import TwoBridgeError
from ..scenarios import list_scenarios, load_scenario, resolve_scenario
from ..swalgebra import run_scenario
from . import common

logger = logging.getLogger(__name__)


def command(
    ctx: typer.Context,
    scenario: str | None = typer.Option(
        None,
        "--scenario",
        help="Scenario file or bundled scenario name",
    ),  # noqa: B008
    list_only: bool = typer.Option(
        False,
        "--list",
        is_flag=True,
        help="List known scenario names",
    ),  # noqa: B008
    no_cache: bool = common.NO_CACHE_OPTION,
) -> None:
    """Knot-surger the scenario's torus and group the knots by B lower bound."""
    del ctx
    if list_only:
        typer.output({"scenarios": list_scenarios()}, title="Scenarios")
        return
    if not scenario:
        common.exit_with_error(
            "No scenario given (use --scenario NAME or --list)", error_type="ArgError"
        )
    try:
        path = resolve_scenario(scenario)
        loaded = load_scenario(path)
        logger.info("Running scenario %s from %s", loaded.name, path)
        report = run_scenario(loaded, use_cache=not no_cache)
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)
    typer.output(report, title=f"Surgery: {report.scenario}")
