from __future__ import annotations

import logging
import random

import agentyper as typer

from ..convention import check_convention, check_degree_law, render_report
from ..errors import TwoBridgeError
from ..families import check_unknotting, unknotting_counterexamples
from ..interfaces import DegreeLawReport, UnknottingCounterexample
from ..knotpoly import route_agreement
from . import common

logger = logging.getLogger(__name__)


def command(
    ctx: typer.Context,
    max_p: int = typer.Option(
        60,
        "--max-p",
        help="Sweep every knot class with p up to this bound",
    ),  # noqa: B008
    fuzz: int = typer.Option(
        0,
        "--fuzz",
        help="Random words for the degree-law and counterexample fuzz (needs --seed)",
    ),  # noqa: B008
    seed: int | None = typer.Option(
        None,
        "--seed",
        help="Seed for every randomized check",
    ),  # noqa: B008
    jobs: int = typer.Option(
        1,
        "--jobs",
        help="Worker processes for the route-agreement sweep",
    ),  # noqa: B008
    no_cache: bool = common.NO_CACHE_OPTION,
) -> None:
    """Run the convention pinning, route agreement, degree-law and unknotting checks."""
    del ctx
    if fuzz and seed is None:
        common.exit_with_error("--fuzz needs an explicit --seed", error_type="ArgError")
    use_cache = not no_cache
    fmt = common.current_format()
    failures: list[str] = []

    try:
        convention_ok, convention = check_convention(max_p, use_cache=use_cache)
        if not convention_ok:
            failures.append(
                f"convention verdict {convention.verdict.value} or reviewed law mismatches "
                f"({convention.reviewed_law_mismatches}) differ from the fixture"
            )
        if fmt == "table":
            print(render_report(convention))
        common.emit_json_event({"event": "convention", **convention.model_dump(mode="json")})

        routes = route_agreement(max_p, jobs=jobs, use_cache=use_cache)
        failures.extend(f"route mismatch {m.p}/{m.q}: {m.reason}" for m in routes.mismatches)
        common.emit_json_event({"event": "routes", **routes.model_dump(mode="json")})

        unknotting = check_unknotting()
        failures.extend(f"unknotting move fails on {w}" for w in unknotting.failures)

        degree_law: DegreeLawReport | None = None
        counterexamples: list[UnknottingCounterexample] = []
        if fuzz and seed is not None:
            degree_law = check_degree_law(cases=fuzz, seed=seed)
            failures.extend(
                f"degree law fails on {m.normal_form}: {m.predicted} != {m.actual}"
                for m in degree_law.mismatches
            )
            counterexamples = unknotting_counterexamples(random.Random(seed), count=fuzz)
    except (TwoBridgeError, ValueError) as exc:
        common.exit_with_exception(exc)

    for failure in failures:
        logger.warning(failure)
    summary = {
        "max_p": max_p,
        "seed": seed,
        "convention_verdict": convention.verdict.value,
        "convention_matches_fixture": convention_ok,
        "reviewed_law_mismatches": convention.reviewed_law_mismatches,
        "route_classes": routes.checked,
        "route_mismatches": len(routes.mismatches),
        "unknotting_cases": unknotting.cases,
        "unknotting_failures": len(unknotting.failures),
        "degree_law_cases": degree_law.cases if degree_law else 0,
        "degree_law_mismatches": len(degree_law.mismatches) if degree_law else 0,
        "literal_formula_mismatches": degree_law.literal_mismatches if degree_law else 0,
        "non_unknotting_zeroings": len(counterexamples),
        "failures": failures,
    }
    typer.output(summary, title="Verification")
    if failures:
        raise SystemExit(common.EXIT_VERIFICATION)
