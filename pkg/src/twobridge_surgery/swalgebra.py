"""
Formal Seiberg-Witten bookkeeping on a free homology lattice.

Basic-class sets are finitely supported integer functions on Z^rank. Knot surgery along a
torus T multiplies the set by Delta_K evaluated at 2[T]; the B lower bound is the largest
divisibility of a difference of two basic classes.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from itertools import combinations
from math import gcd

from .errors import InvariantBreach, RankMismatchError, ZeroVectorError
from .families import generate_family
from .interfaces import ChainStatus, KnotBound, SurgeryReport
from .knotpoly import word_polynomials
from .laurent import LaurentPoly, ZPoly
from .models import (
    BasicClassSet,
    LatticeVector,
    LogTransformParams,
    RelativeSWVector,
    TorusClass,
)
from .scenarios import Scenario

logger = logging.getLogger(__name__)


def multiply(a: BasicClassSet, b: BasicClassSet) -> BasicClassSet:
    """Product in the group ring Z[H]: classes add, values multiply."""
    if a.rank != b.rank:
        raise RankMismatchError(f"cannot multiply rank {a.rank} by rank {b.rank}")
    acc: dict[LatticeVector, int] = {}
    for ka, ca in a.support.items():
        for kb, cb in b.support.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            acc[key] = acc.get(key, 0) + ca * cb
    return BasicClassSet(rank=a.rank, support=acc)


def evaluate_at_one(sw: BasicClassSet) -> int:
    return sw.total()


def torus_image(delta: LaurentPoly, torus: TorusClass) -> BasicClassSet:
    """Delta(2[T]) as an element of the group ring: t^j goes to the class 2j[T]."""
    acc: dict[LatticeVector, int] = {}
    for j, d in delta.coefficients.items():
        key = tuple(2 * j * x for x in torus.vector)
        acc[key] = acc.get(key, 0) + d
    return BasicClassSet(rank=torus.rank, support=acc)


def knot_surgery(sw: BasicClassSet, torus: TorusClass, delta: LaurentPoly) -> BasicClassSet:
    if torus.rank != sw.rank:
        raise RankMismatchError(f"torus {torus.vector} does not have rank {sw.rank}")
    return multiply(sw, torus_image(delta, torus))


def mms_linear_form(p: int, q: int, r: int, rel: RelativeSWVector) -> dict[LatticeVector, int]:
    """p*S1 + q*S2 + r*S3 per relative class, with no primitivity check."""
    return {k: p * s1 + q * s2 + r * s3 for k, (s1, s2, s3) in rel.values.items()}


def mms_combine(params: LogTransformParams, rel: RelativeSWVector) -> dict[LatticeVector, int]:
    return mms_linear_form(params.p, params.q, params.r, rel)


def divisibility(v: Sequence[int]) -> int:
    if not any(v):
        raise ZeroVectorError("divisibility of the zero vector is undefined")
    return gcd(*v)


def b_invariant(candidates: Iterable[BasicClassSet]) -> int:
    """Largest divisibility of k1 - k2 over distinct classes of any one candidate set."""
    best = 0
    for sw in candidates:
        for k1, k2 in combinations(sw.support, 2):
            best = max(best, divisibility([a - b for a, b in zip(k1, k2)]))
    return best


def log_transform_candidates(
    transforms: Iterable[tuple[LogTransformParams, RelativeSWVector]], rank: int
) -> list[BasicClassSet]:
    """Basic-class sets of admissible transforms, each read off its MMS combination."""
    candidates = []
    for params, rel in transforms:
        support = mms_combine(params, rel)
        candidates.append(BasicClassSet(rank=rank, support=support))
        logger.debug("Transform %s: %d basic classes", params.as_tuple(), len(support))
    return candidates


def one_over_n_family(n: int) -> list[LogTransformParams]:
    """The 1/j log transforms (1, 0, j) for j = 1..n."""
    return [LogTransformParams(p=1, q=0, r=j) for j in range(1, n + 1)]


def _as_delta(knot: LaurentPoly | tuple[ZPoly, LaurentPoly]) -> LaurentPoly:
    return knot[1] if isinstance(knot, tuple) else knot


def distinguish_tori(
    sw: BasicClassSet,
    torus: TorusClass,
    knots: Sequence[LaurentPoly | tuple[ZPoly, LaurentPoly]],
    labels: Sequence[str] | None = None,
    candidates: Sequence[BasicClassSet] = (),
    scenario: str = "",
    simply_connected_complement: bool | None = None,
) -> SurgeryReport:
    """
    Surgers ``sw`` along ``torus`` once per knot and groups the knots by the B lower bound
    of the resulting basic-class set.

    For a singleton ``sw`` the bound is exactly span(Delta) * divisibility(2T) and any
    difference raises InvariantBreach. Otherwise the chain bound >= span(Delta) is only
    reported.
    """
    if not sw.support:
        raise ZeroVectorError("the SW function is identically zero")
    if torus.is_null_homologous:
        raise ZeroVectorError("the surgery torus must have a nonzero class")
    if torus.rank != sw.rank:
        raise RankMismatchError(f"torus {torus.vector} does not have rank {sw.rank}")
    names = list(labels) if labels is not None else [f"K{i}" for i in range(1, len(knots) + 1)]
    singleton = len(sw.support) == 1
    step = divisibility([2 * x for x in torus.vector])

    report = SurgeryReport(
        scenario=scenario,
        torus=torus.vector,
        transform_bound=b_invariant(candidates),
        simply_connected_complement=simply_connected_complement,
    )
    for index, (name, knot) in enumerate(zip(names, knots), start=1):
        delta = _as_delta(knot)
        surgered = knot_surgery(sw, torus, delta)
        bound = b_invariant([surgered])
        span = delta.span()
        expected: int | None = None
        if singleton:
            expected = span * step
            if bound != expected:
                raise InvariantBreach(
                    f"{name}: B lower bound {bound} differs from span * div(2T) = {expected}"
                )
            chain = ChainStatus.EXACT
        elif bound >= span:
            chain = ChainStatus.HOLDS
        else:
            chain = ChainStatus.NOT_ESTABLISHED
        report.bounds.append(
            KnotBound(
                index=index,
                word=name,
                alexander=delta.to_text(),
                span=span,
                lower_bound=bound,
                chain=chain,
                expected=expected,
            )
        )
        logger.info("%s: span %d, B lower bound %d (%s)", name, span, bound, chain.value)

    groups: dict[int, list[int]] = {}
    for kb in report.bounds:
        groups.setdefault(kb.lower_bound, []).append(kb.index)
    report.partition = [groups[b] for b in sorted(groups)]
    report.undistinguished = [
        pair for group in report.partition for pair in combinations(group, 2)
    ]
    return report


def run_scenario(scenario: Scenario, use_cache: bool = True) -> SurgeryReport:
    """Resolves the scenario's knots (and family members) and runs distinguish_tori."""
    words = scenario.words()
    if scenario.family:
        words += [m.word for m in generate_family(scenario.family, use_cache=use_cache)]
    knots = [word_polynomials(w) for w in words]
    candidates = log_transform_candidates(
        ((t.params, t.relative) for t in scenario.transforms), scenario.rank
    )
    return distinguish_tori(
        scenario.basic_classes,
        scenario.torus,
        knots,
        labels=[w.to_text() for w in words],
        candidates=candidates,
        scenario=scenario.name,
        simply_connected_complement=scenario.simply_connected_complement,
    )
