"""
Unknotting-number-one two-bridge knots in the palindromic form
C(b, b1, ..., bk, +-2, -bk, ..., -b1), and families of them with growing Alexander degree.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator
from enum import Enum
from itertools import product

from pydantic import ValidationError

from .conway import canonical_q, class_of, classify, collapse_zeros, evaluate, is_unknot_word
from .errors import FamilyError, InvariantBreach, LinkNotKnotError, TrivialKnotError
from .interfaces import (
    FamilyMember,
    FamilyRecord,
    FuzzReport,
    KMExpressibility,
    KMVerdict,
    UnknottingCounterexample,
)
from .knotpoly import class_invariants, compute_class_invariants
from .models import Convention, ConwayWord, KMWord, TwoBridgeClass

logger = logging.getLogger(__name__)

DEFAULT_MAX_SKIPS = 25


class FamilyStrategy(str, Enum):
    LADDER = "ladder"
    TWIST = "twist"
    RANDOM = "random"


def _palindrome(b: int, tail: tuple[int, ...], sign: int) -> tuple[int, ...]:
    return (b, *tail, 2 * sign, *(-x for x in reversed(tail)))


def realize(km: KMWord) -> ConwayWord:
    """Emits the palindromic word of length 2k + 2; rejects links and the unknot."""
    word = ConwayWord(entries=_palindrome(km.b, km.tail, km.sign), convention=km.convention)
    value = evaluate(word)
    p = 1 if value.is_infinite else abs(value.numerator)
    if p <= 1:
        raise TrivialKnotError(f"{word} is the unknot")
    if p % 2 == 0:
        raise LinkNotKnotError(f"{word} is a two-component link (p={p})")
    return word


def unknotting_move(km: KMWord) -> bool:
    """Changes the distinguished crossing (the +-2 entry becomes 0) and checks for the unknot."""
    entries = list(realize(km).entries)
    entries[km.k + 1] = 0
    collapsed = collapse_zeros(ConwayWord(entries=tuple(entries), convention=km.convention))
    logger.debug("Unknotting move on %s collapses to %s", realize(km), collapsed)
    return is_unknot_word(collapsed)


def ladder_word(k: int) -> KMWord:
    return KMWord(b=2, tail=(2,) * k, sign=1)


def _candidates(strategy: FamilyStrategy, seed: int | None, start: int) -> Iterator[KMWord]:
    if strategy is FamilyStrategy.LADDER:
        k = start
        while True:
            yield ladder_word(k)
            k += 1
    elif strategy is FamilyStrategy.TWIST:
        b = start
        while True:
            try:
                yield KMWord(b=b, tail=(), sign=1)
            except ValidationError:
                logger.debug("Skipping C(%d,2): not a knot", b)
            b += 1
    else:
        if seed is None:
            raise FamilyError("the random family needs a seed")
        yield from random_km_words(random.Random(seed))


def generate_family(
    count: int,
    strategy: FamilyStrategy = FamilyStrategy.LADDER,
    seed: int | None = None,
    start: int | None = None,
    max_skips: int = DEFAULT_MAX_SKIPS,
    use_cache: bool = True,
) -> list[FamilyMember]:
    """
    Returns ``count`` unknotting-number-one knots, pairwise inequivalent, with strictly
    increasing Conway degree. A candidate is skipped when it repeats a class or does not
    raise the degree; ``max_skips`` consecutive skips mean the strategy has stalled.
    """
    if count < 1:
        raise FamilyError("count must be at least 1")
    if start is None:
        start = 0 if strategy is FamilyStrategy.LADDER else 1
    compute = class_invariants if use_cache else compute_class_invariants

    members: list[FamilyMember] = []
    seen: set[TwoBridgeClass] = set()
    skips = 0
    for km in _candidates(strategy, seed, start):
        word = realize(km)
        c = classify(word)
        inv = compute(c.p, c.q)
        last_degree = members[-1].invariants.degree if members else -1
        if c in seen or inv.degree <= last_degree:
            skips += 1
            if skips > max_skips:
                raise FamilyError(
                    f"{strategy.value} family stalled at degree {last_degree} "
                    f"after {len(members)} members"
                )
            continue
        if not inv.routes_agree:
            raise InvariantBreach(f"routes disagree on family member {word}")
        if not unknotting_move(km):
            raise InvariantBreach(f"unknotting move fails on {word}")
        skips = 0
        seen.add(c)
        members.append(FamilyMember(km=km, word=word, invariants=inv))
        logger.info("Family member %d: %s (degree %d)", len(members), word, inv.degree)
        if len(members) == count:
            break
    return members


def family_records(members: list[FamilyMember]) -> list[FamilyRecord]:
    return [
        FamilyRecord(
            index=i,
            word=m.word.to_text(),
            p=m.invariants.p,
            q=m.invariants.q,
            conway=list(m.conway.coefficients),
            degree=m.invariants.degree,
            alexander=m.invariants.alexander.to_text(),
        )
        for i, m in enumerate(members, start=1)
    ]


def random_km_words(
    rng: random.Random, max_b: int = 6, max_k: int = 3, max_tail: int = 4
) -> Iterator[KMWord]:
    """Endless seeded stream of valid KMWords within the given bounds."""
    while True:
        b = rng.choice([-1, 1]) * rng.randint(1, max_b)
        tail = tuple(
            rng.choice([-1, 1]) * rng.randint(1, max_tail) for _ in range(rng.randint(0, max_k))
        )
        try:
            yield KMWord(b=b, tail=tail, sign=rng.choice([-1, 1]))
        except ValidationError:
            continue


def all_km_words(max_b: int = 6, max_k: int = 3, max_tail: int = 4) -> Iterator[KMWord]:
    """Every valid KMWord with |b| <= max_b, k <= max_k and |b_i| <= max_tail."""
    values_b = [v for v in range(-max_b, max_b + 1) if v]
    values_t = [v for v in range(-max_tail, max_tail + 1) if v]
    for k in range(max_k + 1):
        for b, sign, tail in product(values_b, (1, -1), product(values_t, repeat=k)):
            try:
                yield KMWord(b=b, tail=tail, sign=sign)
            except ValidationError:
                continue


def check_unknotting(max_b: int = 6, max_k: int = 3, max_tail: int = 4) -> FuzzReport:
    report = FuzzReport()
    for km in all_km_words(max_b, max_k, max_tail):
        report.cases += 1
        if not unknotting_move(km):
            report.failures.append(realize(km).to_text())
    logger.info("Unknotting move checked on %d words", report.cases)
    return report


def is_km_expressible(
    c: TwoBridgeClass,
    max_length: int = 8,
    max_entry: int = 4,
    fold_mirror: bool = False,
    convention: Convention = Convention.PLUS,
) -> KMExpressibility:
    """
    Bounded search for a palindromic representative of ``c``. A failed search is
    inconclusive: no obstruction is computed.
    """
    if not c.is_knot:
        return KMExpressibility(two_bridge_class=c.to_text(), verdict=KMVerdict.NOT_A_KNOT)
    target = TwoBridgeClass(p=c.p, q=canonical_q(c.p, c.q, fold_mirror))
    values = [v for v in range(-max_entry, max_entry + 1) if v]
    searched = 0
    for k in range((max_length - 2) // 2 + 1):
        for b, sign, tail in product(values, (1, -1), product(values, repeat=k)):
            searched += 1
            word = ConwayWord(entries=_palindrome(b, tail, sign), convention=convention)
            value = evaluate(word)
            if value.is_infinite or abs(value.numerator) != c.p:
                continue
            try:
                found = class_of(value, fold_mirror)
            except TrivialKnotError:
                continue
            if found == target:
                km = KMWord(b=b, tail=tail, sign=sign, convention=convention)
                return KMExpressibility(
                    two_bridge_class=c.to_text(),
                    verdict=KMVerdict.EXPRESSIBLE,
                    witness=word.to_text(),
                    unknotting_move=unknotting_move(km),
                    searched=searched,
                )
    return KMExpressibility(
        two_bridge_class=c.to_text(), verdict=KMVerdict.INCONCLUSIVE, searched=searched
    )


def unknotting_counterexamples(
    rng: random.Random, count: int = 200, max_length: int = 6, max_entry: int = 4
) -> list[UnknottingCounterexample]:
    """Zeroes one entry of random knot words and keeps those that do not unknot."""
    found: list[UnknottingCounterexample] = []
    tried = 0
    while tried < count:
        length = rng.randint(2, max_length)
        entries = [rng.choice([-1, 1]) * rng.randint(1, max_entry) for _ in range(length)]
        word = ConwayWord(entries=tuple(entries))
        value = evaluate(word)
        if value.is_infinite or abs(value.numerator) <= 1 or value.numerator % 2 == 0:
            continue
        tried += 1
        position = rng.randrange(length)
        entries[position] = 0
        collapsed = collapse_zeros(word.with_entries(entries))
        if not is_unknot_word(collapsed):
            found.append(
                UnknottingCounterexample(
                    word=word.to_text(), zeroed_position=position, collapsed=collapsed.to_text()
                )
            )
    return found
