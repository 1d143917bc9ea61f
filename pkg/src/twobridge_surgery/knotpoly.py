"""
Alexander and Conway polynomials of two-bridge knots by two independent routes.

The Fox route works on the Wirtinger presentation of the word's own diagram. The
Seifert route works on the banded Seifert matrix of the class's all-even expansion.
Both share the exact determinant over Z[t, 1/t].
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import floor

from . import __version__
from .cache import cache
from .conway import (
    class_fraction,
    classify,
    enumerate_classes,
    evaluate,
    expand,
    require_reduced,
    to_minus,
)
from .diagram import diagram_from_word
from .errors import InvariantBreach, LinkNotKnotError, NotNormalFormError, TwoBridgeError
from .interfaces import (
    ClassInvariants,
    RouteMismatch,
    RouteReport,
    WordInvariants,
)
from .laurent import LaurentPoly, ZPoly, conway_to_alexander, normalize_alexander, peel_conway
from .models import (
    Convention,
    ConwayWord,
    Diagram,
    IndexSet,
    Orientation,
    Reading,
    SeifertMatrix,
    TwoBridgeClass,
)

logger = logging.getLogger(__name__)

LITERAL_READING = Reading(rule=Convention.PLUS)


def _bareiss(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _unit_inverse(e: LaurentPoly) -> LaurentPoly | None:
    """Inverse of a unit +-t^k of Z[t, 1/t], or None."""
    if len(e.coefficients) != 1:
        return None
    ((k, c),) = e.coefficients.items()
    if c not in (1, -1):
        return None
    return LaurentPoly(coefficients={-k: c})


def _eliminate_units(
    matrix: Sequence[Sequence[LaurentPoly]],
) -> tuple[LaurentPoly, list[list[LaurentPoly]]]:
    """
    Takes Schur complements on unit pivots while any remain, cheapest (Markowitz) first.

    Returns ``(factor, rest)`` with ``det(matrix) == factor * det(rest)``. Dividing by a unit
    is exact, so entries only grow by the fill-in of sparse rows.
    """
    n = len(matrix)
    rows: dict[int, dict[int, LaurentPoly]] = {
        i: {j: e for j, e in enumerate(row) if not e.is_zero()} for i, row in enumerate(matrix)
    }
    cols: dict[int, set[int]] = {j: set() for j in range(n)}
    for i, row in rows.items():
        for j in row:
            cols[j].add(i)

    factor = LaurentPoly.constant(1)
    while rows:
        best: tuple[int, int, int, LaurentPoly] | None = None
        for i, row in rows.items():
            for j, e in row.items():
                inv = _unit_inverse(e)
                if inv is None:
                    continue
                cost = (len(row) - 1) * (len(cols[j]) - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j, inv)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, r, c, inv = best
        position = sum(1 for i in rows if i < r) + sum(1 for j in cols if j < c)
        pivot_row = rows.pop(r)
        factor = factor * pivot_row[c]
        if position % 2:
            factor = -factor
        for j in pivot_row:
            cols[j].discard(r)
        for i in cols.pop(c):
            row = rows[i]
            m = row.pop(c) * inv
            for j, e in pivot_row.items():
                if j == c:
                    continue
                value = row.get(j, LaurentPoly()) - m * e
                if value.is_zero():
                    row.pop(j, None)
                    cols[j].discard(i)
                else:
                    row[j] = value
                    cols[j].add(i)

    rest = [[rows[i].get(j, LaurentPoly()) for j in sorted(cols)] for i in sorted(rows)]
    return factor, rest


def _kronecker_determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """
    Rows are shifted to nonnegative exponents by units, evaluated at t = 2^B with B above
    the Hadamard-style coefficient bound, reduced with integer Bareiss elimination, and
    read back digit by digit in balanced base 2^B.
    """
    if not matrix:
        return LaurentPoly.constant(1)
    total_shift = 0
    rows: list[list[LaurentPoly]] = []
    for row in matrix:
        nonzero = [e for e in row if not e.is_zero()]
        if not nonzero:
            return LaurentPoly()
        low = min(e.min_exp for e in nonzero)
        total_shift += low
        rows.append([e.shift(-low) for e in row])

    bound = 1
    for row in rows:
        bound *= sum(abs(c) for e in row for c in e.coefficients.values())
    bits = bound.bit_length() + 2
    base = 1 << bits
    value = _bareiss(
        [[sum(c * base**k for k, c in e.coefficients.items()) for e in row] for row in rows]
    )

    coefficients: dict[int, int] = {}
    k = 0
    while value:
        digit = value % base
        if digit >= base >> 1:
            digit -= base
        coefficients[k] = digit
        value = (value - digit) // base
        k += 1
    return LaurentPoly(coefficients=coefficients).shift(total_shift)


def determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """
    Exact determinant of a square matrix over Z[t, 1/t].

    Unit pivots are eliminated first; Fox and banded Seifert matrices reduce to a few rows
    this way. Whatever remains goes through the dense Kronecker-substitution route.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.constant(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    factor, rest = _eliminate_units(matrix)
    if rest:
        logger.debug("Unit elimination left a %dx%d block of %dx%d", len(rest), len(rest), n, n)
    return factor * _kronecker_determinant(rest)


def fox_matrix(d: Diagram) -> list[list[LaurentPoly]]:
    """Abelianized Fox Jacobian: one row per crossing, one column per Wirtinger arc."""
    t = LaurentPoly.monomial(1)
    one = LaurentPoly.constant(1)
    matrix: list[list[LaurentPoly]] = []
    for x in d.crossings:
        row = [LaurentPoly() for _ in range(d.arcs)]
        if x.sign > 0:
            terms = ((x.over, one - t), (x.under_in, t), (x.under_out, -one))
        else:
            terms = ((x.over, t - one), (x.under_in, one), (x.under_out, -t))
        for column, value in terms:
            row[column] = row[column] + value
        matrix.append(row)
    return matrix


def alexander_via_fox(d: Diagram) -> LaurentPoly:
    if d.components != 1:
        raise LinkNotKnotError(f"Fox route needs a knot, diagram has {d.components} components")
    if not d.crossings:
        return LaurentPoly.constant(1)
    minor = [row[:-1] for row in fox_matrix(d)[:-1]]
    return normalize_alexander(determinant(minor))


def _nearest_even(num: int, den: int) -> int:
    return 2 * floor(Fraction(num, den) / 2 + Fraction(1, 2))


def even_form(c: TwoBridgeClass, convention: Convention = Convention.PLUS) -> ConwayWord:
    """All-even, even-length expansion of p/q' with q' = q or q - p, whichever is even."""
    if not c.is_knot:
        raise LinkNotKnotError(f"{c} is a link; the all-even expansion needs p odd")
    num, den = c.p, c.q if c.q % 2 == 0 else c.q - c.p
    entries: list[int] = []
    while den:
        if len(entries) > c.p:
            raise InvariantBreach(f"all-even expansion of {c} did not terminate")
        a = _nearest_even(num, den)
        entries.append(a)
        num, den = den, num - a * den
    word = ConwayWord(entries=tuple(entries), convention=Convention.PLUS)
    return word if convention is Convention.PLUS else to_minus(word)


def seifert_from_even(word: ConwayWord) -> SeifertMatrix:
    """Diagonal a_i/2 of the MINUS form with a unit superdiagonal."""
    entries = to_minus(word).entries
    if len(entries) % 2:
        raise NotNormalFormError(f"{word} has odd length; the Seifert route needs even length")
    odd = [a for a in entries if a % 2]
    if odd:
        raise NotNormalFormError(f"odd entry {odd[0]} in {word}")
    n = len(entries)
    rows = tuple(
        tuple(entries[i] // 2 if i == j else 1 if j == i + 1 else 0 for j in range(n))
        for i in range(n)
    )
    v = SeifertMatrix(entries=rows)
    form = determinant(
        [[LaurentPoly.constant(rows[i][j] - rows[j][i]) for j in range(n)] for i in range(n)]
    )
    if form not in (LaurentPoly.constant(1), LaurentPoly.constant(-1)):
        raise InvariantBreach(f"det(V - V^T) = {form.to_text()} for {word}")
    return v


def alexander_via_seifert(v: SeifertMatrix) -> LaurentPoly:
    t = LaurentPoly.monomial(1)
    vt = v.transpose()
    matrix = [
        [LaurentPoly.constant(v.entries[i][j]) - t * vt[i][j] for j in range(v.dimension)]
        for i in range(v.dimension)
    ]
    return normalize_alexander(determinant(matrix))


def conway_via_seifert(v: SeifertMatrix) -> ZPoly:
    """Expands det(xV - x^-1 V^T) in z = x - x^-1."""
    x = LaurentPoly.monomial(1)
    x_inv = LaurentPoly.monomial(-1)
    vt = v.transpose()
    matrix = [
        [x * v.entries[i][j] - x_inv * vt[i][j] for j in range(v.dimension)]
        for i in range(v.dimension)
    ]
    nabla = peel_conway(determinant(matrix))
    if nabla.coeff(0) != 1:
        raise InvariantBreach(f"Conway polynomial {nabla} does not have constant term 1")
    return nabla


def degree_prediction(word: ConwayWord, reading: Reading = LITERAL_READING) -> int:
    """Sum of |a| over alternate entries, read as the given index set and orientation."""
    if not word.entries or len(word) % 2 or 0 in word.entries:
        raise NotNormalFormError(f"{word} is not in normal form (even length, nonzero entries)")
    entries = word.entries
    if reading.orientation is Orientation.REVERSED:
        entries = entries[::-1]
    start = 0 if reading.index_set is IndexSet.EVEN else 1
    return sum(abs(a) for a in entries[start::2])


def even_form_degree(word: ConwayWord) -> int:
    """Degree of the Conway polynomial read off an all-even expansion: its length."""
    if len(word) % 2 or any(a == 0 or a % 2 for a in word.entries):
        raise NotNormalFormError(f"{word} is not an all-even expansion")
    return len(word)


def check_knot_polynomials(delta: LaurentPoly, nabla: ZPoly, p: int) -> None:
    """Raises InvariantBreach unless both are knot polynomials with |Delta(-1)| = p."""
    if delta.value_at_one() != 1 or not delta.is_symmetric():
        raise InvariantBreach(f"Delta = {delta} is not normalized")
    if nabla.coeff(0) != 1 or not nabla.has_only_even_powers():
        raise InvariantBreach(f"nabla = {nabla} is not a knot Conway polynomial")
    if abs(delta.evaluate(-1)) != p:
        raise InvariantBreach(f"|Delta(-1)| = {abs(delta.evaluate(-1))}, expected {p}")


def compute_class_invariants(p: int, q: int) -> ClassInvariants:
    c = TwoBridgeClass(p=p, q=q)
    word = expand(class_fraction(c))
    fox = alexander_via_fox(diagram_from_word(word))
    ev = even_form(c)
    v = seifert_from_even(ev)
    seifert = alexander_via_seifert(v)
    nabla = conway_via_seifert(v)
    agree = fox == seifert and conway_to_alexander(nabla) == seifert
    if not agree:
        logger.warning("Routes disagree on %s: fox=%s seifert=%s", c, fox, seifert)
    return ClassInvariants(
        p=p,
        q=q,
        word=word.to_text(),
        even_form=ev.to_text(),
        conway=nabla,
        alexander=fox,
        alexander_seifert=seifert,
        degree=nabla.degree(),
        span=fox.span(),
        genus=fox.span() // 2,
        determinant=abs(int(fox.evaluate(-1))),
        routes_agree=agree,
    )


@cache.memoize(name=f"twobridge_surgery.class_invariants-{__version__}")
def class_invariants(p: int, q: int) -> ClassInvariants:
    return compute_class_invariants(p, q)


def _route_task(args: tuple[int, int, bool]) -> ClassInvariants | RouteMismatch:
    p, q, use_cache = args
    try:
        inv = class_invariants(p, q) if use_cache else compute_class_invariants(p, q)
        check_knot_polynomials(inv.alexander, inv.conway, p)
    except TwoBridgeError as exc:
        return RouteMismatch(p=p, q=q, reason=f"{type(exc).__name__}: {exc}")
    return inv


def route_agreement(max_p: int, jobs: int = 1, use_cache: bool = True) -> RouteReport:
    """Compares both routes on every knot class with p <= max_p, in canonical class order."""
    classes = enumerate_classes(max_p)
    tasks = [(c.p, c.q, use_cache) for c in classes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_route_task, tasks, chunksize=16))
    else:
        results = [_route_task(task) for task in tasks]

    report = RouteReport(max_p=max_p, checked=len(results))
    current_p = 0
    for result in results:
        if isinstance(result, RouteMismatch):
            logger.warning("Class %d/%d: %s", result.p, result.q, result.reason)
            report.mismatches.append(result)
            continue
        if result.p != current_p:
            current_p = result.p
            logger.info("Route agreement: p=%d", current_p)
        if not result.routes_agree:
            report.mismatches.append(
                RouteMismatch(
                    p=result.p,
                    q=result.q,
                    reason="routes disagree",
                    fox=result.alexander.to_text(),
                    seifert=result.alexander_seifert.to_text(),
                )
            )
    return report


def _word_routes(
    word: ConwayWord,
) -> tuple[TwoBridgeClass | None, ConwayWord, ZPoly, LaurentPoly, LaurentPoly]:
    require_reduced(word)
    fox = alexander_via_fox(diagram_from_word(word))
    value = evaluate(word)
    unknot = value.is_infinite or abs(value.numerator) == 1
    if unknot:
        c = None
        ev = ConwayWord(entries=(), convention=Convention.MINUS)
        p = 1
    else:
        c = classify(word)
        ev = even_form(c, Convention.MINUS)
        p = c.p
    v = seifert_from_even(ev)
    seifert = alexander_via_seifert(v)
    nabla = conway_via_seifert(v)
    check_knot_polynomials(fox, nabla, p)
    return c, ev, nabla, fox, seifert


def word_polynomials(word: ConwayWord) -> tuple[ZPoly, LaurentPoly]:
    """Conway and normalized Alexander polynomial of a word closing to a knot."""
    _, _, nabla, fox, _ = _word_routes(word)
    return nabla, fox


def knot_invariants(word: ConwayWord) -> WordInvariants:
    """Both routes for one word: Fox on its own diagram, Seifert on its class's even form."""
    c, ev, nabla, fox, seifert = _word_routes(word)
    try:
        prediction: int | None = degree_prediction(word)
    except NotNormalFormError:
        prediction = None
    return WordInvariants(
        word=word.to_text(),
        two_bridge_class=c.to_text() if c else None,
        unknot=c is None,
        conway=nabla.to_text(),
        alexander=fox.to_text(),
        degree=nabla.degree(),
        span=fox.span(),
        degree_prediction=prediction,
        even_form=ev.to_text(),
        even_form_degree=even_form_degree(ev),
        routes_agree=fox == seifert and conway_to_alexander(nabla) == seifert,
    )
