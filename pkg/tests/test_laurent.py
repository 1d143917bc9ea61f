import random
from fractions import Fraction

import pytest

from twobridge_surgery.errors import (
    NotNormalizableError,
    OddExponentError,
    ZeroPolynomialError,
)
from twobridge_surgery.laurent import (
    LaurentPoly,
    ZPoly,
    alexander_to_conway,
    conway_to_alexander,
    degree,
    normalize_alexander,
    span,
)

TREFOIL = LaurentPoly.from_terms({-1: 1, 0: -1, 1: 1})
FIGURE_EIGHT = LaurentPoly.from_terms({-1: -1, 0: 3, 1: -1})


def test_zero_coefficients_are_dropped():
    p = LaurentPoly.from_terms([(0, 1), (2, 0), (0, -1)])
    assert p.is_zero()
    assert ZPoly.of(1, 0, 0).coefficients == (1,)


def test_span_and_degree():
    assert span(TREFOIL) == 2
    assert span(LaurentPoly.monomial(5, -3)) == 0
    assert degree(ZPoly.of(1, 0, 1)) == 2
    assert degree(ZPoly.of(7)) == 0


def test_degree_of_zero_polynomial_raises():
    with pytest.raises(ZeroPolynomialError):
        degree(ZPoly())


def test_conway_to_alexander_known_knots():
    assert conway_to_alexander(ZPoly.of(1)) == LaurentPoly.constant(1)
    assert conway_to_alexander(ZPoly.of(1, 0, 1)) == TREFOIL
    assert conway_to_alexander(ZPoly.of(1, 0, -1)) == FIGURE_EIGHT


def test_conway_to_alexander_rejects_odd_powers():
    with pytest.raises(OddExponentError):
        conway_to_alexander(ZPoly.of(1, 1))


def test_alexander_to_conway_inverts():
    for nabla in (ZPoly.of(1), ZPoly.of(1, 0, 1), ZPoly.of(1, 0, 3, 0, 1), ZPoly.of(1, 0, -2)):
        assert alexander_to_conway(conway_to_alexander(nabla)) == nabla


def test_normalize_alexander_unit_multiples():
    raw = LaurentPoly.from_terms({3: -1, 4: 1, 5: -1})
    assert normalize_alexander(raw) == TREFOIL
    assert normalize_alexander(TREFOIL.shift(-7) * -1) == TREFOIL


def test_normalize_alexander_rejects_non_unit_at_one():
    with pytest.raises(NotNormalizableError):
        normalize_alexander(LaurentPoly.from_terms({0: 1, 1: 1}))
    with pytest.raises(NotNormalizableError):
        normalize_alexander(LaurentPoly())


def test_arithmetic():
    t = LaurentPoly.monomial(1)
    assert (t - 1) * (t - 1) == LaurentPoly.from_terms({0: 1, 1: -2, 2: 1})
    assert (t**3).coeff(3) == 1
    assert (ZPoly.of(1, 1) * ZPoly.of(1, -1)) == ZPoly.of(1, 0, -1)
    assert ZPoly.of(1, 0, 1) - 1 == ZPoly.of(0, 0, 1)


def test_evaluate():
    assert TREFOIL.evaluate(-1) == Fraction(-3)
    assert TREFOIL.value_at_one() == 1
    assert TREFOIL.evaluate(Fraction(1, 2)) == Fraction(3, 2)
    assert ZPoly.of(1, 0, 1).evaluate(2) == 5


def test_text_forms():
    assert TREFOIL.to_text() == "t^-1 - 1 + t"
    assert FIGURE_EIGHT.to_text() == "-t^-1 + 3 - t"
    assert ZPoly.of(1, 0, 1).to_text() == "1 + z^2"
    assert ZPoly.of(1, 0, -1).to_machine() == "[1,0,-1]"
    assert LaurentPoly().to_text() == "0"


def test_parse_accepts_text_and_machine_forms():
    assert LaurentPoly.parse("t^-1 - 1 + t") == TREFOIL
    assert LaurentPoly.parse(TREFOIL.to_machine()) == TREFOIL
    assert LaurentPoly.parse("-3*t^2 + 2t") == LaurentPoly.from_terms({1: 2, 2: -3})
    assert ZPoly.parse("1 − z^2") == ZPoly.of(1, 0, -1)
    assert ZPoly.parse("[1,0,3,0,1]") == ZPoly.of(1, 0, 3, 0, 1)


def test_parse_errors_carry_position():
    with pytest.raises(ValueError, match="position"):
        LaurentPoly.parse("t^")
    with pytest.raises(ValueError, match="negative power"):
        ZPoly.parse("z^-1")


def test_parse_rejects_non_ascii_digits():
    with pytest.raises(ValueError, match="position"):
        LaurentPoly.parse("t^²")


def _random_laurent(rng: random.Random) -> LaurentPoly:
    return LaurentPoly.from_terms(
        [(rng.randint(-4, 4), rng.randint(-5, 5)) for _ in range(rng.randint(0, 4))]
    )


def _random_zpoly(rng: random.Random) -> ZPoly:
    return ZPoly.of(*(rng.randint(-5, 5) for _ in range(rng.randint(1, 5))))


def test_laurent_ring_axioms_on_random_polynomials():
    rng = random.Random(11)
    for _ in range(500):
        a, b, c = _random_laurent(rng), _random_laurent(rng), _random_laurent(rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        assert a * LaurentPoly.constant(1) == a


def test_span_is_additive_under_products():
    rng = random.Random(12)
    checked = 0
    while checked < 500:
        a, b = _random_laurent(rng), _random_laurent(rng)
        if a.is_zero() or b.is_zero():
            continue
        assert span(a * b) == span(a) + span(b)
        checked += 1


def test_zpoly_ring_axioms_and_degree():
    rng = random.Random(13)
    for _ in range(500):
        a, b, c = _random_zpoly(rng), _random_zpoly(rng), _random_zpoly(rng)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero() and not b.is_zero():
            assert degree(a * b) == degree(a) + degree(b)
