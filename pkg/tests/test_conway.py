import random
from math import gcd

import pytest

from twobridge_surgery.conway import (
    canonical_q,
    classify,
    collapse_zeros,
    enumerate_classes,
    equivalent,
    evaluate,
    expand,
    format_word,
    is_unknot_word,
    mirror,
    parse_word,
    reverse,
    to_minus,
    to_plus,
)
from twobridge_surgery.errors import TrivialKnotError, WordSyntaxError, ZeroEntryError
from twobridge_surgery.models import Convention, ConwayWord, RationalValue, TwoBridgeClass


def test_parse_word_tags_and_whitespace():
    word = parse_word(" C( 2 , -3 ) @minus ")
    assert word.entries == (2, -3)
    assert word.convention is Convention.MINUS
    assert parse_word("C(3)").convention is Convention.PLUS
    assert parse_word("C(3)", default=Convention.MINUS).convention is Convention.MINUS
    assert parse_word("C(2,−2)").entries == (2, -2)


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("C()", "empty word"),
        ("C(2,,2)", "position 4"),
        ("D(2)", "expected 'C'"),
        ("C(2", "expected ')'"),
        ("C(2)@sideways", "unknown convention"),
        ("C(2) x", "unexpected 'x'"),
        ("C(²)", "expected an integer entry at position 2"),
    ],
)
def test_parse_word_errors(text, message):
    with pytest.raises(WordSyntaxError, match=message):
        parse_word(text)


def test_format_word_inverts_parse():
    rng = random.Random(7)
    for _ in range(50):
        entries = tuple(rng.choice([-1, 1]) * rng.randint(1, 9) for _ in range(rng.randint(1, 6)))
        word = ConwayWord(entries=entries, convention=rng.choice(list(Convention)))
        assert parse_word(format_word(word)) == word


def test_evaluate_both_rules():
    assert evaluate(ConwayWord.of(2, 2)) == RationalValue.of(5, 2)
    assert evaluate(ConwayWord.of(2, 2, convention=Convention.MINUS)) == RationalValue.of(3, 2)
    assert evaluate(ConwayWord.of(3)) == RationalValue.of(3)
    assert evaluate(ConwayWord(entries=())).is_infinite


def test_evaluate_passes_through_infinity():
    # 1 + 1/(-1 + 1/1) = 1 + 1/0
    assert evaluate(ConwayWord.of(1, -1, 1)).is_infinite


def test_classify_examples():
    assert classify(parse_word("C(2,2)@plus")) == TwoBridgeClass(p=5, q=2)
    assert classify(parse_word("C(3)")) == TwoBridgeClass(p=3, q=1)
    assert classify(parse_word("C(2,2)@minus")) == TwoBridgeClass(p=3, q=2)
    assert classify(parse_word("C(2,2)@minus"), fold_mirror=True) == TwoBridgeClass(p=3, q=1)


def test_classify_rejects_zero_entries_and_trivial_words():
    with pytest.raises(ZeroEntryError, match="zero entry in reduced word"):
        classify(parse_word("C(2,0,2)"))
    with pytest.raises(TrivialKnotError):
        classify(parse_word("C(1)"))
    with pytest.raises(TrivialKnotError, match="empty word"):
        classify(ConwayWord(entries=()))


def test_equivalent_by_evaluation():
    assert equivalent(parse_word("C(2,2)@plus"), parse_word("C(1,1,1,1)@plus"))
    assert not equivalent(parse_word("C(3)"), parse_word("C(2,2)"))


def test_mirror_is_distinct_unless_folded():
    trefoil = parse_word("C(3)")
    assert not equivalent(trefoil, mirror(trefoil))
    assert equivalent(trefoil, mirror(trefoil), fold_mirror=True)


def test_reverse_changes_q_to_an_inverse():
    word = parse_word("C(2,3)")
    assert evaluate(reverse(word)) == RationalValue.of(7, 2)
    assert classify(reverse(word), fold_mirror=True) == classify(word, fold_mirror=True)


def test_convention_conversion_preserves_value():
    rng = random.Random(11)
    for _ in range(100):
        entries = tuple(rng.choice([-1, 1]) * rng.randint(1, 5) for _ in range(rng.randint(1, 7)))
        plus = ConwayWord(entries=entries)
        minus = to_minus(plus)
        assert minus.convention is Convention.MINUS
        assert evaluate(minus) == evaluate(plus)
        assert to_plus(minus) == plus


def test_canonical_q():
    assert canonical_q(5, 3) == 2
    assert canonical_q(7, 4) == 2
    assert canonical_q(7, 3) == 3
    assert canonical_q(7, 3, fold_mirror=True) == 2
    assert canonical_q(5, -1) == 4


def test_expand_is_zero_free_and_value_preserving():
    rng = random.Random(3)
    for _ in range(200):
        value = RationalValue.of(rng.randint(-200, 200), rng.randint(1, 200))
        word = expand(value)
        assert 0 not in word.entries
        assert evaluate(word) == value
    assert expand(RationalValue.of(5, 2)).entries == (2, 2)
    assert expand(RationalValue.infinity()).is_empty


def test_expand_in_minus_rule():
    word = expand(RationalValue.of(9, 7), Convention.MINUS)
    assert word.convention is Convention.MINUS
    assert evaluate(word) == RationalValue.of(9, 7)


def test_collapse_zeros():
    assert collapse_zeros(ConwayWord.of(2, 0, 3)).entries == (5,)
    assert collapse_zeros(ConwayWord.of(1, 2, 0)).entries == (1,)
    assert collapse_zeros(ConwayWord.of(0)).entries == (0,)
    leading = ConwayWord.of(0, 3, 2)
    collapsed = collapse_zeros(leading)
    assert 0 not in collapsed.entries
    assert evaluate(collapsed) == evaluate(leading)


def test_collapse_zeros_preserves_value_on_random_words():
    rng = random.Random(5)
    for _ in range(300):
        entries = [rng.randint(-3, 3) for _ in range(rng.randint(2, 7))]
        word = ConwayWord(entries=tuple(entries))
        before = evaluate(word)
        after = evaluate(collapse_zeros(word))
        assert after == before


def test_is_unknot_word():
    assert is_unknot_word(ConwayWord(entries=()))
    assert is_unknot_word(ConwayWord.of(1))
    assert is_unknot_word(ConwayWord.of(2, -1))
    assert is_unknot_word(ConwayWord.of(1, -2))
    assert not is_unknot_word(ConwayWord.of(3))


def test_enumerate_classes():
    assert [c.to_text() for c in enumerate_classes(5)] == ["3/1", "3/2", "5/1", "5/2", "5/4"]
    assert [c.to_text() for c in enumerate_classes(5, fold_mirror=True)] == ["3/1", "5/1", "5/2"]
    assert TwoBridgeClass(p=4, q=1) in enumerate_classes(4, knots_only=False)


def _random_expansion(num: int, den: int, rng: random.Random) -> ConwayWord:
    """A zero-free plus-rule word for num/den, rounding each partial quotient either way."""
    entries: list[int] = []
    while den:
        a = num // den
        if num % den and rng.random() < 0.5:
            a += 1
        entries.append(a)
        num, den = den, num - a * den
        if den < 0:
            num, den = -num, -den
    return ConwayWord(entries=tuple(entries))


def test_random_expansions_of_one_fraction_classify_identically():
    rng = random.Random(21)
    for _ in range(300):
        p = rng.choice(range(3, 400, 2))
        q = rng.randint(1, p - 1)
        if gcd(p, q) != 1:
            continue
        expected = classify(expand(RationalValue.of(p, q)))
        for _ in range(5):
            word = _random_expansion(p, q, rng)
            assert 0 not in word.entries
            assert evaluate(word) == RationalValue.of(p, q)
            assert classify(word) == expected
            assert classify(to_minus(word)) == expected
            assert classify(mirror(word), fold_mirror=True) == classify(word, fold_mirror=True)
            assert classify(reverse(word), fold_mirror=True) == classify(word, fold_mirror=True)


def test_q_and_its_inverse_classify_identically_up_to_sixty():
    for p in range(2, 61):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            inverse = pow(q, -1, p)
            word = expand(RationalValue.of(p, q))
            other = expand(RationalValue.of(p, inverse))
            assert classify(word) == classify(other)
            assert equivalent(word, other)
