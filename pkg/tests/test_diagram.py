import random
from collections import Counter

import pytest

from twobridge_surgery.conway import evaluate, parse_word
from twobridge_surgery.diagram import diagram_from_pd, diagram_from_word, link_components, pd_text
from twobridge_surgery.errors import LinkNotKnotError, PDCodeError, ZeroEntryError
from twobridge_surgery.knotpoly import alexander_via_fox
from twobridge_surgery.laurent import LaurentPoly
from twobridge_surgery.models import ConwayWord

TREFOIL_PD = [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)]


def _random_knot_words(seed, count):
    rng = random.Random(seed)
    found = 0
    while found < count:
        entries = tuple(rng.choice([-1, 1]) * rng.randint(1, 4) for _ in range(rng.randint(1, 5)))
        word = ConwayWord(entries=entries)
        value = evaluate(word)
        if value.is_infinite or abs(value.numerator) % 2 == 0:
            continue
        found += 1
        yield word


def test_trefoil_pd_code():
    d = diagram_from_pd(TREFOIL_PD)
    assert len(d.crossings) == 3
    assert d.arcs == 3
    assert d.components == 1
    assert abs(d.writhe) == 3
    assert alexander_via_fox(d) == LaurentPoly.from_terms({-1: 1, 0: -1, 1: 1})


def test_word_diagram_counts():
    d = diagram_from_word(parse_word("C(2,2)"))
    assert len(d.crossings) == 4
    assert d.components == 1
    assert d.word == parse_word("C(2,2)")
    assert pd_text(d).startswith("PD[X[")


def test_generated_pd_codes_are_well_formed():
    for word in _random_knot_words(seed=1, count=100):
        d = diagram_from_word(word)
        assert len(d.pd) == sum(abs(a) for a in word.entries)
        counts = Counter(label for row in d.pd for label in row)
        assert set(counts.values()) == {2}
        assert sorted(counts) == list(range(1, 2 * len(d.pd) + 1))
        assert d.components == 1
        assert diagram_from_pd(d.pd).crossings == d.crossings


def test_link_components_matches_parity():
    assert link_components(parse_word("C(2)")) == 2
    assert link_components(parse_word("C(2,2,2)")) == 2
    assert link_components(parse_word("C(3)")) == 1
    assert link_components(parse_word("C(2,2)@minus")) == 1


def test_diagram_from_word_rejects_links_and_zero_entries():
    with pytest.raises(LinkNotKnotError):
        diagram_from_word(parse_word("C(2)"))
    with pytest.raises(ZeroEntryError):
        diagram_from_word(ConwayWord.of(2, 0, 2))


def test_diagram_from_pd_rejects_malformed_codes():
    with pytest.raises(PDCodeError, match="four labels"):
        diagram_from_pd([(1, 2, 3)])
    with pytest.raises(PDCodeError, match="exactly twice"):
        diagram_from_pd([(1, 2, 3, 4)])


def test_empty_pd_code_is_the_unknot():
    d = diagram_from_pd([])
    assert d.components == 1
    assert d.crossings == []
