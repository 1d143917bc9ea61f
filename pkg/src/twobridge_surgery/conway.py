"""
Conway words: parsing, continued-fraction evaluation and two-bridge classification.

Two two-bridge knots are equivalent exactly when their words evaluate to fractions
p/q and p/q' with q' = q^(+-1) mod p; mirrors additionally identify q with p - q.
"""

from __future__ import annotations

import logging
from math import gcd

from .errors import TrivialKnotError, WordSyntaxError, ZeroEntryError
from .models import Convention, ConwayWord, RationalValue, TwoBridgeClass

logger = logging.getLogger(__name__)

_MINUS_SIGNS = "-−"
_DIGITS = "0123456789"


class _WordParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = self._peek() or "end of input"
            raise WordSyntaxError(f"expected '{char}', found '{found}'", self.pos)
        self.pos += 1

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        sign = 1
        if self.pos < len(self.text) and self.text[self.pos] in "+" + _MINUS_SIGNS:
            sign = -1 if self.text[self.pos] in _MINUS_SIGNS else 1
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if self.pos == digits_start:
            raise WordSyntaxError("expected an integer entry", start)
        return sign * int(self.text[digits_start : self.pos])

    def parse(self, default: Convention) -> ConwayWord:
        self._expect("C")
        self._expect("(")
        if self._peek() == ")":
            raise WordSyntaxError("empty word", self.pos)
        entries = [self._integer()]
        while self._peek() == ",":
            self.pos += 1
            entries.append(self._integer())
        self._expect(")")
        convention = default
        if self._peek() == "@":
            self.pos += 1
            self._skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            tag = self.text[start : self.pos].lower()
            try:
                convention = Convention(tag)
            except ValueError:
                raise WordSyntaxError(f"unknown convention '{tag}'", start) from None
        if self._peek():
            raise WordSyntaxError(f"unexpected '{self._peek()}'", self.pos)
        return ConwayWord(entries=tuple(entries), convention=convention)


def parse_word(text: str, default: Convention = Convention.PLUS) -> ConwayWord:
    """Parses ``C(a0,...,am)`` with an optional ``@plus``/``@minus`` suffix."""
    return _WordParser(text).parse(default)


def format_word(word: ConwayWord) -> str:
    return word.to_text()


def evaluate(word: ConwayWord) -> RationalValue:
    """Evaluates the continued fraction as a projective pair, so 1/0 propagates as infinity."""
    if word.is_empty:
        return RationalValue.infinity()
    step = 1 if word.convention is Convention.PLUS else -1
    num, den = word.entries[-1], 1
    for a in reversed(word.entries[:-1]):
        num, den = a * num + step * den, num
    return RationalValue.of(num, den)


def canonical_q(p: int, q: int, fold_mirror: bool = False) -> int:
    q %= p
    inverse = pow(q, -1, p)
    candidates = {q, inverse}
    if fold_mirror:
        candidates |= {p - q, p - inverse}
    return min(candidates)


def class_of(value: RationalValue, fold_mirror: bool = False) -> TwoBridgeClass:
    if value.is_infinite:
        raise TrivialKnotError("word evaluates to infinity: trivial knot")
    p = abs(value.numerator)
    if p <= 1:
        raise TrivialKnotError(f"word evaluates to {value}: trivial knot")
    q = value.denominator if value.numerator > 0 else -value.denominator
    return TwoBridgeClass(p=p, q=canonical_q(p, q, fold_mirror))


def require_reduced(word: ConwayWord) -> None:
    if word.is_empty:
        raise TrivialKnotError("empty word: trivial knot")
    if 0 in word.entries:
        raise ZeroEntryError(f"zero entry in reduced word {word}")


def classify(word: ConwayWord, fold_mirror: bool = False) -> TwoBridgeClass:
    require_reduced(word)
    return class_of(evaluate(word), fold_mirror)


def equivalent(w1: ConwayWord, w2: ConwayWord, fold_mirror: bool = False) -> bool:
    return classify(w1, fold_mirror) == classify(w2, fold_mirror)


def to_plus(word: ConwayWord) -> ConwayWord:
    if word.convention is Convention.PLUS:
        return word
    flipped = tuple(a if i % 2 == 0 else -a for i, a in enumerate(word.entries))
    return ConwayWord(entries=flipped, convention=Convention.PLUS)


def to_minus(word: ConwayWord) -> ConwayWord:
    if word.convention is Convention.MINUS:
        return word
    flipped = tuple(a if i % 2 == 0 else -a for i, a in enumerate(word.entries))
    return ConwayWord(entries=flipped, convention=Convention.MINUS)


def with_convention(word: ConwayWord, convention: Convention) -> ConwayWord:
    return to_plus(word) if convention is Convention.PLUS else to_minus(word)


def mirror(word: ConwayWord) -> ConwayWord:
    return word.with_entries(tuple(-a for a in word.entries))


def reverse(word: ConwayWord) -> ConwayWord:
    return word.with_entries(tuple(reversed(word.entries)))


def expand(value: RationalValue, convention: Convention = Convention.PLUS) -> ConwayWord:
    """Zero-free continued-fraction expansion of ``value``; infinity gives the empty word."""
    entries: list[int] = []
    num, den = value.numerator, value.denominator
    while den:
        a = num // den
        if a == 0:
            a = 1 if num >= 0 else -1
        entries.append(a)
        num, den = den, num - a * den
        if den < 0:
            num, den = -num, -den
    word = ConwayWord(entries=tuple(entries), convention=Convention.PLUS)
    return with_convention(word, convention)


def collapse_zeros(word: ConwayWord) -> ConwayWord:
    """Removes zero entries while preserving the evaluated value."""
    entries = list(word.entries)
    changed = True
    while changed:
        changed = False
        for i in range(1, len(entries) - 1):
            if entries[i] == 0:
                entries[i - 1 : i + 2] = [entries[i - 1] + entries[i + 1]]
                changed = True
                break
        if not changed and len(entries) >= 2 and entries[-1] == 0:
            del entries[-2:]
            changed = True
    collapsed = word.with_entries(entries)
    if len(entries) >= 2 and entries[0] == 0:
        # a leading zero inverts the value; only a fresh expansion removes it
        logger.debug("Re-expanding %s to drop its leading zero", collapsed)
        collapsed = expand(evaluate(collapsed), word.convention)
    return collapsed


def is_unknot_word(word: ConwayWord) -> bool:
    if word.is_empty:
        return True
    value = evaluate(word)
    return value.is_infinite or abs(value.numerator) == 1


def class_fraction(c: TwoBridgeClass) -> RationalValue:
    return RationalValue.of(c.p, c.q)


def enumerate_classes(
    max_p: int, knots_only: bool = True, fold_mirror: bool = False
) -> list[TwoBridgeClass]:
    """Every canonical class with 2 <= p <= max_p, ordered by (p, q)."""
    seen: set[tuple[int, int]] = set()
    for p in range(2, max_p + 1):
        if knots_only and p % 2 == 0:
            continue
        for q in range(1, p):
            if gcd(p, q) == 1:
                seen.add((p, canonical_q(p, q, fold_mirror)))
    return [TwoBridgeClass(p=p, q=q) for p, q in sorted(seen)]
