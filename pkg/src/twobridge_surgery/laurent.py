"""
Exact integer polynomials for knot invariants.

``LaurentPoly`` is a Laurent polynomial in ``t`` (Alexander polynomials), ``ZPoly`` an ordinary
polynomial in ``z`` (Conway polynomials). Both are immutable pydantic values with
arbitrary-precision integer coefficients.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import NotNormalizableError, OddExponentError, ZeroPolynomialError

logger = logging.getLogger(__name__)

_DIGITS = "0123456789"


class _TermScanner:
    """Reads ``[sign] [digits] [*] [var [^ exp]]`` terms from polynomial text."""

    def __init__(self, text: str, var: str):
        self.text = text.replace(" ", "").replace("−", "-")
        self.var = var
        self.pos = 0

    def _error(self, message: str) -> ValueError:
        return ValueError(f"{message} at position {self.pos} in {self.text!r}")

    def _digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        return self.text[start : self.pos]

    def terms(self) -> list[tuple[int, int]]:
        if self.text in ("", "0"):
            return []
        out: list[tuple[int, int]] = []
        while self.pos < len(self.text):
            sign = 1
            if self.text[self.pos] in "+-":
                sign = -1 if self.text[self.pos] == "-" else 1
                self.pos += 1
            elif out:
                raise self._error("expected '+' or '-'")
            digits = self._digits()
            if self.pos < len(self.text) and self.text[self.pos] == "*":
                if not digits:
                    raise self._error("'*' without coefficient")
                self.pos += 1
            exponent = 0
            if self.pos < len(self.text) and self.text[self.pos] == self.var:
                self.pos += 1
                exponent = 1
                if self.pos < len(self.text) and self.text[self.pos] == "^":
                    self.pos += 1
                    exp_sign = 1
                    if self.pos < len(self.text) and self.text[self.pos] == "-":
                        exp_sign = -1
                        self.pos += 1
                    exp_digits = self._digits()
                    if not exp_digits:
                        raise self._error("missing exponent")
                    exponent = exp_sign * int(exp_digits)
            elif not digits:
                raise self._error(f"expected coefficient or '{self.var}'")
            out.append((exponent, sign * int(digits or "1")))
        return out


def _term_text(coeff: int, exponent: int, var: str) -> str:
    magnitude = abs(coeff)
    if exponent == 0:
        return str(magnitude)
    power = var if exponent == 1 else f"{var}^{exponent}"
    return power if magnitude == 1 else f"{magnitude}{power}"


def _join_terms(terms: list[tuple[int, int]], var: str) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for exponent, coeff in terms:
        body = _term_text(coeff, exponent, var)
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


class LaurentPoly(BaseModel):
    """Integer Laurent polynomial in t, stored as exponent -> nonzero coefficient."""

    model_config = ConfigDict(frozen=True)

    coefficients: dict[int, int] = Field(
        default_factory=dict, description="Exponent to nonzero integer coefficient"
    )

    @field_validator("coefficients", mode="after")
    @classmethod
    def drop_zeros(cls, v: dict[int, int]) -> dict[int, int]:
        return {e: c for e, c in sorted(v.items()) if c != 0}

    @classmethod
    def from_terms(cls, terms: dict[int, int] | list[tuple[int, int]]) -> LaurentPoly:
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exponent, coeff in items:
            acc[exponent] = acc.get(exponent, 0) + coeff
        return cls(coefficients=acc)

    @classmethod
    def monomial(cls, exponent: int = 1, coeff: int = 1) -> LaurentPoly:
        return cls(coefficients={exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls(coefficients={0: value})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parses the text form (``t^-1 - 1 + t``) or the machine form (``-1:1,0:-1,1:1``)."""
        stripped = text.strip()
        if ":" in stripped:
            return cls.from_machine(stripped)
        return cls.from_terms(_TermScanner(stripped, "t").terms())

    @classmethod
    def from_machine(cls, text: str) -> LaurentPoly:
        terms: list[tuple[int, int]] = []
        for pair in filter(None, (p.strip() for p in text.split(","))):
            exponent, _, coeff = pair.partition(":")
            terms.append((int(exponent), int(coeff)))
        return cls.from_terms(terms)

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def min_exp(self) -> int:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no exponents")
        return min(self.coefficients)

    @property
    def max_exp(self) -> int:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no exponents")
        return max(self.coefficients)

    def span(self) -> int:
        return self.max_exp - self.min_exp

    def coeff(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def shift(self, k: int) -> LaurentPoly:
        """Multiplies by the unit t^k."""
        return LaurentPoly(coefficients={e + k: c for e, c in self.coefficients.items()})

    def scale_exponents(self, factor: int) -> LaurentPoly:
        """Substitutes t -> t^factor."""
        return LaurentPoly(coefficients={e * factor: c for e, c in self.coefficients.items()})

    def evaluate(self, at: int | Fraction) -> Fraction:
        value = Fraction(at)
        return sum((c * value**e for e, c in self.coefficients.items()), Fraction(0))

    def value_at_one(self) -> int:
        return sum(self.coefficients.values())

    def is_symmetric(self) -> bool:
        return all(self.coeff(-e) == c for e, c in self.coefficients.items())

    def __add__(self, other: Any) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self.coefficients)
        for e, c in other.coefficients.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(coefficients=acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(coefficients={e: -c for e, c in self.coefficients.items()})

    def __sub__(self, other: Any) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(coefficients={e: c * other for e, c in self.coefficients.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.coefficients.items():
            for e2, c2 in other.coefficients.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(coefficients=acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def to_text(self) -> str:
        return _join_terms(sorted(self.coefficients.items()), "t")

    def to_machine(self) -> str:
        return ",".join(f"{e}:{c}" for e, c in sorted(self.coefficients.items()))

    def __str__(self) -> str:
        return self.to_text()


class ZPoly(BaseModel):
    """Integer polynomial in z, stored as a coefficient list indexed by degree."""

    model_config = ConfigDict(frozen=True)

    coefficients: tuple[int, ...] = Field(
        default=(), description="Coefficient of z^i at index i; highest entry nonzero"
    )

    @field_validator("coefficients", mode="after")
    @classmethod
    def trim(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        end = len(v)
        while end and v[end - 1] == 0:
            end -= 1
        return tuple(v[:end])

    @classmethod
    def of(cls, *coeffs: int) -> ZPoly:
        return cls(coefficients=tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> ZPoly:
        """Parses the machine form ``[c0,c1,...]`` or the text form ``1 + z^2``."""
        stripped = text.strip()
        if stripped.startswith("["):
            body = stripped.strip("[]").strip()
            return cls(coefficients=tuple(int(c) for c in body.split(",") if c.strip()))
        terms = _TermScanner(stripped, "z").terms()
        if any(e < 0 for e, _ in terms):
            raise ValueError(f"negative power of z in {text!r}")
        size = max((e for e, _ in terms), default=-1) + 1
        coeffs = [0] * size
        for e, c in terms:
            coeffs[e] += c
        return cls(coefficients=tuple(coeffs))

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no degree")
        return len(self.coefficients) - 1

    def coeff(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def has_only_even_powers(self) -> bool:
        return all(c == 0 for c in self.coefficients[1::2])

    def evaluate(self, at: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * at + c
        return value

    def __add__(self, other: Any) -> ZPoly:
        if isinstance(other, int):
            other = ZPoly.of(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return ZPoly(coefficients=tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> ZPoly:
        return ZPoly(coefficients=tuple(-c for c in self.coefficients))

    def __sub__(self, other: Any) -> ZPoly:
        if isinstance(other, int):
            other = ZPoly.of(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> ZPoly:
        if isinstance(other, int):
            return ZPoly(coefficients=tuple(c * other for c in self.coefficients))
        if not isinstance(other, ZPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZPoly()
        acc = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    acc[i + j] += a * b
        return ZPoly(coefficients=tuple(acc))

    __rmul__ = __mul__

    def to_text(self) -> str:
        return _join_terms([(i, c) for i, c in enumerate(self.coefficients) if c], "z")

    def to_machine(self) -> str:
        return "[" + ",".join(str(c) for c in self.coefficients) + "]"

    def __str__(self) -> str:
        return self.to_text()


def span(p: LaurentPoly) -> int:
    return p.span()


def degree(c: ZPoly) -> int:
    return c.degree()


def _z_power(m: int) -> LaurentPoly:
    """(x - x^-1)^m as a Laurent polynomial in x."""
    return LaurentPoly(coefficients={m - 2 * i: comb(m, i) * (-1) ** i for i in range(m + 1)})


def peel_conway(d: LaurentPoly) -> ZPoly:
    """Rewrites a symmetric Laurent polynomial in x as a polynomial in z = x - x^-1."""
    coeffs: dict[int, int] = {}
    rest = d
    while not rest.is_zero():
        m = rest.max_exp
        if m < 0:
            raise NotNormalizableError(f"not a polynomial in x - 1/x: {d.to_text()}")
        c = rest.coeff(m)
        coeffs[m] = c
        rest = rest - _z_power(m) * c
    size = max(coeffs, default=-1) + 1
    return ZPoly(coefficients=tuple(coeffs.get(i, 0) for i in range(size)))


def conway_to_alexander(c: ZPoly) -> LaurentPoly:
    """Substitutes z -> t - t^-1 (giving Delta(t^2)) and halves every exponent."""
    substituted = LaurentPoly()
    for k, coeff in enumerate(c.coefficients):
        if coeff:
            substituted = substituted + _z_power(k) * coeff
    odd = [e for e in substituted.coefficients if e % 2]
    if odd:
        raise OddExponentError(f"odd exponent after substitution: {odd[0]} in {c.to_text()}")
    return LaurentPoly(coefficients={e // 2: v for e, v in substituted.coefficients.items()})


def alexander_to_conway(delta: LaurentPoly) -> ZPoly:
    """Inverse of ``conway_to_alexander`` on symmetric knot polynomials."""
    if not delta.is_symmetric():
        raise NotNormalizableError(f"Alexander polynomial is not symmetric: {delta.to_text()}")
    return peel_conway(delta.scale_exponents(2))


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Returns the symmetric unit multiple +-t^k * p with value +1 at t = 1."""
    if p.is_zero():
        raise NotNormalizableError("zero polynomial is not unit-normalizable")
    at_one = p.value_at_one()
    if at_one not in (1, -1):
        raise NotNormalizableError(f"value at t=1 is {at_one}, expected +-1: {p.to_text()}")
    centre = p.min_exp + p.max_exp
    if centre % 2:
        raise NotNormalizableError(f"odd span, no symmetric representative: {p.to_text()}")
    shifted = p.shift(-centre // 2) * at_one
    if not shifted.is_symmetric():
        raise NotNormalizableError(f"no symmetric representative: {p.to_text()}")
    return shifted
