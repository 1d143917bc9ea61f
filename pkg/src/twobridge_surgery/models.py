import logging
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import NotPrimitiveError, RankMismatchError, ZeroVectorError

logger = logging.getLogger(__name__)

LatticeVector = tuple[int, ...]


class Convention(str, Enum):
    """Word-to-fraction rule: ``a0 + 1/(a1 + ...)`` or ``a0 - 1/(a1 - ...)``."""

    PLUS = "plus"
    MINUS = "minus"


class ConwayWord(BaseModel):
    """Half-twist counts naming a two-bridge diagram. The empty word is the unknot closure."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[int, ...] = Field(..., description="Half-twist counts a0, ..., am")
    convention: Convention = Field(Convention.PLUS, description="Evaluation rule")

    @classmethod
    def of(cls, *entries: int, convention: Convention = Convention.PLUS) -> "ConwayWord":
        return cls(entries=tuple(entries), convention=convention)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def is_reduced(self) -> bool:
        return bool(self.entries) and 0 not in self.entries

    def with_entries(self, entries: tuple[int, ...] | list[int]) -> "ConwayWord":
        return ConwayWord(entries=tuple(entries), convention=self.convention)

    def to_text(self) -> str:
        return f"C({','.join(str(a) for a in self.entries)})@{self.convention.value}"

    def __str__(self) -> str:
        return self.to_text()


class RationalValue(BaseModel):
    """A rational number in lowest terms, or the formal value infinity (denominator 0)."""

    model_config = ConfigDict(frozen=True)

    numerator: int
    denominator: int = Field(..., ge=0)

    @model_validator(mode="before")
    @classmethod
    def lowest_terms(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        n, d = int(data["numerator"]), int(data["denominator"])
        if n == 0 and d == 0:
            raise ValueError("0/0 is not a value")
        if d < 0 or (d == 0 and n < 0):
            n, d = -n, -d
        g = gcd(n, d)
        return {"numerator": n // g, "denominator": d // g}

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> "RationalValue":
        return cls(numerator=numerator, denominator=denominator)

    @classmethod
    def infinity(cls) -> "RationalValue":
        return cls(numerator=1, denominator=0)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ZeroDivisionError("infinity has no Fraction value")
        return Fraction(self.numerator, self.denominator)

    def to_text(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self.numerator}/{self.denominator}"

    def __str__(self) -> str:
        return self.to_text()


class TwoBridgeClass(BaseModel):
    """Canonical (p, q) of a two-bridge knot or link: 0 < q < p, gcd(p, q) = 1."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2)
    q: int = Field(..., ge=1)

    @model_validator(mode="after")
    def check_coprime(self) -> "TwoBridgeClass":
        if self.q >= self.p:
            raise ValueError(f"q={self.q} must be smaller than p={self.p}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd({self.p}, {self.q}) != 1")
        return self

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    def to_text(self) -> str:
        return f"{self.p}/{self.q}"

    def __str__(self) -> str:
        return self.to_text()


class Crossing(BaseModel):
    model_config = ConfigDict(frozen=True)

    over: int = Field(..., description="Wirtinger arc passing over")
    under_in: int = Field(..., description="Arc ending at this crossing")
    under_out: int = Field(..., description="Arc starting at this crossing")
    sign: int = Field(..., description="Oriented crossing sign, +1 or -1")

    @field_validator("sign")
    @classmethod
    def unit_sign(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return v


class Diagram(BaseModel):
    crossings: list[Crossing] = Field(default_factory=list)
    arcs: int = Field(0, description="Number of Wirtinger arcs")
    components: int = Field(..., description="Number of link components")
    pd: list[tuple[int, int, int, int]] = Field(
        default_factory=list, description="PD code, X[i,j,k,l] with i the incoming under edge"
    )
    word: ConwayWord | None = Field(None, description="Source word, when generated from one")

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


class SeifertMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, ...], ...] = Field(default=(), description="Square integer matrix")

    @field_validator("entries")
    @classmethod
    def square(cls, v: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if any(len(row) != len(v) for row in v):
            raise ValueError("Seifert matrix must be square")
        return v

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries)) if self.entries else ()


class KMWord(BaseModel):
    """Palindromic unknotting-number-one pattern C(b, b1..bk, sign*2, -bk..-b1)."""

    model_config = ConfigDict(frozen=True)

    b: int
    tail: tuple[int, ...] = ()
    sign: int = 1
    convention: Convention = Convention.PLUS

    @field_validator("b")
    @classmethod
    def nonzero_b(cls, v: int) -> int:
        if v == 0:
            raise ValueError("b must be nonzero")
        return v

    @field_validator("tail")
    @classmethod
    def nonzero_tail(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if 0 in v:
            raise ValueError("tail entries must be nonzero")
        return v

    @field_validator("sign")
    @classmethod
    def unit_sign(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return v

    @model_validator(mode="after")
    def realizes_a_knot(self) -> "KMWord":
        from .families import realize

        realize(self)
        return self

    @property
    def k(self) -> int:
        return len(self.tail)


def _as_vector(value: Any) -> LatticeVector:
    if isinstance(value, str):
        value = [int(part) for part in value.strip("()[] ").split(",") if part.strip()]
    return tuple(int(x) for x in value)


class TorusClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    vector: LatticeVector = Field(..., description="Homology class [T] in the free lattice")

    @field_validator("vector", mode="before")
    @classmethod
    def coerce(cls, v: Any) -> LatticeVector:
        return _as_vector(v)

    @property
    def rank(self) -> int:
        return len(self.vector)

    @property
    def is_null_homologous(self) -> bool:
        return not any(self.vector)


class BasicClassSet(BaseModel):
    """Finitely supported SW function on a free lattice; zero values are never stored."""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(..., ge=1)
    support: dict[LatticeVector, int] = Field(default_factory=dict)

    @field_validator("support", mode="before")
    @classmethod
    def coerce_keys(cls, v: Any) -> Any:
        if isinstance(v, dict):
            return {_as_vector(k): val for k, val in v.items()}
        if isinstance(v, list):
            return {_as_vector(item["class"]): item["value"] for item in v}
        return v

    @field_validator("support", mode="after")
    @classmethod
    def drop_zeros(cls, v: dict[LatticeVector, int]) -> dict[LatticeVector, int]:
        return {k: c for k, c in sorted(v.items()) if c != 0}

    @model_validator(mode="after")
    def check_rank(self) -> "BasicClassSet":
        for key in self.support:
            if len(key) != self.rank:
                raise RankMismatchError(f"class {key} does not have rank {self.rank}")
        return self

    @classmethod
    def singleton(cls, vector: LatticeVector, value: int = 1) -> "BasicClassSet":
        return cls(rank=len(vector), support={tuple(vector): value})

    def total(self) -> int:
        return sum(self.support.values())

    def translate(self, shift: LatticeVector) -> "BasicClassSet":
        if len(shift) != self.rank:
            raise RankMismatchError(f"shift {shift} does not have rank {self.rank}")
        return BasicClassSet(
            rank=self.rank,
            support={tuple(a + b for a, b in zip(k, shift)): c for k, c in self.support.items()},
        )

    def scale(self, factor: int) -> "BasicClassSet":
        merged: dict[LatticeVector, int] = {}
        for k, c in self.support.items():
            key = tuple(factor * a for a in k)
            merged[key] = merged.get(key, 0) + c
        return BasicClassSet(rank=self.rank, support=merged)


class LogTransformParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    r: int

    @model_validator(mode="after")
    def primitive(self) -> "LogTransformParams":
        if not (self.p or self.q or self.r):
            raise ZeroVectorError("log-transform parameters are all zero")
        if gcd(self.p, self.q, self.r) != 1:
            raise NotPrimitiveError(f"gcd({self.p}, {self.q}, {self.r}) != 1")
        return self

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


class RelativeSWVector(BaseModel):
    """Per relative class k, the sums S(1,0,0)(k), S(0,1,0)(k), S(0,0,1)(k)."""

    model_config = ConfigDict(frozen=True)

    values: dict[LatticeVector, tuple[int, int, int]] = Field(default_factory=dict)

    @field_validator("values", mode="before")
    @classmethod
    def coerce_keys(cls, v: Any) -> Any:
        if isinstance(v, dict):
            return {_as_vector(k): tuple(val) for k, val in v.items()}
        if isinstance(v, list):
            return {_as_vector(item["class"]): tuple(item["sums"]) for item in v}
        return v

    @field_validator("values", mode="after")
    @classmethod
    def drop_zero_rows(
        cls, v: dict[LatticeVector, tuple[int, int, int]]
    ) -> dict[LatticeVector, tuple[int, int, int]]:
        return {k: s for k, s in sorted(v.items()) if any(s)}


class IndexSet(str, Enum):
    EVEN = "even"
    ODD = "odd"


class Orientation(str, Enum):
    FORWARD = "forward"
    REVERSED = "reversed"


class Reading(BaseModel):
    """One literal reading of the sum-of-alternate-entries degree formula."""

    model_config = ConfigDict(frozen=True)

    rule: Convention
    index_set: IndexSet = IndexSet.EVEN
    orientation: Orientation = Orientation.FORWARD

    def label(self) -> str:
        return f"{self.rule.value}/{self.index_set.value}/{self.orientation.value}"
