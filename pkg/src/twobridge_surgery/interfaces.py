"""
Interface definitions for twobridge-surgery.

Pydantic models for the reports returned by sweeps and CLI commands.
"""

from enum import Enum

from pydantic import BaseModel, Field

from .laurent import LaurentPoly, ZPoly
from .models import Convention, ConwayWord, KMWord, LatticeVector, Reading


class ClassInvariants(BaseModel):
    """Polynomial invariants of one knot class, computed by both routes."""

    p: int
    q: int
    word: str = Field(..., description="Diagram word used by the Fox route")
    even_form: str = Field(..., description="All-even word used by the Seifert route")
    conway: ZPoly
    alexander: LaurentPoly = Field(..., description="Normalized Delta from the Fox route")
    alexander_seifert: LaurentPoly
    degree: int = Field(..., description="deg of the Conway polynomial")
    span: int
    genus: int
    determinant: int = Field(..., description="|Delta(-1)|")
    routes_agree: bool


class WordInvariants(BaseModel):
    word: str
    two_bridge_class: str | None = None
    unknot: bool = False
    conway: str
    alexander: str
    degree: int
    span: int
    degree_prediction: int | None = Field(
        None, description="Literal alternate-entry sum, when the word is in normal form"
    )
    even_form: str
    even_form_degree: int
    routes_agree: bool


class RouteMismatch(BaseModel):
    p: int
    q: int
    reason: str
    fox: str | None = None
    seifert: str | None = None


class RouteReport(BaseModel):
    max_p: int
    checked: int = 0
    mismatches: list[RouteMismatch] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


class Verdict(str, Enum):
    UNIQUE = "unique"
    AMBIGUOUS = "ambiguous"
    NONE = "none"


class DegreeMismatch(BaseModel):
    two_bridge_class: str
    normal_form: str
    predicted: int
    actual: int


class ReadingResult(BaseModel):
    reading: Reading
    checked: int = 0
    mismatches: int = 0
    examples: list[DegreeMismatch] = Field(default_factory=list)


class ConventionReport(BaseModel):
    """Outcome of testing every literal degree-formula reading against both routes."""

    max_p: int
    verdict: Verdict
    pinned: Reading | None = None
    readings: list[ReadingResult] = Field(default_factory=list)
    reviewed_law_mismatches: int = Field(
        0, description="Classes where deg != length of the all-even expansion"
    )
    default_convention: Convention = Convention.PLUS


class DegreeLawReport(BaseModel):
    seed: int
    cases: int = 0
    mismatches: list[DegreeMismatch] = Field(default_factory=list)
    literal_mismatches: int = Field(0, description="Informational: literal formula failures")


class FamilyRecord(BaseModel):
    """One line of a family listing."""

    index: int
    word: str
    p: int
    q: int
    conway: list[int]
    degree: int
    alexander: str


class FamilyMember(BaseModel):
    km: KMWord
    word: ConwayWord
    invariants: ClassInvariants

    @property
    def conway(self) -> ZPoly:
        return self.invariants.conway


class KMVerdict(str, Enum):
    EXPRESSIBLE = "expressible"
    INCONCLUSIVE = "inconclusive"
    NOT_A_KNOT = "not_a_knot"


class KMExpressibility(BaseModel):
    two_bridge_class: str
    verdict: KMVerdict
    witness: str | None = None
    unknotting_move: bool | None = None
    searched: int = 0


class UnknottingCounterexample(BaseModel):
    word: str
    zeroed_position: int
    collapsed: str


class FuzzReport(BaseModel):
    seed: int | None = None
    cases: int = 0
    failures: list[str] = Field(default_factory=list)


class ChainStatus(str, Enum):
    EXACT = "exact"
    HOLDS = "holds"
    NOT_ESTABLISHED = "not_established"


class KnotBound(BaseModel):
    """B lower bound contributed by knot surgery along T with one knot."""

    index: int
    word: str
    alexander: str
    span: int
    lower_bound: int = Field(..., description="Lower bound for B, from the surgered set alone")
    chain: ChainStatus
    expected: int | None = Field(None, description="Exact singleton value, when applicable")


class SurgeryReport(BaseModel):
    scenario: str
    torus: LatticeVector
    bounds: list[KnotBound] = Field(default_factory=list)
    partition: list[list[int]] = Field(
        default_factory=list, description="Knot indices grouped by equal lower bound"
    )
    undistinguished: list[tuple[int, int]] = Field(default_factory=list)
    transform_bound: int = Field(0, description="Lower bound from log-transform candidates")
    simply_connected_complement: bool | None = None

    @property
    def distinguished(self) -> bool:
        return not self.undistinguished
