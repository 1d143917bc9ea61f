"""
Exception hierarchy for two-bridge knot and surgery computations.

Library code raises these; the CLI maps them to exit codes in ``cli.common``.
"""


class TwoBridgeError(Exception):
    """Base class for every domain error raised by this package."""


class WordSyntaxError(TwoBridgeError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ZeroEntryError(TwoBridgeError, ValueError):
    pass


class TrivialKnotError(TwoBridgeError, ValueError):
    pass


class LinkNotKnotError(TwoBridgeError, ValueError):
    pass


class NotNormalFormError(TwoBridgeError, ValueError):
    pass


class ZeroPolynomialError(TwoBridgeError, ValueError):
    pass


class OddExponentError(TwoBridgeError, ValueError):
    pass


class NotNormalizableError(TwoBridgeError, ValueError):
    pass


class RankMismatchError(TwoBridgeError):
    pass


class ZeroVectorError(TwoBridgeError):
    pass


class FamilyError(TwoBridgeError):
    pass


class ScenarioError(TwoBridgeError):
    pass


class InvariantBreach(TwoBridgeError):
    """A property that must hold for every valid input was violated."""


class ConventionError(TwoBridgeError):
    """Convention pinning did not find exactly one consistent reading."""

    def __init__(self, message: str, report: object):
        super().__init__(message)
        self.report = report


class NotPrimitiveError(TwoBridgeError):
    pass


class PDCodeError(TwoBridgeError, ValueError):
    pass
