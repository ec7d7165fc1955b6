"""Exception types for matroid construction, decompositions, and geometry."""


class MatvolError(Exception):
    """Base class for all errors raised by this package."""


class GroundSetTooLarge(MatvolError):
    """Ground sets are capped at 20 elements; every table here is 2^n-indexed."""


class EmptyBasisFamily(MatvolError):
    """A matroid needs at least one basis."""


class UnequalCardinality(MatvolError):
    """All bases of a matroid have the same cardinality."""


class ExchangeAxiomViolation(MatvolError):
    """The basis exchange axiom failed for a witnessing pair of bases."""


class InvalidTruncationRank(MatvolError):
    """Truncation rank must lie in 1..rank(M)."""


class InvalidUniformParams(MatvolError):
    """Uniform matroids require 0 <= k <= n and n >= 1."""


class FamilyMismatch(MatvolError):
    """Signed decompositions can only be combined within one summand family."""


class DimensionMismatch(MatvolError):
    """Input dimension does not match what the operation requires."""


class DisconnectedMatroid(MatvolError):
    """The requested computation needs a full-dimensional polytope."""


class NonIntegerNormalizedVolume(MatvolError):
    """(n-1)! times the base polytope volume must be an integer; signals a bug."""


class DegenerateInput(MatvolError):
    """Geometric input has no interior to work with (affine dimension 0)."""


class RankMismatch(MatvolError):
    """A declared rank does not match the rank computed from the generator."""


class ParseError(MatvolError):
    """Matroid file is not well-formed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
