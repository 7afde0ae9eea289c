"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GHWError(Exception):
    """Base class for all errors raised by torus_ghw."""

    kind = "error"


class NotPrimePower(GHWError, ValueError):
    kind = "not-prime-power"


class TooLarge(GHWError, ValueError):
    kind = "too-large"


class DivisionByZero(GHWError, ZeroDivisionError):
    kind = "division-by-zero"


class MixedFields(GHWError, TypeError):
    kind = "mixed-fields"


class SizeCap(GHWError, ValueError):
    kind = "size-cap"


class ZeroVector(GHWError, ValueError):
    kind = "zero-vector"


class DimensionMismatch(GHWError, ValueError):
    kind = "dimension-mismatch"


class DegreeOutOfRange(GHWError, ValueError):
    kind = "degree-out-of-range"


class EmptyPointSet(GHWError, ValueError):
    kind = "empty-point-set"


class OutOfRange(GHWError, ValueError):
    kind = "out-of-range"


class Infeasible(GHWError, RuntimeError):
    """An exact computation would exceed a configured cap."""

    kind = "oracle-infeasible"


class NotAPartitionCandidate(GHWError, ValueError):
    kind = "not-a-partition-candidate"


class BadField(GHWError, ValueError):
    kind = "bad-field"


class BadParams(GHWError, ValueError):
    kind = "bad-params"


class FormulaUnavailable(BadParams):
    """No closed form covers the requested point set or weight."""

    kind = "formula-unavailable"


class HypothesisViolated(GHWError, ValueError):
    kind = "hypothesis-violated"


class ParseError(GHWError, ValueError):
    kind = "parse-error"
