"""Exception types shared across the package."""


class GonosomalError(Exception):
    """Base class for all library-specific errors."""


class ClosureViolation(GonosomalError):
    """Duplicate construction left the chosen female/male subspace.

    Carries the offending unordered index pair.
    """

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"product mass falls on pair {pair}, outside omega and the male pair")


class SigmaZero(GonosomalError):
    """Basis reduction impossible: a retained row has sigma_i = 0."""

    def __init__(self, row):
        self.row = row
        super().__init__(f"sigma is zero for retained row {row}")


class DimensionUnsupported(GonosomalError):
    pass


class ParamOutOfRange(GonosomalError):
    pass


class UnknownModel(GonosomalError):
    pass


class DegenerateDenominator(GonosomalError):
    """Normalised operator undefined (total female mass zero, or u=0 in strict mode)."""


class ZeroPoint(GonosomalError):
    """Normalisation of the all-zero point requested."""


class NoTheoremApplies(GonosomalError):
    """No limit theorem covers this model/start combination."""


class NotConverged(GonosomalError):
    """Trajectory did not meet the convergence criterion."""


class ParseError(GonosomalError):
    """Malformed model/table file; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
