"""Exception hierarchy shared by every module in the package."""


class Torsion8Error(Exception):
    """Base class for all errors raised by torsion8."""


class DegenerateCurve(Torsion8Error, ValueError):
    """Two roots of the cubic coincide, so the curve is singular."""


class InvalidBeta(Torsion8Error, ValueError):
    """The radical ``beta`` sits on a pole of the order-8 construction."""


class OffCurve(Torsion8Error, ValueError):
    """A point fails the membership test, or two addends are inconsistent."""


class UnsupportedIndex(Torsion8Error, ValueError):
    """Division polynomial index outside the supported range."""


class ParseError(Torsion8Error, ValueError):
    """Command-line input could not be parsed."""


class BetaAssumptionWarning(UserWarning):
    """``beta`` is not a real number greater than one."""
