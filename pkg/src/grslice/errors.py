"""Exception hierarchy shared by all grslice modules."""


class GrsliceError(Exception):
    """Base class for every error raised by this package."""


# lattice
class LatticeError(GrsliceError):
    pass


class DifferenceNotInCorootLattice(LatticeError):
    pass


class NonDominantInput(LatticeError):
    pass


class NonIntegralCoweight(LatticeError):
    pass


class UnsupportedType(LatticeError):
    pass


class ApexOutOfRange(LatticeError):
    pass


class NotDominated(LatticeError):
    pass


# polynomial
class PolynomialError(GrsliceError):
    pass


class VarTableMismatch(PolynomialError):
    pass


class UnknownVariable(PolynomialError):
    pass


class MissingAssignment(PolynomialError):
    pass


# slice / certify
class InvalidSize(GrsliceError):
    pass


class SizeBudgetExceeded(GrsliceError):
    pass


class BudgetExceeded(GrsliceError):
    """A Groebner computation hit one of its resource caps.

    ``stats`` carries the partial statistics gathered before the abort.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats or {}


class MinorExplosion(GrsliceError):
    pass


class PointNotOnVariety(GrsliceError):
    pass


class SearchExhausted(GrsliceError):
    pass


# poisson
class TruncationExceeded(GrsliceError):
    pass


class LabelInvalid(GrsliceError):
    pass
