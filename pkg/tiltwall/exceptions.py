"""custom exception classes for tiltwall"""

from pathlib import Path


class TiltWallError(Exception):
    """base error class

    shall only be raised if none of the subclasses below are fitting
    """


class TiltWallUserError(TiltWallError):
    """error caused by invalid usage of tiltwall"""


class MalformedFixture(TiltWallUserError):
    """a fixture file that does not follow the corpus schema"""

    def __init__(self, path: Path | str, field: str, message: str):
        self.path = Path(path)
        self.field = field
        super().__init__(f"{self.path.name}: field '{field}': {message}")


class DomainError(TiltWallError):
    """a mathematical precondition of an operation does not hold"""


class NegativeRadicand(DomainError):
    """square root of a negative rational requested"""


class RankZero(DomainError):
    """operation needs a class of nonzero rank"""


class NotInLattice(DomainError):
    """character is not in the numerical Grothendieck group of the Kuznetsov component"""


class InvalidTarget(DomainError):
    """scan target does not satisfy the scan's preconditions"""


class NonPositiveAlpha(DomainError):
    """alpha (or alpha squared) must be strictly positive"""
