from .characters import ChernCharacter, TruncatedCharacter, Variety, Violation
from .fixture import Fixture
from .kuznetsov import KuClass, SerreMatrix
from .scan import BoundReport, CandidatePair, FilterSet, Rejection, ScanBounds, ScanQuery, ScanReport, Verdict
from .walls import Boundary, Circle, Empty, Everywhere, HalfPlanePoint, Inside, Outside, VerticalLine

__all__ = [
    "Boundary",
    "BoundReport",
    "CandidatePair",
    "ChernCharacter",
    "Circle",
    "Empty",
    "Everywhere",
    "FilterSet",
    "Fixture",
    "HalfPlanePoint",
    "Inside",
    "KuClass",
    "Outside",
    "Rejection",
    "ScanBounds",
    "ScanQuery",
    "ScanReport",
    "SerreMatrix",
    "TruncatedCharacter",
    "Variety",
    "Verdict",
    "VerticalLine",
    "Violation",
]
