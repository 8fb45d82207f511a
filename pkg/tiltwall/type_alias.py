from fractions import Fraction
from typing import Any

JsonDict = dict[str, Any]

RationalLike = Fraction | int | str
IntMatrix = tuple[tuple[int, int], tuple[int, int]]
