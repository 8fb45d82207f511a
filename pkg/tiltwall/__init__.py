from importlib.metadata import PackageNotFoundError, version

from tiltwall.calculator import TiltWall
from tiltwall.enums import FilterName
from tiltwall.exactnum import QuadraticValue
from tiltwall.models.characters import ChernCharacter, TruncatedCharacter
from tiltwall.models.kuznetsov import KuClass
from tiltwall.models.scan import FilterSet, ScanBounds

try:
    __version__ = version("tiltwall")
except PackageNotFoundError:
    # package is not installed
    pass

__license__ = "MIT"
__title__ = "tiltwall"
__all__ = [
    "ChernCharacter",
    "FilterName",
    "FilterSet",
    "KuClass",
    "QuadraticValue",
    "ScanBounds",
    "TiltWall",
    "TruncatedCharacter",
]
