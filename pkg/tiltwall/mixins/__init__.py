from tiltwall.mixins._protocol import MixinProtocol
from tiltwall.mixins.kuznetsov import KuznetsovMixin
from tiltwall.mixins.lattice import LatticeMixin
from tiltwall.mixins.scan import ScanMixin
from tiltwall.mixins.tilt import TiltMixin

__all__ = ["KuznetsovMixin", "LatticeMixin", "MixinProtocol", "ScanMixin", "TiltMixin"]
