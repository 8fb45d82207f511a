"""protocol that defines the attributes available to mixins"""

from typing import Protocol

from tiltwall.models.characters import Variety


class MixinProtocol(Protocol):
    """protocol that defines the attributes available to mixins"""

    variety: Variety

    workers: int
