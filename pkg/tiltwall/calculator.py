from __future__ import annotations

import logging
import os
from typing import Any

from tiltwall.constants import CUBIC_THREEFOLD, ENV_WORKERS
from tiltwall.exceptions import TiltWallUserError
from tiltwall.mixins.kuznetsov import KuznetsovMixin
from tiltwall.mixins.lattice import LatticeMixin
from tiltwall.mixins.scan import ScanMixin
from tiltwall.mixins.tilt import TiltMixin
from tiltwall.models.characters import Variety

logger = logging.getLogger(__name__)


def workers_from_env() -> int:
    """
    Reads the default worker count from the environment.

    :raises TiltWallUserError: if the variable is set to something other than a positive integer
    """
    value = os.environ.get(ENV_WORKERS, "")
    if not value:
        return 1
    if not value.isdigit() or int(value) < 1:
        raise TiltWallUserError(f"{ENV_WORKERS} must be a positive integer, got '{value}'.")
    return int(value)


class TiltWallBase:
    def __init__(self, workers: int | None = None, variety: Variety = CUBIC_THREEFOLD):
        """
        Create a new calculator for tilt stability on a polarized threefold.

        :param workers: Optional. Number of threads used by scans.
            Default: the ``TILTWALL_WORKERS`` environment variable, or 1.
            Reports are identical for every worker count.
        :param variety: Optional. Numerical data (H^3 and Todd class) of the threefold.
            Default: the smooth cubic threefold. Scans, Li's bound and the Kuznetsov lattice are
            specific to the cubic threefold and ignore this parameter.
        """
        if workers is None:
            workers = workers_from_env()
        if workers < 1:
            raise TiltWallUserError(f"workers must be at least 1, got {workers}.")
        self.workers = workers  #: threads for scans
        self.variety = variety
        logger.debug("calculator on %s with %d worker(s)", variety, workers)

    def __enter__(self) -> TiltWallBase:
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_value: BaseException | None,
        traceback: Any | None,
    ) -> bool | None:
        pass


class TiltWall(TiltWallBase, LatticeMixin, TiltMixin, KuznetsovMixin, ScanMixin):
    """
    Exact tilt-stability computations on a smooth cubic threefold: Chern character arithmetic,
    numerical walls, Li's bound, the Kuznetsov lattice and exhaustive wall scans.
    """
