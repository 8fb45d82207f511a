"""SVG dump of walls in the (beta, alpha) half plane; decorative, floats are used for drawing only"""

import logging
from collections.abc import Sequence
from pathlib import Path

from tiltwall.exceptions import TiltWallUserError
from tiltwall.models.walls import Circle, VerticalLine, WallLocus

logger = logging.getLogger(__name__)

SAMPLES = 200


def save_walls_svg(walls: Sequence[tuple[str, WallLocus]], path: Path | str, title: str = "") -> Path:
    """
    Draws labelled semicircular and vertical walls; other wall kinds are skipped.

    :param walls: (label, wall) pairs
    :param path: output file
    :param title: Optional. Figure title.
    :return: the written path
    :raises TiltWallUserError: if matplotlib is not installed (``pip install tiltwall[plot]``)
    """
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError as e:
        raise TiltWallUserError("--svg needs matplotlib; install tiltwall[plot].") from e

    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 5))
    for label, wall in walls:
        match wall:
            case Circle(center=center, radius_sq=radius_sq):
                radius = float(radius_sq) ** 0.5
                betas = [float(center) - radius + 2 * radius * i / SAMPLES for i in range(SAMPLES + 1)]
                alphas = [max(float(radius_sq) - (beta - float(center)) ** 2, 0.0) ** 0.5 for beta in betas]
                ax.plot(betas, alphas, label=label)
            case VerticalLine(beta=beta):
                ax.axvline(float(beta), linestyle="--", label=label)
            case _:
                logger.debug("not drawing %s (%s)", label, wall)
    ax.set_xlabel("beta")
    ax.set_ylabel("alpha")
    ax.set_ylim(bottom=0)
    if title:
        ax.set_title(title)
    if walls:
        ax.legend(fontsize="small")
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
    return path
