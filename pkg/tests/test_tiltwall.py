from dataclasses import replace
from fractions import Fraction

import pytest

from tiltwall import TiltWall
from tiltwall.constants import CUBIC_THREEFOLD
from tiltwall.exceptions import TiltWallUserError
from tiltwall.models.walls import Circle


def test_tiltwall_context():
    with TiltWall() as calculator:
        assert isinstance(calculator, TiltWall)


def test_tiltwall_workers(monkeypatch):
    monkeypatch.delenv("TILTWALL_WORKERS", raising=False)
    assert TiltWall().workers == 1
    monkeypatch.setenv("TILTWALL_WORKERS", "3")
    assert TiltWall().workers == 3
    assert TiltWall(workers=2).workers == 2


@pytest.mark.parametrize("value", ["0", "-2", "many"])
def test_tiltwall_workers_env_error(monkeypatch, value):
    monkeypatch.setenv("TILTWALL_WORKERS", value)
    with pytest.raises(TiltWallUserError, match="TILTWALL_WORKERS must be a positive integer"):
        TiltWall()


def test_tiltwall_workers_error():
    with pytest.raises(TiltWallUserError, match="workers must be at least 1"):
        TiltWall(workers=0)


def test_tiltwall_variety():
    assert TiltWall().variety == CUBIC_THREEFOLD
    assert CUBIC_THREEFOLD.h3 == 3
    # walls only depend on ch0..ch2, not on the polarization degree
    other = TiltWall(variety=replace(CUBIC_THREEFOLD, h3=1))
    assert other.wall("4,-1,-5/6", "-1,1,-1/2") == Circle(Fraction(-17, 18), Fraction(1, 324))


def test_tiltwall_svg(tmp_path):
    pytest.importorskip("matplotlib")
    from tiltwall.plotting import save_walls_svg

    walls = [
        ("E", Circle(Fraction(-17, 18), Fraction(1, 324))),
        ("F", Circle(Fraction(-11, 6), Fraction(73, 36))),
    ]
    path = save_walls_svg(walls, tmp_path / "walls.svg", "4,-1,-5/6")
    assert path.read_text(encoding="utf-8").lstrip().startswith("<?xml")
