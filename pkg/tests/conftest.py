import configparser
import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from tiltwall import ChernCharacter, TiltWall, TruncatedCharacter


def get_resource(file: str) -> str:
    data_dir = Path(__file__).parent
    return data_dir.joinpath(file).as_posix()


def get_config() -> configparser.RawConfigParser:
    config = configparser.RawConfigParser()
    config.read(get_resource("test.cfg"), "utf-8")
    return config


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def random_truncated(rng: random.Random, bound: int, rank_zero: bool = True) -> TruncatedCharacter:
    """a random lattice point (r, c, d) with |r|, |c| <= bound and 6d = c mod 2"""
    ranks = [r for r in range(-bound, bound + 1) if rank_zero or r != 0]
    ch1 = rng.randint(-bound, bound)
    numerator = 2 * rng.randint(-3 * bound, 3 * bound) + ch1 % 2
    return TruncatedCharacter(rng.choice(ranks), ch1, Fraction(numerator, 6))


def random_character(rng: random.Random, bound: int) -> ChernCharacter:
    """a random lattice point; 6 ch3 = 6 ch2 mod 2 keeps the Euler characteristic integral"""
    v = random_truncated(rng, bound)
    six_ch3 = 2 * rng.randint(-3 * bound, 3 * bound) + (6 * v.ch2).numerator % 2
    return ChernCharacter(v.ch0, v.ch1, v.ch2, Fraction(six_ch3, 6))


@pytest.fixture(name="config")
def fixture_config() -> configparser.RawConfigParser:
    return get_config()


@pytest.fixture(name="calculator")
def fixture_calculator() -> TiltWall:
    return TiltWall(workers=1)


@pytest.fixture(name="rng")
def fixture_rng(config) -> random.Random:
    return random.Random(config.getint("properties", "seed"))


@pytest.fixture(name="cases")
def fixture_cases(config) -> int:
    return config.getint("properties", "cases")


@pytest.fixture(name="bound")
def fixture_bound(config) -> int:
    return config.getint("properties", "coefficient_max")


@pytest.fixture(name="nu")
def fixture_nu() -> ChernCharacter:
    """the rank 4 class 2[I] + [S(I)]"""
    return ChernCharacter(4, -1, Fraction(-5, 6), Fraction(1, 6))


@pytest.fixture(name="fixtures_dir")
def fixture_fixtures_dir() -> Path:
    return Path(__file__).parent.parent / "tiltwall" / "data" / "fixtures"


@pytest.fixture(name="symbolic_cases")
def fixture_symbolic_cases(config) -> int:
    return config.getint("properties", "symbolic_cases")
