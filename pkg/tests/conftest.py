"""Shared fixtures for the test suite."""

import sys
from pathlib import Path

import pytest
from hypothesis import settings

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.inseparability import profile  # noqa: E402
from src.parsing import parse_base, parse_extension  # noqa: E402

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")

EXAMPLE_POLY = "X^8 + t*X^3 + t*X^2 + t"


@pytest.fixture(scope="session")
def f2():
    return parse_base("laurent:p=2,d=1", 32)


@pytest.fixture(scope="session")
def f4():
    return parse_base("laurent:p=2,d=2", 32)


@pytest.fixture(scope="session")
def example_ext(f2):
    return parse_extension(f2, EXAMPLE_POLY)


@pytest.fixture(scope="session")
def example_profile(example_ext):
    return profile(example_ext)


@pytest.fixture(scope="session")
def example_ext_f4(f4):
    return parse_extension(f4, EXAMPLE_POLY)


@pytest.fixture(scope="session")
def small_ext(f2):
    return parse_extension(f2, "X^4 + t*X + t")


@pytest.fixture(scope="session")
def dyadic_ext():
    return parse_extension(parse_base("padic:p=2", 32), "X^4 + 2*X + 2")


@pytest.fixture(scope="session")
def tame_ext(f2):
    return parse_extension(f2, "X^3 - t")
