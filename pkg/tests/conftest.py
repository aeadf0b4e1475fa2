from __future__ import annotations

from importlib import resources

import pytest

from sisotopy.morphisms import parse_isotopism
from sisotopy.substructure import make_spair
from sisotopy.tables import (
    cyclic_group,
    direct_product,
    klein_four,
    multiplication_mod,
    parse_table,
    symmetric_group,
)


def fixture_text(name: str) -> str:
    return resources.files("sisotopy").joinpath("fixtures", name).read_text(encoding="utf-8")


def fixture_path(name: str):
    return resources.files("sisotopy").joinpath("fixtures", name)


def load_table(name):
    return parse_table(fixture_text(name))


def load_iso(name):
    return parse_isotopism(fixture_text(name))


def fixture_suite():
    """Every named table used across the suite, order ≤ 6."""
    return {
        "example1_dot": load_table("example1_dot.tbl"),
        "example1_star": load_table("example1_star.tbl"),
        "example2_times6": load_table("example2_times6.tbl"),
        "example2_star": load_table("example2_star.tbl"),
        "Z1": cyclic_group(1),
        "Z2": cyclic_group(2),
        "Z3": cyclic_group(3),
        "Z4": cyclic_group(4),
        "Z5": cyclic_group(5),
        "Z6": cyclic_group(6),
        "V4": klein_four(),
        "S3": symmetric_group(3),
        "Z2xZ3": direct_product(cyclic_group(2), cyclic_group(3)),
        "mul5": multiplication_mod(5),
    }


@pytest.fixture
def dot():
    return load_table("example1_dot.tbl")


@pytest.fixture
def star():
    return load_table("example1_star.tbl")


@pytest.fixture
def times6():
    return load_table("example2_times6.tbl")


@pytest.fixture
def star6():
    return load_table("example2_star.tbl")


@pytest.fixture
def dot_pair(dot):
    return make_spair(dot, (0, 1))


@pytest.fixture
def star_pair(star):
    return make_spair(star, (1, 2))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
