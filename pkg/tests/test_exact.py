"""Tests for exact quadratic-field angle arithmetic."""

import math
from fractions import Fraction

import pytest

from denshoe.exact import (
    ALPHA_STAR,
    QuadReal,
    continued_fraction,
    convergents,
    parse_angle,
)


def test_alpha_star_value():
    assert abs(float(ALPHA_STAR) - (3 - math.sqrt(5)) / 2) < 1e-15


def test_square_free_reduction():
    assert QuadReal(0, 1, 8) == QuadReal(0, 2, 2)
    assert QuadReal(0, 1, 9) == QuadReal(3)  # perfect square folds to rational


def test_arithmetic_and_comparison():
    x = QuadReal(0, 1, 2)  # sqrt 2
    assert (x * x) == 2
    assert x > Fraction(7, 5) and x < Fraction(3, 2)
    y = x - 1
    assert 0 < y < 1
    assert (y + 1) == x


def test_floor_and_frac():
    x = QuadReal(0, 5, 2)  # 5 sqrt2 ~ 7.07
    assert x.floor() == 7
    f = x.frac()
    assert 0 <= float(f) < 1
    assert (f + 7) == x
    assert QuadReal(Fraction(-3, 2)).floor() == -2


def test_floor_near_integer():
    eps = QuadReal(0, Fraction(1, 10 ** 12), 2)
    assert (QuadReal(5) + eps).floor() == 5
    assert (QuadReal(5) - eps).floor() == 4


def test_incompatible_fields_rejected():
    with pytest.raises(ValueError):
        QuadReal(0, 1, 2) + QuadReal(0, 1, 3)


def test_parse_angle_forms():
    assert parse_angle("3-sqrt5-over-2") == ALPHA_STAR
    assert parse_angle("golden-square") == ALPHA_STAR
    assert parse_angle("2/7") == Fraction(2, 7)
    assert parse_angle("0.125") == Fraction(1, 8)
    assert parse_angle("sqrt2-over-4") == QuadReal(0, Fraction(1, 4), 2)
    assert abs(float(parse_angle("golden")) - 0.6180339887) < 1e-9
    with pytest.raises(ValueError):
        parse_angle("bogus")


def test_continued_fraction_golden():
    # alpha* = [0; 2, 1, 1, 1, ...]
    assert continued_fraction(ALPHA_STAR, 6) == [0, 2, 1, 1, 1, 1]


def test_convergents_approximate():
    cs = convergents(ALPHA_STAR, 10)
    p, q = cs[-1]
    assert abs(p / q - float(ALPHA_STAR)) < 1 / q ** 2
    # consecutive convergents are Farey neighbors
    for (p1, q1), (p2, q2) in zip(cs, cs[1:]):
        assert abs(p1 * q2 - p2 * q1) == 1
