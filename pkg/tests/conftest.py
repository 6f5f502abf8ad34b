"""Shared test fixtures."""

from __future__ import annotations

import pytest

from sylowscope.models import Family, GroupId


@pytest.fixture
def psl3_4() -> GroupId:
    return GroupId(Family.PSL, n=3, q=4)


@pytest.fixture
def psl4_4() -> GroupId:
    return GroupId(Family.PSL, n=4, q=4)


@pytest.fixture
def e8_2() -> GroupId:
    return GroupId(Family.E8, q=2)


@pytest.fixture
def a10() -> GroupId:
    return GroupId(Family.ALTERNATING, n=10)


@pytest.fixture
def m11() -> GroupId:
    return GroupId(Family.SPORADIC, sporadic_name="M11")
