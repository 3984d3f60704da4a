"""Shared oracles for the test suite.

The oracle digit sum uses repeated division only, independent of the
popcount paths under test.
"""

from __future__ import annotations

import pytest


def oracle_digit_sum(n: int, base: int = 2) -> int:
    s = 0
    while n:
        n, r = divmod(n, base)
        s += r
    return s


def oracle_is_member(n: int) -> bool:
    return oracle_digit_sum(n) == oracle_digit_sum(n * n)


def oracle_members(limit: int) -> list[int]:
    return [m for m in range(1, limit + 1) if oracle_is_member(m)]


@pytest.fixture(scope="session")
def members_16() -> list[int]:
    # frozen from the naive oracle over 1..16
    expected = [1, 2, 3, 4, 6, 7, 8, 12, 14, 15, 16]
    assert oracle_members(16) == expected
    return expected
