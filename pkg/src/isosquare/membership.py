"""Membership predicates for the digit-sum families and weight profiles.

A positive integer n belongs to the (k, l, m) family when its base-k
digit sum is l times the base-k digit sum of n^m.  The central special
case is (2, 1, 2): B(n) = B(n^2), called isosquare here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digits import digit_sum


@dataclass(frozen=True)
class PropertyTriple:
    """Parameters (base, multiplier, power) of the family predicate."""

    base: int = 2
    multiplier: int = 1
    power: int = 2

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.multiplier < 1:
            raise ValueError(f"multiplier must be >= 1, got {self.multiplier}")
        if self.power < 2:
            raise ValueError(f"power must be >= 2, got {self.power}")


ISOSQUARE = PropertyTriple(2, 1, 2)


@dataclass(frozen=True)
class WeightProfile:
    """Binary weights of n and n^2, plus the defect B(n^2) - 2*B(n).

    The construction chain branches on defect: seeds are driven to
    defect >= +1, normalized to exactly -1, then finalized to a member.
    """

    n: int
    weight: int
    square_weight: int
    defect: int

    @property
    def is_member(self) -> bool:
        return self.weight == self.square_weight


def satisfies(n: int, t: PropertyTriple = ISOSQUARE) -> bool:
    """True iff digit_sum(n, base) == multiplier * digit_sum(n^power, base).

    The power is computed exactly; digit sums are discontinuous in the
    value, so no floating point is ever involved.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return digit_sum(n, t.base) == t.multiplier * digit_sum(n**t.power, t.base)


def is_isosquare(n: int) -> bool:
    """True iff B(n) = B(n^2)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n.bit_count() == (n * n).bit_count()


def weight_profile(n: int) -> WeightProfile:
    """Weights of n and n^2 packaged with the defect."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    w = n.bit_count()
    sw = (n * n).bit_count()
    return WeightProfile(n=n, weight=w, square_weight=sw, defect=sw - 2 * w)


def stolarsky_ratio(n: int, m: int = 2) -> Fraction:
    """Exact ratio B(n^m) / B(n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return Fraction(digit_sum(n**m, 2), digit_sum(n, 2))
