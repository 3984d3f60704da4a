"""Constructive families of isosquare numbers with exact weight postconditions.

Each constructor returns its value only after re-checking the weight
identity it is supposed to realize; a failed check raises
PostconditionError and always means a bug, never a data problem.
The chain seed -> inflate -> normalize_defect -> finalize_member turns
an arbitrary non-power-of-two seed into a verified member whose leading
bits are those of the seed, which is what makes families of pairwise
distinct members cheap to build.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import isqrt

from .membership import is_isosquare


class PostconditionError(AssertionError):
    """A constructor's weight identity failed: internal inconsistency."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _ensure(cond: bool, msg: str) -> None:
    # Postconditions stay on in optimized runs; they are the executable
    # content of the weight identities.
    if not cond:
        raise PostconditionError(msg)


def _weight(n: int) -> int:
    return n.bit_count()


@dataclass(frozen=True)
class ConstructionStage:
    """One audited step of a construction chain."""

    label: str
    value: int
    weight: int
    square_weight: int
    rule: str


@dataclass(frozen=True)
class ConstructionTrace:
    """Audited chain of stages ending in a verified isosquare number."""

    stages: tuple[ConstructionStage, ...]
    final: int

    def __post_init__(self) -> None:
        _ensure(self.stages != (), "trace must have at least one stage")
        _ensure(self.stages[-1].value == self.final, "final must equal last stage")
        values = [s.value for s in self.stages]
        _ensure(all(a < b for a, b in zip(values, values[1:])),
                "stage values must be strictly increasing")
        for s in self.stages:
            _ensure(s.weight == _weight(s.value), f"stale weight at stage {s.label}")
            _ensure(s.square_weight == _weight(s.value * s.value),
                    f"stale square weight at stage {s.label}")
        _ensure(is_isosquare(self.final), "final stage is not a member")


def _stage(label: str, value: int, rule: str) -> ConstructionStage:
    return ConstructionStage(label=label, value=value, weight=_weight(value),
                             square_weight=_weight(value * value), rule=rule)


def mersenne_member(k: int) -> int:
    """2^k - 1, always a member for k >= 2; k = 1 is accepted with a warning."""
    _require(k >= 1, f"k must be >= 1, got {k}")
    if k == 1:
        warnings.warn("k=1 gives n=1, a trivial member outside the k>1 family",
                      stacklevel=2)
    n = (1 << k) - 1
    _ensure(is_isosquare(n), f"2^{k}-1 not a member")
    _ensure(_weight(n * n) == k, f"B((2^{k}-1)^2) != {k}")
    return n


def four_tuple(k: int) -> int:
    """Start n = 2^k - 2^(k-2) - 2^(k-3) - 4 of a run n..n+3 of members (k >= 9)."""
    _require(k >= 9, f"k must be >= 9, got {k}")
    n = (1 << k) - (1 << (k - 2)) - (1 << (k - 3)) - 4
    for j in range(4):
        _ensure(is_isosquare(n + j), f"{n}+{j} is not a member")
    return n


def gap_interval(k: int) -> tuple[int, int]:
    """Endpoints (2^2k, 2^2k + 2^k) of an open interval free of members."""
    _require(k >= 1, f"k must be >= 1, got {k}")
    n = 1 << (2 * k)
    return n, n + (1 << k)


def gap_weight_identity(k: int, r: int) -> bool:
    """Check B(m^2) = 1 + B(r) + B(r^2) for m = 2^2k + r, 0 < r < 2^k.

    This is the identity behind the gap interval: it forces
    B(m^2) > B(m), so no interior point can be a member.
    """
    _require(0 < r < (1 << k), f"need 0 < r < 2^{k}, got {r}")
    m = (1 << (2 * k)) + r
    return _weight(m * m) == 1 + _weight(r) + _weight(r * r)


def near_power_witness(m: int) -> int:
    """Member 2^(2m+1) + 2^(m+2) - 1 just above the power 2^(2m+1), m >= 3."""
    _require(m >= 3, f"m must be >= 3, got {m}")
    n = (1 << (2 * m + 1)) + (1 << (m + 2)) - 1
    _ensure(is_isosquare(n), f"witness {n} is not a member")
    _ensure(n <= (1 << (2 * m + 1)) + 4 * isqrt(1 << (2 * m + 1)) + 4,
            "witness exceeds the stated window")
    return n


def mult_mersenne(n: int, nu: int) -> int:
    """n * (2^nu - 1) for 1 <= n < 2^nu; the product has weight exactly nu."""
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(n < (1 << nu), f"need n < 2^{nu}, got {n}")
    r = n * ((1 << nu) - 1)
    _ensure(_weight(r) == nu, f"B({n}*(2^{nu}-1)) != {nu}")
    return r


def affix_one(n: int, nu: int) -> int:
    """2^nu * n + 1 for n < 2^(nu-1).

    Appends nu-1 zeros and a one below n, so the weight grows by 1 and
    the square weight by B(n) + 1.
    """
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(nu >= 2 and n < (1 << (nu - 1)), f"need n < 2^({nu}-1), got n={n}")
    r = (n << nu) + 1
    _ensure(_weight(r) == _weight(n) + 1, "weight identity failed")
    _ensure(_weight(r * r) == _weight(n * n) + _weight(n) + 1,
            "square weight identity failed")
    return r


def subtract_compose(n: int, m: int, nu: int) -> int:
    """n * 2^nu - m for odd n, m and nu >= max(2h-1, h+k+1).

    k and h are the bit lengths of n and m.  Both weight identities
    hold exactly:
        B(result)   = B(n) - B(m) + nu
        B(result^2) = B(n^2) + B(m^2) - B(m n) + nu - 1
    """
    _require(n >= 1 and n % 2 == 1, f"n must be odd positive, got {n}")
    _require(m >= 1 and m % 2 == 1, f"m must be odd positive, got {m}")
    k, h = n.bit_length(), m.bit_length()
    bound = max(2 * h - 1, h + k + 1)
    _require(nu >= bound, f"need nu >= {bound}, got {nu}")
    r = (n << nu) - m
    _ensure(_weight(r) == _weight(n) - _weight(m) + nu, "weight identity failed")
    _ensure(_weight(r * r)
            == _weight(n * n) + _weight(m * m) - _weight(m * n) + nu - 1,
            "square weight identity failed")
    return r


def finalize_member(n: int, nu: int) -> int:
    """2^nu * n - 1 for odd n with B(n^2) = 2B(n) - 1 and nu >= bitlen(n) + 2.

    The result is always a member; this is the last link of the chain.
    """
    _require(n >= 1 and n % 2 == 1, f"n must be odd positive, got {n}")
    w, sw = _weight(n), _weight(n * n)
    _require(sw == 2 * w - 1,
             f"need B(n^2) = 2B(n)-1, got B={w}, square B={sw} (defect {sw - 2 * w})")
    _require(nu >= n.bit_length() + 2,
             f"need nu >= {n.bit_length() + 2}, got {nu}")
    r = subtract_compose(n, 1, nu)
    _ensure(is_isosquare(r), f"finalized value {r} is not a member")
    return r


def subtract_mersenne(n: int, h: int, nu: int) -> int:
    """n * 2^nu - (2^h - 1) for odd n < 2^h - 1 and nu >= 2h + 1.

    Weight identities:
        B(result)   = B(n) + nu - h
        B(result^2) = B(n^2) + nu - 1
    """
    _require(n >= 1 and n % 2 == 1, f"n must be odd positive, got {n}")
    _require(n < (1 << h) - 1, f"need n < 2^{h}-1, got {n}")
    _require(nu >= 2 * h + 1, f"need nu >= {2 * h + 1}, got {nu}")
    r = (n << nu) - ((1 << h) - 1)
    _ensure(_weight(r) == _weight(n) + nu - h, "weight identity failed")
    _ensure(_weight(r * r) == _weight(n * n) + nu - 1,
            "square weight identity failed")
    return r


def normalize_defect(n: int) -> int:
    """Drive an odd n with defect >= +1 to a value with defect exactly -1.

    Uses h = bitlen(n) + 1 and nu = B(n^2) - 2B(n) + 2h, the explicit
    choice that makes B(n'^2) = 2B(n') - 1 for n' = n*2^nu - (2^h - 1).
    Also guarantees n' < n * 2^(4k+2).
    """
    _require(n > 1 and n % 2 == 1, f"n must be odd and > 1, got {n}")
    k = n.bit_length()
    w, sw = _weight(n), _weight(n * n)
    _require(sw >= 2 * w + 1,
             f"need defect >= +1, got {sw - 2 * w} for n={n}")
    h = k + 1
    nu = sw - 2 * w + 2 * h
    r = subtract_mersenne(n, h, nu)
    _ensure(_weight(r * r) == 2 * _weight(r) - 1, "normalized defect is not -1")
    _ensure(nu < 4 * k + 2, "shift bound nu < 4k+2 violated")
    return r


def inflate(n: int) -> int:
    """Append k zeros, a one, 2k+1 zeros and a one below n (k = bitlen(n)).

    Two nested affix-one steps, so B(n0) = B(n) + 2 and
    B(n0^2) = B(n^2) + 2B(n) + 3; the defect of the result is
    B(n^2) - 1, which is >= +1 whenever n is not a power of two.
    The result is odd and smaller than n^4 up to a constant.
    """
    _require(n > 1, f"n must be > 1, got {n}")
    k = n.bit_length()
    r = affix_one(affix_one(n, k + 1), 2 * k + 2)
    _ensure(_weight(r) == _weight(n) + 2, "weight identity failed")
    _ensure(_weight(r * r) == _weight(n * n) + 2 * _weight(n) + 3,
            "square weight identity failed")
    return r


def construct_one(seed: int) -> ConstructionTrace:
    """Full chain seed -> inflate -> normalize -> finalize.

    Any seed > 1 that is not a power of two works, even seeds included
    (inflate always emits an odd value).  The top bitlen(seed) bits of
    every stage equal the seed, so distinct seeds give distinct finals.
    """
    _require(seed > 1, f"seed must be > 1, got {seed}")
    _require(seed & (seed - 1) != 0,
             f"seed must not be a power of two, got {seed}")
    inflated = inflate(seed)
    normalized = normalize_defect(inflated)
    final = finalize_member(normalized, normalized.bit_length() + 2)
    sb = seed.bit_length()
    _ensure(final >> (final.bit_length() - sb) == seed,
            "leading seed bits not preserved")
    return ConstructionTrace(
        stages=(
            _stage("seed", seed, "seed"),
            _stage("inflate", inflated, "double-affix-one"),
            _stage("normalize", normalized, "mersenne-subtract"),
            _stage("finalize", final, "shift-minus-one"),
        ),
        final=final,
    )


def family_traces(n: int) -> list[ConstructionTrace]:
    """Chains for the n seeds 2^k + i, i = 1..n, with k = bitlen(n).

    All seeds lie strictly between 2^k and 2^(k+1) (since n < 2^k),
    so none is a power of two and no fallback seed is ever needed.
    Results are ordered by seed.
    """
    _require(n > 1 and n % 2 == 1, f"n must be odd and > 1, got {n}")
    k = n.bit_length()
    traces = [construct_one((1 << k) + i) for i in range(1, n + 1)]
    finals = [t.final for t in traces]
    _ensure(len(set(finals)) == n, "family members are not pairwise distinct")
    return traces


def construct_family(n: int) -> list[int]:
    """n pairwise distinct verified members, each <= A * n^40 for a fixed A."""
    return [t.final for t in family_traces(n)]
