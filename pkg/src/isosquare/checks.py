"""On-demand verification suites for the weight identities.

Every constructor re-checks its own weight identity and raises on
violation, so a suite just has to drive the constructors over many
admissible inputs and collect anything that blows up.  Each runner
returns a list of counterexample descriptions; empty means pass.
"""

from __future__ import annotations

import random
from typing import Callable

from . import constructions as cons
from .enumeration import scan_gap
from .membership import weight_profile

DEFAULT_CASES = 10_000


def _collect(label: str, failures: list[str], fn: Callable[[], object],
             case: object) -> None:
    try:
        fn()
    except cons.PostconditionError as exc:
        failures.append(f"{label}{case}: {exc}")


def check_mult_mersenne(cases: int = DEFAULT_CASES,
                        rng: random.Random | None = None) -> list[str]:
    """Random (n, nu) with n < 2^nu, nu <= 40, plus exhaustive nu <= 12."""
    rng = rng or random.Random(0)
    failures: list[str] = []
    for nu in range(1, 13):
        for n in range(1, 1 << nu):
            _collect("mult_mersenne", failures,
                     lambda: cons.mult_mersenne(n, nu), (n, nu))
    for _ in range(cases):
        nu = rng.randint(1, 40)
        n = rng.randint(1, (1 << nu) - 1)
        _collect("mult_mersenne", failures,
                 lambda: cons.mult_mersenne(n, nu), (n, nu))
    return failures


def check_affix_one(cases: int = DEFAULT_CASES,
                    rng: random.Random | None = None) -> list[str]:
    rng = rng or random.Random(1)
    failures: list[str] = []
    for _ in range(cases):
        n = rng.randint(1, 1 << 40)
        nu = n.bit_length() + 1 + rng.randint(0, 20)
        _collect("affix_one", failures,
                 lambda: cons.affix_one(n, nu), (n, nu))
    return failures


def check_subtract_compose(cases: int = DEFAULT_CASES,
                           rng: random.Random | None = None) -> list[str]:
    rng = rng or random.Random(2)
    failures: list[str] = []
    for _ in range(cases):
        n = rng.randint(0, 1 << 30) * 2 + 1
        m = rng.randint(0, 1 << 30) * 2 + 1
        k, h = n.bit_length(), m.bit_length()
        nu = max(2 * h - 1, h + k + 1) + rng.randint(0, 10)
        _collect("subtract_compose", failures,
                 lambda: cons.subtract_compose(n, m, nu), (n, m, nu))
    return failures


def check_subtract_mersenne(cases: int = DEFAULT_CASES,
                            rng: random.Random | None = None) -> list[str]:
    rng = rng or random.Random(3)
    failures: list[str] = []
    for _ in range(cases):
        n = rng.randint(0, 1 << 30) * 2 + 1
        h = n.bit_length() + rng.randint(1, 10)
        nu = 2 * h + 1 + rng.randint(0, 10)
        _collect("subtract_mersenne", failures,
                 lambda: cons.subtract_mersenne(n, h, nu), (n, h, nu))
    return failures


def check_finalize_member(limit: int = 10_000) -> list[str]:
    """Every odd n <= limit with defect -1, at the minimal and a larger shift."""
    failures: list[str] = []
    for n in range(1, limit + 1, 2):
        if weight_profile(n).defect != -1:
            continue
        for nu in (n.bit_length() + 2, n.bit_length() + 7):
            _collect("finalize_member", failures,
                     lambda: cons.finalize_member(n, nu), (n, nu))
    return failures


def check_normalize_defect(limit: int = 10_000) -> list[str]:
    """Every odd n <= limit with defect >= +1."""
    failures: list[str] = []
    for n in range(3, limit + 1, 2):
        if weight_profile(n).defect < 1:
            continue
        _collect("normalize_defect", failures,
                 lambda: cons.normalize_defect(n), (n,))
    return failures


def check_inflate(limit: int = 10_000) -> list[str]:
    """All 2 <= n <= limit, including the strictness edge when B(n^2) = 2."""
    failures: list[str] = []
    for n in range(2, limit + 1):
        _collect("inflate", failures, lambda: cons.inflate(n), (n,))
        n0 = cons.inflate(n)
        sq = weight_profile(n).square_weight
        strict = weight_profile(n0).square_weight > 2 * weight_profile(n0).weight + 1
        if sq >= 3 and not strict:
            failures.append(f"inflate({n}): strict defect inequality failed")
    return failures


def check_gaps(max_k: int = 10) -> list[str]:
    failures = []
    for k in range(1, max_k + 1):
        if not scan_gap(k):
            failures.append(f"scan_gap({k}): member found inside the gap")
        for r in (1, (1 << k) - 1) if k > 1 else (1,):
            if not cons.gap_weight_identity(k, r):
                failures.append(f"gap_weight_identity({k}, {r}) failed")
    return failures


def check_tuples(min_k: int = 9, max_k: int = 40) -> list[str]:
    failures = []
    for k in range(min_k, max_k + 1):
        _collect("four_tuple", failures, lambda: cons.four_tuple(k), (k,))
    return failures


def check_mersenne(max_k: int = 30) -> list[str]:
    failures = []
    for k in range(2, max_k + 1):
        _collect("mersenne_member", failures,
                 lambda: cons.mersenne_member(k), (k,))
    return failures


def run_lemma_suite(cases: int = DEFAULT_CASES) -> list[str]:
    """All weight-identity checks of the lemma constructors."""
    scan = min(cases, 10_000)
    return (check_mult_mersenne(cases)
            + check_affix_one(cases)
            + check_subtract_compose(cases)
            + check_subtract_mersenne(cases)
            + check_finalize_member(scan)
            + check_normalize_defect(scan)
            + check_inflate(scan))


SUITES: dict[str, Callable[[int], list[str]]] = {
    "lemmas": run_lemma_suite,
    "gaps": lambda cases: check_gaps(),
    "tuples": lambda cases: check_tuples(),
    "mersenne": lambda cases: check_mersenne(),
}


def run_suite(name: str, cases: int = DEFAULT_CASES) -> list[str]:
    """Run one named suite, or all of them; returns counterexamples."""
    if name == "all":
        failures = []
        for runner in SUITES.values():
            failures.extend(runner(cases))
        return failures
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{sorted(SUITES)} or 'all'")
    return SUITES[name](cases)
