"""High-throughput enumeration of isosquare numbers.

The sieve tests B(m) = B(m^2) for every m up to a limit.  Below 2^31
squares fit in 64 bits and chunks are vectorized with numpy popcounts;
above that each element falls back to exact big-integer arithmetic.
The range is split into contiguous chunks and merged in chunk order, so
output is identical whatever the worker count.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .membership import is_isosquare

FAST_LIMIT = 1 << 31  # squares of smaller m fit in an unsigned 64-bit word
DEFAULT_CHUNK = 1 << 22


@dataclass(frozen=True)
class CountSample:
    """Counting-function sample: number of members strictly below n."""

    n: int
    count: int


@dataclass(frozen=True)
class RunRecord:
    """Maximal run of consecutive members starting at start."""

    start: int
    length: int


def members_in_range(lo: int, hi: int) -> list[int]:
    """All members m with lo <= m <= hi, increasing."""
    if lo < 1 or hi < lo:
        return []
    if hi < FAST_LIMIT:
        a = np.arange(lo, hi + 1, dtype=np.uint64)
        mask = np.bitwise_count(a) == np.bitwise_count(a * a)
        return a[mask].tolist()
    return [m for m in range(lo, hi + 1) if m.bit_count() == (m * m).bit_count()]


def _chunks(limit: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(lo, min(limit, lo + chunk_size - 1))
            for lo in range(1, limit + 1, chunk_size)]


def read_checkpoint(path: str) -> tuple[int, int]:
    """Last (chunk_end, cumulative_count) record, or (0, 0) if absent/empty."""
    if not os.path.exists(path):
        return 0, 0
    last_end, last_count = 0, 0
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            end_s, count_s = line.split()
            end, count = int(end_s), int(count_s)
            if end < last_end or count < last_count:
                raise ValueError(f"checkpoint {path} is not monotone")
            last_end, last_count = end, count
    return last_end, last_count


def sieve(limit: int, workers: int = 1, chunk_size: int = DEFAULT_CHUNK,
          checkpoint: str | None = None) -> Iterator[int]:
    """Yield every member m <= limit in increasing order.

    With a checkpoint path, one line "chunk_end count" is appended per
    finished chunk and a later run resumes after the last recorded
    chunk (already-emitted members are not repeated).
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    done, count = (0, 0) if checkpoint is None else read_checkpoint(checkpoint)
    chunks = [c for c in _chunks(limit, chunk_size) if c[1] > done]

    def emit(chunk_end: int, members: list[int]) -> Iterator[int]:
        nonlocal count
        count += len(members)
        if checkpoint is not None:
            with open(checkpoint, "a") as fh:
                fh.write(f"{chunk_end} {count}\n")
        yield from members

    if workers <= 1 or len(chunks) <= 1:
        for lo, hi in chunks:
            yield from emit(hi, members_in_range(max(lo, done + 1), hi))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [(hi, pool.submit(members_in_range, max(lo, done + 1), hi))
                       for lo, hi in chunks]
            for hi, fut in futures:
                yield from emit(hi, fut.result())


def counting(limit: int, grid: Sequence[int],
             members: Sequence[int] | None = None) -> list[CountSample]:
    """p(n) at each grid point: members strictly below n (grid points <= limit)."""
    grid = list(grid)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    if grid and (grid[0] < 1 or grid[-1] > limit):
        raise ValueError("grid points must lie in [1, limit]")
    if members is None:
        members = list(sieve(limit))
    return [CountSample(n=n, count=bisect_left(members, n)) for n in grid]


def find_runs(limit: int, min_length: int = 2) -> list[RunRecord]:
    """Maximal runs of consecutive members with length >= min_length.

    Runs start at or below limit; a run touching the limit is extended
    past it until it closes, so every reported run is maximal.
    """
    if min_length < 2:
        raise ValueError(f"min_length must be >= 2, got {min_length}")
    if limit < min_length:
        return []
    runs = []
    start = prev = None
    for m in sieve(limit):
        if prev is not None and m == prev + 1:
            prev = m
            continue
        if start is not None and prev - start + 1 >= min_length:
            runs.append(RunRecord(start=start, length=prev - start + 1))
        start = prev = m
    if start is not None:
        while is_isosquare(prev + 1):  # run may continue past the limit
            prev += 1
        if prev - start + 1 >= min_length:
            runs.append(RunRecord(start=start, length=prev - start + 1))
    return runs


def scan_gap(k: int) -> bool:
    """True iff no member lies strictly between 2^2k and 2^2k + 2^k (k <= 15)."""
    if not 1 <= k <= 15:
        raise ValueError(f"k must be in 1..15, got {k}")
    n = 1 << (2 * k)
    return not members_in_range(n + 1, n + (1 << k) - 1)
