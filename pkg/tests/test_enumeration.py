import random

import pytest

from isosquare.enumeration import (CountSample, RunRecord, counting,
                                   find_runs, members_in_range,
                                   read_checkpoint, scan_gap, sieve)

from conftest import oracle_members


class TestSieve:
    def test_limit4(self):
        assert list(sieve(4)) == [1, 2, 3, 4]

    def test_limit16(self, members_16):
        assert list(sieve(16)) == members_16

    def test_matches_oracle_to_2000(self):
        assert list(sieve(2000)) == oracle_members(2000)

    def test_13742_contains_fixtures(self):
        members = set(sieve(13742))
        assert {316, 317, 318, 319} <= members
        assert all(2**k - 1 in members for k in range(2, 14))

    def test_closure_under_doubling(self):
        limit = 5000
        members = set(sieve(limit))
        for m in members:
            if 2 * m <= limit:
                assert 2 * m in members

    def test_bad_limit(self):
        with pytest.raises(ValueError):
            list(sieve(0))

    def test_deterministic_across_workers(self):
        reference = list(sieve(200_000, workers=1, chunk_size=1 << 14))
        for workers in (2, 4):
            assert list(sieve(200_000, workers=workers,
                              chunk_size=1 << 14)) == reference

    def test_chunk_size_irrelevant(self):
        reference = list(sieve(50_000))
        assert list(sieve(50_000, chunk_size=777)) == reference

    def test_slow_path_above_fast_limit(self):
        lo = (1 << 31) + 1
        fast = [m for m in range(lo, lo + 2000)
                if m.bit_count() == (m * m).bit_count()]
        assert members_in_range(lo, lo + 1999) == fast


class TestCheckpoint:
    def test_records_are_monotone(self, tmp_path):
        path = tmp_path / "ck.txt"
        list(sieve(10_000, chunk_size=1000, checkpoint=str(path)))
        rows = [tuple(map(int, line.split()))
                for line in path.read_text().splitlines()]
        assert [r[0] for r in rows] == sorted(r[0] for r in rows)
        assert [r[1] for r in rows] == sorted(r[1] for r in rows)
        assert rows[-1] == (10_000, len(oracle_members(10_000)))

    def test_resume_emits_remaining_members(self, tmp_path):
        path = tmp_path / "ck.txt"
        first = list(sieve(4000, chunk_size=1000, checkpoint=str(path)))
        rest = list(sieve(10_000, chunk_size=1000, checkpoint=str(path)))
        assert first + rest == oracle_members(10_000)
        assert read_checkpoint(str(path)) == (10_000,
                                              len(oracle_members(10_000)))

    def test_non_monotone_rejected(self, tmp_path):
        path = tmp_path / "ck.txt"
        path.write_text("100 5\n50 7\n")
        with pytest.raises(ValueError):
            read_checkpoint(str(path))


class TestCounting:
    def test_p2(self):
        assert counting(10, [2]) == [CountSample(2, 1)]

    def test_p17(self):
        assert counting(20, [17]) == [CountSample(17, 11)]

    def test_p1(self):
        assert counting(10, [1]) == [CountSample(1, 0)]

    def test_strict_convention(self):
        # 16 is a member; p(16) excludes it, p(17) includes it
        assert counting(20, [16, 17]) == [CountSample(16, 10),
                                          CountSample(17, 11)]

    def test_unsorted_grid_rejected(self):
        with pytest.raises(ValueError):
            counting(100, [5, 3])

    def test_grid_beyond_limit_rejected(self):
        with pytest.raises(ValueError):
            counting(100, [5, 200])

    def test_consistent_with_sieve_random_grid(self):
        limit = 50_000
        members = list(sieve(limit))
        rng = random.Random(42)
        grid = sorted(rng.sample(range(1, limit + 1), 50))
        for s in counting(limit, grid, members=members):
            assert s.count == sum(1 for m in members if m < s.n)

    def test_counts_non_decreasing(self):
        samples = counting(10_000, list(range(1, 10_001, 97)))
        counts = [s.count for s in samples]
        assert counts == sorted(counts)
        assert all(s.count <= s.n for s in samples)


class TestFindRuns:
    def test_second_four_run(self):
        runs = find_runs(400, min_length=4)
        assert runs == [RunRecord(1, 4), RunRecord(316, 4)]

    def test_small(self, members_16):
        runs = find_runs(10, min_length=2)
        assert RunRecord(1, 4) in runs
        assert RunRecord(6, 3) in runs

    def test_empty(self):
        assert find_runs(3, min_length=4) == []

    def test_run_boundaries_are_non_members(self):
        from isosquare.membership import is_isosquare
        for r in find_runs(20_000, min_length=3):
            assert all(is_isosquare(r.start + j) for j in range(r.length))
            assert r.start == 1 or not is_isosquare(r.start - 1)
            assert not is_isosquare(r.start + r.length)

    def test_run_touching_limit_is_extended(self):
        # 316..319 are members; a scan stopping at 317 must still
        # report the full maximal run
        runs = find_runs(317, min_length=2)
        assert runs[-1] == RunRecord(316, 4)


class TestScanGap:
    @pytest.mark.parametrize("k", range(1, 11))
    def test_gap_is_empty(self, k):
        assert scan_gap(k)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            scan_gap(16)
        with pytest.raises(ValueError):
            scan_gap(0)
