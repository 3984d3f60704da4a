import json

import pytest

from isosquare.cli import main, parse_limit

from conftest import oracle_members


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseLimit:
    def test_shorthand(self):
        assert parse_limit("10^7") == 10**7
        assert parse_limit("2^20") == 2**20
        assert parse_limit("13742") == 13742

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_limit("ten")


class TestCheck:
    def test_member(self, capsys):
        code, out, _ = run(capsys, "check", "316")
        assert code == 0
        assert "B(n)=5" in out and "member=yes" in out

    def test_non_member(self, capsys):
        code, out, _ = run(capsys, "check", "5")
        assert code == 1
        assert "member=no" in out

    def test_zero_is_usage_error(self, capsys):
        code, _, err = run(capsys, "check", "0")
        assert code == 2 and "error" in err

    def test_custom_triple(self, capsys):
        code, out, _ = run(capsys, "check", "2", "--triple", "3,1,2")
        assert code == 0 and "base=3" in out

    def test_malformed_triple(self, capsys):
        code, _, _ = run(capsys, "check", "5", "--triple", "2,1")
        assert code == 2


class TestEnumerate:
    def test_limit16(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--limit", "16",
                           "--workers", "1")
        assert code == 0
        assert [int(x) for x in out.split()] == oracle_members(16)

    def test_csv_header(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--limit", "4",
                           "--format", "csv", "--workers", "1")
        assert code == 0
        assert out.splitlines() == ["n", "1", "2", "3", "4"]

    def test_zero_limit(self, capsys):
        code, _, _ = run(capsys, "enumerate", "--limit", "0")
        assert code == 2

    def test_unwritable_checkpoint(self, capsys):
        code, _, err = run(capsys, "enumerate", "--limit", "10",
                           "--checkpoint", "/nonexistent/dir/ck.txt")
        assert code == 2 and "checkpoint" in err

    def test_checkpoint_env_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("ISOSQUARE_CHECKPOINT_DIR", str(tmp_path))
        code, _, _ = run(capsys, "enumerate", "--limit", "100",
                         "--checkpoint", "ck.txt", "--workers", "1")
        assert code == 0
        assert (tmp_path / "ck.txt").exists()


class TestCount:
    def test_explicit_grid(self, capsys):
        code, out, _ = run(capsys, "count", "--limit", "20",
                           "--grid", "2,17")
        assert code == 0
        assert out.splitlines() == ["n,count", "2,1", "17,11"]

    def test_single_point(self, capsys):
        code, out, _ = run(capsys, "count", "--limit", "10", "--grid", "1")
        assert code == 0
        assert out.splitlines() == ["n,count", "1,0"]

    def test_geometric_grid(self, capsys):
        code, out, _ = run(capsys, "count", "--limit", "2^12",
                           "--grid", "geometric:1024:2.0")
        assert code == 0
        rows = out.splitlines()
        assert rows[0] == "n,count"
        assert [r.split(",")[0] for r in rows[1:]] == ["1024", "2048", "4096"]

    def test_bad_spec(self, capsys):
        code, _, _ = run(capsys, "count", "--limit", "10", "--grid", "5,3")
        assert code == 2


class TestConstruct:
    def test_seed_json_lines(self, capsys):
        code, out, _ = run(capsys, "construct", "--seed", "5",
                           "--format", "json-lines")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert [r["stage"] for r in records] == ["seed", "inflate",
                                                "normalize", "finalize"]
        assert records[0]["value"] == "5"
        final = records[-1]
        assert final["weight"] == final["square_weight"]
        assert set(records[0]) == {"stage", "value", "bits", "weight",
                                   "square_weight", "rule"}

    def test_family(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "3",
                           "--format", "json-lines")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 12
        finals = {r["value"] for r in records if r["stage"] == "finalize"}
        assert len(finals) == 3

    def test_power_of_two_seed(self, capsys):
        code, _, err = run(capsys, "construct", "--seed", "4")
        assert code == 2 and "power of two" in err

    def test_plain_format(self, capsys):
        code, out, _ = run(capsys, "construct", "--seed", "6")
        assert code == 0 and "finalize" in out


class TestAnalyze:
    def test_small_limit_rejected(self, capsys):
        code, _, _ = run(capsys, "analyze", "--limit", "100")
        assert code == 2

    def test_profile_csv(self, capsys, tmp_path):
        out_path = tmp_path / "profile.csv"
        code, out, _ = run(capsys, "analyze", "--limit", "10^5",
                           "--alpha", "theoretical", "--out", str(out_path),
                           "--workers", "1")
        assert code == 0
        assert "alpha_hat=" in out
        rows = out_path.read_text().splitlines()
        assert rows[0] == "n,log2n,profile_value"
        first = rows[1].split(",")
        assert first[0] == "1024" and float(first[1]) == 10.0
        assert all(float(r.split(",")[2]) > 0 for r in rows[1:])


class TestProps:
    def test_gaps(self, capsys):
        code, out, _ = run(capsys, "props", "--suite", "gaps")
        assert code == 0 and "pass" in out

    def test_tuples(self, capsys):
        code, out, _ = run(capsys, "props", "--suite", "tuples")
        assert code == 0

    def test_mersenne(self, capsys):
        code, out, _ = run(capsys, "props", "--suite", "mersenne")
        assert code == 0

    def test_lemmas_reduced_cases(self, capsys):
        code, out, _ = run(capsys, "props", "--suite", "lemmas",
                           "--cases", "200")
        assert code == 0

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, "props", "--suite", "nosuch")
        assert code == 2
