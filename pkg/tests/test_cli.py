import json
from pathlib import Path

import pytest

from spinfields import fields
from spinfields.cli import main

import golden


def run(capsys, *args):
    code = main([str(a) for a in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSigma:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "sigma", 16)
        assert code == 0
        assert out == "sigma(16) = 8, decomposition k=0 p=0 q=1\n"

    def test_table_values(self, capsys):
        code, out, _ = run(capsys, "sigma", 1024)
        assert code == 0
        assert out.startswith("sigma(1024) = 19")

    def test_odd(self, capsys):
        code, out, _ = run(capsys, "sigma", 7)
        assert code == 0
        assert out.startswith("sigma(7) = 0")

    def test_decompose(self, capsys):
        code, out, _ = run(capsys, "decompose", 96)
        assert code == 0
        assert out == "96 = (2*1+1) * 2^1 * 16^1\n"

    def test_usage_error_non_integer(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sigma", "sixteen"])
        assert exc.value.code == 2

    def test_nonpositive(self, capsys):
        code, _, err = run(capsys, "sigma", 0)
        assert code == 2
        assert "error" in err


class TestFields:
    def test_sparse_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "fields", 32, "--format", "sparse-json")
        assert code == 0
        parsed = fields.system_from_json(json.loads(out))
        assert parsed == fields.build_system(32)

    def test_byte_stable(self, capsys):
        _, out1, _ = run(capsys, "fields", 48, "--format", "sparse-json")
        _, out2, _ = run(capsys, "fields", 48, "--format", "sparse-json")
        assert out1 == out2

    def test_display(self, capsys):
        code, out, _ = run(capsys, "fields", 16, "--format", "display")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 8
        assert lines[0].startswith("B(1,1): (-s9, -s10,")

    def test_dense_csv(self, capsys):
        code, out, _ = run(capsys, "fields", 2, "--format", "dense-csv")
        assert code == 0
        assert out == "# L(i)\n0,-1\n1,0\n"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "sys.json"
        code, out, _ = run(capsys, "fields", 16, "--out", target)
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["m"] == 16

    def test_odd_notice(self, capsys):
        code, out, err = run(capsys, "fields", 9)
        assert code == 0
        assert "odd" in err
        assert json.loads(out)["fields"] == []


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", 512)
        assert code == 0
        assert "PASS" in out

    def test_with_oracle(self, capsys):
        code, out, _ = run(capsys, "verify", 16, "--oracle")
        assert code == 0
        assert "oracle" in out

    def test_oracle_bound(self, capsys):
        code, _, err = run(capsys, "verify", 512, "--oracle")
        assert code == 2
        assert "oracle" in err

    def test_sampled(self, capsys):
        code, out, _ = run(capsys, "verify", 256, "--sampled", "--count", "10")
        assert code == 0
        assert "sampled" in out


class TestMultable:
    def test_csv_matches_fixture(self, capsys):
        data = Path(__file__).parent / "data"
        for level, name in ((3, "table_octonions.csv"), (4, "table_sedenions.csv")):
            code, out, _ = run(capsys, "multable", level, "--format", "dense-csv")
            assert code == 0
            assert out == (data / name).read_text()

    def test_json(self, capsys):
        code, out, _ = run(capsys, "multable", 2, "--format", "sparse-json")
        assert code == 0
        obj = json.loads(out)
        assert obj["dim"] == 4
        assert obj["entries"][1][2] == {"index": 3, "sign": 1}

    def test_display(self, capsys):
        code, out, _ = run(capsys, "multable", 1, "--format", "display")
        assert code == 0
        assert "e1" in out

    def test_cap(self, capsys):
        code, _, err = run(capsys, "multable", 9)
        assert code == 2
        assert "capped" in err


class TestApply:
    def write_vector(self, tmp_path, coords):
        f = tmp_path / "n.txt"
        f.write_text("".join(f"{c}\n" for c in coords))
        return f

    def test_basis_vector_gives_first_columns(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, [1] + [0] * 15)
        code, out, _ = run(capsys, "apply", 16, "--vector", f)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 8
        for line, row in zip(lines, golden.J_ROWS_16):
            label, coords = line.split("\t")
            got = [int(c) for c in coords.split()]
            matrix = golden.coord_rows_to_matrix(row, 16)
            assert got == [matrix[r][0] for r in range(16)]

    def test_rational_tokens(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, ["1/2", "-3"] + ["0"] * 14)
        code, out, _ = run(capsys, "apply", 16, "--vector", f)
        assert code == 0
        assert "1/2" in out

    def test_csv_format(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, [1] + [0] * 15)
        code, out, _ = run(capsys, "apply", 16, "--vector", f, "--format", "dense-csv")
        assert code == 0
        assert len(out.splitlines()) == 8

    def test_json_format(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, [1, 0])
        code, out, _ = run(capsys, "apply", 2, "--vector", f, "--format", "sparse-json")
        assert code == 0
        obj = json.loads(out)
        assert obj["frame"][0] == {"label": "L(i)", "coords": ["0", "1"]}

    def test_decimal_rejected_with_line_number(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, ["1", "2.5"] + ["0"] * 14)
        code, _, err = run(capsys, "apply", 16, "--vector", f)
        assert code == 2
        assert "line 2" in err

    def test_garbage_token(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, ["1", "x"] + ["0"] * 14)
        code, _, err = run(capsys, "apply", 16, "--vector", f)
        assert code == 2
        assert "line 2" in err

    def test_wrong_count(self, capsys, tmp_path):
        f = self.write_vector(tmp_path, [1, 2, 3])
        code, _, err = run(capsys, "apply", 16, "--vector", f)
        assert code == 2
        assert "expected 16" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "apply", 16, "--vector", tmp_path / "nope.txt")
        assert code == 2


class TestBench:
    def test_structure(self, capsys):
        code, out, _ = run(capsys, "bench", 32, "--reps", 50)
        assert code == 0
        assert "apply_sigperm" in out
        assert "compose_sigperm" in out
        assert "apply_dense" in out
        assert "ratio" in out

    def test_sparse_only_above_dense_limit(self, capsys):
        code, out, _ = run(capsys, "bench", 8192, "--reps", 3)
        assert code == 0
        assert "apply_dense" not in out

    def test_small_dimension_ratio_at_least_one(self):
        from spinfields.cli import bench

        res = bench(16)
        assert res["ratio_dense_over_sigperm"] >= 1.0

    def test_odd_rejected(self, capsys):
        code, _, err = run(capsys, "bench", 5)
        assert code == 2


def test_unknown_command_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
