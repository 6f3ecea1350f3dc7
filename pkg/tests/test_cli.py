import json

import pytest

from trisolve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class TestSolveCommand:
    def test_example_1_text(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "aas", "--alpha", "72", "--beta", "40", "--c", "15"
        )
        assert code == 0
        assert "unique" in out
        assert "a=15.39" in out and "b=10.40" in out and "c=15.00" in out
        assert "verification passed" in out

    def test_example_2_text(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "sas", "--a", "10", "--gamma", "40", "--b", "4"
        )
        assert code == 0
        assert "c=7.40" in out
        assert "alpha=119.66" in out and "beta=20.34" in out

    def test_example_1_json_full_precision(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "aas", "--alpha", "72", "--beta", "40",
            "--c", "15", "--output", "json-lines",
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["outcome"] == "unique"
        tri = rec["triangles"][0]
        assert tri["a"] == 15.386212426113484
        assert tri["b"] == 10.399031538144158
        assert rec["verification"][0]["passed"] is True

    def test_text_and_json_describe_the_same_triangle(self, capsys):
        args = ("solve", "--case", "sas", "--a", "10", "--gamma", "40", "--b", "4")
        _, text_out, _ = run(capsys, *args)
        _, json_out, _ = run(capsys, *args, "--output", "json-lines")
        tri = json_lines(json_out)[0]["triangles"][0]
        for key in ("alpha", "beta", "gamma", "a", "b", "c"):
            assert f"{key}={tri[key]:.2f}" in text_out

    def test_no_solution_exit_1(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "ssa", "--a", "2", "--b", "8", "--alpha", "35"
        )
        assert code == 1
        assert "no solution" in out
        assert "altitude" in out

    def test_two_solutions(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "ssa", "--a", "6", "--b", "8", "--alpha", "35",
            "--output", "json-lines",
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["outcome"] == "two"
        betas = [t["beta"] for t in rec["triangles"]]
        assert betas[0] < betas[1]

    def test_relabeled_ssa_keeps_user_labels(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "ssa", "--b", "6", "--c", "8", "--beta", "35",
            "--output", "json-lines",
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["outcome"] == "two"
        for tri in rec["triangles"]:
            assert tri["beta"] == 35.0
            assert tri["b"] == 6.0
            assert tri["c"] == 8.0

    def test_relabeled_aas_keeps_user_labels(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "aas", "--beta", "72", "--gamma", "40",
            "--b", "15", "--output", "json-lines",
        )
        assert code == 0
        (rec,) = json_lines(out)
        tri = rec["triangles"][0]
        assert tri["beta"] == 72.0 and tri["gamma"] == 40.0 and tri["b"] == 15.0
        assert tri["alpha"] == 68.0
        assert rec["verification"][0]["passed"] is True

    def test_negative_side_is_input_error(self, capsys):
        code, _, err = run(
            capsys, "solve", "--case", "sss", "--a", "-3", "--b", "4", "--c", "5"
        )
        assert code == 2
        assert "error" in err

    def test_nan_is_input_error_not_a_crash(self, capsys):
        code, _, err = run(
            capsys, "solve", "--case", "sss", "--a", "nan", "--b", "4", "--c", "5"
        )
        assert code == 2
        assert "error" in err

    def test_non_included_angle_for_sas(self, capsys):
        code, _, err = run(
            capsys, "solve", "--case", "sas", "--a", "1", "--b", "2", "--alpha", "30"
        )
        assert code == 2
        assert "included" in err

    def test_wrong_part_count(self, capsys):
        code, _, err = run(
            capsys, "solve", "--case", "sss", "--a", "3", "--b", "4"
        )
        assert code == 2

    def test_degenerate_angles_are_no_solution(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--case", "asa", "--alpha", "120", "--beta", "60", "--c", "5"
        )
        assert code == 1
        assert "no solution" in out

    def test_malformed_flags_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--case", "sss", "--a", "abc", "--b", "4", "--c", "5"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--case", "nonsense", "--a", "3"])
        assert exc.value.code == 2


class TestVerifyCommand:
    GOOD = [
        "--alpha", "72", "--beta", "40", "--gamma", "68",
        "--a", "15.386212426113484", "--b", "10.399031538144158", "--c", "15",
    ]

    def test_full_precision_passes(self, capsys):
        code, out, _ = run(capsys, "verify", *self.GOOD, "--tol", "1e-9")
        assert code == 0
        assert "passed" in out

    def test_mistyped_side_fails_with_exit_3(self, capsys):
        args = list(self.GOOD)
        args[7] = "15.49"
        code, out, _ = run(capsys, "verify", *args, "--tol", "1e-9")
        assert code == 3
        assert "FAILED" in out

    def test_rounded_parts_pass_loose_tolerance(self, capsys):
        code, _, _ = run(
            capsys, "verify", "--alpha", "72", "--beta", "40", "--gamma", "68",
            "--a", "15.39", "--b", "10.40", "--c", "15", "--tol", "1e-2",
        )
        assert code == 0

    def test_bad_angle_sum_is_input_error(self, capsys):
        code, _, err = run(
            capsys, "verify", "--alpha", "80", "--beta", "60", "--gamma", "50",
            "--a", "1", "--b", "1", "--c", "1",
        )
        assert code == 2
        assert "180" in err

    def test_missing_parts(self, capsys):
        code, _, err = run(capsys, "verify", "--alpha", "60", "--a", "1")
        assert code == 2
        assert "missing" in err

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "verify", *self.GOOD, "--output", "json-lines")
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["passed"] is True
        assert len(rec["mollweide_sin"]) == 3
        assert rec["tolerance"] == 1e-9


EX1_REC = {"id": "ex1", "case": "aas", "alpha": 72, "beta": 40, "c": 15}
EX2_REC = {"id": "ex2", "case": "sas", "a": 10, "gamma": 40, "b": 4}
NONE_REC = {"id": "gap", "case": "ssa", "a": 2, "b": 8, "alpha": 35}
BAD_REC = {"id": "oops", "case": "sss", "a": 1, "b": 1}


def write_jsonl(path, records):
    path.write_text("".join(json.dumps(r) + "\n" for r in records), encoding="utf-8")


class TestBatchCommand:
    def test_mixed_file_reports_in_order(self, tmp_path, capsys):
        batch = tmp_path / "batch.jsonl"
        write_jsonl(batch, [EX1_REC, EX2_REC, NONE_REC, BAD_REC])
        code, out, _ = run(
            capsys, "batch", "--input", str(batch), "--output", "json-lines"
        )
        assert code != 0
        records = json_lines(out)
        assert [r["id"] for r in records[:-1]] == ["ex1", "ex2", "gap", "oops"]
        assert [r["outcome"] for r in records[:-1]] == ["unique", "unique", "none", "error"]
        assert records[-1] == {"summary": {"unique": 2, "two": 0, "none": 1, "error": 1}}

    def test_csv_batch(self, tmp_path, capsys):
        batch = tmp_path / "batch.csv"
        batch.write_text(
            "id,case,alpha,beta,gamma,a,b,c,tol\n"
            "ex1,aas,72,40,,,,15,\n"
            "ex2,sas,,,40,10,4,,\n"
            "gap,ssa,35,,,2,8,,\n"
            "oops,sss,,,,1,1,,\n",
            encoding="utf-8",
        )
        code, out, _ = run(
            capsys, "batch", "--input", str(batch), "--output", "json-lines"
        )
        assert code != 0
        records = json_lines(out)
        assert [r["outcome"] for r in records[:-1]] == ["unique", "unique", "none", "error"]
        tri = records[0]["triangles"][0]
        assert tri["a"] == 15.386212426113484

    def test_empty_file(self, tmp_path, capsys):
        batch = tmp_path / "empty.jsonl"
        batch.write_text("", encoding="utf-8")
        code, out, _ = run(capsys, "batch", "--input", str(batch))
        assert code == 0
        assert "0 unique, 0 two, 0 none, 0 error" in out

    def test_text_mode_summary(self, tmp_path, capsys):
        batch = tmp_path / "batch.jsonl"
        write_jsonl(batch, [EX1_REC, NONE_REC])
        code, out, _ = run(capsys, "batch", "--input", str(batch))
        assert code == 0
        assert out.index("ex1") < out.index("gap")
        assert "summary: 1 unique, 0 two, 1 none, 0 error" in out

    def test_record_tolerance_overrides_flag(self, tmp_path, capsys):
        rounded = {
            "id": "r1", "case": "verify", "alpha": 72, "beta": 40, "gamma": 68,
            "a": 15.39, "b": 10.40, "c": 15,
        }
        batch = tmp_path / "batch.jsonl"
        write_jsonl(batch, [rounded, {**rounded, "id": "r2", "tol": 1e-2}])
        code, out, _ = run(
            capsys, "batch", "--input", str(batch), "--tol", "1e-9",
            "--output", "json-lines",
        )
        assert code == 0
        records = json_lines(out)
        assert records[0]["verification"][0]["passed"] is False
        assert records[1]["verification"][0]["passed"] is True

    def test_duplicate_id_is_an_error_record(self, tmp_path, capsys):
        batch = tmp_path / "batch.jsonl"
        write_jsonl(batch, [EX1_REC, EX1_REC])
        code, out, _ = run(capsys, "batch", "--input", str(batch), "--output", "json-lines")
        assert code != 0
        records = json_lines(out)
        assert records[1]["outcome"] == "error"
        assert "duplicate" in records[1]["reason"]

    def test_unknown_csv_column_rejects_file(self, tmp_path, capsys):
        batch = tmp_path / "batch.csv"
        batch.write_text("id,case,frobnicate\nx,sss,1\n", encoding="utf-8")
        code, _, err = run(capsys, "batch", "--input", str(batch))
        assert code == 2
        assert "frobnicate" in err

    def test_unparsable_json_line_is_isolated(self, tmp_path, capsys):
        batch = tmp_path / "batch.jsonl"
        batch.write_text(
            json.dumps(EX1_REC) + "\n{this is not json\n" + json.dumps(EX2_REC) + "\n",
            encoding="utf-8",
        )
        code, out, _ = run(capsys, "batch", "--input", str(batch), "--output", "json-lines")
        assert code != 0
        records = json_lines(out)
        assert [r["outcome"] for r in records[:-1]] == ["unique", "error", "unique"]

    def test_ambiguous_extension_warns_and_assumes_jsonl(self, tmp_path, capsys):
        batch = tmp_path / "batch.dat"
        write_jsonl(batch, [EX1_REC])
        code, out, err = run(capsys, "batch", "--input", str(batch))
        assert code == 0
        assert "warning" in err and "json-lines" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "batch", "--input", "/nonexistent/x.jsonl")
        assert code == 2
        assert "error" in err

    def test_verify_record_in_batch(self, tmp_path, capsys):
        rec = {
            "id": "v1", "case": "verify", "alpha": 72, "beta": 40, "gamma": 68,
            "a": 15.386212426113484, "b": 10.399031538144158, "c": 15,
        }
        batch = tmp_path / "batch.jsonl"
        write_jsonl(batch, [rec])
        code, out, _ = run(capsys, "batch", "--input", str(batch), "--output", "json-lines")
        assert code == 0
        records = json_lines(out)
        assert records[0]["outcome"] == "unique"
        assert records[0]["verification"][0]["passed"] is True
