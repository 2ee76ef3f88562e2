import json

from bianchi_lefschetz.cli import argv_of_record, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def records_of(out):
    return [json.loads(line) for line in out.strip().split("\n") if line]


class TestFieldCommand:
    def test_field_record(self, capsys):
        code, out, _ = run_cli(capsys, "field", "--d", "-2")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["field"] == {"d": "-2", "D": "-8", "h": "1", "t": "1",
                                "D2": "8", "ramified_primes": ["2"]}
        assert rec["result"]["omega_rule"] == "omega^2 = d"

    def test_excluded_discriminant_is_input_error(self, capsys):
        code, out, err = run_cli(capsys, "field", "--d", "-3")
        assert code == 1
        assert not out
        assert "d != -1, -3" in err

    def test_unknown_flag_is_input_error(self, capsys):
        code, _, err = run_cli(capsys, "field", "--q", "-2")
        assert code == 1
        assert err


class TestBoundCommand:
    def test_exact_bound_record(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--d", "-2", "--N", "5", "--k", "0")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["result"]["bound"] == "12"
        assert rec["result"]["mode"] == "exact"
        assert rec["provenance"]["tr1_eis"]

    def test_json_replay_is_bit_identical(self, capsys):
        code, out1, _ = run_cli(capsys, "bound", "--d", "-2", "--N", "5", "--k", "0")
        assert code == 0
        (rec,) = records_of(out1)
        code, out2, _ = run_cli(capsys, *argv_of_record(rec))
        assert code == 0
        assert out1 == out2

    def test_csv_and_json_carry_identical_payloads(self, capsys):
        _, out_json, _ = run_cli(capsys, "bound", "--d", "-2", "--N", "5", "--k", "0")
        (rec,) = records_of(out_json)
        _, out_csv, _ = run_cli(capsys, "bound", "--d", "-2", "--N", "5", "--k", "0",
                                "--format", "csv")
        header, row = out_csv.strip().split("\n")
        csv_map = dict(zip(header.split(","), row.split(",")))
        for key, val in rec["result"].items():
            assert csv_map[f"result.{key}"] == val


class TestLefschetzCommands:
    def test_principal(self, capsys):
        code, out, _ = run_cli(capsys, "lefschetz", "principal", "--d", "-7",
                               "--N", "3", "--k", "0")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["result"]["L"] == "-2"

    def test_principal_warning_preserved(self, capsys):
        _, out, _ = run_cli(capsys, "lefschetz", "principal", "--d", "-2",
                            "--N", "5", "--k", "0")
        (rec,) = records_of(out)
        assert any("A or B" in w for w in rec["warnings"])
        _, out_csv, _ = run_cli(capsys, "lefschetz", "principal", "--d", "-2",
                                "--N", "5", "--k", "0", "--format", "csv")
        assert "A or B" in out_csv

    def test_level_one(self, capsys):
        code, out, _ = run_cli(capsys, "lefschetz", "level-one", "--d", "-2",
                               "--k", "0", "--involution", "tau")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["result"]["L"] == "0"
        assert rec["query"]["bracket"] == "torsion-char"

    def test_level_one_rational_warns(self, capsys):
        _, out, _ = run_cli(capsys, "lefschetz", "level-one", "--d", "-2",
                            "--k", "2", "--involution", "sigma",
                            "--bracket", "rational")
        (rec,) = records_of(out)
        assert rec["result"]["L"] == "53/24"
        assert rec["result"]["integral"] == "false"
        assert rec["warnings"]


class TestEisensteinCommands:
    def test_h2(self, capsys):
        code, out, _ = run_cli(capsys, "eisenstein", "h2", "--d", "-7", "--N", "9",
                               "--k", "1", "--involution", "sigma")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["result"]["trace"] == "-72"

    def test_h1(self, capsys):
        code, out, _ = run_cli(capsys, "eisenstein", "h1", "--d", "-2", "--p", "5",
                               "--n", "1")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["result"]["trace"] == "-26"

    def test_h1_precondition_error(self, capsys):
        code, _, err = run_cli(capsys, "eisenstein", "h1", "--d", "-5", "--p", "3",
                               "--n", "1")
        assert code == 1
        assert "class number one" in err


class TestSczechCommand:
    def test_trace_record(self, capsys):
        code, out, _ = run_cli(capsys, "sczech", "--d", "-2", "--N", "3")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["query"]["variant"] == "symplectic-invdiff"
        assert abs(float(rec["result"]["trace_re"]) + 10) < 1e-8
        assert float(rec["result"]["involution_defect"]) < 1e-9

    def test_matrix_dump(self, capsys, tmp_path):
        path = tmp_path / "m.txt"
        code, out, _ = run_cli(capsys, "sczech", "--d", "-2", "--N", "2",
                               "--emit-matrix", str(path))
        assert code == 0
        rows = path.read_text().strip().split("\n")
        assert len(rows) == 225
        assert all(len(r.split()) == 4 for r in rows)


class TestGL2Command:
    def test_record(self, capsys):
        code, out, _ = run_cli(capsys, "gl2", "--d", "-2", "--k", "24")
        assert code == 0
        (rec,) = records_of(out)
        assert rec["result"]["bound"] == "1"

    def test_odd_weight_warns(self, capsys):
        _, out, _ = run_cli(capsys, "gl2", "--d", "-2", "--k", "1")
        (rec,) = records_of(out)
        assert any("unadjudicated" in w for w in rec["warnings"])


class TestTableCommand:
    def test_json_grid(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--d-list", "-2", "-7",
                               "--N-list", "3", "5", "--k-list", "0")
        assert code == 0
        recs = records_of(out)
        assert len(recs) == 4
        kinds = {r["result"]["kind"] for r in recs}
        assert kinds <= {"cusp_lower_bound", "error"}

    def test_tex_body_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--d-list", "-2", "--N-list", "5",
                               "--k-list", "0", "--format", "tex")
        assert code == 0
        lines = out.strip().split("\n")
        assert all(line.endswith(r"\\") for line in lines)
        assert " & " in lines[0]


class TestVerifyCommand:
    def test_fast_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "anchors")
        assert code == 0
        assert "PASS anchors:" in out
        assert "FAIL" not in out.replace("hard failures", "")

    def test_fixedpoints_reports_diagnostics(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "fixedpoints")
        assert code == 0
        assert "DIAG fixedpoints: tau coset census" in out

    def test_unknown_suite_is_input_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "nope")
        assert code == 1
        assert "unknown verify suite" in err


def test_exit_code_aggregation_flags_hard_failures():
    from bianchi_lefschetz.verify import SuiteResult, exit_code
    good, bad = SuiteResult("g"), SuiteResult("b")
    good.check(True, "fine")
    good.diag("note")
    bad.check(False, "broken")
    assert exit_code([good]) == 0
    assert exit_code([good, bad]) == 2
