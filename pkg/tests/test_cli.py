import json

from ulrichcert.cli import main, parse_degrees, parse_range


def test_parse_range():
    assert list(parse_range("2..6")) == [2, 3, 4, 5, 6]
    assert list(parse_range("4")) == [4]


def test_parse_degrees():
    assert parse_degrees("2,2,1") == (2, 2, 1)


def test_certify_json(capsys):
    code = main(["certify", "--n", "5", "--a", "2", "--r", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["branch"] == "es53-divisibility"
    assert payload["conclusion"] == "NONEXISTENT"
    assert payload["witnesses"]["violated"] == ["2^3 | r"]


def test_certify_out_of_scope(capsys):
    code = main(["certify", "--n", "3", "--a", "2", "--r", "2"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_unknown_flag_exits_2(capsys):
    assert main(["certify", "--bogus", "1"]) == 2
    assert main(["no-such-command"]) == 2


def test_certify_ci_text_and_json_values_agree(capsys):
    code = main(["certify-ci", "--degrees", "1", "--a", "2", "--r", "2"])
    assert code == 0
    text = capsys.readouterr().out
    code = main(["certify-ci", "--degrees", "1", "--a", "2", "--r", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["witnesses"]["delta_chi"] == "5/16"
    assert "5/16" in text
    assert payload["witnesses"]["numerics"]["chiZ_noether"] == "25/16"
    assert "25/16" in text


def test_chi_command(capsys):
    code = main(
        ["chi", "--degrees", "1,1,1,1", "--a", "2", "--r", "2", "--ell", "0", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["chi_ci"] == "1"
    assert payload["chi_ulrich"] == "32"
    assert payload["u"] == "5"
    assert payload["chi_subvariety"] == "5/4"


def test_chi_command_rank_one_skips_subvariety(capsys):
    code = main(["chi", "--degrees", "2", "--a", "2", "--r", "1", "--ell", "0", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert "chi_subvariety" not in payload


def test_verify_appendix_small_grid_deterministic(tmp_path):
    args = [
        "verify-appendix",
        "--a",
        "2..3",
        "--s",
        "4",
        "--d-max",
        "2",
        "--format",
        "json",
    ]
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    assert main(args + ["--output", str(first)]) == 0
    assert main(args + ["--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    payload = json.loads(first.read_text())
    assert payload["summary"]["status"] == "pass"
    assert payload["summary"]["failed"] == 0
    assert all(report["status"] == "pass" for report in payload["reports"])


def test_verify_appendix_parallel_matches_serial(tmp_path):
    base = ["verify-appendix", "--a", "2..3", "--s", "4", "--d-max", "2", "--format", "json"]
    serial = tmp_path / "serial.json"
    parallel = tmp_path / "parallel.json"
    assert main(base + ["--output", str(serial)]) == 0
    assert main(base + ["--jobs", "4", "--output", str(parallel)]) == 0
    assert serial.read_bytes() == parallel.read_bytes()


def test_verify_appendix_text_mode(capsys):
    code = main(["verify-appendix", "--a", "2", "--s", "4", "--d-max", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "status: pass" in out
    assert "failed: 0" in out


def test_selftest_passes(capsys):
    code = main(["selftest"])
    assert code == 0
    out = capsys.readouterr().out
    assert "selftest: pass" in out
    assert out.count("[PASS]") == 10


def test_verify_appendix_full_grids(tmp_path):
    out = tmp_path / "full.json"
    assert (
        main(
            [
                "verify-appendix",
                "--a",
                "2",
                "--s",
                "4",
                "--d-max",
                "2",
                "--full-grids",
                "--format",
                "json",
                "--output",
                str(out),
            ]
        )
        == 0
    )
    payload = json.loads(out.read_text())
    grid_report = payload["gap_reports"][0]
    assert "value_grid" in grid_report
    assert len(grid_report["value_grid"]) == 2 ** grid_report["s"]
