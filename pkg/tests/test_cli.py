import argparse
import asyncio
import json
import logging
from pathlib import Path
import sys

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

import lieball.cli as cli


def _invoke(argv, capsys):
    args = cli._build_parser().parse_args(argv)
    rc = asyncio.run(cli._run(args))
    return rc, capsys.readouterr().out


def test_build_parser_includes_expected_arguments():
    parser = cli._build_parser()

    args = parser.parse_args([
        "--seed",
        "3",
        "--exhaustive",
        "analyze",
        "--builtin",
        "SO12_BLOCK",
        "--param",
        "n=4",
        "--tasks",
        "TYPE,IRREDUCIBILITY",
    ])

    assert isinstance(args, argparse.Namespace)
    assert args.command == "analyze"
    assert args.seed == 3
    assert args.exhaustive is True
    assert args.param == ["n=4"]
    assert args.source is None

    args = parser.parse_args(["embed", "P1", "--n", "2", "--", "-2", "0"])
    assert args.point == ["-2", "0"]


def test_configure_logging_sets_level():
    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(logging.NOTSET)

    cli._configure_logging(verbose=False)
    assert logging.getLogger().getEffectiveLevel() == logging.INFO

    cli._configure_logging(verbose=True)
    assert logging.getLogger().getEffectiveLevel() == logging.DEBUG


def test_analyze_builtin_reports_tasks_in_order(capsys):
    rc, out = _invoke(["analyze", "--builtin", "APPENDIX_SO12", "--tasks", "FORMS,TYPE,IRREDUCIBILITY"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["exact"] is True
    assert doc["request"]["tasks"] == ["IRREDUCIBILITY", "TYPE", "FORMS"]
    results = doc["results"]
    assert list(results) == ["IRREDUCIBILITY", "TYPE", "FORMS"]
    assert results["IRREDUCIBILITY"]["verdict"] == "IRREDUCIBLE"
    assert results["IRREDUCIBILITY"]["verified"] is True
    assert results["TYPE"]["type"] == "REAL"
    assert results["FORMS"]["SYMMETRIC"]["signatures"] == [[2, 3, 0]]


def test_analyze_center_of_unitary_algebra(capsys):
    rc, out = _invoke(["analyze", "--builtin", "U(1,2)_real", "--tasks", "CENTER,CLOSURE"], capsys)
    assert rc == 0
    results = json.loads(out)["results"]
    assert results["CLOSURE"]["dim"] == 9
    assert results["CENTER"]["dim"] == 1


def test_analyze_file(tmp_path, capsys):
    path = tmp_path / "sl2.json"
    path.write_text(
        json.dumps({"ambient_dim": 2, "generators": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]]}),
        encoding="utf-8",
    )
    rc, out = _invoke(["analyze", str(path), "--tasks", "CLOSURE,IRREDUCIBILITY"], capsys)
    assert rc == 0
    results = json.loads(out)["results"]
    assert results["CLOSURE"] == {"name": "sl2", "generators": 2, "dim": 3, "ambient_dim": 2, "field": "rat"}
    assert results["IRREDUCIBILITY"]["verdict"] == "IRREDUCIBLE"


def test_input_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert _invoke(["analyze", str(bad)], capsys)[0] == 1
    assert _invoke(["analyze", str(tmp_path / "missing.json")], capsys)[0] == 1
    assert _invoke(["analyze"], capsys)[0] == 1
    assert _invoke(["analyze", "--builtin", "NOPE"], capsys)[0] == 1
    assert _invoke(["verify", "THEOREM1", "--n", "9"], capsys)[0] == 1
    assert _invoke(["embed", "I1", "--n", "2", "1", "1"], capsys)[0] == 1


def test_withheld_verdict_exits_2(capsys):
    rc, out = _invoke(["--budget", "2", "analyze", "--builtin", "SU2_real"], capsys)
    assert rc == 2
    assert out == ""


def test_recheck_round_trip(tmp_path, capsys):
    report = tmp_path / "report.json"
    rc, _ = _invoke(["--output", str(report), "analyze", "--builtin", "SO(2,3)"], capsys)
    assert rc == 0

    rc, out = _invoke(["analyze", "--builtin", "SO(2,3)", "--recheck", str(report)], capsys)
    assert rc == 0
    assert json.loads(out)["results"]["RECHECK"] == {"verdict": "IRREDUCIBLE", "verified": True}

    doc = json.loads(report.read_text(encoding="utf-8"))
    doc["results"]["IRREDUCIBILITY"]["certificate"]["factor"] = ["5", "1"]
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(doc), encoding="utf-8")
    rc, out = _invoke(["analyze", "--builtin", "SO(2,3)", "--recheck", str(tampered)], capsys)
    assert rc == 3
    assert json.loads(out)["results"]["RECHECK"]["verified"] is False


def test_verify_battery(capsys):
    rc, out = _invoke(["verify", "APPENDIX_A"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert all(item["passed"] for item in doc["items"])

    rc, out = _invoke(["--human", "verify", "APPENDIX_B", "--n", "1..2", "--samples", "4"], capsys)
    assert rc == 0
    assert "0 failed" in out


def test_reports_are_byte_identical(capsys):
    argv = ["--seed", "11", "analyze", "--builtin", "SO12_BLOCK_P2", "--param", "n=3", "--tasks", "IRREDUCIBILITY,COMMUTANT"]
    assert _invoke(argv, capsys) == _invoke(argv, capsys)


def test_embed_and_map_iv(capsys):
    rc, out = _invoke(["embed", "P1", "--n", "2", "2", "0"], capsys)
    assert rc == 0
    results = json.loads(out)["results"]
    assert results["on_quadric"] is True
    assert results["in_lieball"] is True

    rc, out = _invoke(["map-iv", "1/2", "0"], capsys)
    assert rc == 0
    results = json.loads(out)["results"]
    assert results["in_domain"] is True
    assert results["in_lieball"] is True
    assert results["chained_bound"] is True

    rc, out = _invoke(["map-iv", "2", "0"], capsys)
    results = json.loads(out)["results"]
    assert (results["in_domain"], results["in_lieball"]) == (False, False)
