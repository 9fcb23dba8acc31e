import json
import subprocess
import sys

import pytest

from bunsod.cli import build_parser, dumps, run

SUBCOMMANDS = ["alcove", "bwb", "verlinde", "fusion", "tensor", "coinv", "blocks", "hh-check", "homs", "verify-all"]


def _json(argv, capsys):
    code = run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, out, json.loads(out)


def test_alcove(capsys):
    code, _, payload = _json(["alcove", "--level", "0", "--weight", "2"], capsys)
    assert code == 0
    assert payload["command"] == "alcove"
    assert payload["params"]["level"] == 0
    result = payload["result"]
    assert (result["regular"], result["length"], result["reduced"]) == (True, 1, 0)


def test_alcove_rank_two_and_search(capsys):
    _, _, payload = _json(["alcove", "--level", "1", "--weight", "1,0"], capsys)
    assert payload["result"] == {"length": 0, "method": "residue", "reduced": [1, 0], "regular": True}
    _, _, payload = _json(["alcove", "--level", "0", "--weight", "4", "--method", "bfs"], capsys)
    assert payload["result"]["length"] == 2
    assert len(payload["result"]["word"]) == 2


def test_verlinde(capsys):
    code, _, payload = _json(["verlinde", "--level", "1", "--genus", "2"], capsys)
    assert code == 0
    assert payload["result"] == {"dim": 4}


def test_verlinde_trig_marked_approx(capsys):
    _, _, payload = _json(["verlinde", "--level", "2", "--genus", "1", "--trig"], capsys)
    assert payload["result"]["trig"]["approx"] is True
    assert payload["result"]["trig"]["value"] == pytest.approx(3.0, abs=1e-6)


def test_big_integers_are_strings(capsys):
    _, _, payload = _json(["verlinde", "--level", "20", "--genus", "30"], capsys)
    dim = payload["result"]["dim"]
    assert isinstance(dim, str) and int(dim) > 2**53


def test_hh_check(capsys):
    code, _, payload = _json(["hh-check", "--genus", "2"], capsys)
    assert code == 0
    assert payload["result"]["pass"] is True
    assert payload["result"]["lhs"] == "2s^-1+4+2s"


def test_bwb(capsys):
    _, _, payload = _json(["bwb", "--level", "0", "--genus", "2", "--insert", "2"], capsys)
    assert payload["result"] == {"degree": 1, "dim": 1, "vanishes": False}
    _, _, payload = _json(["bwb", "--level", "-1", "--genus", "3", "--insert", "2", "--xi", "1"], capsys)
    assert payload["result"] == {"vanishes": True}


def test_other_subcommands(capsys):
    _, _, payload = _json(["tensor", "--power", "4"], capsys)
    assert payload["result"]["decomposition"] == {"0": 2, "2": 3, "4": 1}
    _, _, payload = _json(["fusion", "--level", "1", "--coefficient", "1", "1", "0"], capsys)
    assert payload["result"]["coefficient"] == 1
    _, _, payload = _json(["fusion", "--level", "1"], capsys)
    assert payload["result"]["matrices"]["1"] == [[0, 1], [1, 0]]
    _, _, payload = _json(["coinv", "--m", "3"], capsys)
    assert payload["result"]["hilbert"] == [1, 2, 2, 1]
    _, _, payload = _json(["coinv", "--m", "2", "--what", "R"], capsys)
    assert payload["result"]["pieces"] == {"0": {"2": 1}, "1": {"0": 1}}
    _, _, payload = _json(["coinv", "--m", "2", "--what", "gen"], capsys)
    assert payload["result"]["generated"] is True
    _, _, payload = _json(["blocks", "--variant", "coarse", "--genus", "2"], capsys)
    assert [(b["twist"], b["index"]) for b in payload["result"]["blocks"]] == [(0, 0), (0, 1), (1, 0)]
    _, _, payload = _json(["homs", "--m", "3", "--n", "1"], capsys)
    assert payload["result"]["certificate"]["pass"] is True
    _, _, payload = _json(
        ["blocks", "--variant", "conjecture", "--group", "A2", "--genus", "3", "--n-cap", "2", "--inequality=-1,-1,1,0"],
        capsys,
    )
    assert all(sum(b["index"]) < 3 - b["twist"] for b in payload["result"]["blocks"])


@pytest.mark.parametrize(
    "argv",
    [
        ["alcove", "--level", "0", "--weight", "2"],
        ["verlinde", "--level", "20", "--genus", "30", "--trig"],
        ["hh-check", "--genus", "3"],
        ["coinv", "--m", "3", "--what", "R"],
        ["blocks", "--variant", "generalG", "--group", "G2", "--genus", "3"],
    ],
)
def test_json_round_trip(argv, capsys):
    _, out, payload = _json(argv, capsys)
    assert dumps(payload) + "\n" == out


def test_usage_errors(capsys):
    assert run(["nope"]) == 2
    assert run(["alcove", "--level", "0"]) == 2
    assert run(["hh-check", "--genus", "9"]) == 2
    assert "2..6" in capsys.readouterr().err
    assert run(["bwb", "--level", "1", "--genus", "2", "--xi", "1"]) == 2
    assert "unsupported" in capsys.readouterr().err
    assert run(["alcove", "--level", "-1", "--weight", "2"]) == 2
    assert run(["coinv", "--m", "9"]) == 2


@pytest.mark.parametrize("name", SUBCOMMANDS)
def test_help_names_construct(name, capsys):
    assert run([name, "--help"]) == 0
    text = capsys.readouterr().out
    assert len(text.splitlines()) > 3
    parser = build_parser()
    sub = parser._subparsers._group_actions[0].choices[name]
    assert sub.description


def test_out_file(tmp_path, capsys):
    target = tmp_path / "res.json"
    assert run(["verlinde", "--level", "3", "--genus", "1", "--json", "--out", str(target)]) == 0
    printed = capsys.readouterr().out
    assert target.read_text() == printed
    assert json.loads(printed)["result"]["dim"] == 4


def test_table_output(capsys):
    assert run(["blocks", "--variant", "coarse", "--genus", "2"]) == 0
    out = capsys.readouterr().out
    assert "twist=0  index=1  factor=sym_n" in out


def test_radius_env_through_cli(monkeypatch, capsys):
    monkeypatch.setenv("BUNSOD_BFS_RADIUS", "1")
    assert run(["alcove", "--level", "0", "--weight", "10", "--method", "bfs"]) == 2
    assert "within 1 reflections" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bunsod", "verlinde", "--level", "1", "--genus", "3", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["result"]["dim"] == 8


def test_check_failure_exit_code(monkeypatch, capsys):
    from bunsod import sod

    real = sod.hh_additivity_check

    def broken(g):
        report = real(g)
        return sod.HHReport(g, report.lhs + sod.HHPolynomial({0: 1}), report.rhs, report.terms)

    monkeypatch.setattr(sod, "hh_additivity_check", broken)
    assert run(["hh-check", "--genus", "2"]) == 1
