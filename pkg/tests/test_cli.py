"""Exit codes and report shape of the command line front end."""

import json

import pytest

from cyclogt.cli import main
from cyclogt.relations import PairGH
from cyclogt.series import Series
from cyclogt.tkn import t0_free_alphabet, PHI_ALPHABET


def test_dims_report_embeds_config(tmp_path, capsys):
    out = tmp_path / "dims.json"
    rc = main(["dims", "--system", "grt1", "--max-degree", "4", "--out", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert rep["config"]["system"] == "grt1"
    assert rep["config"]["max_degree"] == 4
    assert "version" in rep
    assert rep["dims"] == [0, 0, 1, 0]
    assert "degree" in capsys.readouterr().out


def test_dims_free_needs_rank(capsys):
    with pytest.raises(SystemExit) as e:
        main(["dims", "--system", "free", "--max-degree", "3"])
    assert e.value.code == 1


def test_dims_degree_cap(capsys):
    with pytest.raises(SystemExit) as e:
        main(["dims", "--system", "grt1", "--max-degree", "9"])
    assert e.value.code == 1


def test_check_identity_pair(tmp_path, capsys):
    f = tmp_path / "pair.json"
    f.write_text(json.dumps(PairGH.identity(2, 3).to_json()))
    assert main(["check", "--input", str(f)]) == 0
    assert "all residuals zero" in capsys.readouterr().out


def test_check_violating_pair(tmp_path, capsys):
    al = t0_free_alphabet(2)
    bad = PairGH.from_lie(Series.zero(PHI_ALPHABET, 2), Series.gen(al, "A", 2), 2, 2)
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(bad.to_json()))
    assert main(["check", "--input", str(f)]) == 2
    assert "VIOLATED" in capsys.readouterr().out


def test_check_unreadable_input(tmp_path):
    f = tmp_path / "garbage.json"
    f.write_text("{not json")
    with pytest.raises(SystemExit) as e:
        main(["check", "--input", str(f)])
    assert e.value.code == 1


def test_verify_theorems_subset(tmp_path):
    out = tmp_path / "vt.json"
    rc = main(["verify-theorems", "--theorem", "hexagons", "--max-degree", "3",
               "--out", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert rep["all_hold"]
    assert all(r["theorem"] == "pentagon_implies_hexagons" for r in rep["results"])


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["dims"])
    assert e.value.code == 1
