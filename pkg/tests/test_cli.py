import json

import pytest

from diagcat import CATEGORIES, cup_cap, identity_partition, zeta
from diagcat.cli import main


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_normalform_worked_example(capsys):
    assert main(["normalform", "x3yxytz4xyz", "--canonical"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "word: x3yxytz4xyz",
        "extreme word: xytzxyz",
        "decomposition: x.x2.y.xy.t.1.z.z3.x.1.y.1.z",
        "normal form: x3yxytz4xyz",
        "canonical form: x3yxytz2xyz3",
    ]


def test_compose_identity_with_identity(tmp_path, capsys):
    enc = CATEGORIES["P"].encode
    path = _write(tmp_path, "id.json", enc(identity_partition(2)))
    assert main(["compose", "P", path, path]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["category"] == "P"
    assert got["dead_blocks"] == 0
    assert got["product"] == enc(identity_partition(2))


def test_compose_cup_cap_counts_a_circle(tmp_path, capsys):
    enc = CATEGORIES["aTLe"].encode
    path = _write(tmp_path, "cc.json", enc(cup_cap(2, 1)))
    assert main(["compose", "aTLe", path, path]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got["b0"] == 1 and got["bw"] == 0
    assert got["product"] == enc(cup_cap(2, 1))


def test_compose_shape_mismatch_exits_2(tmp_path, capsys):
    enc = CATEGORIES["P"].encode
    a = _write(tmp_path, "a.json", enc(identity_partition(2)))
    b = _write(tmp_path, "b.json", enc(identity_partition(3)))
    assert main(["compose", "P", a, b]) == 2
    assert "error:" in capsys.readouterr().err


def test_compose_validation_failure_exits_3(tmp_path, capsys):
    crossing = {
        "m": 2,
        "n": 2,
        "partners": [
            {"from": {"side": "in", "index": 1}, "to": {"offset": 0, "side": "out", "index": 2}},
            {"from": {"side": "in", "index": 2}, "to": {"offset": 0, "side": "out", "index": 1}},
            {"from": {"side": "out", "index": 1}, "to": {"offset": 0, "side": "in", "index": 2}},
            {"from": {"side": "out", "index": 2}, "to": {"offset": 0, "side": "in", "index": 1}},
        ],
    }
    a = _write(tmp_path, "x.json", crossing)
    b = _write(tmp_path, "cc.json", CATEGORIES["aTLe"].encode(cup_cap(2, 1)))
    assert main(["compose", "aTLe", a, b]) == 3
    assert "error:" in capsys.readouterr().err


def test_compose_bad_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["compose", "P", str(path), str(path)]) == 2
    capsys.readouterr()


def test_compose_round_trips_its_own_output(tmp_path, capsys):
    enc = CATEGORIES["aTLe"].encode
    path = _write(tmp_path, "z.json", enc(zeta(3)))
    assert main(["compose", "aTLe", path, path]) == 0
    product = json.loads(capsys.readouterr().out)["product"]
    back = _write(tmp_path, "back.json", product)
    assert main(["compose", "aTLe", back, path]) == 0
    capsys.readouterr()


def test_check_criterion_modes(capsys):
    assert main(["check", "cube-transport", "N"]) == 0
    assert "holds (structural criterion)" in capsys.readouterr().out
    assert main(["check", "cube-transport", "M"]) == 1
    assert "fails (structural criterion)" in capsys.readouterr().out


def test_check_search_is_deterministic(capsys):
    assert main(["check", "commutation", "A21", "--search"]) == 1
    first = capsys.readouterr().out
    assert "seed: 0" in first and "fails" in first
    assert main(["check", "commutation", "A21", "--search"]) == 1
    assert capsys.readouterr().out == first


def test_check_unknown_monoid_exits_2(capsys):
    assert main(["check", "commutation", "Q7"]) == 2
    assert "unknown monoid" in capsys.readouterr().err


def test_check_inline_identity(capsys):
    assert main(["check", "xy=yx", "N"]) == 1
    capsys.readouterr()


def test_idempotents_p_census(capsys):
    assert main(["idempotents", "2", "P"]) == 0
    out = capsys.readouterr()
    rows = [json.loads(line) for line in out.out.splitlines()]
    assert len(rows) == 12
    assert all(c["rank"] <= 1 for row in rows for c in row["components"])
    assert "12 idempotents among 15" in out.err


def test_idempotents_rejects_unknown_category(capsys):
    assert main(["idempotents", "2", "Vec"]) == 2
    capsys.readouterr()


def test_suite_filter_and_json(capsys):
    assert main(["suite", "--filter", "ann3", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == "report_v1"
    assert report["seed"] == 0
    assert len(report["entries"]) == 16
    assert report["passed"] == 1 and report["skipped"] == 15
    by_check = {e["check"]: e for e in report["entries"]}
    assert by_check["ann3-structure"]["status"] == "pass"
    assert by_check["ann3-structure"]["anchor"] == "annular-rank-structure"


def test_suite_text_mode_prints_seed(capsys):
    assert main(["suite", "--filter", "rees", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("seed: 5")
    assert "[PASS] rees-witnesses" in out


@pytest.mark.parametrize("args", [["compose", "P"], ["nope"], []])
def test_usage_errors_exit_2(args):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 2
