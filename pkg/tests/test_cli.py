"""CLI surface: exit codes, JSON schema round trips, the table cache."""

import json

import pytest

from knutson.algnum import CyclotomicTau, MultiQuadratic, values_equal
from knutson.cli import (
    cache_load,
    cache_store,
    get_table,
    main,
    table_from_json,
    table_to_json,
    value_from_json,
    value_to_json,
)
from knutson.sl2tables import sl2_table
from knutson.symchar import an_table, sn_table


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("KNUTSON_CACHE_DIR", str(tmp_path / "cache"))


def test_value_round_trip():
    from fractions import Fraction

    samples = [
        0,
        7,
        -3,
        Fraction(5, 2),
        MultiQuadratic.sqrt(5),
        MultiQuadratic.sqrt(-3) * Fraction(1, 2) + 4,
        CyclotomicTau.root_of_unity(8, 3),
        CyclotomicTau.tau_element(12, -3, 2) + CyclotomicTau.root_of_unity(12, 5, -3),
    ]
    for v in samples:
        back = value_from_json(json.loads(json.dumps(value_to_json(v))))
        assert values_equal(v, back), v


def test_table_round_trip_preserves_orthogonality():
    for table in (sn_table(5), an_table(5), sl2_table(5)):
        back = table_from_json(json.loads(json.dumps(table_to_json(table))))
        assert back.label == table.label
        assert back.order == table.order
        assert back.degrees == table.degrees
        back.check_orthogonality()


def test_cache_round_trip():
    table = sl2_table(7)
    assert cache_load("sl2-7") is None
    cache_store("sl2-7", table)
    cached = cache_load("sl2-7")
    assert cached is not None
    assert cached.degrees == table.degrees
    cached.check_orthogonality()


def test_cache_rejects_corruption(tmp_path, monkeypatch):
    monkeypatch.setenv("KNUTSON_CACHE_DIR", str(tmp_path))
    cache_store("sn-4", sn_table(4))
    path = tmp_path / "sn-4.v1.json"
    entry = json.loads(path.read_text())
    entry["table"]["order"] = 25
    path.write_text(json.dumps(entry))
    assert cache_load("sn-4") is None  # checksum mismatch


def test_get_table_uses_cache():
    t1 = get_table("sn", 4)
    t2 = get_table("sn", 4)
    assert t2.degrees == t1.degrees
    t3 = get_table("sn", 4, use_cache=False)
    assert t3.degrees == t1.degrees


def test_main_table_text(capsys):
    assert main(["table", "sn", "3"]) == 0
    out = capsys.readouterr().out
    assert "S3" in out and "order 6" in out


def test_main_table_json_schema(capsys):
    assert main(["table", "sl2", "5", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["order"] == 120
    table_from_json(obj).check_orthogonality()


def test_main_seq_bfile(capsys):
    assert main(["seq", "a363675", "--limit", "40", "--bfile"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["1 1", "2 6", "3 10", "4 21", "5 36"]


def test_main_seq_json_default_limit(capsys):
    assert main(["seq", "a363676", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["id"] == "a363676"
    assert obj["limit"] == 60
    assert obj["terms"][:4] == [1, 2, 5, 6]


def test_main_cores_json(capsys):
    assert main(["cores", "--n", "4", "--t", "2"]) == 0
    capsys.readouterr()
    assert main(["cores", "--n", "6", "--t", "3", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["exists"] == (obj["first_core"] is not None)


def test_main_knutson_json(capsys):
    assert main(["knutson", "psl2", "5", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["knutson_index"] == 1
    assert obj["L"] == 60
    assert obj["generalized_lower_bound"] == "1"


def test_main_knutson_sl2_rho_table(capsys):
    assert main(["knutson", "sl2", "5", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["knutson_index"] == 2
    rows = obj["rho_inverse_table"]["rows"]
    assert set(rows) == {
        "eta", "xi", "theta_odd", "theta_even", "psi", "chi_odd", "chi_even",
    }
    assert all(r["verified"] or r["corrected"] or not r["targets"] for r in rows.values())


def test_main_knutson_single_char(capsys):
    assert main(["knutson", "sl2", "5", "--char", "psi", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["character"] == "psi"
    assert obj["index"] in (1, 2)


def test_main_verify_cores(capsys):
    assert main(["verify", "cores"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["pass"] is True


def test_exit_code_cap_exceeded(capsys):
    assert main(["table", "sn", "23"]) == 3
    assert "error" in capsys.readouterr().err


def test_exit_code_usage(capsys):
    assert main(["table", "sl2", "6"]) == 2  # 6 is not a prime power
    capsys.readouterr()


def test_exit_code_bad_subcommand():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
