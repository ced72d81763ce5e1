import json
from math import comb

import pytest

from dualcirc import cli
from dualcirc.analyze import (
    DOUBLY,
    SINGLY,
    CodeRecord,
    DoublyEvenParams,
    SinglyEvenParams,
    WeightDist,
)


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_raw_identity_pair(capsys):
    code, out, _ = run(["dist", "--raw", "4", "--no-progress"], capsys)
    assert code == 0
    counts = [int(s) for s in json.loads(out)]
    assert counts == [comb(4, w // 2) if w % 2 == 0 else 0 for w in range(9)]
    assert sum(counts) == 16


def test_dist_needs_arguments(capsys):
    code, _, err = run(["dist", "--no-progress"], capsys)
    assert code == 2
    assert "dist needs" in err


def test_verify_family_parity_mismatch(capsys):
    code, _, err = run(
        ["verify", "--family", "doubly", "--hex", "34F", "--k", "10", "--no-progress"],
        capsys,
    )
    assert code == 2
    assert "singly" in err


def test_verify_bad_hex(capsys):
    code, _, err = run(
        ["verify", "--family", "singly", "--hex", "G1", "--k", "5", "--no-progress"],
        capsys,
    )
    assert code == 2


def test_verify_wrong_constraint_length(capsys):
    code, _, err = run(
        ["verify", "--family", "singly", "--hex", "34F", "--k", "12", "--no-progress"],
        capsys,
    )
    assert code == 2
    assert "constraint length" in err


def test_search_tiny_space(tmp_path, capsys):
    out_path = tmp_path / "records.jsonl"
    code, out, _ = run(
        ["search", "--family", "singly", "--k", "3", "--out", str(out_path),
         "--no-progress"],
        capsys,
    )
    assert code == 0
    assert out_path.read_text() == ""
    assert "0 records" in out


def test_search_needs_range(capsys):
    code, _, err = run(["search", "--family", "singly", "--no-progress"], capsys)
    assert code == 2
    assert "--k" in err


def test_search_invalid_range(capsys):
    code, _, err = run(
        ["search", "--family", "singly", "--k-min", "9", "--k-max", "5",
         "--no-progress"],
        capsys,
    )
    assert code == 2


def test_tables_sample_too_small(capsys):
    code, _, err = run(["tables", "--sample", "2", "--no-progress"], capsys)
    assert code == 2
    assert "anchor" in err


def test_tables_missing_fixture_file(capsys):
    code, _, err = run(
        ["tables", "--fixture", "/nonexistent/tables.csv", "--no-progress"], capsys
    )
    assert code == 2


def test_record_json_schema_singly():
    record = CodeRecord(
        family=SINGLY,
        taps=10,
        poly_hex="34F",
        poly_weight=7,
        d=12,
        params=SinglyEvenParams(1, 0, 483),
        dist=WeightDist((1, 0, 1), rank=1),
    )
    doc = record.to_json_dict()
    assert set(doc) == {
        "family", "k", "hex", "ones", "d", "gamma", "beta", "enumerator_type",
        "dist_sha",
    }
    assert doc["family"] == "singly"
    assert doc["k"] == 10
    assert doc["hex"] == "34F"
    assert doc["gamma"] == 0 and doc["beta"] == 483


def test_record_json_schema_doubly():
    record = CodeRecord(
        family=DOUBLY,
        taps=9,
        poly_hex="12F",
        poly_weight=6,
        d=12,
        params=DoublyEvenParams(-2748),
        dist=WeightDist((1, 0, 1), rank=1),
    )
    doc = record.to_json_dict()
    assert set(doc) == {"family", "k", "hex", "ones", "d", "alpha", "dist_sha"}
    assert doc["alpha"] == -2748


def test_parser_rejects_unknown_family():
    with pytest.raises(SystemExit) as exc:
        cli.build_parser().parse_args(["verify", "--family", "mixed", "--hex", "1", "--k", "1"])
    assert exc.value.code == 2
