import dataclasses

import pytest

from dualcirc.analyze import (
    DOUBLY,
    SINGLY,
    CodeRecord,
    DoublyEvenParams,
    SinglyEvenParams,
    WeightDist,
)
from dualcirc.tables import (
    ANCHOR_ROWS,
    FixtureRow,
    check_row,
    check_rows,
    load_fixture,
    sample_fixture,
    write_fixture,
)


def test_fixture_loads_and_validates():
    rows = load_fixture()
    assert len(rows) == 83 + 79
    assert sum(1 for r in rows if r.family == SINGLY) == 83
    assert sum(1 for r in rows if r.family == DOUBLY) == 79


def test_fixture_keys_unique():
    rows = load_fixture()
    singly_keys = [(r.param1, r.param2) for r in rows if r.family == SINGLY]
    doubly_keys = [r.param1 for r in rows if r.family == DOUBLY]
    assert len(set(singly_keys)) == len(singly_keys)
    assert len(set(doubly_keys)) == len(doubly_keys)


def test_fixture_contains_anchor_rows():
    keys = {(r.family, r.hex) for r in load_fixture()}
    assert set(ANCHOR_ROWS) <= keys


def test_fixture_known_rows():
    by_key = {(r.family, r.hex): r for r in load_fixture()}
    assert by_key[(SINGLY, "34F")].param1 == 0
    assert by_key[(SINGLY, "34F")].param2 == 483
    assert by_key[(SINGLY, "2A4B")].param2 == 441
    assert by_key[(DOUBLY, "12F")].param1 == -2748
    assert by_key[(DOUBLY, "20FB")].param1 == -2988
    assert by_key[(DOUBLY, "91D3")].taps == 16
    assert by_key[(SINGLY, "8CA3")].taps == 16


def test_fixture_row_invariants_enforced():
    with pytest.raises(ValueError, match="ones"):
        FixtureRow(SINGLY, 0, 483, taps=10, ones=6, hex="34F")
    with pytest.raises(ValueError, match="parity"):
        FixtureRow(DOUBLY, -1, None, taps=10, ones=7, hex="34F")
    with pytest.raises(ValueError, match="constraint length"):
        FixtureRow(SINGLY, 0, 483, taps=11, ones=7, hex="34F")
    with pytest.raises(ValueError, match="param"):
        FixtureRow(SINGLY, 0, None, taps=10, ones=7, hex="34F")


def test_write_load_round_trip(tmp_path):
    rows = load_fixture()
    path = tmp_path / "copy.csv"
    write_fixture(rows, path)
    assert load_fixture(path) == rows


def test_sample_is_seeded_and_contains_anchors(tmp_path):
    rows = load_fixture()
    a = sample_fixture(rows, 10, seed=7)
    b = sample_fixture(rows, 10, seed=7)
    c = sample_fixture(rows, 10, seed=8)
    assert a == b
    assert a != c
    assert len(a) == 10
    assert {(r.family, r.hex) for r in a} >= set(ANCHOR_ROWS)
    assert a == sorted(a, key=lambda r: (r.family, r.taps, int(r.hex, 16)))


def test_sample_too_small_for_anchors():
    with pytest.raises(ValueError):
        sample_fixture(load_fixture(), 3)


def _canned_record(row, *, d=12, flip_beta=False):
    if row.family == SINGLY:
        params = SinglyEvenParams(1, row.param1, row.param2 + (1 if flip_beta else 0))
    else:
        params = DoublyEvenParams(row.param1)
    return CodeRecord(
        family=row.family,
        taps=row.taps,
        poly_hex=row.hex,
        poly_weight=row.ones,
        d=d,
        params=params,
        dist=WeightDist((1, 0, 1), rank=1),
    )


def test_check_row_matches_with_agreeing_verifier():
    row = next(r for r in load_fixture() if r.hex == "34F")
    result = check_row(row, verifier=lambda f, h, k: _canned_record(row))
    assert result.ok


def test_check_row_flags_parameter_mismatch():
    row = next(r for r in load_fixture() if r.hex == "34F")
    result = check_row(row, verifier=lambda f, h, k: _canned_record(row, flip_beta=True))
    assert not result.ok
    assert "beta" in result.mismatches[0]


def test_check_row_flags_wrong_distance():
    row = next(r for r in load_fixture() if r.hex == "12F")
    result = check_row(row, verifier=lambda f, h, k: _canned_record(row, d=10))
    assert not result.ok
    assert "d = 10" in result.mismatches[0]


def test_check_row_reports_verifier_failure():
    row = next(r for r in load_fixture() if r.hex == "12F")

    def broken(f, h, k):
        raise RuntimeError("kernel unavailable")

    result = check_row(row, verifier=broken)
    assert not result.ok
    assert "verification failed" in result.mismatches[0]


def test_check_rows_negative_control_on_corrupted_fixture(tmp_path):
    # corrupt one beta in a copied fixture; with a verifier that returns
    # the true published parameters the diff must name exactly that row
    rows = load_fixture()
    target = next(r for r in rows if r.hex == "2A4B")
    corrupted = [
        dataclasses.replace(r, param2=r.param2 + 6) if r is target else r
        for r in rows
    ]
    path = tmp_path / "corrupted.csv"
    write_fixture(corrupted, path)
    reloaded = load_fixture(path)

    true_rows = {(r.family, r.hex): r for r in rows}

    def canned(family, hex_str, taps):
        return _canned_record(true_rows[(family, hex_str)])

    results = check_rows(reloaded, verifier=canned)
    bad = [r for r in results if not r.ok]
    assert len(bad) == 1
    assert bad[0].row.hex == "2A4B"
