"""Reference-code fixtures and the table regression check.

The package ships a CSV of the published [72,36,12] codes (one row per
unique parameter set, smallest constraint length): 83 singly even rows
carrying (gamma, beta) and 79 doubly even rows carrying alpha.  The
regression rebuilds each code from (family, K, hex) and compares the
freshly proved parameters against the fixture.

CSV format: header ``family,param1,param2,k,ones,hex``; param1/param2
are gamma/beta for singly even rows, alpha/empty for doubly even rows.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .analyze import (
    DOUBLY,
    SINGLY,
    CodeRecord,
    DoublyEvenParams,
    SinglyEvenParams,
    verify_code,
)
from .gf2 import poly_from_hex, poly_weight

# rows every seeded sample must contain: the designated known cross-check
# codes plus the largest-K row of each family
ANCHOR_ROWS = (
    (SINGLY, "34F"),
    (SINGLY, "2A4B"),
    (SINGLY, "8CA3"),
    (DOUBLY, "12F"),
    (DOUBLY, "20FB"),
    (DOUBLY, "91D3"),
)


@dataclass(frozen=True)
class FixtureRow:
    family: str
    param1: int
    param2: int | None
    taps: int
    ones: int
    hex: str

    def __post_init__(self):
        p = poly_from_hex(self.hex, self.taps)  # checks the top bit too
        if poly_weight(p) != self.ones:
            raise ValueError(
                f"fixture row {self.hex}: ones column says {self.ones}, "
                f"polynomial has {poly_weight(p)}"
            )
        want_odd = self.family == SINGLY
        if (self.ones % 2 == 1) != want_odd:
            raise ValueError(
                f"fixture row {self.hex}: weight parity contradicts family "
                f"{self.family}"
            )
        if (self.param2 is None) == (self.family == SINGLY):
            raise ValueError(
                f"fixture row {self.hex}: param count does not match family"
            )

    def expected_params(self) -> SinglyEvenParams | DoublyEvenParams:
        if self.family == SINGLY:
            return SinglyEvenParams(1, self.param1, self.param2)
        return DoublyEvenParams(self.param1)

    def label(self) -> str:
        return f"{self.family} {self.hex}/{self.taps}"


def _parse_rows(reader: Iterable[dict]) -> list[FixtureRow]:
    rows = []
    for line in reader:
        family = line["family"].strip()
        if family not in (SINGLY, DOUBLY):
            raise ValueError(f"unknown family {family!r} in fixture")
        param2 = line["param2"].strip()
        rows.append(
            FixtureRow(
                family=family,
                param1=int(line["param1"]),
                param2=int(param2) if param2 else None,
                taps=int(line["k"]),
                ones=int(line["ones"]),
                hex=line["hex"].strip().upper(),
            )
        )
    return rows


def load_fixture(path: str | Path | None = None) -> list[FixtureRow]:
    """Load and validate fixture rows; default is the embedded table."""
    if path is None:
        ref = resources.files("dualcirc.data").joinpath("reference_codes.csv")
        with ref.open("r", encoding="ascii") as fh:
            return _parse_rows(csv.DictReader(fh))
    with open(path, "r", encoding="ascii", newline="") as fh:
        return _parse_rows(csv.DictReader(fh))


def write_fixture(rows: list[FixtureRow], path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["family", "param1", "param2", "k", "ones", "hex"])
        for r in rows:
            writer.writerow(
                [r.family, r.param1, "" if r.param2 is None else r.param2,
                 r.taps, r.ones, r.hex]
            )


def sample_fixture(rows: list[FixtureRow], n: int, seed: int = 0) -> list[FixtureRow]:
    """Seeded n-row subset always containing the anchor rows."""
    by_key = {(r.family, r.hex): r for r in rows}
    chosen = [by_key[key] for key in ANCHOR_ROWS if key in by_key]
    if n < len(chosen):
        raise ValueError(f"sample of {n} cannot hold the {len(chosen)} anchor rows")
    rest = [r for r in rows if (r.family, r.hex) not in ANCHOR_ROWS]
    chosen += random.Random(seed).sample(rest, min(n - len(chosen), len(rest)))
    return sorted(chosen, key=lambda r: (r.family, r.taps, int(r.hex, 16)))


@dataclass(frozen=True)
class RowResult:
    row: FixtureRow
    record: CodeRecord | None
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_row(row: FixtureRow, verifier: Callable[..., CodeRecord] = verify_code) -> RowResult:
    """Rebuild one fixture row and diff the computed parameters."""
    try:
        record = verifier(row.family, row.hex, row.taps)
    except Exception as exc:  # verification itself failed: report, keep going
        return RowResult(row, None, (f"{row.label()}: verification failed: {exc}",))
    problems = []
    if record.d != 12:
        problems.append(f"{row.label()}: d = {record.d}, expected 12")
    expected = row.expected_params()
    got = record.params
    if isinstance(expected, SinglyEvenParams):
        if (got.gamma, got.beta) != (expected.gamma, expected.beta):
            problems.append(
                f"{row.label()}: (gamma, beta) = ({got.gamma}, {got.beta}), "
                f"table says ({expected.gamma}, {expected.beta})"
            )
    else:
        if got.alpha != expected.alpha:
            problems.append(
                f"{row.label()}: alpha = {got.alpha}, table says {expected.alpha}"
            )
    return RowResult(row, record, tuple(problems))


def check_rows(
    rows: list[FixtureRow],
    verifier: Callable[..., CodeRecord] = verify_code,
    on_result: Callable[[RowResult], None] | None = None,
) -> list[RowResult]:
    """Run check_row over a fixture; side-effect free and idempotent."""
    results = []
    for row in rows:
        result = check_row(row, verifier)
        results.append(result)
        if on_result is not None:
            on_result(result)
    return results
