"""OEIS b-file generation, parsing, and regression comparison.

A b-file is the OEIS bulk-term format: one "<index> <value>" pair per
line, decimal, single space, no header.  Four sequences are exported
here, all indexed from 0:

    A119326  the triangle read by rows (linear index over entries)
    A114213  the parity triangle read by rows
    A114212  row sums of the parity triangle
    A114214  diagonal sums of the parity triangle

Files downloaded from the OEIS may use a different starting index; the
comparison maps the i-th record of the file to the i-th term of the
local sequence, so a constant offset shift is reconciled rather than
reported as a mismatch.
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .continuant import diagonal_sum_fast
from .triangle import iter_triangle_terms, row_sum_closed

__all__ = [
    "BFile",
    "BFileComparison",
    "BFileParseError",
    "SEQUENCES",
    "SequenceInfo",
    "compare_bfile",
    "generate_bfile",
    "parse_bfile",
    "serialize_bfile",
]


class BFileParseError(Exception):
    """Raised when text does not parse as a b-file.

    line_no is 1-based; 0 means the file as a whole (e.g. no records).
    """

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}" if line_no else message)
        self.line_no = line_no
        self.message = message


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    offset: int
    records: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for pos, (index, _value) in enumerate(self.records):
            if index != self.offset + pos:
                raise ValueError(
                    f"record {pos} has index {index}, "
                    f"expected {self.offset + pos}"
                )


@dataclass(frozen=True)
class SequenceInfo:
    """A sequence the package can regenerate term by term."""

    sequence_id: str
    offset: int
    description: str
    values: Callable[[int, int], Iterator[int]]


def _exact_terms(start: int, stop: int) -> Iterator[int]:
    return iter_triangle_terms(start, stop, "exact")


def _parity_terms(start: int, stop: int) -> Iterator[int]:
    return iter_triangle_terms(start, stop, "parity")


def _row_sums(start: int, stop: int) -> Iterator[int]:
    return map(row_sum_closed, range(start, stop))


def _diagonal_sums(start: int, stop: int) -> Iterator[int]:
    return map(diagonal_sum_fast, range(start, stop))


SEQUENCES = {
    "A119326": SequenceInfo(
        "A119326", 0, "triangle read by rows", _exact_terms
    ),
    "A114213": SequenceInfo(
        "A114213", 0, "parity triangle read by rows", _parity_terms
    ),
    "A114212": SequenceInfo(
        "A114212", 0, "parity triangle row sums", _row_sums
    ),
    "A114214": SequenceInfo(
        "A114214", 0, "parity triangle diagonal sums", _diagonal_sums
    ),
}


def generate_bfile(sequence_id: str, max_index: int) -> BFile:
    """Build the b-file for sequence_id covering indices offset..max_index."""
    info = SEQUENCES.get(sequence_id)
    if info is None:
        raise ValueError(
            f"unknown sequence id {sequence_id!r}; "
            f"known: {', '.join(sorted(SEQUENCES))}"
        )
    if max_index < info.offset:
        raise ValueError(
            f"max index {max_index} is below the sequence offset {info.offset}"
        )
    values = info.values(info.offset, max_index + 1)
    records = tuple(zip(range(info.offset, max_index + 1), values))
    return BFile(sequence_id, info.offset, records)


def serialize_bfile(bfile: BFile) -> str:
    return "".join(f"{index} {value}\n" for index, value in bfile.records)


def parse_bfile(text: str, sequence_id: str) -> BFile:
    """Parse b-file text.

    Blank lines, lines starting with '#', and trailing whitespace are
    tolerated (OEIS files carry such comments); anything else must be
    two decimal integers, with indices consecutive.
    """
    records = []
    expected = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(
                line_no, f"expected 'index value', got {raw!r}"
            )
        try:
            index = int(parts[0])
            value = int(parts[1])
        except ValueError:
            raise BFileParseError(
                line_no, f"non-integer field in {raw!r}"
            ) from None
        if expected is not None and index != expected:
            raise BFileParseError(
                line_no, f"index {index} not consecutive (expected {expected})"
            )
        expected = index + 1
        records.append((index, value))
    if not records:
        raise BFileParseError(0, "no records")
    return BFile(sequence_id, records[0][0], tuple(records))


@dataclass(frozen=True)
class BFileComparison:
    sequence_id: str
    checked: int
    # (file index, file value, recomputed value) of the first
    # disagreement, or None when every record matches.
    mismatch: tuple[int, int, int] | None

    @property
    def passed(self) -> bool:
        return self.mismatch is None


def compare_bfile(bfile: BFile) -> BFileComparison:
    """Recompute every record of bfile and report the first disagreement.

    The file's own offset says where its records start; the i-th record
    is checked against the i-th locally generated term.
    """
    info = SEQUENCES.get(bfile.sequence_id)
    if info is None:
        raise ValueError(
            f"unknown sequence id {bfile.sequence_id!r}; "
            f"known: {', '.join(sorted(SEQUENCES))}"
        )
    values = info.values(info.offset, info.offset + len(bfile.records))
    mismatch = None
    checked = 0
    for (index, file_value), computed in zip(bfile.records, values):
        checked += 1
        if file_value != computed and mismatch is None:
            mismatch = (index, file_value, computed)
    return BFileComparison(bfile.sequence_id, checked, mismatch)
