"""Bibliographic record ingestion.

Two on-disk formats produce the same in-memory corpus: the tagged export
layout used by citation databases (two-letter field tags in columns 1-2,
records closed by an ``ER`` line) and a four-column canonical TSV that
round-trips losslessly.  Only titles, publication years, cited references
and record identifiers are kept; everything else in a tagged export is
ignored.

Cited references are stored raw.  :func:`normalize_reference` turns a raw
reference string into the stable uppercase key under which citation counts
are aggregated.  The normalization is purely lexical: variant spellings of
the same cited work collapse only when they normalize to the same string.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Iterator

YEAR_MIN = 1900
YEAR_MAX = 2100

CANONICAL_HEADER = "id\tyear\ttitle\trefs"
REF_JOIN = "; "


class ParseError(ValueError):
    """Unrecoverable defect in an input stream."""


@dataclass(frozen=True)
class DocumentRecord:
    """One publication.

    Attributes
    ----------
    id : str
        Unique identifier within a corpus.
    year : int
        Publication year, within [1900, 2100].
    title : str
        Raw title text; may be empty.
    cited_refs : tuple of str
        Raw cited-reference strings, not yet normalized.
    source : str or None
        Optional label (journal name, query tag).  Not persisted by the
        canonical TSV format.
    """

    id: str
    year: int
    title: str
    cited_refs: tuple[str, ...] = ()
    source: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("record id must be non-empty")
        if not YEAR_MIN <= self.year <= YEAR_MAX:
            raise ValueError(
                f"year {self.year} outside [{YEAR_MIN}, {YEAR_MAX}] for record {self.id!r}"
            )


@dataclass(frozen=True)
class Corpus:
    """An immutable collection of records with unique ids."""

    records: tuple[DocumentRecord, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for rec in self.records:
            if rec.id in seen:
                raise ValueError(f"duplicate record id {rec.id!r}")
            seen.add(rec.id)

    @property
    def year_range(self) -> tuple[int, int] | None:
        """(min year, max year) over all records, or None when empty."""
        if not self.records:
            return None
        years = [rec.year for rec in self.records]
        return min(years), max(years)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[DocumentRecord]:
        return iter(self.records)

    def by_year(self, year: int) -> tuple[DocumentRecord, ...]:
        return tuple(rec for rec in self.records if rec.year == year)


@dataclass
class SkipReport:
    """Counts of tagged-export blocks dropped during parsing, by reason."""

    reasons: Counter = field(default_factory=Counter)

    @property
    def skipped(self) -> int:
        return sum(self.reasons.values())

    def format(self) -> str:
        parts = ", ".join(f"{reason}: {n}" for reason, n in sorted(self.reasons.items()))
        return f"skipped: {self.skipped} records ({parts})"


def normalize_reference(raw: str) -> str:
    """Normalize a raw cited-reference string into its aggregation key.

    Uppercases, collapses internal whitespace runs to single spaces, strips
    leading/trailing whitespace and any trailing mix of ``.`` and ``,``.
    Idempotent and case-insensitive, so the same work cited with trivial
    lexical variation lands on one key.
    """
    collapsed = " ".join(raw.split())
    return collapsed.upper().rstrip(" .,")


# --- tagged export format ---------------------------------------------------

_CONTINUATION = b"   "


def parse_wos(stream: bytes | BinaryIO, report: SkipReport | None = None) -> Corpus:
    """Parse a tagged bibliographic export into a Corpus.

    Fields start with a two-character tag in columns 1-2 followed by a
    space; continuation lines start with three spaces.  Records end with
    ``ER``.  Only TI, PY, CR and UT are consumed; unknown tags are ignored.
    Each CR line (first or continuation) is one cited reference; TI
    continuations are joined with single spaces.

    Blocks missing PY or TI, or whose PY does not parse as a year in
    [1900, 2100], are skipped and counted in *report*.  Blocks missing UT
    get a synthesized id ``rec{ordinal}`` (1-based over the whole stream).
    A block still open at end of input is a :class:`ParseError` naming the
    byte offset where it began.
    """
    data = stream if isinstance(stream, bytes) else stream.read()
    if data.startswith(b"\xef\xbb\xbf"):
        data = data[3:]
    if report is None:
        report = SkipReport()

    records: list[DocumentRecord] = []
    fields: dict[bytes, list[str]] = {}
    current_tag: bytes | None = None
    record_start: int | None = None
    ordinal = 0
    offset = 0

    def finish_block() -> None:
        nonlocal ordinal
        ordinal += 1
        if b"TI" not in fields:
            report.reasons["missing TI"] += 1
            return
        if b"PY" not in fields:
            report.reasons["missing PY"] += 1
            return
        py_raw = fields[b"PY"][0].strip()
        try:
            year = int(py_raw)
        except ValueError:
            report.reasons["unparseable PY"] += 1
            return
        if not YEAR_MIN <= year <= YEAR_MAX:
            report.reasons["PY out of range"] += 1
            return
        title = " ".join(part.strip() for part in fields[b"TI"]).strip()
        refs = tuple(r.strip() for r in fields.get(b"CR", ()) if r.strip())
        uts = fields.get(b"UT")
        rec_id = uts[0].strip() if uts and uts[0].strip() else f"rec{ordinal}"
        records.append(DocumentRecord(id=rec_id, year=year, title=title, cited_refs=refs))

    for raw_line in data.split(b"\n"):
        line_start = offset
        offset += len(raw_line) + 1
        line = raw_line.rstrip(b"\r")
        if not line.strip():
            current_tag = None  # no continuation across blank lines
            continue
        if line.startswith(_CONTINUATION):
            if current_tag is None:
                raise ParseError(f"continuation line with no open field at byte {line_start}")
            value = line[3:].decode("utf-8")
            if current_tag == b"CR":
                fields[b"CR"].append(value)
            else:
                fields[current_tag].append(value)
            continue
        tag = line[:2]
        if len(line) > 2 and line[2:3] != b" ":
            raise ParseError(f"malformed field line at byte {line_start}")
        if tag == b"ER":
            finish_block()
            fields = {}
            current_tag = None
            record_start = None
            continue
        if tag == b"EF":
            # end-of-file marker: nothing may follow but whitespace
            current_tag = None
            continue
        if tag in (b"FN", b"VR"):
            # file-level preamble (export name, format version): these
            # precede the first record and must not open a block
            current_tag = None
            continue
        if record_start is None:
            record_start = line_start
        value = line[3:].decode("utf-8")
        fields.setdefault(tag, []).append(value)
        current_tag = tag

    if fields:
        raise ParseError(f"record with no closing ER at byte {record_start}")
    return Corpus(records=tuple(records))


# --- canonical TSV format ---------------------------------------------------


def parse_canonical(stream: bytes | str | BinaryIO) -> Corpus:
    """Parse the canonical TSV format (header ``id\\tyear\\ttitle\\trefs``).

    The refs column holds raw reference strings joined by ``"; "``; an
    empty column means no references.  Defects are fatal and name the
    1-based line number.
    """
    if isinstance(stream, bytes):
        text = stream.decode("utf-8")
    elif isinstance(stream, str):
        text = stream
    else:
        text = stream.read().decode("utf-8")
    if text.startswith("﻿"):
        text = text[1:]

    lines = text.splitlines()
    if not lines or lines[0] != CANONICAL_HEADER:
        raise ParseError(f"line 1: expected header {CANONICAL_HEADER!r}")

    records: list[DocumentRecord] = []
    for num, line in enumerate(lines[1:], start=2):
        parts = line.split("\t")
        if len(parts) != 4:
            raise ParseError(f"line {num}: expected 4 fields, got {len(parts)}")
        rec_id, year_raw, title, refs_raw = parts
        try:
            year = int(year_raw)
        except ValueError:
            raise ParseError(f"line {num}: invalid year {year_raw!r}") from None
        if not YEAR_MIN <= year <= YEAR_MAX:
            raise ParseError(f"line {num}: year {year} outside [{YEAR_MIN}, {YEAR_MAX}]")
        if not rec_id:
            raise ParseError(f"line {num}: empty id")
        refs = tuple(refs_raw.split(REF_JOIN)) if refs_raw else ()
        records.append(DocumentRecord(id=rec_id, year=year, title=title, cited_refs=refs))

    try:
        return Corpus(records=tuple(records))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_canonical(corpus: Corpus) -> str:
    """Serialize a corpus to the canonical TSV format.

    Raises ValueError on content the format cannot carry: tabs, newlines
    or carriage returns inside any field, or the join separator ``"; "``
    inside a single reference.  The optional ``source`` label is not
    persisted.  Within that domain, parse(write(c)) == c byte for byte.
    """
    out = [CANONICAL_HEADER]
    for rec in corpus:
        for text, what in ((rec.id, "id"), (rec.title, "title")):
            if any(ch in text for ch in "\t\n\r"):
                raise ValueError(f"{what} of record {rec.id!r} contains tab or newline")
        for ref in rec.cited_refs:
            if any(ch in ref for ch in "\t\n\r"):
                raise ValueError(f"reference in record {rec.id!r} contains tab or newline")
            if REF_JOIN in ref:
                raise ValueError(f"reference in record {rec.id!r} contains {REF_JOIN!r}")
        out.append(f"{rec.id}\t{rec.year}\t{rec.title}\t{REF_JOIN.join(rec.cited_refs)}")
    return "\n".join(out) + "\n"


def merge_corpora(corpora: Iterable[Corpus]) -> Corpus:
    """Concatenate corpora; duplicate ids across inputs are an error."""
    records: list[DocumentRecord] = []
    for corpus in corpora:
        records.extend(corpus.records)
    return Corpus(records=tuple(records))
