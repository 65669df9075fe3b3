"""Known Calabi-Yau invariants database: TSV loading and novelty lookup."""

import csv
import os
from dataclasses import dataclass
from pathlib import Path

_REPO_DIR = Path(__file__).resolve().parent.parent
DEFAULT_DB_PATH = Path(
    os.environ.get("KNOWN_CY_DB", _REPO_DIR / "data" / "known_cy.tsv")
)

DB_COLUMNS = ["H3", "Hc2", "h11", "h12", "label"]
HEADER_LINE = "\t".join(DB_COLUMNS)


class DatabaseError(ValueError):
    """Malformed database file; carries the 1-based line number."""

    def __init__(self, path, line_number, message):
        self.path = str(path)
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {message}")


@dataclass(frozen=True)
class KnownCy:
    h_y_cubed: int
    h_c2: int
    h11: int
    h12: int
    label: str

    def key(self):
        return (self.h_y_cubed, self.h_c2, self.h11, self.h12)


@dataclass(frozen=True)
class KnownCyDatabase:
    entries: tuple = ()

    def lookup(self, key):
        """Entry with exactly this (H3, Hc2, h11, h12) tuple, or None."""
        for entry in self.entries:
            if entry.key() == tuple(key):
                return entry
        return None

    def __len__(self):
        return len(self.entries)


def _parse_int(path, line_number, column, text):
    try:
        return int(text)
    except ValueError:
        raise DatabaseError(
            path, line_number, f"column {column} is not an integer: {text!r}"
        ) from None


def _read_rows(path, reader):
    """Rows of a csv reader; csv-level failures become DatabaseError."""
    try:
        yield from reader
    except csv.Error as exc:
        raise DatabaseError(path, reader.line_num, str(exc)) from None


def load_database(path=None):
    """Read a known-CY TSV file, enforcing header, integrality and uniqueness."""
    path = Path(path) if path is not None else DEFAULT_DB_PATH
    entries = []
    seen = {}
    with open(path, "r", newline="", encoding="utf-8") as f:
        reader = csv.reader(f, delimiter="\t", quoting=csv.QUOTE_NONE)
        rows = _read_rows(path, reader)
        header = next(rows, None)
        if header is None:
            return KnownCyDatabase()
        if header != DB_COLUMNS:
            found = "\t".join(header)
            raise DatabaseError(
                path, 1, f"expected header {HEADER_LINE!r}, got {found!r}"
            )
        for row in rows:
            line_number = reader.line_num
            if not row:
                continue
            if len(row) != len(DB_COLUMNS):
                raise DatabaseError(
                    path, line_number,
                    f"expected {len(DB_COLUMNS)} columns, got {len(row)}",
                )
            h3, hc2, h11, h12 = (
                _parse_int(path, line_number, column, text)
                for column, text in zip(DB_COLUMNS[:4], row[:4])
            )
            if h3 < 1 or h11 < 1:
                raise DatabaseError(
                    path, line_number, f"H3 and h11 must be at least 1, got {h3}, {h11}"
                )
            entry = KnownCy(h3, hc2, h11, h12, row[4])
            if entry.key() in seen:
                raise DatabaseError(
                    path, line_number,
                    f"duplicate invariants {entry.key()} (first seen on line {seen[entry.key()]})",
                )
            seen[entry.key()] = line_number
            entries.append(entry)
    return KnownCyDatabase(tuple(entries))


def novelty(database, key):
    """('KNOWN', label) when the tuple is in the database, else ('NEW', '')."""
    entry = database.lookup(key)
    if entry is None:
        return "NEW", ""
    return "KNOWN", entry.label
