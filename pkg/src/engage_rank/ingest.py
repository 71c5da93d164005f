"""CSV ingestion for the canonical data model.

File formats (UTF-8, comma-delimited, ``\\n`` line endings):

* ``universities.csv`` —
  ``id,name,domain,homepage_uri,enrollment,endowment_thousands,athletic_expenditures,conference,power_five``
* ``ranklist_<NAME>.csv`` — ``university_id,raw_rank``; universities absent
  from the file are implicitly unranked.

Numeric columns may carry thousands separators ("3,633,887"); the parser
strips them.  International entries are assumed pre-filtered upstream.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from pathlib import Path

from .errors import DuplicateId, MalformedNumber, MissingColumn, NonPositiveRank, UnknownUniversity
from .models import UNRANKED, RankEntry, RankingList, UniversityRecord

UNIVERSITY_COLUMNS = (
    "id", "name", "domain", "homepage_uri", "enrollment",
    "endowment_thousands", "athletic_expenditures", "conference", "power_five",
)
RANKLIST_COLUMNS = ("university_id", "raw_rank")


def read_csv_table(path: str | Path) -> tuple[list[str], list[dict[str, str]]]:
    """Read a UTF-8 comma CSV into (header, rows-as-dicts).

    This is the one reader every emitted CSV in the project must re-parse
    under; it rejects ragged rows.
    """
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return [], []
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise MissingColumn(f"row {lineno} has {len(row)} fields, expected {len(header)}", str(path))
            rows.append(dict(zip(header, row)))
    return header, rows


def _parse_int(value: str, row: int, field: str) -> int:
    cleaned = value.replace(",", "").strip()
    if not cleaned or not cleaned.lstrip("-").isdigit():
        raise MalformedNumber(row, field, value)
    return int(cleaned)


def parse_university_csv(path: str | Path) -> list[UniversityRecord]:
    """Parse the demographics file into UniversityRecords.

    Raises MissingColumn / MalformedNumber / DuplicateId with row context.
    """
    header, rows = read_csv_table(path)
    for col in UNIVERSITY_COLUMNS:
        if col not in header:
            raise MissingColumn(col, str(path))
    records: list[UniversityRecord] = []
    seen: set[str] = set()
    for i, row in enumerate(rows, start=2):
        uid = row["id"].strip()
        if uid in seen:
            raise DuplicateId(uid)
        seen.add(uid)
        enrollment = _parse_int(row["enrollment"], i, "enrollment")
        if enrollment < 0:
            raise MalformedNumber(i, "enrollment", row["enrollment"])
        records.append(UniversityRecord(
            id=uid,
            name=row["name"].strip(),
            domain=row["domain"].strip().lower(),
            homepage_uri=row["homepage_uri"].strip(),
            enrollment=enrollment,
            endowment=_parse_int(row["endowment_thousands"], i, "endowment_thousands"),
            athletic_expenditures=_parse_int(row["athletic_expenditures"], i, "athletic_expenditures"),
            conference=row["conference"].strip(),
            power_five=row["power_five"].strip().lower() in ("1", "true", "yes"),
        ))
    return records


def parse_ranking_csv(path: str | Path, list_name: str,
                      universities: list[UniversityRecord]) -> RankingList:
    """Parse one (university_id, raw_rank) list.

    Universities missing from the file come back as UNRANKED entries, so the
    list always covers the whole dataset.  Tied raw ranks (binned lists) are
    accepted as-is.
    """
    header, rows = read_csv_table(path)
    for col in RANKLIST_COLUMNS:
        if col not in header:
            raise MissingColumn(col, str(path))
    known = {u.id for u in universities}
    ranked: dict[str, int] = {}
    for i, row in enumerate(rows, start=2):
        uid = row["university_id"].strip()
        if uid not in known:
            raise UnknownUniversity(uid)
        raw = row["raw_rank"].strip()
        if not raw.isdigit() or int(raw) <= 0:
            raise NonPositiveRank(i, raw)
        if uid in ranked:
            raise DuplicateId(uid)
        ranked[uid] = int(raw)
    entries = [RankEntry(u.id, ranked.get(u.id, UNRANKED)) for u in universities]
    return RankingList(name=list_name, entries=tuple(entries))


def list_membership_report(lists: list[RankingList]) -> dict[int, int]:
    """Count universities by how many lists rank them: {N: count}.

    Counts sum to the number of distinct ranked universities across all lists.
    """
    appearances: Counter[str] = Counter()
    for rl in lists:
        for uid in rl.ranked_ids():
            appearances[uid] += 1
    report: Counter[int] = Counter(appearances.values())
    return {n: report.get(n, 0) for n in range(1, len(lists) + 1)}


def write_university_csv(path: str | Path, records: list[UniversityRecord]) -> None:
    """Serialize records back to the documented schema (round-trip safe)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(UNIVERSITY_COLUMNS)
    for r in records:
        writer.writerow([
            r.id, r.name, r.domain, r.homepage_uri, r.enrollment,
            r.endowment, r.athletic_expenditures, r.conference,
            "true" if r.power_five else "false",
        ])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def write_ranking_csv(path: str | Path, ranking: RankingList) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RANKLIST_COLUMNS)
    for e in ranking.entries:
        if e.raw_rank != UNRANKED:
            writer.writerow([e.university_id, e.raw_rank])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def load_dataset(data_dir: str | Path) -> tuple[list[UniversityRecord], dict[str, RankingList]]:
    """Load universities.csv plus every ranklist_<NAME>.csv present."""
    data_dir = Path(data_dir)
    universities = parse_university_csv(data_dir / "universities.csv")
    lists: dict[str, RankingList] = {}
    for path in sorted(data_dir.glob("ranklist_*.csv")):
        name = path.stem.removeprefix("ranklist_")
        lists[name] = parse_ranking_csv(path, name, universities)
    return universities, lists
