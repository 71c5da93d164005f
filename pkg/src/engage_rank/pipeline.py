"""Pipeline stages: ingest, mine, crawl, score, correlate, report.

Every stage reads the bundled input directory and/or the previous stage's
files and writes deterministic artifacts under the output directory, so
re-running a stage over unchanged inputs is byte-identical.  Stage summaries
are plain dicts (the service layer serializes them).
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import engine, ingest, mining, rankmath, socialgraph
from .errors import EmptyList, MissingStage
from .models import (
    RANKING_LIST_NAMES,
    REPUTATION_LIST_NAMES,
    RankingList,
    StandardizedList,
    UniversityRecord,
)

SUBSETS = ("all", "top50", "top100", "two-or-more", "power5")
BACKENDS = ("offline", "live")

LIST_FAMILY_LABELS = ("ARWU", "MONEY", "USNEWS2015", "USNEWS2016", "THE", "ARR")
COMPOSITE_FAMILY_LABELS = ("EEE", "ARR", "UTE")


@dataclass
class PipelineConfig:
    data_dir: Path
    snapshot_dir: Path
    out_dir: Path
    subset: str = "all"
    backend: str = "offline"
    dedup: bool = False
    eee_bins: int = 6

    def __post_init__(self):
        self.data_dir = Path(self.data_dir)
        self.snapshot_dir = Path(self.snapshot_dir)
        self.out_dir = Path(self.out_dir)
        if self.subset not in SUBSETS:
            raise ValueError(f"subset must be one of {SUBSETS}, got {self.subset!r}")
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    path.write_text(buf.getvalue(), encoding="utf-8")


def _write_json(path: Path, payload) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _load_dataset(config: PipelineConfig) -> tuple[list[UniversityRecord], dict[str, RankingList]]:
    universities, lists = ingest.load_dataset(config.data_dir)
    return universities, lists


def _make_client(config: PipelineConfig):
    store = socialgraph.SnapshotStore.load(config.snapshot_dir)
    if config.backend == "live":
        live_config = socialgraph.LiveBackendConfig()
        return socialgraph.LiveBackend(live_config, store)
    return socialgraph.OfflineBackend(store)


# --- stages -------------------------------------------------------------------

def run_ingest(config: PipelineConfig) -> dict:
    """Parse all CSVs and emit the list-membership report."""
    universities, lists = _load_dataset(config)
    if not universities or not lists:
        raise MissingStage("ingest", "data directory has no universities.csv / ranklist files")
    membership = ingest.list_membership_report(list(lists.values()))
    rows = [[n, membership[n]] for n in sorted(membership)]
    _write_csv(config.out_dir / "ingest" / "membership.csv", ["appears_on_lists", "universities"], rows)
    per_list = {name: len(lists[name].ranked_ids()) for name in sorted(lists)}
    summary = {
        "universities": len(universities),
        "lists": per_list,
        "membership": {str(k): v for k, v in membership.items()},
        "total": sum(membership.values()),
    }
    _write_json(config.out_dir / "ingest" / "summary.json", summary)
    return summary


def run_mine(config: PipelineConfig) -> dict:
    """Discover official accounts for every university."""
    universities, _ = _load_dataset(config)
    client = _make_client(config)
    resolver = mining.CsvFixtureResolver(config.data_dir / "fallback_search.csv")
    overrides = mining.load_overrides(config.data_dir / "overrides.csv")
    pages_dir = config.data_dir / "pages"
    accounts_dir = config.out_dir / "accounts"
    totals = {"universities": 0, "primaries": 0, "secondaries": 0, "rejected": 0, "fallback_used": 0}
    for university in sorted(universities, key=lambda u: u.id):
        page_path = pages_dir / f"{university.id}.html"
        html = page_path.read_text(encoding="utf-8") if page_path.exists() else None
        accounts = engine.discover_accounts(university, html, client, resolver, overrides)
        _write_json(accounts_dir / f"{university.id}.json", engine.account_set_to_json(accounts))
        totals["universities"] += 1
        totals["primaries"] += len(accounts.primaries)
        totals["secondaries"] += len(accounts.secondaries)
        totals["rejected"] += len(accounts.rejected)
        totals["fallback_used"] += 1 if accounts.fallback_used else 0
    _write_json(config.out_dir / "mine_summary.json", totals)
    return totals


def _load_account_sets(config: PipelineConfig) -> list[dict]:
    accounts_dir = config.out_dir / "accounts"
    if not accounts_dir.is_dir():
        raise MissingStage("mine", f"{accounts_dir} does not exist")
    payloads = []
    for path in sorted(accounts_dir.glob("*.json")):
        payloads.append(json.loads(path.read_text(encoding="utf-8")))
    if not payloads:
        raise MissingStage("mine", "no account files")
    return payloads


def run_crawl(config: PipelineConfig) -> dict:
    """Accumulate follower counts for every discovered account (resumable)."""
    client = _make_client(config)
    checkpoint = engine.Checkpoint.open(config.out_dir / "crawl" / "checkpoint.jsonl")
    results = {}
    dedup_scores = {}
    protected_total = 0
    for payload in _load_account_sets(config):
        accounts = _account_set_from_json(payload)
        result = engine.compute_ute(accounts, client, checkpoint)
        results[accounts.university_id] = {
            "ute_score": result.ute_score,
            "primary_contribution": result.primary_contribution,
            "secondary_contribution": result.secondary_contribution,
            "protected_excluded": result.protected_excluded,
            "per_account": dict(sorted(result.per_account.items())),
            "count_sources": dict(sorted(result.count_sources.items())),
        }
        protected_total += result.protected_excluded
        _write_json(config.out_dir / "accounts" / f"{accounts.university_id}.json",
                    engine.account_set_to_json(accounts, result))
        if config.dedup:
            dedup_scores[accounts.university_id] = engine.dedup_follower_count(accounts, client)
    _write_json(config.out_dir / "crawl" / "ute_results.json", results)
    if config.dedup:
        _write_json(config.out_dir / "crawl" / "dedup_diagnostic.json", dedup_scores)
    summary = {"universities": len(results), "protected_excluded": protected_total}
    return summary


def _account_set_from_json(payload: dict):
    from .models import AccountSet, AffiliationVerdict
    return AccountSet(
        university_id=payload["university_id"],
        primaries=tuple(payload["primaries"]),
        secondaries=tuple(payload["secondaries"]),
        rejected=tuple(AffiliationVerdict(v["handle"], v["verdict"], v.get("reason", ""))
                       for v in payload["rejected"]),
        fallback_used=payload["fallback_used"],
    )


def _standardize_all(lists: dict[str, RankingList]) -> dict[str, StandardizedList]:
    return {name: rankmath.standardize(rl) for name, rl in lists.items()}


def run_score(config: PipelineConfig) -> dict:
    """Standardized positions, ARR, EEE and UTE score tables."""
    universities, lists = _load_dataset(config)
    standardized = _standardize_all(lists)

    crawl_path = config.out_dir / "crawl" / "ute_results.json"
    if not crawl_path.exists():
        raise MissingStage("crawl", f"{crawl_path} does not exist")
    crawl_results = json.loads(crawl_path.read_text(encoding="utf-8"))

    ids = sorted(u.id for u in universities)
    positions_rows = [
        [uid] + [standardized[name].positions[uid] for name in RANKING_LIST_NAMES]
        for uid in ids
    ]
    _write_csv(config.out_dir / "scores" / "positions.csv",
               ["university_id", *RANKING_LIST_NAMES], positions_rows)

    means = {uid: rankmath.mean_reputation_score(standardized, uid) for uid in ids}
    arr = rankmath.adjusted_reputation_rank(standardized)
    arr_rows = [
        [uid] + [standardized[name].positions[uid] for name in REPUTATION_LIST_NAMES]
        + [means[uid], arr[uid]]
        for uid in ids
    ]
    _write_csv(config.out_dir / "scores" / "arr.csv",
               ["university_id", "arwu_position", "the_position", "usnews2015_position",
                "usnews2016_position", "mean_reputation_score", "arr"], arr_rows)

    eee = rankmath.eee_score_and_rank(universities)
    _write_csv(config.out_dir / "scores" / "eee.csv",
               ["university_id", "eee_score", "eee_rank"],
               [[uid, repr(eee[uid][0]), eee[uid][1]] for uid in ids])

    ute_scores = {uid: crawl_results.get(uid, {}).get("ute_score", 0) for uid in ids}
    ute_ranks = rankmath.competition_rank(ute_scores, rankmath.DESCENDING)
    ute_rows = []
    for uid in ids:
        result = crawl_results.get(uid, {})
        ute_rows.append([
            uid, ute_scores[uid], ute_ranks[uid],
            result.get("primary_contribution", 0),
            result.get("secondary_contribution", 0),
            result.get("protected_excluded", 0),
        ])
    _write_csv(config.out_dir / "scores" / "ute.csv",
               ["university_id", "ute_score", "ute_rank", "primary_contribution",
                "secondary_contribution", "protected_excluded"], ute_rows)
    if config.dedup:
        dedup_path = config.out_dir / "crawl" / "dedup_diagnostic.json"
        if dedup_path.exists():
            diagnostic = json.loads(dedup_path.read_text(encoding="utf-8"))
            _write_csv(config.out_dir / "scores" / "ute_dedup.csv",
                       ["university_id", "dedup_score"],
                       [[uid, "" if diagnostic.get(uid) is None else diagnostic[uid]] for uid in ids])

    top = sorted(ids, key=lambda u: (ute_ranks[u], u))[:3]
    return {
        "universities": len(ids),
        "ute_top3": top,
        "files": ["scores/positions.csv", "scores/arr.csv", "scores/eee.csv", "scores/ute.csv"],
    }


@dataclass
class ScoreTables:
    """Everything the correlate/report stages need, loaded from score outputs."""

    universities: list[UniversityRecord]
    positions: dict[str, dict[str, int]]       # list name -> id -> ordered position
    means: dict[str, int]
    arr: dict[str, int]
    eee_score: dict[str, float]
    eee_rank: dict[str, int]
    ute_score: dict[str, int]
    ute_rank: dict[str, int]
    membership_count: dict[str, int] = field(default_factory=dict)


def load_score_tables(config: PipelineConfig) -> ScoreTables:
    scores_dir = config.out_dir / "scores"
    for required in ("positions.csv", "arr.csv", "eee.csv", "ute.csv"):
        if not (scores_dir / required).exists():
            raise MissingStage("score", f"{scores_dir / required} does not exist")
    universities, lists = _load_dataset(config)

    _, position_rows = ingest.read_csv_table(scores_dir / "positions.csv")
    positions: dict[str, dict[str, int]] = {name: {} for name in RANKING_LIST_NAMES}
    for row in position_rows:
        for name in RANKING_LIST_NAMES:
            positions[name][row["university_id"]] = int(row[name])

    _, arr_rows = ingest.read_csv_table(scores_dir / "arr.csv")
    means = {r["university_id"]: int(r["mean_reputation_score"]) for r in arr_rows}
    arr = {r["university_id"]: int(r["arr"]) for r in arr_rows}

    _, eee_rows = ingest.read_csv_table(scores_dir / "eee.csv")
    eee_score = {r["university_id"]: float(r["eee_score"]) for r in eee_rows}
    eee_rank = {r["university_id"]: int(r["eee_rank"]) for r in eee_rows}

    _, ute_rows = ingest.read_csv_table(scores_dir / "ute.csv")
    ute_score = {r["university_id"]: int(r["ute_score"]) for r in ute_rows}
    ute_rank = {r["university_id"]: int(r["ute_rank"]) for r in ute_rows}

    membership: dict[str, int] = {u.id: 0 for u in universities}
    for rl in lists.values():
        for uid in rl.ranked_ids():
            membership[uid] += 1

    return ScoreTables(
        universities=universities, positions=positions, means=means, arr=arr,
        eee_score=eee_score, eee_rank=eee_rank, ute_score=ute_score, ute_rank=ute_rank,
        membership_count=membership,
    )


def select_subset(tables: ScoreTables, subset: str) -> list[str]:
    """Resolve a subset name to a sorted id list.

    top50/top100 cut by ARR with lexicographic tie-break; two-or-more is
    membership on at least two ranked lists; power5 is the conference flag.
    """
    ids = sorted(u.id for u in tables.universities)
    if subset == "all":
        return ids
    if subset in ("top50", "top100"):
        n = 50 if subset == "top50" else 100
        return sorted(sorted(ids, key=lambda u: (tables.arr[u], u))[:n])
    if subset == "two-or-more":
        return [u for u in ids if tables.membership_count.get(u, 0) >= 2]
    if subset == "power5":
        flags = {u.id: u.power_five for u in tables.universities}
        return [u for u in ids if flags[u]]
    raise ValueError(f"unknown subset {subset!r}")


def run_correlate(config: PipelineConfig) -> dict:
    """Pairwise tau-b matrices for the configured subset."""
    tables = load_score_tables(config)
    subset_ids = select_subset(tables, config.subset)
    if len(subset_ids) < 2:
        raise EmptyList("correlation needs at least two universities")

    list_rankings = {
        "ARWU": tables.positions["ARWU"],
        "MONEY": tables.positions["MONEY"],
        "USNEWS2015": tables.positions["USNEWS2015"],
        "USNEWS2016": tables.positions["USNEWS2016"],
        "THE": tables.positions["THE"],
        "ARR": tables.arr,
    }
    composite_rankings = {"EEE": tables.eee_rank, "ARR": tables.arr, "UTE": tables.ute_rank}

    lists_matrix = rankmath.correlation_matrix(list_rankings, subset_ids)
    composite_matrix = rankmath.correlation_matrix(composite_rankings, subset_ids)

    rows = []
    for family, matrix in (("lists", lists_matrix), ("composite", composite_matrix)):
        for i, a in enumerate(matrix.labels):
            for j, b in enumerate(matrix.labels):
                rows.append([family, a, b, repr(matrix.tau[i][j]),
                             "true" if matrix.p_flags[i][j] else "false"])
    _write_csv(config.out_dir / "correlations" / f"{config.subset}.csv",
               ["family", "label_x", "label_y", "tau", "significant"], rows)

    return {
        "subset": config.subset,
        "n": len(subset_ids),
        "lists": {f"{a}|{b}": lists_matrix.cell(a, b)
                  for i, a in enumerate(lists_matrix.labels)
                  for b in lists_matrix.labels[i + 1:]},
        "composite": {f"{a}|{b}": composite_matrix.cell(a, b)
                      for i, a in enumerate(composite_matrix.labels)
                      for b in composite_matrix.labels[i + 1:]},
    }


def eee_bin(rank: int, total: int, bins: int) -> int:
    """Equal-width bin (1-based) of an EEE rank over 1..total."""
    width = -(-total // bins)
    return min(bins, 1 + (rank - 1) // width)


def run_report(config: PipelineConfig) -> dict:
    """Scatter CSVs, top-15 tables and the conference summary."""
    tables = load_score_tables(config)
    ids = sorted(u.id for u in tables.universities)
    total = len(ids)
    flags = {u.id: u.power_five for u in tables.universities}
    names = {u.id: u.name for u in tables.universities}
    records = {u.id: u for u in tables.universities}

    scatter_specs = [
        ("scatter_arr_vs_ute.csv", tables.arr, tables.ute_rank),
        ("scatter_arr_vs_eee.csv", tables.arr, tables.eee_rank),
        ("scatter_eee_vs_ute.csv", tables.eee_rank, tables.ute_rank),
    ]
    for filename, x_ranks, y_ranks in scatter_specs:
        rows = [[uid, x_ranks[uid], y_ranks[uid],
                 eee_bin(tables.eee_rank[uid], total, config.eee_bins),
                 "true" if flags[uid] else "false"] for uid in ids]
        _write_csv(config.out_dir / filename,
                   ["university_id", "x_rank", "y_rank", "eee_bin", "power_five"], rows)

    # Union of the reputation top 15 and engagement top 15, ordered by ARR.
    by_arr = sorted(ids, key=lambda u: (tables.arr[u], u))
    by_ute = sorted(ids, key=lambda u: (tables.ute_rank[u], u))
    union = sorted(set(by_arr[:15]) | set(by_ute[:15]),
                   key=lambda u: (tables.arr[u], tables.ute_rank[u], u))
    lines = [
        "| University | ARWU | THE | USNEWS2015 | USNEWS2016 | Mean | ARR | UTE Score | UTE Rank |",
        "| --- | ---: | ---: | ---: | ---: | ---: | ---: | ---: | ---: |",
    ]
    for uid in union:
        lines.append("| {} | {} | {} | {} | {} | {} | {} | {:,} | {} |".format(
            names[uid],
            tables.positions["ARWU"][uid], tables.positions["THE"][uid],
            tables.positions["USNEWS2015"][uid], tables.positions["USNEWS2016"][uid],
            tables.means[uid], tables.arr[uid], tables.ute_score[uid], tables.ute_rank[uid]))
    tables_dir = config.out_dir / "tables"
    tables_dir.mkdir(parents=True, exist_ok=True)
    (tables_dir / "top15_reputation.md").write_text("\n".join(lines) + "\n", encoding="utf-8")

    by_eee = sorted(ids, key=lambda u: (tables.eee_rank[u], u))[:15]
    lines = [
        "| University | Enrollment | Endowment (k$) | Athletic Expenditures ($) | EEE |",
        "| --- | ---: | ---: | ---: | ---: |",
    ]
    for uid in by_eee:
        record = records[uid]
        lines.append("| {} | {:,} | {:,} | {:,} | {} |".format(
            names[uid], record.enrollment, record.endowment,
            record.athletic_expenditures, tables.eee_rank[uid]))
    (tables_dir / "top15_eee.md").write_text("\n".join(lines) + "\n", encoding="utf-8")

    power5_ids = [u for u in ids if flags[u]]
    in_arr_top100 = sum(1 for u in power5_ids if tables.arr[u] <= 100)
    in_eee_top100 = sum(1 for u in power5_ids if tables.eee_rank[u] <= 100)
    _write_csv(tables_dir / "power_five.csv",
               ["university_id", "conference", "arr", "eee_rank", "ute_rank"],
               [[u, records[u].conference, tables.arr[u], tables.eee_rank[u], tables.ute_rank[u]]
                for u in power5_ids])
    summary = {
        "power_five_members": len(power5_ids),
        "in_arr_top100": in_arr_top100,
        "in_eee_top100": in_eee_top100,
        "files": [spec[0] for spec in scatter_specs]
        + ["tables/top15_reputation.md", "tables/top15_eee.md", "tables/power_five.csv"],
    }
    _write_json(tables_dir / "power_five_summary.json", {
        "power_five_members": len(power5_ids),
        "in_arr_top100": in_arr_top100,
        "in_eee_top100": in_eee_top100,
    })
    return summary


STAGES = {
    "ingest": run_ingest,
    "mine": run_mine,
    "crawl": run_crawl,
    "score": run_score,
    "correlate": run_correlate,
    "report": run_report,
}


def run_stage(stage: str, config: PipelineConfig) -> dict:
    if stage not in STAGES:
        raise ValueError(f"unknown stage {stage!r}")
    return STAGES[stage](config)
