"""Canonical data model for the ranking pipeline.

All types are plain frozen dataclasses; records are immutable and safe to
share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field

#: Sentinel raw rank for universities absent from a ranking list.  Absent
#: entries are standardized to position k+1 where k is the number of ranked
#: entries on that list.
UNRANKED = 0

RANKING_LIST_NAMES = ("ARWU", "THE", "USNEWS2015", "USNEWS2016", "MONEY")
#: The four lists that feed the adjusted reputation rank (MONEY is excluded:
#: its value-based criteria correlate only weakly with the others).
REPUTATION_LIST_NAMES = ("ARWU", "THE", "USNEWS2015", "USNEWS2016")


@dataclass(frozen=True)
class UniversityRecord:
    id: str
    name: str
    domain: str                  # registrable web domain, lowercase
    homepage_uri: str
    enrollment: int              # undergraduate headcount
    endowment: int               # thousands of dollars
    athletic_expenditures: int   # dollars
    conference: str = ""
    power_five: bool = False

    def __post_init__(self):
        if not self.domain or "." not in self.domain or self.domain != self.domain.lower():
            raise ValueError(f"{self.id}: domain must be lowercase and dotted, got {self.domain!r}")
        for fname in ("enrollment", "endowment", "athletic_expenditures"):
            if getattr(self, fname) < 0:
                raise ValueError(f"{self.id}: {fname} must be non-negative")


@dataclass(frozen=True)
class RankEntry:
    university_id: str
    raw_rank: int                # positive integer, or UNRANKED
    ordered_position: int = 0    # assigned by standardization; 0 until then


@dataclass(frozen=True)
class RankingList:
    name: str
    entries: tuple[RankEntry, ...]
    bin_policy: str = ""         # descriptive only; binned entries already carry the lowest rank in the bin

    def ranked_ids(self) -> list[str]:
        return [e.university_id for e in self.entries if e.raw_rank != UNRANKED]


@dataclass(frozen=True)
class StandardizedList:
    """Sequential positions 1..k for ranked entries, k+1 for every other id."""
    name: str
    positions: dict[str, int]
    ranked_count: int

    @property
    def sentinel(self) -> int:
        return self.ranked_count + 1


@dataclass(frozen=True)
class HandleCandidate:
    handle: str        # 1-15 chars from [A-Za-z0-9_]
    source_uri: str
    href: str


class Verdict:
    OFFICIAL_PRIMARY = "OFFICIAL_PRIMARY"
    OFFICIAL_SECONDARY = "OFFICIAL_SECONDARY"
    REJECTED = "REJECTED"


class RejectReason:
    NO_PROFILE_URI = "NO_PROFILE_URI"
    DOMAIN_MISMATCH = "DOMAIN_MISMATCH"
    QUERY_DIRECTIVE = "QUERY_DIRECTIVE"
    NAME_TOO_LONG = "NAME_TOO_LONG"
    PROTECTED = "PROTECTED"


@dataclass(frozen=True)
class AffiliationVerdict:
    handle: str
    verdict: str
    reason: str = ""   # empty for OFFICIAL_*, one of RejectReason for REJECTED

    def __post_init__(self):
        official = self.verdict in (Verdict.OFFICIAL_PRIMARY, Verdict.OFFICIAL_SECONDARY)
        if official and self.reason:
            raise ValueError("official verdicts carry no reason")
        if self.verdict == Verdict.REJECTED and not self.reason:
            raise ValueError("rejections must carry a reason")


@dataclass(frozen=True)
class SocialProfile:
    handle: str
    display_name: str
    profile_uri: str | None
    followers_count: int
    friends_count: int
    protected: bool = False
    verified: bool = False
    fetched_at: str = ""   # ISO timestamp from the crawl window

    def __post_init__(self):
        if self.followers_count < 0 or self.friends_count < 0:
            raise ValueError(f"{self.handle}: counts must be non-negative")


@dataclass(frozen=True)
class AccountSet:
    university_id: str
    primaries: tuple[str, ...]
    secondaries: tuple[str, ...]
    rejected: tuple[AffiliationVerdict, ...] = ()
    fallback_used: bool = False

    def __post_init__(self):
        overlap = set(self.primaries) & set(self.secondaries)
        if overlap:
            raise ValueError(f"{self.university_id}: accounts both primary and secondary: {sorted(overlap)}")


@dataclass(frozen=True)
class UteResult:
    university_id: str
    ute_score: int
    primary_contribution: int
    secondary_contribution: int
    protected_excluded: int
    per_account: dict[str, int] = field(default_factory=dict)
    #: per-account follower-count provenance: "enumerated" or "metadata"
    count_sources: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.ute_score != self.primary_contribution + self.secondary_contribution:
            raise ValueError(f"{self.university_id}: score does not decompose")
        if self.per_account and sum(self.per_account.values()) != self.ute_score:
            raise ValueError(f"{self.university_id}: per-account contributions drift from total")


@dataclass(frozen=True)
class ScoreRow:
    university_id: str
    mean_reputation_score: int
    arr: int
    eee_score: float
    eee_rank: int
    ute_score: int
    ute_rank: int


@dataclass(frozen=True)
class CorrelationMatrix:
    labels: tuple[str, ...]
    tau: tuple[tuple[float, ...], ...]
    p_flags: tuple[tuple[bool, ...], ...]   # significance at p < 0.05

    def cell(self, a: str, b: str) -> float:
        return self.tau[self.labels.index(a)][self.labels.index(b)]

    def significant(self, a: str, b: str) -> bool:
        return self.p_flags[self.labels.index(a)][self.labels.index(b)]
