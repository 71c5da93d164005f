"""Account discovery and UTE scoring.

Discovery walks a university homepage for platform links, keeps the handles
whose profile URI resolves into the university's domain (primaries), then
expands each primary's friend list the same way (secondaries).  When the
homepage yields nothing, a search-resolver fixture and finally a manual
override file supply a single primary that is not friend-expanded.

Scoring accumulates accessible follower counts over all official accounts.
Follower counts come from id enumeration (protected followers excluded) when
the snapshot carries ids, otherwise from profile metadata; each contribution
records which mode produced it.  There is deliberately no cross-account
deduplication of followers in the official score — a ``dedup`` diagnostic
reports the de-duplicated figure separately.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import NotFound, Protected, RedirectLoop, Suspended, Unresolvable
from .mining import SearchResolver, classify_affiliation, resolve_fallback, scan_anchors
from .models import AccountSet, AffiliationVerdict, RejectReason, UniversityRecord, UteResult, Verdict
from .rankmath import DESCENDING, competition_rank


def _classify_profile(client, handle: str, domain: str) -> tuple[bool, str]:
    """(is_official, reject_reason) for a handle against a university domain."""
    try:
        profile = client.get_user(handle)
    except (NotFound, Suspended):
        return False, RejectReason.NO_PROFILE_URI
    uri = profile.profile_uri
    if not uri or not uri.strip():
        if profile.protected:
            return False, RejectReason.PROTECTED
        return False, RejectReason.NO_PROFILE_URI
    try:
        resolved = client.resolve_uri(uri)
    except (RedirectLoop, Unresolvable):
        return False, RejectReason.NO_PROFILE_URI
    if classify_affiliation(resolved, domain):
        return True, ""
    return False, RejectReason.DOMAIN_MISMATCH


def discover_accounts(university: UniversityRecord, html: str | None, client,
                      resolver: SearchResolver | None = None,
                      overrides: dict[str, str] | None = None) -> AccountSet:
    """Assemble the official account set for one university.

    ``html`` is the homepage snapshot (None when unavailable).  Every account
    in the result passed the domain rule at assembly time; rejected
    candidates are kept with their reasons.
    """
    rejected: list[AffiliationVerdict] = []
    seen: set[str] = set()

    def reject(handle: str, reason: str) -> None:
        if handle.lower() not in seen:
            seen.add(handle.lower())
            rejected.append(AffiliationVerdict(handle=handle, verdict=Verdict.REJECTED, reason=reason))

    primaries: list[str] = []
    candidates, exclusions = scan_anchors(html or "", university.homepage_uri)
    for href, why in exclusions:
        reason = RejectReason.NAME_TOO_LONG if why == "name-too-long" else RejectReason.QUERY_DIRECTIVE
        reject(href, reason)
    for candidate in candidates:
        official, reason = _classify_profile(client, candidate.handle, university.domain)
        if official:
            seen.add(candidate.handle.lower())
            primaries.append(candidate.handle)
        else:
            reject(candidate.handle, reason)

    secondaries: list[str] = []
    fallback_used = False
    if primaries:
        for primary in primaries:
            try:
                friends = client.get_friends(primary)
            except Protected:
                continue
            for friend in friends:
                if friend.lower() in seen or friend.lower() in (s.lower() for s in secondaries):
                    continue
                official, reason = _classify_profile(client, friend, university.domain)
                if official:
                    seen.add(friend.lower())
                    secondaries.append(friend)
                else:
                    reject(friend, reason)
    else:
        # Single-account fallback path: search fixture first, manual override
        # last; the winner is not friend-expanded.
        fallback_used = True
        handle = resolve_fallback(university, resolver) if resolver is not None else None
        if handle is None and overrides:
            handle = overrides.get(university.id)
        if handle is not None:
            official, reason = _classify_profile(client, handle, university.domain)
            if official:
                primaries.append(handle)
            else:
                reject(handle, reason)

    return AccountSet(
        university_id=university.id,
        primaries=tuple(primaries),
        secondaries=tuple(secondaries),
        rejected=tuple(rejected),
        fallback_used=fallback_used,
    )


@dataclass
class Checkpoint:
    """Per-account progress log so a rate-limited crawl resumes without recount."""

    path: Path | None
    done: dict[tuple[str, str], tuple[int, str]]

    @classmethod
    def open(cls, path: str | Path | None) -> "Checkpoint":
        done: dict[tuple[str, str], tuple[int, str]] = {}
        if path is not None:
            path = Path(path)
            if path.exists():
                with open(path, encoding="utf-8") as fh:
                    for line in fh:
                        if line.strip():
                            rec = json.loads(line)
                            done[(rec["university_id"], rec["handle"])] = (rec["contribution"], rec["source"])
        return cls(path=Path(path) if path is not None else None, done=done)

    def record(self, university_id: str, handle: str, contribution: int, source: str) -> None:
        self.done[(university_id, handle)] = (contribution, source)
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps({
                    "university_id": university_id, "handle": handle,
                    "contribution": contribution, "source": source,
                }, sort_keys=True) + "\n")


def _account_contribution(client, handle: str) -> tuple[int, str]:
    """(accessible follower count, provenance) for a single official account."""
    try:
        ids = client.get_follower_ids(handle)
    except Protected:
        return 0, "protected"
    if ids is None:
        return client.get_follower_count(handle), "metadata"
    protected = client.protected_follower_ids()
    return sum(1 for i in ids if i not in protected), "enumerated"


def compute_ute(accounts: AccountSet, client, checkpoint: Checkpoint | None = None) -> UteResult:
    """Sum accessible follower counts over the account set.

    Protected official accounts contribute 0 and are tallied in
    protected_excluded.  Backend failures propagate after the checkpoint has
    recorded completed accounts, so retries never recount.
    """
    per_account: dict[str, int] = {}
    sources: dict[str, str] = {}
    protected_excluded = 0
    primary_total = 0
    secondary_total = 0
    for group, handles in (("primary", accounts.primaries), ("secondary", accounts.secondaries)):
        for handle in handles:
            key = (accounts.university_id, handle)
            if checkpoint is not None and key in checkpoint.done:
                contribution, source = checkpoint.done[key]
            else:
                # BackendError (incl. RateLimited) propagates here; everything
                # finished so far is already in the checkpoint.
                contribution, source = _account_contribution(client, handle)
                if checkpoint is not None:
                    checkpoint.record(accounts.university_id, handle, contribution, source)
            per_account[handle] = contribution
            sources[handle] = source
            if source == "protected":
                protected_excluded += 1
            if group == "primary":
                primary_total += contribution
            else:
                secondary_total += contribution
    return UteResult(
        university_id=accounts.university_id,
        ute_score=primary_total + secondary_total,
        primary_contribution=primary_total,
        secondary_contribution=secondary_total,
        protected_excluded=protected_excluded,
        per_account=per_account,
        count_sources=sources,
    )


def dedup_follower_count(accounts: AccountSet, client) -> int | None:
    """Diagnostic: size of the union of enumerable follower-id sets.

    Returns None when no account in the set has enumerable ids.  Never feeds
    the official score.
    """
    union: set[str] = set()
    saw_ids = False
    for handle in (*accounts.primaries, *accounts.secondaries):
        try:
            ids = client.get_follower_ids(handle)
        except Protected:
            continue
        if ids is not None:
            saw_ids = True
            union.update(ids)
    if not saw_ids:
        return None
    protected = client.protected_follower_ids()
    return sum(1 for i in union if i not in protected)


def ute_ranking(results: list[UteResult]) -> dict[str, int]:
    """Competition rank, descending by score."""
    return competition_rank({r.university_id: r.ute_score for r in results}, DESCENDING)


def account_set_to_json(accounts: AccountSet, result: UteResult | None = None) -> dict:
    payload = {
        "university_id": accounts.university_id,
        "primaries": list(accounts.primaries),
        "secondaries": list(accounts.secondaries),
        "rejected": [
            {"handle": v.handle, "verdict": v.verdict, "reason": v.reason}
            for v in accounts.rejected
        ],
        "fallback_used": accounts.fallback_used,
    }
    if result is not None:
        payload["ute"] = {
            "score": result.ute_score,
            "primary_contribution": result.primary_contribution,
            "secondary_contribution": result.secondary_contribution,
            "protected_excluded": result.protected_excluded,
            "per_account": dict(sorted(result.per_account.items())),
            "count_sources": dict(sorted(result.count_sources.items())),
        }
    return payload
