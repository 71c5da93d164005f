"""Social-platform API contract with two interchangeable backends.

* OfflineBackend answers everything from a SnapshotStore (line-delimited
  JSON, one self-describing record per line, append-only so crawls are
  resumable).
* LiveBackend speaks HTTP (cursor pagination, 429 handling) and persists
  every answer into the store, so replaying a live session offline is
  observationally equivalent.

Both enforce a per-endpoint token-bucket budget; exhausted budgets surface
as RateLimited with a retry-after hint rather than blocking, and never leave
partial state behind.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

import httpx

from .errors import (
    BackendUnavailable,
    MalformedUri,
    NotFound,
    Protected,
    RateLimited,
    RedirectLoop,
    Suspended,
    Unresolvable,
)
from .models import SocialProfile

MAX_REDIRECTS = 10

SNAPSHOT_FILES = {
    "profiles": "profiles.jsonl",
    "friends": "friends.jsonl",
    "follower_ids": "follower_ids.jsonl",
    "redirects": "redirects.jsonl",
}


@dataclass
class SnapshotStore:
    """In-memory view of a snapshot directory."""

    profiles: dict[str, SocialProfile] = field(default_factory=dict)
    tombstones: dict[str, str] = field(default_factory=dict)        # handle -> not_found|suspended
    friends: dict[str, list[str]] = field(default_factory=dict)
    follower_ids: dict[str, list[str]] = field(default_factory=dict)
    protected_follower_ids: set[str] = field(default_factory=set)   # opaque ids of protected users
    redirects: dict[str, str] = field(default_factory=dict)
    crawl_window: tuple[str, str] = ("", "")
    directory: Path | None = None

    @classmethod
    def load(cls, directory: str | Path) -> "SnapshotStore":
        directory = Path(directory)
        store = cls(directory=directory)
        for filename in SNAPSHOT_FILES.values():
            path = directory / filename
            if not path.exists():
                continue
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        store._ingest(json.loads(line))
        store.validate()
        return store

    def _ingest(self, record: dict) -> None:
        kind = record.get("type")
        if kind == "profile":
            profile = SocialProfile(
                handle=record["handle"],
                display_name=record.get("display_name", ""),
                profile_uri=record.get("profile_uri"),
                followers_count=record.get("followers_count", 0),
                friends_count=record.get("friends_count", 0),
                protected=record.get("protected", False),
                verified=record.get("verified", False),
                fetched_at=record.get("fetched_at", ""),
            )
            self.profiles[profile.handle.lower()] = profile
        elif kind == "tombstone":
            self.tombstones[record["handle"].lower()] = record.get("reason", "not_found")
        elif kind == "friends":
            self.friends[record["handle"].lower()] = list(record.get("friends", []))
        elif kind == "follower_ids":
            self.follower_ids[record["handle"].lower()] = [str(i) for i in record.get("ids", [])]
        elif kind == "user_by_id":
            if record.get("protected"):
                self.protected_follower_ids.add(str(record["id"]))
        elif kind == "redirect":
            self.redirects[record["from"]] = record["to"]
        elif kind == "meta":
            window = record.get("crawl_window", {})
            self.crawl_window = (window.get("start", ""), window.get("end", ""))
        else:
            raise ValueError(f"unknown snapshot record type: {kind!r}")

    def validate(self) -> None:
        start, end = self.crawl_window
        if start and end and start > end:
            raise ValueError("crawl window start is after its end")
        known = set(self.profiles) | set(self.tombstones)
        for source, label in ((self.friends, "friends"), (self.follower_ids, "follower_ids")):
            orphans = set(source) - known
            if orphans:
                raise ValueError(f"{label} records without a profile or tombstone: {sorted(orphans)[:5]}")

    # -- append-only persistence (one writer, many readers) --

    def _append(self, filename: str, record: dict) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        with open(self.directory / filename, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def record_profile(self, profile: SocialProfile) -> None:
        self.profiles[profile.handle.lower()] = profile
        self._append(SNAPSHOT_FILES["profiles"], {
            "type": "profile", "handle": profile.handle,
            "display_name": profile.display_name, "profile_uri": profile.profile_uri,
            "followers_count": profile.followers_count, "friends_count": profile.friends_count,
            "protected": profile.protected, "verified": profile.verified,
            "fetched_at": profile.fetched_at,
        })

    def record_tombstone(self, handle: str, reason: str) -> None:
        self.tombstones[handle.lower()] = reason
        self._append(SNAPSHOT_FILES["profiles"], {"type": "tombstone", "handle": handle, "reason": reason})

    def record_friends(self, handle: str, friends: list[str]) -> None:
        self.friends[handle.lower()] = list(friends)
        self._append(SNAPSHOT_FILES["friends"], {"type": "friends", "handle": handle, "friends": list(friends)})

    def record_follower_ids(self, handle: str, ids: list[str]) -> None:
        self.follower_ids[handle.lower()] = [str(i) for i in ids]
        self._append(SNAPSHOT_FILES["follower_ids"], {"type": "follower_ids", "handle": handle, "ids": list(ids)})

    def record_redirect(self, source: str, target: str) -> None:
        self.redirects[source] = target
        self._append(SNAPSHOT_FILES["redirects"], {"type": "redirect", "from": source, "to": target})


class TokenBucket:
    """Per-endpoint request budget; refuses instead of blocking."""

    def __init__(self, capacity: int, refill_per_second: float,
                 clock: Callable[[], float] = time.monotonic):
        self.capacity = capacity
        self.refill = refill_per_second
        self.clock = clock
        self.tokens = float(capacity)
        self.updated = clock()

    def take(self) -> None:
        now = self.clock()
        self.tokens = min(self.capacity, self.tokens + (now - self.updated) * self.refill)
        self.updated = now
        if self.tokens < 1.0:
            needed = (1.0 - self.tokens) / self.refill if self.refill > 0 else float("inf")
            raise RateLimited(retry_after=needed)
        self.tokens -= 1.0


class RateLimitPolicy:
    """Budget factory; None means unlimited (the offline default)."""

    def __init__(self, budgets: dict[str, tuple[int, float]] | None = None,
                 clock: Callable[[], float] = time.monotonic):
        self._buckets: dict[str, TokenBucket] = {}
        if budgets:
            for endpoint, (capacity, refill) in budgets.items():
                self._buckets[endpoint] = TokenBucket(capacity, refill, clock)

    def spend(self, endpoint: str) -> None:
        bucket = self._buckets.get(endpoint)
        if bucket is not None:
            bucket.take()


class OfflineBackend:
    """Snapshot-backed implementation of the platform contract."""

    def __init__(self, store: SnapshotStore, limits: RateLimitPolicy | None = None):
        self.store = store
        self.limits = limits or RateLimitPolicy()

    def get_user(self, handle: str) -> SocialProfile:
        self.limits.spend("users/show")
        key = handle.lower()
        if key in self.store.profiles:
            return self.store.profiles[key]
        reason = self.store.tombstones.get(key)
        if reason == "suspended":
            raise Suspended(handle)
        raise NotFound(handle)

    def get_friends(self, handle: str) -> list[str]:
        self.limits.spend("friends/list")
        profile = self.get_user(handle)
        if profile.protected:
            raise Protected(handle)
        return list(self.store.friends.get(handle.lower(), []))

    def get_follower_ids(self, handle: str) -> list[str] | None:
        """Enumerated follower ids, deduplicated, or None when the snapshot
        only carries a metadata count for this account."""
        self.limits.spend("followers/ids")
        profile = self.get_user(handle)
        if profile.protected:
            raise Protected(handle)
        ids = self.store.follower_ids.get(handle.lower())
        if ids is None:
            return None
        return sorted(set(ids))

    def get_follower_count(self, handle: str) -> int:
        ids = self.get_follower_ids(handle)
        if ids is not None:
            return len(ids)
        return self.get_user(handle).followers_count

    def protected_follower_ids(self) -> set[str]:
        return set(self.store.protected_follower_ids)

    def resolve_uri(self, uri: str) -> str:
        return _follow_redirects(uri, self.store.redirects.get)


class LiveBackendConfig:
    """Connection settings; read from the environment by default."""

    def __init__(self, base_url: str | None = None, bearer_token: str | None = None,
                 budgets: dict[str, tuple[int, float]] | None = None):
        self.base_url = base_url or os.environ.get("ENGAGE_RANK_API_BASE", "")
        self.bearer_token = bearer_token or os.environ.get("ENGAGE_RANK_API_TOKEN", "")
        self.budgets = budgets

    def validate(self) -> None:
        if not self.base_url:
            raise BackendUnavailable("live backend requires a base URL (ENGAGE_RANK_API_BASE)")


class LiveBackend:
    """HTTP adapter; every successful answer is persisted into the store."""

    def __init__(self, config: LiveBackendConfig, store: SnapshotStore,
                 transport: httpx.BaseTransport | None = None):
        config.validate()
        self.config = config
        self.store = store
        headers = {}
        if config.bearer_token:
            headers["Authorization"] = f"Bearer {config.bearer_token}"
        self._client = httpx.Client(base_url=config.base_url, headers=headers, transport=transport)
        self.limits = RateLimitPolicy(config.budgets)

    def _get(self, endpoint: str, path: str, params: dict) -> dict:
        self.limits.spend(endpoint)
        try:
            response = self._client.get(path, params=params)
        except httpx.HTTPError as exc:
            raise BackendUnavailable(str(exc)) from exc
        if response.status_code == 429:
            raise RateLimited(retry_after=float(response.headers.get("retry-after", "60")))
        if response.status_code == 404:
            raise NotFound(params.get("screen_name", path))
        if response.status_code == 403:
            body = response.json() if response.content else {}
            if body.get("error") == "suspended":
                raise Suspended(params.get("screen_name", path))
            raise Protected(params.get("screen_name", path))
        if response.status_code != 200:
            raise BackendUnavailable(f"{path}: HTTP {response.status_code}")
        return response.json()

    def get_user(self, handle: str) -> SocialProfile:
        try:
            payload = self._get("users/show", "/users/show", {"screen_name": handle})
        except (NotFound, Suspended) as exc:
            self.store.record_tombstone(handle, "suspended" if isinstance(exc, Suspended) else "not_found")
            raise
        profile = SocialProfile(
            handle=payload["screen_name"],
            display_name=payload.get("name", ""),
            profile_uri=payload.get("url"),
            followers_count=payload.get("followers_count", 0),
            friends_count=payload.get("friends_count", 0),
            protected=payload.get("protected", False),
            verified=payload.get("verified", False),
            fetched_at=payload.get("fetched_at", ""),
        )
        self.store.record_profile(profile)
        return profile

    def _paginate(self, endpoint: str, path: str, handle: str, item_key: str) -> Iterable[list]:
        cursor = "-1"
        while True:
            payload = self._get(endpoint, path, {"screen_name": handle, "cursor": cursor})
            yield payload.get(item_key, [])
            cursor = str(payload.get("next_cursor", 0))
            if cursor in ("0", ""):
                break

    def get_friends(self, handle: str) -> list[str]:
        profile = self.get_user(handle)
        if profile.protected:
            raise Protected(handle)
        friends: list[str] = []
        for page in self._paginate("friends/list", "/friends/list", handle, "users"):
            friends.extend(u["screen_name"] if isinstance(u, dict) else u for u in page)
        self.store.record_friends(handle, friends)
        return friends

    def get_follower_ids(self, handle: str) -> list[str] | None:
        profile = self.get_user(handle)
        if profile.protected:
            raise Protected(handle)
        ids: list[str] = []
        for page in self._paginate("followers/ids", "/followers/ids", handle, "ids"):
            ids.extend(str(i) for i in page)
        deduplicated = sorted(set(ids))
        self.store.record_follower_ids(handle, deduplicated)
        return deduplicated

    def get_follower_count(self, handle: str) -> int:
        ids = self.get_follower_ids(handle)
        if ids is not None:
            return len(ids)
        return self.get_user(handle).followers_count

    def protected_follower_ids(self) -> set[str]:
        # Enumeration-time protected knowledge comes from the follower-profile
        # crawl, which only the snapshot carries.
        return set(self.store.protected_follower_ids)

    def resolve_uri(self, uri: str) -> str:
        def lookup(current: str) -> str | None:
            self.limits.spend("resolve")
            try:
                response = self._client.head(current, follow_redirects=False)
            except httpx.HTTPError as exc:
                raise Unresolvable(current) from exc
            if response.status_code in (301, 302, 303, 307, 308):
                return response.headers.get("location")
            return None
        return _follow_redirects(uri, lookup)


def _follow_redirects(uri: str, lookup: Callable[[str], str | None]) -> str:
    if not uri or not uri.strip():
        raise MalformedUri(uri)
    seen = {uri}
    current = uri
    for _ in range(MAX_REDIRECTS):
        target = lookup(current)
        if target is None:
            return current
        if target in seen:
            raise RedirectLoop(uri)
        seen.add(target)
        current = target
    raise RedirectLoop(uri)
