"""Candidate handle extraction and domain-affiliation classification.

Homepages are scanned at the anchor-attribute level rather than with a strict
DOM parser: university pages are frequently malformed and a tolerant scan of
``href`` targets recovers everything a page-source view would show.
"""
from __future__ import annotations

import csv
import re
from pathlib import Path
from typing import Protocol
from urllib.parse import urlparse

from .errors import MalformedUri
from .models import HandleCandidate, UniversityRecord

PLATFORM_HOST = "twitter.com"

#: Path segments that mark a platform URL as a query directive, not a profile.
QUERY_DIRECTIVES = ("intent", "share", "tweet", "search", "hashtag")

#: Reserved first path segments that are never screen names.
_RESERVED_SEGMENTS = QUERY_DIRECTIVES + ("home", "i", "login", "signup", "about", "privacy", "tos")

_HREF_RE = re.compile(r"""href\s*=\s*(?:"([^"]*)"|'([^']*)'|([^\s>]+))""", re.IGNORECASE)
_HANDLE_RE = re.compile(r"^[A-Za-z0-9_]{1,15}$")


def _anchor_targets(html: str) -> list[str]:
    """Best-effort list of every href target in the document."""
    targets = []
    for match in _HREF_RE.finditer(html):
        target = next(g for g in match.groups() if g is not None)
        if target:
            targets.append(target.strip())
    return targets


def _screen_name_from_url(href: str) -> tuple[str | None, str]:
    """(handle, reject_reason) for a platform URL; (None, reason) if excluded."""
    try:
        parsed = urlparse(href)
    except ValueError:
        return None, "unparseable"
    host = (parsed.netloc or "").lower()
    if host.startswith("www."):
        host = host[4:]
    if host != PLATFORM_HOST and not host.endswith("." + PLATFORM_HOST):
        return None, "not-platform"
    segments = [s for s in parsed.path.split("/") if s]
    if not segments:
        return None, "no-path"
    first = segments[0]
    lowered = [s.lower() for s in segments]
    if any(d in lowered for d in QUERY_DIRECTIVES):
        return None, "query-directive"
    if first.lower() in _RESERVED_SEGMENTS:
        return None, "query-directive"
    if len(first) > 15:
        return None, "name-too-long"
    if not _HANDLE_RE.match(first):
        return None, "bad-grammar"
    return first, ""


def scan_anchors(html: str, page_uri: str) -> tuple[list[HandleCandidate], list[tuple[str, str]]]:
    """Scan a document for platform anchors.

    Returns (candidates, exclusions); exclusions are (href, reason) pairs for
    platform links that failed a filter ("query-directive" or
    "name-too-long").  Candidates are deduplicated case-insensitively with
    first-seen casing preserved, in document order.
    """
    candidates: list[HandleCandidate] = []
    exclusions: list[tuple[str, str]] = []
    seen: set[str] = set()
    for href in _anchor_targets(html):
        handle, reason = _screen_name_from_url(href)
        if handle is None:
            if reason in ("query-directive", "name-too-long"):
                exclusions.append((href, reason))
            continue
        key = handle.lower()
        if key in seen:
            continue
        seen.add(key)
        candidates.append(HandleCandidate(handle=handle, source_uri=page_uri, href=href))
    return candidates, exclusions


def extract_handles(html: str, page_uri: str) -> list[HandleCandidate]:
    """Every anchor whose target is a valid platform profile URL, deduplicated.

    Malformed HTML degrades to a best-effort attribute scan; pages with no
    platform anchors yield an empty list.
    """
    return scan_anchors(html, page_uri)[0]


def _host_of(uri: str) -> str:
    if not uri or not uri.strip():
        raise MalformedUri(uri)
    candidate = uri.strip()
    if "://" not in candidate:
        candidate = "http://" + candidate
    try:
        parsed = urlparse(candidate)
    except ValueError:
        raise MalformedUri(uri) from None
    host = (parsed.netloc or "").lower().rstrip(".")
    host = host.split("@")[-1].split(":")[0]
    if not host or "." not in host:
        raise MalformedUri(uri)
    return host


def classify_affiliation(profile_uri: str | None, university_domain: str) -> bool:
    """True iff the profile URI's host is the university domain or one of its
    subdomains (suffix match on a dot boundary).

    Redirect expansion is the caller's job; an absent URI is unaffiliated.
    """
    if profile_uri is None or not profile_uri.strip():
        return False
    host = _host_of(profile_uri)
    domain = university_domain.lower()
    if host.startswith("www."):
        host = host[4:]
    return host == domain or host.endswith("." + domain)


class SearchResolver(Protocol):
    """Pluggable site-scoped search provider used as account-discovery fallback."""

    def top_result(self, homepage_uri: str, keyword: str) -> str | None:
        """URL of the top-ranked hit, or None when the search came up empty."""
        ...


class CsvFixtureResolver:
    """Resolver replaying recorded search results from a fixture file with
    ``homepage_uri,result_url`` rows; keeps runs reproducible without
    third-party API keys."""

    def __init__(self, path: str | Path):
        self._results: dict[str, str] = {}
        path = Path(path)
        if path.exists():
            with open(path, encoding="utf-8", newline="") as fh:
                for row in csv.DictReader(fh):
                    self._results[row["homepage_uri"].strip()] = row["result_url"].strip()

    def top_result(self, homepage_uri: str, keyword: str) -> str | None:
        return self._results.get(homepage_uri)


def resolve_fallback(university: UniversityRecord, resolver: SearchResolver) -> str | None:
    """Query the resolver with the institution URI + "twitter"; accept the top
    result only if it parses as a valid profile URL (the same exclusion
    filters apply).  Returns the handle, or None."""
    url = resolver.top_result(university.homepage_uri, "twitter")
    if not url:
        return None
    handle, _ = _screen_name_from_url(url)
    return handle


def load_overrides(path: str | Path) -> dict[str, str]:
    """Manual primary-account assignments: ``university_id,handle`` rows."""
    overrides: dict[str, str] = {}
    path = Path(path)
    if not path.exists():
        return overrides
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            handle = row["handle"].strip().lstrip("@")
            if _HANDLE_RE.match(handle):
                overrides[row["university_id"].strip()] = handle
    return overrides
