"""Ranking arithmetic.

Covers sequential standardization with the k+1 extension for unranked
entries, reputation-score averaging, competition ranking, min-max
normalization, the EEE composite and tie-aware Kendall tau-b with a
normal-approximation significance test.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from fractions import Fraction

from .errors import AllTied, DegenerateRange, EmptyList, MismatchedIds, MissingList
from .models import (
    REPUTATION_LIST_NAMES,
    UNRANKED,
    CorrelationMatrix,
    RankingList,
    StandardizedList,
    UniversityRecord,
)

log = logging.getLogger(__name__)

ASCENDING = "ASCENDING"
DESCENDING = "DESCENDING"


def standardize(ranking: RankingList) -> StandardizedList:
    """Assign strictly sequential positions 1..k by raw-rank order.

    Ties in raw rank (binned lists) are broken lexicographically by
    university id, which keeps output deterministic and approximates the
    alphabetical ordering binned lists publish.  Every unranked entry gets
    position k+1.
    """
    ranked = [e for e in ranking.entries if e.raw_rank != UNRANKED]
    if not ranked:
        raise EmptyList(f"list {ranking.name!r} has no ranked entries")
    ranked.sort(key=lambda e: (e.raw_rank, e.university_id))
    positions = {e.university_id: i for i, e in enumerate(ranked, start=1)}
    sentinel = len(ranked) + 1
    for e in ranking.entries:
        if e.raw_rank == UNRANKED:
            positions[e.university_id] = sentinel
    return StandardizedList(name=ranking.name, positions=positions, ranked_count=len(ranked))


def _round_half_up(value: Fraction) -> int:
    # floor(v + 1/2), exact in integer arithmetic
    num, den = value.numerator, value.denominator
    return (2 * num + den) // (2 * den)


def mean_position(standardized: dict[str, StandardizedList], university_id: str) -> Fraction:
    """Exact mean of the four reputation-list positions (MONEY excluded)."""
    total = Fraction(0)
    for name in REPUTATION_LIST_NAMES:
        if name not in standardized:
            raise MissingList(name)
        try:
            total += standardized[name].positions[university_id]
        except KeyError:
            raise MismatchedIds(f"{university_id} missing from {name}") from None
    return total / len(REPUTATION_LIST_NAMES)


def mean_reputation_score(standardized: dict[str, StandardizedList], university_id: str) -> int:
    """Mean of the four ordered positions, rounded half-up to an integer."""
    return _round_half_up(mean_position(standardized, university_id))


def competition_rank(scores: dict[str, object], direction: str) -> dict[str, int]:
    """Competition ("1224") ranking: ties share the minimal rank and the next
    distinct score ranks 1 + the number of strictly better entries."""
    if not scores:
        raise EmptyList("cannot rank an empty score map")
    if direction not in (ASCENDING, DESCENDING):
        raise ValueError(f"direction must be ASCENDING or DESCENDING, got {direction!r}")
    counts = Counter(scores.values())
    better_than: dict[object, int] = {}
    running = 0
    for value in sorted(counts, reverse=direction == DESCENDING):
        better_than[value] = running
        running += counts[value]
    return {uid: 1 + better_than[value] for uid, value in scores.items()}


def adjusted_reputation_rank(standardized: dict[str, StandardizedList]) -> dict[str, int]:
    """ARR: competition rank, ascending, over the rounded mean positions.

    Universities absent from all four lists carry the k+1 sentinels and so
    share a single large mean, tying at the bottom of the table.
    """
    ids = _common_ids(standardized)
    means = {uid: mean_reputation_score(standardized, uid) for uid in ids}
    return competition_rank(means, ASCENDING)


def _common_ids(standardized: dict[str, StandardizedList]) -> list[str]:
    ids: set[str] | None = None
    for name in REPUTATION_LIST_NAMES:
        if name not in standardized:
            raise MissingList(name)
        current = set(standardized[name].positions)
        ids = current if ids is None else ids & current
    return sorted(ids or [])


def minmax_normalize(values: dict[str, float]) -> dict[str, float]:
    """v' = (v - min) / (max - min), onto [0, 1].

    A degenerate range (max == min) zero-fills with a warning instead of
    failing the whole pipeline.
    """
    if not values:
        raise EmptyList("nothing to normalize")
    lo, hi = min(values.values()), max(values.values())
    if lo == hi:
        log.warning("degenerate normalization range (min == max == %s); zero-filling", lo)
        return {k: 0.0 for k in values}
    span = hi - lo
    return {k: (v - lo) / span for k, v in values.items()}


def _minmax_exact(values: dict[str, int]) -> dict[str, Fraction]:
    lo, hi = min(values.values()), max(values.values())
    if lo == hi:
        raise DegenerateRange(f"all values equal {lo}")
    return {k: Fraction(v - lo, hi - lo) for k, v in values.items()}


def eee_score_and_rank(records: list[UniversityRecord]) -> dict[str, tuple[float, int]]:
    """Sum of min-max-normalized enrollment, endowment and athletic
    expenditures, competition-ranked descending.

    Scores are accumulated as exact rationals so equal composites rank as
    true ties; the returned score is the float value of the rational.
    """
    if len(records) < 2:
        raise EmptyList("need at least two records for a composite ranking")
    columns = {
        "enrollment": {r.id: r.enrollment for r in records},
        "endowment": {r.id: r.endowment for r in records},
        "athletic_expenditures": {r.id: r.athletic_expenditures for r in records},
    }
    normalized: dict[str, dict[str, Fraction]] = {}
    for name, col in columns.items():
        try:
            normalized[name] = _minmax_exact(col)
        except DegenerateRange:
            log.warning("degenerate %s column; contributing zeros to the composite", name)
            normalized[name] = {k: Fraction(0) for k in col}
    scores = {
        r.id: normalized["enrollment"][r.id]
        + normalized["endowment"][r.id]
        + normalized["athletic_expenditures"][r.id]
        for r in records
    }
    ranks = competition_rank(scores, DESCENDING)
    return {uid: (float(score), ranks[uid]) for uid, score in scores.items()}


# --- Kendall tau-b -----------------------------------------------------------

def _merge_count_inversions(seq: list[int]) -> int:
    """Count strict inversions via iterative bottom-up merge sort."""
    work = list(seq)
    buf = [0] * len(work)
    inversions = 0
    width = 1
    n = len(work)
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if work[j] < work[i]:
                    inversions += mid - i
                    buf[k] = work[j]
                    j += 1
                else:
                    buf[k] = work[i]
                    i += 1
                k += 1
            buf[k:hi] = work[i:mid] if i < mid else work[j:hi]
            work[lo:hi] = buf[lo:hi]
        width *= 2
    return inversions


def _tie_sums(values: list[int]) -> tuple[int, int, int]:
    """(sum t(t-1)/2, sum t(t-1)(t-2), sum t(t-1)(2t+5)) over tie groups."""
    pairs = trips = weighted = 0
    for t in Counter(values).values():
        pairs += t * (t - 1) // 2
        trips += t * (t - 1) * (t - 2)
        weighted += t * (t - 1) * (2 * t + 5)
    return pairs, trips, weighted


def kendall_tau_b(ranks_a: dict[str, int], ranks_b: dict[str, int]) -> tuple[float, bool]:
    """Tie-aware Kendall tau-b between two rank maps over identical ids.

    tau_b = (C - D) / sqrt((n0 - n1)(n0 - n2)) with n0 = n(n-1)/2 and n1/n2
    the tied-pair counts of each side.  Significance is a two-sided normal
    approximation with tie-corrected variance at p < 0.05.
    """
    if set(ranks_a) != set(ranks_b):
        raise MismatchedIds("rank maps cover different id sets")
    n = len(ranks_a)
    if n < 2:
        raise EmptyList("need at least two observations")

    pairs = sorted((ranks_a[k], ranks_b[k]) for k in ranks_a)
    a_vals = [p[0] for p in pairs]
    b_vals = [p[1] for p in pairs]

    n0 = n * (n - 1) // 2
    n1, a_trips, a_weighted = _tie_sums(a_vals)
    n2, b_trips, b_weighted = _tie_sums(b_vals)
    if n0 == n1 or n0 == n2:
        raise AllTied("one side is entirely tied; tau-b is undefined")
    joint_ties = sum(t * (t - 1) // 2 for t in Counter(pairs).values())
    discordant = _merge_count_inversions(b_vals)

    s = n0 - n1 - n2 + joint_ties - 2 * discordant   # C - D
    tau = s / math.sqrt((n0 - n1) * (n0 - n2))

    v0 = n * (n - 1) * (2 * n + 5)
    var = (v0 - a_weighted - b_weighted) / 18.0
    var += (2 * n1 * n2) / (n * (n - 1))
    if n > 2:
        var += (a_trips * b_trips) / (9.0 * n * (n - 1) * (n - 2))
    if var <= 0:
        return tau, False
    z = s / math.sqrt(var)
    p_value = math.erfc(abs(z) / math.sqrt(2))
    return tau, p_value < 0.05


def correlation_matrix(rankings: dict[str, dict[str, int]],
                       subset: list[str] | None = None) -> CorrelationMatrix:
    """Pairwise tau-b over the (optionally filtered) common id set.

    The diagonal is exactly 1.0 and flagged significant; the matrix is
    symmetric by construction.
    """
    if len(rankings) < 2:
        raise EmptyList("need at least two rankings to correlate")
    labels = tuple(rankings)
    ids: set[str] | None = None
    for ranks in rankings.values():
        ids = set(ranks) if ids is None else ids & set(ranks)
    assert ids is not None
    if subset is not None:
        missing = set(subset) - ids
        if missing:
            raise MismatchedIds(f"subset ids not present in every ranking: {sorted(missing)[:5]}")
        ids = set(subset)
    ordered = sorted(ids)
    if len(ordered) < 2:
        raise EmptyList("need at least two universities to correlate")

    size = len(labels)
    tau = [[1.0] * size for _ in range(size)]
    flags = [[True] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            a = {uid: rankings[labels[i]][uid] for uid in ordered}
            b = {uid: rankings[labels[j]][uid] for uid in ordered}
            t, sig = kendall_tau_b(a, b)
            tau[i][j] = tau[j][i] = t
            flags[i][j] = flags[j][i] = sig
    return CorrelationMatrix(
        labels=labels,
        tau=tuple(tuple(row) for row in tau),
        p_flags=tuple(tuple(row) for row in flags),
    )
