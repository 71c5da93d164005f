"""Exception types shared across the pipeline.

Every error carries enough context to point at the offending input (row,
field, handle, ...) so CLI diagnostics stay useful.
"""


class EngageRankError(Exception):
    """Base class for all library errors."""


# --- ingestion ---------------------------------------------------------------

class MissingColumn(EngageRankError):
    def __init__(self, column: str, path: str = ""):
        self.column = column
        self.path = path
        super().__init__(f"missing column {column!r}" + (f" in {path}" if path else ""))


class MalformedNumber(EngageRankError):
    def __init__(self, row: int, field: str, value: str):
        self.row = row
        self.field = field
        self.value = value
        super().__init__(f"row {row}: field {field!r} has malformed number {value!r}")


class DuplicateId(EngageRankError):
    def __init__(self, university_id: str):
        self.university_id = university_id
        super().__init__(f"duplicate university id {university_id!r}")


class UnknownUniversity(EngageRankError):
    def __init__(self, university_id: str):
        self.university_id = university_id
        super().__init__(f"unknown university id {university_id!r}")


class NonPositiveRank(EngageRankError):
    def __init__(self, row: int, value: str):
        self.row = row
        self.value = value
        super().__init__(f"row {row}: rank must be a positive integer, got {value!r}")


# --- rank math ---------------------------------------------------------------

class EmptyList(EngageRankError):
    pass


class MissingList(EngageRankError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"required ranking list {name!r} is not available")


class DegenerateRange(EngageRankError):
    """max == min: normalization has no spread (callers may catch and zero-fill)."""


class MismatchedIds(EngageRankError):
    pass


class AllTied(EngageRankError):
    """Every value tied on one side; tau-b denominator would be zero."""


# --- mining / URIs -----------------------------------------------------------

class MalformedUri(EngageRankError):
    def __init__(self, uri: str):
        self.uri = uri
        super().__init__(f"malformed URI {uri!r}")


class ResolverUnavailable(EngageRankError):
    """Fallback search provider cannot be reached (distinct from no-result)."""


# --- social graph backends ---------------------------------------------------

class BackendError(EngageRankError):
    """Base for errors raised by a social-graph backend."""


class NotFound(BackendError):
    def __init__(self, handle: str):
        self.handle = handle
        super().__init__(f"no such account: {handle}")


class Suspended(BackendError):
    def __init__(self, handle: str):
        self.handle = handle
        super().__init__(f"account suspended: {handle}")


class Protected(BackendError):
    def __init__(self, handle: str):
        self.handle = handle
        super().__init__(f"account is protected: {handle}")


class RateLimited(BackendError):
    def __init__(self, retry_after: float):
        self.retry_after = retry_after
        super().__init__(f"rate limited, retry after {retry_after:.2f}s")


class BackendUnavailable(BackendError):
    pass


class RedirectLoop(EngageRankError):
    def __init__(self, uri: str):
        self.uri = uri
        super().__init__(f"redirect loop while resolving {uri!r}")


class Unresolvable(EngageRankError):
    def __init__(self, uri: str):
        self.uri = uri
        super().__init__(f"could not resolve {uri!r}")


# --- pipeline ----------------------------------------------------------------

class MissingStage(EngageRankError):
    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        super().__init__(f"stage {stage!r} has not produced its outputs yet"
                         + (f": {detail}" if detail else ""))


class NoAccountsFound(EngageRankError):
    def __init__(self, university_id: str):
        self.university_id = university_id
        super().__init__(f"no accounts discovered for {university_id}")
