"""Exception hierarchy shared across the package."""


class LexipipeError(Exception):
    """Base class for all package-specific errors."""


class UnscorableTextError(LexipipeError, ValueError):
    """Text (or a word) carries nothing the metrics can score."""


class ConfigError(LexipipeError, ValueError):
    """Invalid or inconsistent configuration, detected before any work runs."""


class CorpusFormatError(LexipipeError, ValueError):
    """Corpus or checkpoint file violates the expected JSONL schema."""


class BackendError(LexipipeError):
    """Base class for summarizer backend failures."""


class RetryableBackendError(BackendError):
    """Transient backend failure (rate limit, 5xx, timeout); safe to retry."""


class TerminalBackendError(BackendError):
    """Non-recoverable backend failure (bad credentials, empty completion)."""


class ScorerError(LexipipeError):
    """Base class for semantic scorer failures."""


class RetryableScorerError(ScorerError):
    """Transient scorer failure (network or timeout); safe to retry."""


class ScorerProtocolError(ScorerError):
    """Scorer responded, but outside its wire contract (malformed body, score out of range)."""
