"""Semantic-fidelity metrics and the composite readability+fidelity score.

ROUGE-1/2 and BLEU are computed from scratch over case-folded tokens (no
stemming, no stop-word removal) so results are bit-reproducible and checkable
against a brute-force oracle. The embedding-based scorer is a seam: the
default is an offline lexical cosine, and a remote HTTP scorer speaks the
wire contract POST {"candidate", "reference"} -> {"f1", "model"}.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Protocol, runtime_checkable

import requests

from .exceptions import RetryableScorerError, ScorerProtocolError, UnscorableTextError
from .text_analysis import tokenize_words


@dataclass(frozen=True)
class NGramProfile:
    """Occurrence counts of every contiguous n-token window, case-folded."""

    n: int
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class PrecisionRecallF1:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class FidelityScores:
    """All fidelity metrics for one candidate/reference pair."""

    rouge1: PrecisionRecallF1
    rouge2: PrecisionRecallF1
    bleu: float
    semantic_f1: float
    composite: float


def ngram_profile(tokens: list[str], n: int) -> NGramProfile:
    """Count every contiguous n-token window after case-folding.

    Fewer than n tokens produce an empty profile; n must be >= 1.
    """
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    folded = [t.casefold() for t in tokens]
    counts = Counter(tuple(folded[i : i + n]) for i in range(len(folded) - n + 1))
    return NGramProfile(n=n, counts=counts)


def _overlap(candidate: NGramProfile, reference: NGramProfile) -> int:
    return sum(min(count, reference.counts[gram]) for gram, count in candidate.counts.items())


def rouge_n(candidate: list[str], reference: list[str], n: int) -> PrecisionRecallF1:
    """Clipped n-gram overlap precision/recall/F1.

    Empty candidate scores all zeros; empty reference is unscorable.
    """
    if not reference:
        raise UnscorableTextError("cannot compute ROUGE against an empty reference")
    cand = ngram_profile(candidate, n)
    ref = ngram_profile(reference, n)
    overlap = _overlap(cand, ref)
    precision = overlap / cand.total if cand.total else 0.0
    recall = overlap / ref.total if ref.total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return PrecisionRecallF1(precision=precision, recall=recall, f1=f1)


def bleu(candidate: list[str], reference: list[str], max_n: int = 4) -> float:
    """Sentence-level BLEU with add-one smoothing on zero-match orders.

    Geometric mean of clipped n-gram precisions for n = 1..max_n, times the
    brevity penalty exp(1 - |ref|/|cand|) when the candidate is shorter.
    Orders with no candidate windows take the smoothed neutral value 1, so
    identity pairs score exactly 1.0 at any length.
    """
    if not reference:
        raise UnscorableTextError("cannot compute BLEU against an empty reference")
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if not candidate:
        return 0.0
    log_sum = 0.0
    for n in range(1, max_n + 1):
        cand = ngram_profile(candidate, n)
        ref = ngram_profile(reference, n)
        matches = _overlap(cand, ref)
        total = cand.total
        if matches == 0:
            precision = (matches + 1) / (total + 1)
        else:
            precision = matches / total
        log_sum += math.log(precision)
    geometric_mean = math.exp(log_sum / max_n)
    if len(candidate) < len(reference):
        brevity_penalty = math.exp(1 - len(reference) / len(candidate))
    else:
        brevity_penalty = 1.0
    return brevity_penalty * geometric_mean


def lexical_semantic_score(candidate: list[str], reference: list[str]) -> float:
    """Cosine similarity of case-folded unigram count vectors, in [0, 1].

    Identical token sequences score exactly 1.0; disjoint vocabularies 0.0.
    """
    if not reference:
        raise UnscorableTextError("cannot score against an empty reference")
    if not candidate:
        return 0.0
    cand = Counter(t.casefold() for t in candidate)
    ref = Counter(t.casefold() for t in reference)
    if cand == ref:
        return 1.0
    dot = sum(count * ref[token] for token, count in cand.items())
    if dot == 0:
        return 0.0
    norm_sq = sum(c * c for c in cand.values()) * sum(c * c for c in ref.values())
    return min(1.0, dot / math.sqrt(norm_sq))


def clip(value: float, low: float, high: float) -> float:
    return max(low, min(high, value))


def composite_score(
    fre: float, semantic_f1: float, weights: tuple[float, float] = (0.5, 0.5)
) -> float:
    """Joint readability+fidelity objective: w_r*clip(fre/100, 0, 1) + w_f*semantic_f1.

    FRE is normalised by 100 and clipped to [0, 1] here (and only here);
    the result lies in [0, 1] for any real fre.
    """
    if not 0.0 <= semantic_f1 <= 1.0:
        raise ValueError(f"semantic_f1 must be in [0, 1], got {semantic_f1}")
    w_readability, w_fidelity = weights
    if abs(w_readability + w_fidelity - 1.0) > 1e-9:
        raise ValueError(f"composite weights must sum to 1, got {weights}")
    return w_readability * clip(fre / 100.0, 0.0, 1.0) + w_fidelity * semantic_f1


@runtime_checkable
class SemanticScorer(Protocol):
    """Pluggable semantic-similarity backend.

    Implementations score in [0, 1], score(a, a) ~= 1, and expose an
    identity string that is recorded in every report for provenance.
    """

    @property
    def identity(self) -> str: ...

    def score(self, candidate: str, reference: str) -> float: ...


class LexicalSemanticScorer:
    """Offline fallback scorer: unigram count-vector cosine over word tokens."""

    @property
    def identity(self) -> str:
        return "lexical-cosine/1"

    def score(self, candidate: str, reference: str) -> float:
        return lexical_semantic_score(tokenize_words(candidate), tokenize_words(reference))


@dataclass(frozen=True)
class ScorerEndpoint:
    """Connection settings for a remote semantic scorer service."""

    url: str
    timeout: float = 30.0
    max_retries: int = 3
    backoff_base: float = 1.0


def remote_semantic_score(
    candidate: str, reference: str, endpoint: ScorerEndpoint
) -> tuple[float, str]:
    """POST the pair to a scorer service; return (f1, model identity).

    Network failures and 429/5xx responses are retried with exponential
    backoff up to endpoint.max_retries attempts; a malformed body or a score
    outside [0, 1] is a protocol error and never retried.
    """
    if not candidate or not reference:
        raise UnscorableTextError("remote scorer requires non-empty candidate and reference")
    payload = {"candidate": candidate, "reference": reference}
    last_error: RetryableScorerError | None = None
    for attempt in range(endpoint.max_retries):
        if attempt:
            time.sleep(endpoint.backoff_base * 2 ** (attempt - 1))
        try:
            response = requests.post(endpoint.url, json=payload, timeout=endpoint.timeout)
        except requests.RequestException as exc:
            last_error = RetryableScorerError(f"scorer request failed: {exc}")
            continue
        if response.status_code == 429 or response.status_code >= 500:
            last_error = RetryableScorerError(f"scorer returned HTTP {response.status_code}")
            continue
        if response.status_code != 200:
            raise ScorerProtocolError(f"scorer returned HTTP {response.status_code}")
        try:
            body = response.json()
            f1 = body["f1"]
            model = str(body.get("model", "unknown"))
        except (ValueError, KeyError, TypeError) as exc:
            raise ScorerProtocolError(f"malformed scorer response: {exc}") from exc
        if not isinstance(f1, (int, float)) or isinstance(f1, bool) or not 0.0 <= f1 <= 1.0:
            raise ScorerProtocolError(f"scorer f1 outside [0, 1]: {f1!r}")
        return float(f1), model
    assert last_error is not None
    raise last_error


class RemoteSemanticScorer:
    """SemanticScorer backed by an HTTP scorer service."""

    def __init__(self, endpoint: ScorerEndpoint):
        self._endpoint = endpoint
        self._model: str | None = None

    @property
    def identity(self) -> str:
        if self._model is not None:
            return f"remote:{self._model}"
        return f"remote:{self._endpoint.url}"

    def score(self, candidate: str, reference: str) -> float:
        f1, model = remote_semantic_score(candidate, reference, self._endpoint)
        self._model = model
        return f1


def score_candidate(
    candidate: str,
    reference: str,
    fre: float,
    scorer: SemanticScorer,
    weights: tuple[float, float] = (0.5, 0.5),
    semantic_f1: float | None = None,
) -> FidelityScores:
    """Full fidelity suite for one candidate/reference text pair.

    `fre` is the candidate's readability score (feeds the composite);
    pass `semantic_f1` to reuse an already-computed semantic score instead
    of invoking the scorer again.
    """
    cand_tokens = tokenize_words(candidate)
    ref_tokens = tokenize_words(reference)
    if not ref_tokens:
        raise UnscorableTextError("reference text has no word tokens")
    if semantic_f1 is None:
        semantic_f1 = scorer.score(candidate, reference)
    return FidelityScores(
        rouge1=rouge_n(cand_tokens, ref_tokens, 1),
        rouge2=rouge_n(cand_tokens, ref_tokens, 2),
        bleu=bleu(cand_tokens, ref_tokens),
        semantic_f1=semantic_f1,
        composite=composite_score(fre, semantic_f1, weights),
    )
