"""Deterministic text segmentation, syllable estimation, and Flesch Reading Ease.

Everything in this module is a pure function of its inputs: no locale,
no randomness, no mutable module state beyond caches loaded once at import.
The Flesch Reading Ease score uses the standard English constants
206.835 / 1.015 / 84.6 and is deliberately left unclipped; normalisation
to [0, 1] happens in the composite score, not here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .exceptions import UnscorableTextError

_VOWELS = frozenset("aeiouy")

# Maximal runs of letters/digits. Internal apostrophes and hyphens join a
# token ("isn't", "state-of-the-art"); a comma or period joins only when
# flanked by digits, so "2,000" and "3.14" stay single tokens.
_TOKEN_RE = re.compile(r"[^\W_]+(?:(?:['’-]|(?<=\d)[.,](?=\d))[^\W_]+)*")

_TERMINATOR_RE = re.compile(r"[.!?]+")


def _load_abbreviations() -> frozenset[str]:
    raw = resources.files("lexipipe.data").joinpath("abbreviations.txt").read_text("utf-8")
    return frozenset(line.strip().lower() for line in raw.splitlines() if line.strip())


_ABBREVIATIONS = _load_abbreviations()


@dataclass(frozen=True)
class TextStats:
    """Sentence/word/syllable counts for one piece of text."""

    sentence_count: int
    word_count: int
    syllable_count: int

    def __post_init__(self) -> None:
        if self.sentence_count < 1:
            raise ValueError(f"sentence_count must be >= 1, got {self.sentence_count}")
        if self.word_count < 1:
            raise ValueError(f"word_count must be >= 1, got {self.word_count}")
        if self.syllable_count < self.word_count:
            raise ValueError(
                f"syllable_count ({self.syllable_count}) cannot be below "
                f"word_count ({self.word_count}); every word has at least one syllable"
            )


@dataclass(frozen=True)
class ReadabilityScore:
    """A Flesch Reading Ease value together with the stats it was derived from."""

    fre: float
    stats: TextStats


def tokenize_words(text: str) -> list[str]:
    """Split text into word tokens, preserving case.

    Punctuation is excluded; internal apostrophes and hyphens are kept, so
    hyphenated compounds count as one word. Empty text yields an empty list.
    """
    return _TOKEN_RE.findall(text)


def segment_sentences(text: str) -> list[str]:
    """Split text into sentences on terminal punctuation.

    A run of ``.``, ``!`` or ``?`` ends a sentence when followed by
    whitespace and an uppercase letter, or by end of text. A single period
    after a known abbreviation ("Dr.", "U.S.", "e.g.", ...) never splits.
    Text with words but no terminal punctuation is one sentence. Segments
    containing no word token are dropped; empty text yields an empty list.
    """
    if not tokenize_words(text):
        return []
    boundaries: list[int] = []
    for match in _TERMINATOR_RE.finditer(text):
        end = match.end()
        if end >= len(text):
            boundaries.append(end)
            continue
        if not text[end].isspace():
            continue  # terminator must be followed by whitespace
        following = text[end:].lstrip()
        if not following or not following[0].isupper():
            continue
        if match.group() == "." and _ends_with_abbreviation(text, match.start(), end):
            continue
        boundaries.append(end)
    sentences = []
    prev = 0
    for boundary in boundaries:
        span = text[prev:boundary].strip()
        if tokenize_words(span):
            sentences.append(span)
        prev = boundary
    trailing = text[prev:].strip()
    if tokenize_words(trailing):
        sentences.append(trailing)
    return sentences


def _ends_with_abbreviation(text: str, period_start: int, period_end: int) -> bool:
    start = period_start
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    chunk = text[start:period_end].lstrip("\"'‘“([{")
    return chunk.lower() in _ABBREVIATIONS


def count_syllables(word: str) -> int:
    """Estimate the syllable count of one word token.

    Heuristic: maximal vowel groups (a, e, i, o, u, y) per hyphen-separated
    part, with a silent terminal "e" (kept after a consonant + "le", as in
    "table") and a silent "-ed" after consonants other than t/d ("talked",
    but not "started"). Minimum of one per part with letters. Hyphenated
    compounds sum over their parts. Case-insensitive.

    Raises UnscorableTextError for a word with no letters at all.
    """
    total = 0
    for part in word.replace("’", "'").split("-"):
        letters = "".join(c for c in part.lower() if c.isalpha())
        if letters:
            total += _syllables_in(letters)
    if total == 0:
        raise UnscorableTextError(f"word has no letters to count syllables for: {word!r}")
    return total


def _syllables_in(word: str) -> int:
    if len(word) > 3 and word.endswith("ed") and word[-3] not in _VOWELS and word[-3] not in "td":
        word = word[:-2]
    elif word.endswith("e") and not (
        len(word) >= 3 and word.endswith("le") and word[-3] not in _VOWELS
    ):
        word = word[:-1]
    groups = 0
    previous_was_vowel = False
    for char in word:
        is_vowel = char in _VOWELS
        if is_vowel and not previous_was_vowel:
            groups += 1
        previous_was_vowel = is_vowel
    return max(1, groups)


def _token_syllables(token: str) -> int:
    # Pure numerals ("2,000", "90") count as one word and one syllable.
    if not any(c.isalpha() for c in token):
        return 1
    return count_syllables(token)


def text_stats(text: str) -> TextStats:
    """Compute TextStats for text containing at least one word token."""
    tokens = tokenize_words(text)
    if not tokens:
        raise UnscorableTextError("text contains no word tokens")
    sentence_count = max(1, len(segment_sentences(text)))
    syllable_count = sum(_token_syllables(token) for token in tokens)
    return TextStats(
        sentence_count=sentence_count,
        word_count=len(tokens),
        syllable_count=syllable_count,
    )


def flesch_reading_ease(stats: TextStats) -> ReadabilityScore:
    """Flesch Reading Ease: 206.835 - 1.015*(words/sentence) - 84.6*(syllables/word).

    The value is unbounded (negative for very dense text, above 100 for
    trivially simple text); callers that need [0, 1] use the composite score.
    """
    fre = (
        206.835
        - 1.015 * (stats.word_count / stats.sentence_count)
        - 84.6 * (stats.syllable_count / stats.word_count)
    )
    return ReadabilityScore(fre=fre, stats=stats)


def score_text(text: str) -> ReadabilityScore:
    """Convenience composition: text_stats + flesch_reading_ease."""
    return flesch_reading_ease(text_stats(text))
