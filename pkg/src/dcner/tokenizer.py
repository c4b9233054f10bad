"""Tokenization of death-certificate cause-of-death text.

Certificate text is fully capitalized free text in which punctuation can be
part of a substance name ("U-47700", "7-AMINOCLONAZEPAM"), so every
punctuation character is kept as its own single-character token instead of
being stripped.
"""

from __future__ import annotations

import re
import statistics
from typing import NamedTuple, Sequence

# Characters emitted as standalone one-character tokens.  Never enumerated
# exhaustively by surveillance guidance; exposed so deployments can extend it.
PUNCTUATION = ",;.:()[]&-/'\""

# Brackets that open a group: no space after them when detokenizing.
_OPENERS = "(["
# Marks that bind tightly on both sides ("U-47700", "B/C", "DOE'S").
_TIGHT = "-/'"

_TOKEN_RE = re.compile(r"[,;.:()\[\]&\-/'\"]|[^,;.:()\[\]&\-/'\"\s]+")


class Token(NamedTuple):
    """One element of a tokenized record: its text and 0-based position."""

    text: str
    index: int

    def __str__(self) -> str:
        return self.text


def is_punctuation(text: str) -> bool:
    """True for a single-character punctuation token."""
    return len(text) == 1 and text in PUNCTUATION


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into uppercase tokens.

    The text is uppercased, split on whitespace runs, and every punctuation
    character becomes its own token, splitting the surrounding word.
    Alphanumeric runs (digits and underscores included) stay intact.
    Empty input yields an empty list.
    """
    pieces = _TOKEN_RE.findall(text.upper())
    return [Token(piece, i) for i, piece in enumerate(pieces)]


def token_texts(tokens: Sequence[Token | str]) -> list[str]:
    """Plain text list from tokens that may be Token tuples or bare strings."""
    return [t.text if isinstance(t, Token) else t for t in tokens]


def detokenize(tokens: Sequence[Token | str]) -> str:
    """Render tokens back to canonical text.

    Tokens are joined with single spaces except that no space is placed
    before any punctuation token, after an opening bracket, or after the
    tight-binding marks ``- / '`` (so "7 - AMINOCLONAZEPAM" renders as
    "7-AMINOCLONAZEPAM" while "HEROIN , FENTANYL" renders as
    "HEROIN, FENTANYL").  The original spacing around punctuation is not
    recorded on tokens, so this is a canonical form rather than a literal
    inverse; ``detokenize(tokenize(s)) == s`` holds exactly for text already
    in canonical spacing.
    """
    texts = token_texts(tokens)
    out: list[str] = []
    for i, text in enumerate(texts):
        if i > 0 and _needs_space(texts[i - 1], text):
            out.append(" ")
        out.append(text)
    return "".join(out)


def _needs_space(prev: str, cur: str) -> bool:
    if is_punctuation(cur):
        return False
    if is_punctuation(prev) and (prev in _OPENERS or prev in _TIGHT):
        return False
    return True


def token_stats(
    records: Sequence[Sequence[Token | str] | int],
) -> tuple[float, int, int, int]:
    """Median, min, max and total of per-record token counts.

    Accepts tokenized records (anything with a length) or bare counts.  The
    median of an even-length corpus is the mean of the two middle counts.
    Raises ValueError on an empty corpus.
    """
    if not records:
        raise ValueError("token_stats requires at least one record")
    counts = [r if isinstance(r, int) else len(r) for r in records]
    return (statistics.median(counts), min(counts), max(counts), sum(counts))
