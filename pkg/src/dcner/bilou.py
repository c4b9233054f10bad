"""BILOU span encoding and decoding for the single "drug" entity label.

Gold annotation marks a one-token entity as U-drug and a longer entity as
B-drug, I-drug..., L-drug; everything else is O.  Model output is not
guaranteed to be grammatical, so :func:`decode` is total: invalid sequences
go through a deterministic repair before spans are extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tokenizer import Token, detokenize, token_texts

# The one entity label in this artifact.  Kept as data so a second label
# could be introduced without changing file formats.
ENTITY_LABEL = "drug"

TAG_O = "O"
TAG_B = f"B-{ENTITY_LABEL}"
TAG_I = f"I-{ENTITY_LABEL}"
TAG_L = f"L-{ENTITY_LABEL}"
TAG_U = f"U-{ENTITY_LABEL}"

# Canonical ordering shared with the CRF tag set.
TAG_SET = (TAG_O, TAG_B, TAG_I, TAG_L, TAG_U)


@dataclass(frozen=True)
class EntitySpan:
    """Contiguous token range [start, end] (inclusive) labeled as a drug."""

    start: int
    end: int
    surface: str = ""

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span ({self.start}, {self.end})")

    def indices(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass
class TaggedSequence:
    """Tokens of one record paired with same-length BILOU tags."""

    record_id: str
    tokens: list[str]
    tags: list[str]

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.tags):
            raise ValueError(
                f"record {self.record_id}: {len(self.tokens)} tokens "
                f"but {len(self.tags)} tags"
            )


def encode(length: int, spans: Sequence[EntitySpan]) -> list[str]:
    """Tag sequence of ``length`` marking ``spans``; all other positions O.

    Spans must be in bounds, sorted and non-overlapping; an offending span
    is named in the raised ValueError.
    """
    tags = [TAG_O] * length
    prev_end = -1
    for span in spans:
        if span.start <= prev_end:
            raise ValueError(f"span ({span.start}, {span.end}) overlaps its predecessor")
        if span.end >= length:
            raise ValueError(f"span ({span.start}, {span.end}) exceeds length {length}")
        if span.start == span.end:
            tags[span.start] = TAG_U
        else:
            tags[span.start] = TAG_B
            for i in range(span.start + 1, span.end):
                tags[i] = TAG_I
            tags[span.end] = TAG_L
        prev_end = span.end
    return tags


def decode(tags: Sequence[str]) -> list[EntitySpan]:
    """Spans encoded by ``tags``; total over arbitrary tag sequences.

    A grammatical sequence decodes to exactly the spans that produced it.
    An ungrammatical one (possible in raw model output) is repaired first:
    every maximal run of consecutive non-O tags becomes one span.  Either
    way the result is in-bounds, sorted and non-overlapping.
    """
    if validate(tags):
        return _repair(tags)
    spans: list[EntitySpan] = []
    start = -1
    for i, tag in enumerate(tags):
        if tag == TAG_U:
            spans.append(EntitySpan(i, i))
        elif tag == TAG_B:
            start = i
        elif tag == TAG_L:
            spans.append(EntitySpan(start, i))
            start = -1
    return spans


def _repair(tags: Sequence[str]) -> list[EntitySpan]:
    spans: list[EntitySpan] = []
    start = -1
    for i, tag in enumerate(tags):
        if tag != TAG_O and start < 0:
            start = i
        elif tag == TAG_O and start >= 0:
            spans.append(EntitySpan(start, i - 1))
            start = -1
    if start >= 0:
        spans.append(EntitySpan(start, len(tags) - 1))
    return spans


def validate(tags: Sequence[str]) -> list[tuple[int, str]]:
    """All grammar violations in ``tags`` as (position, description) pairs.

    Empty result means the sequence is a possible :func:`encode` output.
    Unknown tag strings are reported as violations as well.
    """
    violations: list[tuple[int, str]] = []
    n = len(tags)
    for i, tag in enumerate(tags):
        nxt = tags[i + 1] if i + 1 < n else None
        prev = tags[i - 1] if i > 0 else None
        if tag not in TAG_SET:
            violations.append((i, f"unknown tag {tag!r}"))
        elif tag == TAG_B and nxt not in (TAG_I, TAG_L):
            violations.append((i, "unclosed B"))
        elif tag == TAG_I:
            if prev not in (TAG_B, TAG_I):
                violations.append((i, "I without preceding B"))
            if nxt not in (TAG_I, TAG_L):
                violations.append((i, "unclosed I"))
        elif tag == TAG_L and prev not in (TAG_B, TAG_I):
            violations.append((i, "L without preceding B or I"))
    return violations


def attach_surfaces(
    spans: Sequence[EntitySpan], tokens: Sequence[Token | str]
) -> list[EntitySpan]:
    """Copies of ``spans`` with surface forms rendered from ``tokens``."""
    texts = token_texts(tokens)
    return [
        EntitySpan(s.start, s.end, detokenize(texts[s.start : s.end + 1]))
        for s in spans
    ]
