"""Reading and writing the CoNLL-style tagged-token file format.

One record looks like::

    # id=DC000017
    ACUTE<TAB>O
    FENTANYL<TAB>U-drug
    TOXICITY<TAB>O
    <blank line>

Tags are spelled exactly B-drug, I-drug, L-drug, U-drug and O.  A blank
line terminates a record; the ``# id=`` comment precedes each record.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence

from .bilou import TAG_SET, TaggedSequence

_ID_PREFIX = "# id="


def read_conll(path: str | Path) -> list[TaggedSequence]:
    """Parse ``path`` into tagged sequences, strictly validating tags."""
    sequences: list[TaggedSequence] = []
    record_id: str | None = None
    tokens: list[str] = []
    tags: list[str] = []

    def flush(line_no: int) -> None:
        nonlocal record_id, tokens, tags
        if record_id is None:
            if tokens:
                raise ValueError(f"{path}: line {line_no}: record without '# id=' header")
            return
        sequences.append(TaggedSequence(record_id, tokens, tags))
        record_id, tokens, tags = None, [], []

    with open(path, encoding="utf-8") as handle:
        line_no = 0
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                flush(line_no)
            elif line.startswith(_ID_PREFIX):
                if record_id is not None:
                    raise ValueError(
                        f"{path}: line {line_no}: new '# id=' before blank line"
                    )
                record_id = line[len(_ID_PREFIX):].strip()
                if not record_id:
                    raise ValueError(f"{path}: line {line_no}: empty record id")
            elif line.startswith("#"):
                continue
            else:
                if record_id is None:
                    raise ValueError(
                        f"{path}: line {line_no}: token line outside a record"
                    )
                token, sep, tag = line.partition("\t")
                if not sep or not token or not tag:
                    raise ValueError(
                        f"{path}: line {line_no}: expected 'TOKEN<TAB>TAG', got {line!r}"
                    )
                if tag not in TAG_SET:
                    raise ValueError(f"{path}: line {line_no}: unknown tag {tag!r}")
                tokens.append(token)
                tags.append(tag)
        flush(line_no + 1)
    return sequences


def write_conll(path: str | Path, sequences: Iterable[TaggedSequence]) -> None:
    """Write sequences to ``path`` atomically (temp file + rename)."""
    write_text(path, format_conll(sequences))


def format_conll(sequences: Iterable[TaggedSequence]) -> str:
    lines: list[str] = []
    for seq in sequences:
        lines.append(f"{_ID_PREFIX}{seq.record_id}")
        for token, tag in zip(seq.tokens, seq.tags):
            if "\t" in token or "\n" in token:
                raise ValueError(
                    f"record {seq.record_id}: token {token!r} cannot be serialized"
                )
            lines.append(f"{token}\t{tag}")
        lines.append("")
    return "\n".join(lines) + ("\n" if lines else "")


def write_text(path: str | Path, text: str) -> None:
    """Atomic text write: the target never holds a partial file."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def check_alignment(
    a: Sequence[TaggedSequence], b: Sequence[TaggedSequence]
) -> None:
    """Require identical record ids and token texts in identical order."""
    if len(a) != len(b):
        raise ValueError(f"corpora differ in size: {len(a)} vs {len(b)} records")
    for seq_a, seq_b in zip(a, b):
        if seq_a.record_id != seq_b.record_id:
            raise ValueError(
                f"record id mismatch: {seq_a.record_id!r} vs {seq_b.record_id!r}"
            )
        if len(seq_a.tokens) != len(seq_b.tokens):
            raise ValueError(
                f"record {seq_a.record_id}: token counts differ "
                f"({len(seq_a.tokens)} vs {len(seq_b.tokens)})"
            )
        for i, (ta, tb) in enumerate(zip(seq_a.tokens, seq_b.tokens)):
            if ta != tb:
                raise ValueError(
                    f"record {seq_a.record_id}: token text mismatch at index {i}: "
                    f"{ta!r} vs {tb!r}"
                )
