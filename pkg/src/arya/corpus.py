"""Corpus ingestion: sentence segmentation, deduplication, statistics, blocks.

A corpus is kept per language and is sharded into *blocks*, memory-sized
runs of whole sentences that the training scheduler can select, tokenize,
and cache independently. Tokens are maximal whitespace-delimited runs
throughout this module.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .translit import Script, parse_script

#: Language codes of the family as registered out of the box.
FAMILY_LANGUAGES: dict[str, Script] = {
    "hi": Script.DEVANAGARI,
    "bn": Script.BENGALI,
    "sa": Script.DEVANAGARI,
    "ur": Script.PERSO_ARABIC,
    "mr": Script.DEVANAGARI,
    "gu": Script.GUJARATI,
    "ne": Script.DEVANAGARI,
    "pa": Script.GURMUKHI,
    "or": Script.ORIYA,
    "bh": Script.DEVANAGARI,
    "mag": Script.DEVANAGARI,
}


@dataclass(frozen=True)
class LanguageTag:
    """A language identity: ISO-639-style code plus its native script."""

    code: str
    script: Script

    @classmethod
    def of(cls, code: str, script: str | Script | None = None) -> "LanguageTag":
        """Look up a family language, or register an extension with a script."""
        if script is None:
            if code not in FAMILY_LANGUAGES:
                raise ValueError(
                    f"unknown language {code!r}; pass a script to register it"
                )
            return cls(code, FAMILY_LANGUAGES[code])
        if isinstance(script, str):
            script = parse_script(script)
        return cls(code, script)


@dataclass
class LanguageStats:
    sentences: int = 0
    total_tokens: int = 0
    unique_tokens: int = 0


@dataclass
class CorpusStats:
    """Per-language sentence and token counts."""

    per_language: dict[str, LanguageStats] = field(default_factory=dict)

    def to_tsv(self) -> str:
        lines = ["language\tsentences\ttotal_tokens\tunique_tokens"]
        for code in sorted(self.per_language):
            st = self.per_language[code]
            lines.append(f"{code}\t{st.sentences}\t{st.total_tokens}\t{st.unique_tokens}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Block:
    """A sentence-aligned shard of one language's corpus."""

    language: str
    ordinal: int
    sentence_count: int
    content_digest: str
    storage_ref: Path
    tokenized: bool = False

    @property
    def id(self) -> tuple[str, int]:
        return (self.language, self.ordinal)


# Sentence terminators: danda, double danda, and ASCII . ! ?
_TERMINATORS = frozenset({"।", "॥", ".", "!", "?"})


def segment(text: str) -> list[str]:
    """Split text into sentences on danda, double danda, and . ! ?.

    Terminators stay attached to their sentence; a run of terminators
    ("...") does not produce empty sentences; trailing text without a
    terminator is kept as a final sentence. Only inter-sentence whitespace
    is dropped, so the non-whitespace content of the input is preserved.
    """
    sentences: list[str] = []
    buf: list[str] = []
    n = len(text)
    for i, ch in enumerate(text):
        buf.append(ch)
        if ch in _TERMINATORS and (i + 1 == n or text[i + 1] not in _TERMINATORS):
            piece = "".join(buf).strip()
            if piece:
                sentences.append(piece)
            buf = []
    piece = "".join(buf).strip()
    if piece:
        sentences.append(piece)
    return sentences


def dedup(sentences: Iterable[str]) -> Iterator[str]:
    """Drop exact duplicates (compared after whitespace trimming), keeping
    the first occurrence and the original order."""
    seen: set[str] = set()
    for sentence in sentences:
        key = sentence.strip()
        if key in seen:
            continue
        seen.add(key)
        yield sentence


def tokenize(sentence: str) -> list[str]:
    """Whitespace tokenization: the reproducible baseline used for stats."""
    return sentence.split()


def compute_stats(corpus: Mapping[str, Iterable[str]]) -> CorpusStats:
    """Exact per-language sentence/token counts over sentence streams."""
    stats = CorpusStats()
    for code, sentences in corpus.items():
        st = LanguageStats()
        vocab: set[str] = set()
        for sentence in sentences:
            st.sentences += 1
            tokens = tokenize(sentence)
            st.total_tokens += len(tokens)
            vocab.update(tokens)
        st.unique_tokens = len(vocab)
        stats.per_language[code] = st
    return stats


def content_digest(sentences: Iterable[str]) -> str:
    """SHA-256 over the newline-joined sentences."""
    h = hashlib.sha256()
    for sentence in sentences:
        h.update(sentence.encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def partition_blocks(
    sentences: Iterable[str],
    max_sentences_per_block: int,
    *,
    language: str,
    out_dir: str | Path,
) -> list[Block]:
    """Write a language's sentences into sequential block files.

    Each block holds at most ``max_sentences_per_block`` sentences, one per
    line, under ``out_dir/<language>/<ordinal>.txt``. Blocks are disjoint,
    exhaustive, and never split a sentence.
    """
    if max_sentences_per_block < 1:
        raise ValueError("max_sentences_per_block must be >= 1")
    lang_dir = Path(out_dir) / language
    lang_dir.mkdir(parents=True, exist_ok=True)
    blocks: list[Block] = []
    chunk: list[str] = []

    def flush() -> None:
        if not chunk:
            return
        ordinal = len(blocks)
        path = lang_dir / f"{ordinal:05d}.txt"
        path.write_text("\n".join(chunk) + "\n", encoding="utf-8")
        blocks.append(
            Block(
                language=language,
                ordinal=ordinal,
                sentence_count=len(chunk),
                content_digest=content_digest(chunk),
                storage_ref=path,
            )
        )
        chunk.clear()

    for sentence in sentences:
        chunk.append(sentence)
        if len(chunk) == max_sentences_per_block:
            flush()
    flush()
    return blocks


def read_block_sentences(block: Block) -> list[str]:
    text = Path(block.storage_ref).read_text(encoding="utf-8")
    return text.splitlines()


MANIFEST_HEADER = "language\tordinal\tsentence_count\tdigest\tpath"


def write_manifest(blocks: Iterable[Block], path: str | Path) -> None:
    """Write the block manifest TSV: one record per block."""
    lines = [MANIFEST_HEADER]
    for b in blocks:
        lines.append(
            f"{b.language}\t{b.ordinal}\t{b.sentence_count}\t{b.content_digest}\t{b.storage_ref}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_manifest(path: str | Path) -> dict[str, list[Block]]:
    """Read a block manifest back into per-language block lists."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != MANIFEST_HEADER:
        raise ValueError(f"{path}: not a block manifest (bad header)")
    blocks: dict[str, list[Block]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ValueError(f"{path}:{lineno}: expected 5 columns")
        lang, ordinal, count, digest, ref = parts
        blocks.setdefault(lang, []).append(
            Block(
                language=lang,
                ordinal=int(ordinal),
                sentence_count=int(count),
                content_digest=digest,
                storage_ref=Path(ref),
            )
        )
    for lang_blocks in blocks.values():
        lang_blocks.sort(key=lambda b: b.ordinal)
    return blocks
