"""Script normalization into Devanagari via unicode-block offset mapping.

The Brahmic scripts handled here (Bengali, Gurmukhi, Gujarati, Oriya) occupy
128-codepoint unicode blocks laid out in parallel with Devanagari, so most
characters convert by subtracting a per-script offset from the codepoint.
Characters without a sensible Devanagari counterpart (currency marks,
script-specific signs, fraction glyphs) are handled by per-script exception
tables shipped as data files; anything else that cannot be mapped passes
through unchanged and is tallied in an :class:`UnmappedReport` so lossiness
stays observable.

Perso-Arabic (Urdu) is deliberately not convertible here: Urdu input must be
transliterated upstream by a dedicated statistical tool.
"""

from __future__ import annotations

import enum
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .errors import AryaError, UnsupportedScriptError

DEVANAGARI_BLOCK_START = 0x0900
BLOCK_SIZE = 0x80

#: Marker used in exception-table files for explicit pass-through.
PASS_MARKER = "PASS"


class Script(enum.Enum):
    """Writing systems recognized by the toolkit."""

    DEVANAGARI = "devanagari"
    BENGALI = "bengali"
    GURMUKHI = "gurmukhi"
    GUJARATI = "gujarati"
    ORIYA = "oriya"
    PERSO_ARABIC = "perso_arabic"
    LATIN = "latin"
    OTHER = "other"

    @property
    def block_start(self) -> int | None:
        """Start of the script's unicode block, or None for non-Brahmic scripts."""
        return _BLOCK_STARTS.get(self)

    @property
    def is_brahmic(self) -> bool:
        return self in _BLOCK_STARTS


# Brahmic block starts; each is a multiple of 0x80 and the blocks are disjoint.
_BLOCK_STARTS: dict[Script, int] = {
    Script.DEVANAGARI: 0x0900,
    Script.BENGALI: 0x0980,
    Script.GURMUKHI: 0x0A00,
    Script.GUJARATI: 0x0A80,
    Script.ORIYA: 0x0B00,
}

_SCRIPT_ALIASES = {
    "bn": Script.BENGALI,
    "pa": Script.GURMUKHI,
    "gu": Script.GUJARATI,
    "or": Script.ORIYA,
    "hi": Script.DEVANAGARI,
    "ur": Script.PERSO_ARABIC,
}


def parse_script(name: str) -> Script:
    """Resolve a script from its name or a common language-code alias."""
    key = name.strip().lower()
    if key in _SCRIPT_ALIASES:
        return _SCRIPT_ALIASES[key]
    try:
        return Script(key)
    except ValueError:
        raise UnsupportedScriptError(f"unknown script: {name!r}") from None


@dataclass(frozen=True)
class TransliterationTable:
    """Offset map from one Brahmic script into Devanagari.

    ``exceptions`` maps source codepoints to a replacement string, or to
    None for explicit pass-through. Every non-exception codepoint in the
    source block converts by subtracting ``offset``.
    """

    source: Script
    offset: int
    exceptions: Mapping[int, str | None]

    def __post_init__(self) -> None:
        for cp, repl in self.exceptions.items():
            if not self._in_source_block(cp):
                raise ValueError(
                    f"exception codepoint U+{cp:04X} outside the "
                    f"{self.source.value} block"
                )
            if repl is not None and _touches_foreign_brahmic_block(repl, exclude=None):
                raise ValueError(
                    f"exception for U+{cp:04X} maps into a non-Devanagari "
                    f"Brahmic block: {repl!r}"
                )

    def _in_source_block(self, cp: int) -> bool:
        start = self.source.block_start
        assert start is not None
        return start <= cp < start + BLOCK_SIZE


@dataclass
class UnmappedReport:
    """Tally of source-block codepoints that did not take the offset path.

    ``counts`` records exception hits and pass-throughs keyed by source
    codepoint. Characters outside the source block are counted in
    ``total_chars`` only.
    """

    counts: Counter[int] = field(default_factory=Counter)
    total_chars: int = 0
    mapped_chars: int = 0

    def merge(self, other: "UnmappedReport") -> None:
        self.counts.update(other.counts)
        self.total_chars += other.total_chars
        self.mapped_chars += other.mapped_chars

    def to_lines(self) -> list[str]:
        """Render as TSV lines: codepoint, character name, count."""
        lines = ["codepoint\tname\tcount"]
        for cp in sorted(self.counts):
            lines.append(f"U+{cp:04X}\t{_charname(cp)}\t{self.counts[cp]}")
        lines.append(f"# total_chars={self.total_chars} mapped_chars={self.mapped_chars}")
        return lines


def _charname(cp: int) -> str:
    try:
        return unicodedata.name(chr(cp))
    except ValueError:
        return "<unassigned>"


def _touches_foreign_brahmic_block(text: str, exclude: Script | None) -> bool:
    for ch in text:
        cp = ord(ch)
        for script, start in _BLOCK_STARTS.items():
            if script in (Script.DEVANAGARI, exclude):
                continue
            if start <= cp < start + BLOCK_SIZE:
                return True
    return False


def _is_assigned(cp: int) -> bool:
    return unicodedata.category(chr(cp)) != "Cn"


def _exceptions_resource(script: Script):
    return resources.files("arya").joinpath(f"data/exceptions/{script.value}.tsv")


def parse_exception_lines(lines: Iterable[str], origin: str = "<memory>") -> dict[int, str | None]:
    """Parse exception-table entries.

    Format: one entry per line, ``U+XXXX<TAB>replacement-or-PASS``;
    ``#`` starts a comment; blank lines ignored.
    """
    table: dict[int, str | None] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise AryaError(f"{origin}:{lineno}: expected 'U+XXXX<TAB>replacement-or-PASS'")
        cp_text, repl = parts
        cp_text = cp_text.strip()
        if not cp_text.upper().startswith("U+"):
            raise AryaError(f"{origin}:{lineno}: bad codepoint field {cp_text!r}")
        try:
            cp = int(cp_text[2:], 16)
        except ValueError:
            raise AryaError(f"{origin}:{lineno}: bad codepoint field {cp_text!r}") from None
        table[cp] = None if repl == PASS_MARKER else repl
    return table


def load_exceptions(script: Script, path: str | Path | None = None) -> dict[int, str | None]:
    """Load the exception table for a script, from ``path`` or bundled data."""
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
        origin = str(path)
    else:
        text = _exceptions_resource(script).read_text(encoding="utf-8")
        origin = f"data/exceptions/{script.value}.tsv"
    return parse_exception_lines(text.splitlines(), origin=origin)


def build_table(source: Script, exceptions_path: str | Path | None = None) -> TransliterationTable:
    """Build the offset table that converts ``source`` into Devanagari.

    Raises UnsupportedScriptError for Devanagari itself and for scripts
    with no parallel unicode block (Perso-Arabic, Latin, Other).
    """
    if source is Script.DEVANAGARI:
        raise UnsupportedScriptError("source is already Devanagari")
    if not source.is_brahmic:
        raise UnsupportedScriptError(
            f"{source.value} has no unicode block parallel to Devanagari"
        )
    start = source.block_start
    assert start is not None
    return TransliterationTable(
        source=source,
        offset=start - DEVANAGARI_BLOCK_START,
        exceptions=load_exceptions(source, exceptions_path),
    )


def transliterate(text: str, table: TransliterationTable) -> tuple[str, UnmappedReport]:
    """Convert every source-block codepoint of ``text`` into Devanagari.

    Codepoints in the table's source block are mapped by offset unless the
    exception table names them; unassigned codepoints (and any whose offset
    target is unassigned) pass through. All other characters are untouched.
    Total function: never raises on content.
    """
    start = table.source.block_start
    assert start is not None
    end = start + BLOCK_SIZE
    report = UnmappedReport(total_chars=len(text))
    out: list[str] = []
    for ch in text:
        cp = ord(ch)
        if not (start <= cp < end):
            out.append(ch)
            continue
        if cp in table.exceptions:
            repl = table.exceptions[cp]
            out.append(ch if repl is None else repl)
            report.counts[cp] += 1
        elif _is_assigned(cp) and _is_assigned(cp - table.offset):
            out.append(chr(cp - table.offset))
            report.mapped_chars += 1
        else:
            # Gap codepoint: no usable Devanagari counterpart.
            out.append(ch)
            report.counts[cp] += 1
    return "".join(out), report


def offset_mappable_codepoints(table: TransliterationTable) -> list[int]:
    """Source codepoints that take the plain offset path under ``table``."""
    start = table.source.block_start
    assert start is not None
    return [
        cp
        for cp in range(start, start + BLOCK_SIZE)
        if cp not in table.exceptions
        and _is_assigned(cp)
        and _is_assigned(cp - table.offset)
    ]


# Perso-Arabic ranges: Arabic, Arabic Supplement, presentation forms A/B.
_PERSO_ARABIC_RANGES = ((0x0600, 0x06FF), (0x0750, 0x077F), (0xFB50, 0xFDFF), (0xFE70, 0xFEFF))


def classify_codepoint(cp: int) -> Script:
    """Classify one codepoint by unicode block."""
    for script, start in _BLOCK_STARTS.items():
        if start <= cp < start + BLOCK_SIZE:
            return script
    for lo, hi in _PERSO_ARABIC_RANGES:
        if lo <= cp <= hi:
            return Script.PERSO_ARABIC
    if chr(cp).isalpha() and cp < 0x0250:  # Basic Latin through Latin Extended-B
        return Script.LATIN
    return Script.OTHER


def detect_script(text: str) -> dict[Script, float]:
    """Fraction of non-whitespace codepoints per script.

    Returns an empty map for empty or whitespace-only input; otherwise the
    fractions sum to 1.
    """
    tally: Counter[Script] = Counter()
    for ch in text:
        if ch.isspace():
            continue
        tally[classify_codepoint(ord(ch))] += 1
    total = sum(tally.values())
    if total == 0:
        return {}
    return {script: n / total for script, n in tally.items()}
