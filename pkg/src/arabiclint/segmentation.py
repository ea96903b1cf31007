"""Normalization and segmentation of non-vowelized Arabic text.

All lexical processing in this package happens on normalized text: the
short-vowel diacritics (tashkeel) and the tatweel elongation character are
removed, and the hamza-carrying alef variants are folded to bare alef by
default, so hamza-less spellings such as ياخذ still match dictionary
entries written with the hamza. Every normalized character remembers the
index of the original character it came from, which lets diagnostics point
at spans of the untouched input regardless of how much was stripped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

# Arabic tanwin, short vowels, shadda and sukun (U+064B..U+0652).
DIACRITICS = frozenset(chr(cp) for cp in range(0x064B, 0x0653))

# Tatweel (kashida) stretches glyphs and carries no meaning; always removed.
TATWEEL = "ـ"

# Alef variants folded to bare alef: madda, hamza above, hamza below, wasla.
ALEF_FOLDING = {
    "آ": "ا",
    "أ": "ا",
    "إ": "ا",
    "ٱ": "ا",
}

# Sentence boundaries: Latin and Arabic full stops, question and exclamation
# marks, semicolons and the colon. The Arabic comma ، joins clauses and is
# deliberately not a boundary.
SENTENCE_TERMINATORS = frozenset({".", ":", ";", "!", "?", "؛", "؟"})

ARABIC_COMMA = "،"


@dataclass(frozen=True)
class NormalizationOptions:
    """Switches for `normalize`; the defaults match the CLI defaults."""

    fold_hamza: bool = True
    keep_diacritics: bool = False


@dataclass(frozen=True)
class NormalizedText:
    """A normalized view of a document.

    `offset_map[i]` is the index in `original` of the character that
    produced `normalized[i]`. The map is monotonically non-decreasing;
    under the default options `normalized` contains no tashkeel and no
    tatweel.
    """

    original: str
    normalized: str
    offset_map: Sequence[int]

    def span_in_original(self, start: int, end: int) -> tuple[int, int]:
        """Map a half-open range of `normalized` back onto `original`."""
        if start >= end:
            raise ValueError("empty normalized range has no original span")
        return self.offset_map[start], self.offset_map[end - 1] + 1


@dataclass(slots=True)
class Token:
    """One word-like unit: normalized surface plus its span in the original.

    Treated as immutable everywhere; kept unfrozen for construction speed.
    """

    surface: str
    span: tuple[int, int]
    sentence_index: int
    ordinal: int


@dataclass(slots=True)
class Sentence:
    index: int
    tokens: tuple[Token, ...]
    terminator: str | None = None

    @property
    def span(self) -> tuple[int, int]:
        """Original-text range from the first to the last token."""
        return self.tokens[0].span[0], self.tokens[-1].span[1]


_SPECIAL_PATTERNS: dict[tuple[bool, bool], re.Pattern] = {}


def _special_pattern(opts: NormalizationOptions) -> re.Pattern:
    key = (opts.fold_hamza, opts.keep_diacritics)
    pattern = _SPECIAL_PATTERNS.get(key)
    if pattern is None:
        specials = TATWEEL
        if not opts.keep_diacritics:
            specials += "".join(sorted(DIACRITICS))
        if opts.fold_hamza:
            specials += "".join(ALEF_FOLDING)
        pattern = re.compile(f"[{re.escape(specials)}]")
        _SPECIAL_PATTERNS[key] = pattern
    return pattern


def normalize(text: str, options: NormalizationOptions | None = None) -> NormalizedText:
    """Strip diacritics and tatweel (and optionally fold alef variants).

    Idempotent: normalizing an already-normalized string is the identity.
    Empty input yields an empty NormalizedText. Clean stretches between
    special characters are copied wholesale, so typical text normalizes in
    one regex scan.
    """
    opts = options or NormalizationOptions()
    fold = ALEF_FOLDING if opts.fold_hamza else {}
    parts: list[str] = []
    offsets: list[int] = []
    last = 0
    touched = False
    for match in _special_pattern(opts).finditer(text):
        touched = True
        i = match.start()
        if i > last:
            parts.append(text[last:i])
            offsets.extend(range(last, i))
        replacement = fold.get(text[i])
        if replacement is not None:
            parts.append(replacement)
            offsets.append(i)
        last = i + 1
    if not touched:
        return NormalizedText(original=text, normalized=text, offset_map=range(len(text)))
    if last < len(text):
        parts.append(text[last:])
        offsets.extend(range(last, len(text)))
    return NormalizedText(original=text, normalized="".join(parts), offset_map=tuple(offsets))


# Combining marks of the Arabic block (kept inside tokens when diacritics
# survive normalization). Letters and digits of any script are word
# characters; punctuation, symbols and whitespace never are.
ARABIC_MARKS = frozenset(
    chr(cp)
    for block in (
        range(0x0610, 0x061B),
        range(0x064B, 0x0660),
        (0x0670,),
        range(0x06D6, 0x06DD),
        range(0x06DF, 0x06E5),
        (0x06E7, 0x06E8),
        range(0x06EA, 0x06EE),
    )
    for cp in block
)

_TOKEN_RE = re.compile(
    "(?:[^\\W_]|["
    + "".join(sorted(ARABIC_MARKS))
    + "])+"
)


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch in ARABIC_MARKS


def tokenize(
    nt: NormalizedText,
    start: int = 0,
    end: int | None = None,
    sentence_index: int = 0,
) -> list[Token]:
    """Split a normalized segment into tokens with original-text spans.

    The segment must contain no sentence terminators (guaranteed when it
    comes from `split_sentences`). Punctuation separates tokens and is
    dropped; Latin letters and digits form opaque tokens of their own.
    """
    text = nt.normalized
    if end is None:
        end = len(text)
    offset_map = nt.offset_map
    tokens: list[Token] = []
    for match in _TOKEN_RE.finditer(text, start, end):
        a, b = match.span()
        tokens.append(
            Token(
                surface=match.group(),
                span=(offset_map[a], offset_map[b - 1] + 1),
                sentence_index=sentence_index,
                ordinal=len(tokens),
            )
        )
    return tokens


def iter_segments(normalized: str):
    """Yield (start, end, terminator) for raw inter-boundary segments.

    Boundaries are the terminator characters and blank lines (a newline
    followed, possibly after spaces, by another newline). Terminators are
    never part of a segment. Segments may be empty or whitespace-only;
    `split_sentences` drops those.
    """
    n = len(normalized)
    seg_start = 0
    i = 0
    while i < n:
        ch = normalized[i]
        if ch in SENTENCE_TERMINATORS:
            yield seg_start, i, ch
            i += 1
            seg_start = i
            continue
        if ch == "\n":
            j = _skip_intraline_space(normalized, i + 1, n)
            if j < n and normalized[j] == "\n":
                # Consume the whole run of blank lines as one boundary.
                last_newline = j
                while True:
                    k = _skip_intraline_space(normalized, last_newline + 1, n)
                    if k < n and normalized[k] == "\n":
                        last_newline = k
                    else:
                        break
                yield seg_start, i, None
                i = last_newline + 1
                seg_start = i
                continue
        i += 1
    if seg_start < n:
        yield seg_start, n, None


def _skip_intraline_space(text: str, i: int, n: int) -> int:
    while i < n and text[i] != "\n" and text[i].isspace():
        i += 1
    return i


def split_sentences(nt: NormalizedText) -> list[Sentence]:
    """Split normalized text into sentences of positioned tokens.

    Whitespace-only segments are dropped; surviving sentences are numbered
    consecutively from zero.
    """
    sentences: list[Sentence] = []
    for start, end, terminator in iter_segments(nt.normalized):
        tokens = tokenize(nt, start, end, sentence_index=len(sentences))
        if not tokens:
            continue
        sentences.append(
            Sentence(index=len(sentences), tokens=tuple(tokens), terminator=terminator)
        )
    return sentences
