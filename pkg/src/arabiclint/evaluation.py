"""Detection-precision evaluation against annotated corpora.

A corpus is a JSONL file, one object per line:

    {"text": "...", "gold": [{"kind": "conjugation", "ordinal": 2}], "note": "..."}

`gold` lists the true faults of the sentence, keyed by token ordinal
(structure faults use ordinal 0, the whole-sentence convention). With D+
the set of gold fault keys and R the set of faults the engine reports over
the same tokenization, detection precision is |D+ ∩ R| / |R|, computed in
exact rational arithmetic and undefined (rendered "n/a") when the engine
reports nothing. Recall |D+ ∩ R| / |D+| is computed as well, as an
extension beyond the precision-only original metric.

Entries whose `note` contains "excluded-from-strict" still count toward
the precision sets, but their verdict mismatches do not fail strict mode.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import Engine, FaultKind
from .errors import CorpusError
from .segmentation import normalize, split_sentences

EXCLUSION_FLAG = "excluded-from-strict"

_KINDS = tuple(kind.value for kind in FaultKind)


@dataclass(frozen=True)
class GoldAnnotation:
    """One corpus sentence with its true faults as (kind, token ordinal)."""

    text: str
    gold: tuple[tuple[str, int], ...] = ()
    note: str | None = None

    @property
    def excluded_from_strict(self) -> bool:
        return bool(self.note) and EXCLUSION_FLAG in self.note


@dataclass
class EvalSets:
    """Gold fault keys (D+) and engine detections (R), identically keyed."""

    d_plus: set = field(default_factory=set)
    detected: set = field(default_factory=set)


@dataclass(frozen=True)
class PrecisionResult:
    detected: int  # |R|
    hits: int  # |D+ ∩ R|
    gold: int = 0  # |D+|, for the recall extension

    @property
    def precision(self) -> Fraction | None:
        if self.detected == 0:
            return None
        return Fraction(self.hits, self.detected)

    @property
    def recall(self) -> Fraction | None:
        if self.gold == 0:
            return None
        return Fraction(self.hits, self.gold)

    @staticmethod
    def render(ratio: Fraction | None) -> str:
        if ratio is None:
            return "n/a"
        return f"{float(ratio):.2f}"


@dataclass(frozen=True)
class VerdictDiff:
    """One per-entry, per-kind disagreement between gold and the engine."""

    entry: int
    kind: str
    expected: bool
    actual: bool
    excluded: bool
    text: str


@dataclass
class CorpusResult:
    results: dict[str, PrecisionResult]
    diffs: list[VerdictDiff]

    @property
    def strict_failures(self) -> list[VerdictDiff]:
        return [d for d in self.diffs if not d.excluded]


def detection_precision(sets: EvalSets) -> PrecisionResult:
    hits = len(sets.d_plus & sets.detected)
    return PrecisionResult(detected=len(sets.detected), hits=hits, gold=len(sets.d_plus))


def load_corpus(source) -> list[GoldAnnotation]:
    """Parse a JSONL corpus; errors name the offending line."""
    looks_like_content = isinstance(source, str) and (
        source.lstrip().startswith("{") or "\n" in source or not source.strip()
    )
    if isinstance(source, (str, os.PathLike)) and not looks_like_content:
        try:
            with open(source, encoding="utf-8") as handle:
                content = handle.read()
        except OSError as exc:
            raise CorpusError(f"cannot read {source!r}: {exc}") from exc
    elif hasattr(source, "read"):
        content = source.read()
    else:
        content = source

    entries: list[GoldAnnotation] = []
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"line {lineno}: invalid JSON: {exc.msg}") from exc
        if not isinstance(obj, dict) or "text" not in obj:
            raise CorpusError(f"line {lineno}: expected an object with a 'text' field")
        gold = []
        for item in obj.get("gold", []):
            kind = item.get("kind")
            ordinal = item.get("ordinal")
            if kind not in _KINDS or not isinstance(ordinal, int):
                raise CorpusError(f"line {lineno}: bad gold item {item!r}")
            gold.append((kind, ordinal))
        entries.append(
            GoldAnnotation(text=obj["text"], gold=tuple(gold), note=obj.get("note"))
        )
    if not entries:
        raise CorpusError("empty corpus")
    return entries


def run_corpus(corpus, engine: Engine) -> CorpusResult:
    """Evaluate the engine over a corpus: per-kind precision plus verdict diffs.

    Detections and gold faults are keyed (entry, kind, token ordinal), with
    token ordinals counted across the whole entry (corpus entries are single
    sentences by convention) and structure faults keyed to the first token
    of their sentence.
    """
    sets = {kind: EvalSets() for kind in _KINDS}
    diffs: list[VerdictDiff] = []

    for entry_index, entry in enumerate(corpus):
        nt = normalize(entry.text, engine.options)
        sentences = split_sentences(nt)
        report = engine.analyze_text(entry.text)

        span_to_ordinal: dict[tuple[int, int], int] = {}
        sentence_first_ordinal: dict[int, int] = {}
        counter = 0
        for sentence in sentences:
            sentence_first_ordinal[sentence.index] = counter
            for token in sentence.tokens:
                span_to_ordinal[token.span] = counter
                counter += 1

        detected = set()
        for fault in report.faults:
            if fault.kind is FaultKind.STRUCTURE:
                ordinal = sentence_first_ordinal.get(fault.sentence_index, 0)
            else:
                ordinal = span_to_ordinal[fault.spans[0]]
            detected.add((entry_index, fault.kind.value, ordinal))

        gold = {(entry_index, kind, ordinal) for kind, ordinal in entry.gold}
        for kind in _KINDS:
            sets[kind].d_plus |= {k for k in gold if k[1] == kind}
            sets[kind].detected |= {k for k in detected if k[1] == kind}
            expected = any(k[1] == kind for k in gold)
            actual = any(k[1] == kind for k in detected)
            if expected != actual:
                diffs.append(
                    VerdictDiff(
                        entry=entry_index,
                        kind=kind,
                        expected=expected,
                        actual=actual,
                        excluded=entry.excluded_from_strict,
                        text=entry.text,
                    )
                )

    results = {kind: detection_precision(sets[kind]) for kind in _KINDS}
    return CorpusResult(results=results, diffs=diffs)
