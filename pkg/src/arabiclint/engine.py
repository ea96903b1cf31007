"""The per-sentence fault detection algorithm and the document-level engine.

Each sentence goes through the full pipeline: unknown words become
spelling faults and drop out, the remaining words are labelled and
disambiguated against the structure rules, an unmatched sentence with
matchable words left becomes a structure fault, and when the chosen
structure contains a verb every verb is checked against the conjugation
agreement table.

Conjugation agreement resolves, in order:

1. a personal pronoun directly governing the verb, i.e. the nearest
   preceding token once negation particles are stepped over (anything else
   in between breaks the government);
2. otherwise a subject right after the verb, when that token is a proper
   noun or a plural (a particle there means an oblique phrase follows, so
   no subject is visible);
3. otherwise the verb has no explicit subject and the sans-sujet rules
   apply.

The tense context is the negated present exactly when لم or لن immediately
precedes the verb.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .lexicon import AffixInventory, Lexicon, analyze_word, load_affixes, load_lexicon
from .rules import (
    NO_SUBJECT_KEY,
    TENSE_NEGATION,
    TENSE_SIMPLE,
    ANY_AFFIX,
    ConjugationRuleSet,
    load_conjugation_rules,
    load_structure_rules,
)
from .segmentation import NormalizationOptions, Sentence, normalize, split_sentences
from .tagging import DEFAULT_SKIP_CATEGORIES, TaggedToken, disambiguate

# Category names the algorithm is wired to. They are part of the data-file
# contract: the shipped taxonomy provides them and custom lexicons must use
# the same names for these roles.
CATEGORY_VERB = "Verbe"
CATEGORY_PRONOUN = "PronomPersonnel"

# Chosen category of the token right after a verb -> subject feature key.
SUBJECT_FEATURES = {
    "NomPropreFeminin": "feminin-singulier",
    "NomPropreMasculin": "masculin-singulier",
    "NomPluriel": "pluriel",
}

NEGATION_PARTICLES = frozenset({"لم", "لن"})


class FaultKind(str, Enum):
    SPELLING = "spelling"
    STRUCTURE = "structure"
    CONJUGATION = "conjugation"


_KIND_RANK = {FaultKind.SPELLING: 0, FaultKind.STRUCTURE: 1, FaultKind.CONJUGATION: 2}


@dataclass(frozen=True)
class Fault:
    kind: FaultKind
    sentence_index: int
    spans: tuple[tuple[int, int], ...]
    message: str
    rule_id: str | None = None


@dataclass(slots=True)
class SentenceRecord:
    """Per-sentence outcome kept in the report for rendering and evaluation."""

    index: int
    span: tuple[int, int]
    labels: tuple[str, ...]
    skipped: tuple[int, ...]
    matched: bool
    rule_id: str | None


@dataclass
class Report:
    faults: list[Fault] = field(default_factory=list)
    structures: list[SentenceRecord] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "faults": [
                {
                    "kind": f.kind.value,
                    "sentence": f.sentence_index,
                    "spans": [list(span) for span in f.spans],
                    "message": f.message,
                    "rule_id": f.rule_id,
                }
                for f in self.faults
            ],
            "structures": [
                {
                    "sentence": s.index,
                    "span": list(s.span),
                    "labels": list(s.labels),
                    "skipped": list(s.skipped),
                    "matched": s.matched,
                    "rule_id": s.rule_id,
                }
                for s in self.structures
            ],
            "stats": dict(self.stats),
            "warnings": list(self.warnings),
        }


@dataclass
class EngineConfig:
    """Paths to the four data files plus normalization switches."""

    lexicon_path: str | Path
    affixes_path: str | Path
    structure_rules_path: str | Path
    conjugation_rules_path: str | Path
    fold_hamza: bool = True
    keep_diacritics: bool = False

    @property
    def normalization(self) -> NormalizationOptions:
        return NormalizationOptions(
            fold_hamza=self.fold_hamza, keep_diacritics=self.keep_diacritics
        )


def data_path(name: str) -> Path:
    """Path of a bundled data file (lexicon.xml, affixes.txt, ...)."""
    return Path(resources.files("arabiclint").joinpath("data", name))


def default_config() -> EngineConfig:
    return EngineConfig(
        lexicon_path=data_path("lexicon.xml"),
        affixes_path=data_path("affixes.txt"),
        structure_rules_path=data_path("structure_rules.xml"),
        conjugation_rules_path=data_path("conjugation_rules.xml"),
    )


@dataclass(slots=True)
class SentenceResult:
    faults: list[Fault]
    record: SentenceRecord
    warnings: list[str]


class Engine:
    """Immutable analysis engine: lexicon, affixes and both rule sets."""

    def __init__(
        self,
        lexicon: Lexicon,
        affixes: AffixInventory,
        structure_rules,
        conjugation_rules: ConjugationRuleSet,
        options: NormalizationOptions | None = None,
        skip_categories=DEFAULT_SKIP_CATEGORIES,
    ):
        self.lexicon = lexicon
        self.affixes = affixes
        self.structure_rules = list(structure_rules)
        self.conjugation_rules = conjugation_rules
        self.options = options or NormalizationOptions()
        self.skip_categories = frozenset(skip_categories)
        self._analysis_cache: dict[str, list] = {}

    @classmethod
    def from_config(cls, config: EngineConfig) -> "Engine":
        opts = config.normalization
        lexicon = load_lexicon(config.lexicon_path, opts)
        affixes = load_affixes(config.affixes_path, opts)
        structure_rules = load_structure_rules(
            config.structure_rules_path, lexicon.category_names()
        )
        conjugation_rules = load_conjugation_rules(config.conjugation_rules_path, opts)
        return cls(lexicon, affixes, structure_rules, conjugation_rules, opts)

    @classmethod
    def default(cls) -> "Engine":
        return cls.from_config(default_config())

    def analyses(self, surface: str):
        cached = self._analysis_cache.get(surface)
        if cached is None:
            cached = analyze_word(surface, self.lexicon, self.affixes)
            self._analysis_cache[surface] = cached
        return cached

    def analyze_sentence(self, sentence: Sentence) -> SentenceResult:
        faults: list[Fault] = []
        warnings: list[str] = []

        # Equivalent to filtering unknown words and then tag_sentence, but
        # reuses the per-surface analysis cache.
        tagged = []
        for token in sentence.tokens:
            candidates = self.analyses(token.surface)
            if candidates:
                tagged.append(TaggedToken(token=token, candidates=candidates))
            else:
                faults.append(
                    Fault(
                        kind=FaultKind.SPELLING,
                        sentence_index=sentence.index,
                        spans=(token.span,),
                        message=f"unknown word: {token.surface}",
                    )
                )

        structure, outcome = disambiguate(
            tagged, self.structure_rules, self.skip_categories
        )

        sentence_span = sentence.span
        if not outcome.matched and structure.labels:
            faults.append(
                Fault(
                    kind=FaultKind.STRUCTURE,
                    sentence_index=sentence.index,
                    spans=(sentence_span,),
                    message="sentence structure matches no rule",
                )
            )

        if CATEGORY_VERB in structure.labels:
            conj_faults, conj_warnings = check_conjugation(
                sentence, tagged, self.conjugation_rules
            )
            faults.extend(conj_faults)
            warnings.extend(conj_warnings)

        record = SentenceRecord(
            index=sentence.index,
            span=sentence_span,
            labels=structure.labels,
            skipped=structure.skipped,
            matched=outcome.matched,
            rule_id=outcome.rule_id,
        )
        return SentenceResult(faults=faults, record=record, warnings=warnings)

    def analyze_text(self, text: str, parallel: bool = False) -> Report:
        """Run the full pipeline over a document.

        Sentences are independent, so they may be analyzed in parallel;
        the report is assembled in document order either way and is
        byte-for-byte deterministic.
        """
        nt = normalize(text, self.options)
        sentences = split_sentences(nt)
        if parallel and len(sentences) > 1:
            with ThreadPoolExecutor() as executor:
                results = list(executor.map(self.analyze_sentence, sentences))
        else:
            results = [self.analyze_sentence(s) for s in sentences]

        faults = sorted(
            (f for r in results for f in r.faults),
            key=lambda f: (f.sentence_index, f.spans[0][0], _KIND_RANK[f.kind]),
        )
        stats = Counter(f.kind.value for f in faults)
        return Report(
            faults=faults,
            structures=[r.record for r in results],
            stats={kind.value: stats.get(kind.value, 0) for kind in FaultKind},
            warnings=[w for r in results for w in r.warnings],
        )


def check_conjugation(
    sentence: Sentence,
    tagged,
    rules: ConjugationRuleSet,
    negation_particles=NEGATION_PARTICLES,
) -> tuple[list[Fault], list[str]]:
    """Check every verb of a disambiguated sentence against the agreement table.

    Must only be called when the chosen structure contains a verb. Returns
    the conjugation faults plus configuration warnings for any resolved
    (key, tense) pair the rule set does not cover.
    """
    chosen = {t.token.ordinal: t.analysis for t in tagged if t.analysis is not None}
    verbs = [
        t for t in tagged if t.analysis and t.analysis.category.name == CATEGORY_VERB
    ]
    if not verbs:
        raise ValueError("conjugation check on a sentence with no chosen verb")

    faults: list[Fault] = []
    warnings: list[str] = []
    tokens = sentence.tokens
    for verb in verbs:
        ordinal = verb.token.ordinal
        previous = tokens[ordinal - 1].surface if ordinal > 0 else None
        tense = TENSE_NEGATION if previous in negation_particles else TENSE_SIMPLE

        key = None
        i = ordinal - 1
        while i >= 0 and tokens[i].surface in negation_particles:
            i -= 1
        if i >= 0:
            analysis = chosen.get(i)
            if analysis is not None and analysis.category.name == CATEGORY_PRONOUN:
                key = analysis.base
        if key is None and ordinal + 1 < len(tokens):
            analysis = chosen.get(ordinal + 1)
            if analysis is not None:
                key = SUBJECT_FEATURES.get(analysis.category.name)
        if key is None:
            key = NO_SUBJECT_KEY

        rule = rules.lookup(key, tense)
        if rule is None:
            warnings.append(
                f"no conjugation rule for ({key}, {tense}); "
                f"verb {verb.token.surface} not checked"
            )
            continue

        analysis = verb.analysis
        prebase_ok = rule.prebase == ANY_AFFIX or analysis.prefix == rule.prebase
        postbase_ok = rule.postbase == ANY_AFFIX or analysis.suffix == rule.postbase
        if prebase_ok and postbase_ok:
            continue
        wanted = []
        if not prebase_ok:
            wanted.append(f"prebase {rule.prebase or '(none)'}")
        if not postbase_ok:
            wanted.append(f"postbase {rule.postbase or '(none)'}")
        faults.append(
            Fault(
                kind=FaultKind.CONJUGATION,
                sentence_index=sentence.index,
                spans=(verb.token.span,),
                message=(
                    f"verb {verb.token.surface} does not agree with {key} "
                    f"({tense}): expected {', '.join(wanted)}"
                ),
                rule_id=rule.id,
            )
        )
    return faults, warnings
