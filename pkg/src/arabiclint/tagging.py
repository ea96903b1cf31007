"""Labelling and disambiguation.

Labelling attaches every lexicon analysis a word admits; disambiguation
then searches the cross product of those candidate labels for the first
assignment whose label sequence satisfies a structure rule. Tokens whose
candidates are all function-word categories (particles and prepositions)
are set aside before matching, since rules describe the content-word
skeleton of a sentence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TaggingContractError
from .lexicon import AffixInventory, Lexicon, MorphAnalysis, analyze_word
from .rules import MatchOutcome, match_structure
from .segmentation import Token

# Tokens whose every candidate falls in these categories are excluded from
# structure matching. Conjunctions and demonstratives stay in the sequence:
# a sentence opening with a dangling conjunction should not satisfy a rule
# that expects a verb or a noun first.
DEFAULT_SKIP_CATEGORIES = frozenset({"Particule"})


@dataclass(slots=True)
class TaggedToken:
    token: Token
    candidates: list[MorphAnalysis]
    chosen: int | None = None

    @property
    def analysis(self) -> MorphAnalysis | None:
        if self.chosen is None:
            return None
        return self.candidates[self.chosen]


@dataclass(slots=True)
class SentenceStructure:
    """Chosen label sequence of the matchable tokens of one sentence.

    `skipped` holds the ordinals of function-word tokens excluded from
    matching; `labels` has one entry per remaining (known) token.
    """

    labels: tuple[str, ...]
    skipped: tuple[int, ...] = ()


def tag_sentence(
    tokens, lexicon: Lexicon, affixes: AffixInventory
) -> list[TaggedToken]:
    """Attach all candidate analyses to each token; chosen stays unset.

    Every token must already have passed the spelling check: a word with
    no analysis here is a pipeline ordering bug, not an input error.
    """
    tagged = []
    for token in tokens:
        candidates = analyze_word(token.surface, lexicon, affixes)
        if not candidates:
            raise TaggingContractError(
                f"word {token.surface!r} reached labelling with no analysis"
            )
        tagged.append(TaggedToken(token=token, candidates=candidates))
    return tagged


def disambiguate(
    tagged,
    rules,
    skip_categories=DEFAULT_SKIP_CATEGORIES,
) -> tuple[SentenceStructure, MatchOutcome]:
    """Choose one analysis per token so the label sequence satisfies a rule.

    Candidate assignments are tried lazily in lexicographic order over
    candidate indices (leftmost token varying slowest) and the first
    assignment whose labels match some rule wins. When nothing matches,
    every token keeps its first candidate and the outcome is unmatched.
    Either way every TaggedToken comes back with `chosen` set.
    """
    active = []
    skipped_ordinals = []
    unambiguous = True
    for t in tagged:
        candidates = t.candidates
        if all(c.category.name in skip_categories for c in candidates):
            t.chosen = 0
            skipped_ordinals.append(t.token.ordinal)
        else:
            active.append(t)
            if len(candidates) > 1:
                unambiguous = False
    skipped = tuple(skipped_ordinals)

    if unambiguous:
        # The common case: one candidate per token, one assignment to try.
        for t in active:
            t.chosen = 0
        labels = tuple(t.candidates[0].category.name for t in active)
        return SentenceStructure(labels=labels, skipped=skipped), match_structure(
            labels, rules
        )

    for assignment in itertools.product(*(range(len(t.candidates)) for t in active)):
        labels = tuple(
            t.candidates[j].category.name for t, j in zip(active, assignment)
        )
        outcome = match_structure(labels, rules)
        if outcome.matched:
            for t, j in zip(active, assignment):
                t.chosen = j
            return SentenceStructure(labels=labels, skipped=skipped), outcome

    for t in active:
        t.chosen = 0
    labels = tuple(t.candidates[0].category.name for t in active)
    return SentenceStructure(labels=labels, skipped=skipped), MatchOutcome.unmatched()
