"""Independent oracles and small builders shared across test modules.

The oracles deliberately reimplement contracts by brute force (exhaustive
enumeration, naive scanning, naive set arithmetic) so they stay independent
of the code paths they check.
"""

import itertools

from arabiclint import Category, LexicalEntry, MorphAnalysis, TaggedToken, Token
from arabiclint.segmentation import ARABIC_MARKS, SENTENCE_TERMINATORS


def oracle_splits(word, lexicon, affixes):
    """Every (prefix, base, suffix, category) split, by trying all cut points."""
    splits = set()
    prefixes = affixes.all_prefixes()
    suffixes = affixes.all_suffixes()
    for i in range(len(word) + 1):
        for j in range(i + 1, len(word) + 1):  # base word[i:j] non-empty
            prefix, base, suffix = word[:i], word[i:j], word[j:]
            if prefix in prefixes and suffix in suffixes:
                for entry in lexicon.lookup_base(base):
                    splits.add((prefix, base, suffix, entry.category.name))
    return splits


def oracle_sentence_count(normalized):
    """Count sentences by naive splitting on terminators and blank lines."""
    marked = "".join("\x00" if ch in SENTENCE_TERMINATORS else ch for ch in normalized)
    # Collapse blank-line runs into a boundary marker.
    lines = marked.split("\n")
    pieces = []
    current = []
    for line in lines:
        if line.strip("\x00").strip() == "" and line.strip() == "":
            pieces.append(" ".join(current))
            current = []
        else:
            current.append(line)
    pieces.append(" ".join(current))
    segments = []
    for piece in pieces:
        segments.extend(piece.split("\x00"))
    def has_word(segment):
        return any(ch.isalnum() or ch in ARABIC_MARKS for ch in segment)
    return sum(1 for segment in segments if has_word(segment))


def oracle_any_assignment_matches(tagged, rules, skip_categories=("Particule",)):
    """Exhaustively try every candidate assignment against every rule."""
    active = [
        t
        for t in tagged
        if not all(c.category.name in skip_categories for c in t.candidates)
    ]
    for assignment in itertools.product(*(t.candidates for t in active)):
        labels = tuple(a.category.name for a in assignment)
        if not labels:
            return True
        for rule in rules:
            if rule.exact:
                if labels == rule.pattern:
                    return True
            elif labels[: len(rule.pattern)] == rule.pattern:
                return True
    return False


def oracle_precision(d_plus, detected):
    """Naive set-intersection precision; None when nothing was detected."""
    if not detected:
        return None
    return len(set(d_plus) & set(detected)) / len(detected)


def make_token(ordinal, surface=None, sentence_index=0):
    surface = surface or f"w{ordinal}"
    start = ordinal * 10
    return Token(
        surface=surface,
        span=(start, start + len(surface)),
        sentence_index=sentence_index,
        ordinal=ordinal,
    )


def synthetic_tagged(ordinal, category_names):
    """A TaggedToken with one single-split candidate per category name."""
    token = make_token(ordinal)
    candidates = []
    for order, name in enumerate(category_names):
        category = Category(name=name)
        entry = LexicalEntry(base=token.surface, category=category, order=order)
        candidates.append(
            MorphAnalysis(
                prefix="", base=token.surface, suffix="", category=category, entry=entry
            )
        )
    return TaggedToken(token=token, candidates=candidates)
