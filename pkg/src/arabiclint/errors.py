"""Exception types raised by loaders and the analysis pipeline."""


class ArabicLintError(Exception):
    """Base class for all errors raised by this package."""


class LexiconLoadError(ArabicLintError):
    """The word database could not be loaded or is malformed."""


class AffixLoadError(ArabicLintError):
    """The affix inventory file could not be loaded or is malformed."""


class RuleLoadError(ArabicLintError):
    """A structure or conjugation rule file could not be loaded."""


class CorpusError(ArabicLintError):
    """An annotated corpus file could not be parsed."""


class TaggingContractError(ArabicLintError):
    """A word reached the labelling phase without any lexicon analysis.

    Unknown words must be filtered out (and reported as spelling faults)
    before labelling; hitting this error means the pipeline ordering is
    broken, not that the input is bad.
    """
