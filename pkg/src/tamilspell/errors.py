"""Exception types raised by the data-file loaders."""


class TamilSpellError(Exception):
    """Base class for loader and configuration errors."""


class WordListError(TamilSpellError):
    """A word list file could not be read or decoded."""


class MatrixFormatError(TamilSpellError):
    """A confusion matrix file is malformed."""


class SeriesTableError(TamilSpellError):
    """A confusable-series file is malformed."""
