"""Access to the data files shipped inside the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .checker import load_parallel_dict
from .keyboard import ConfusionMatrix, load_confusion_matrix
from .lexicon import Lexicon, load_wordlist

WORDLIST_FILE = "wordlist_ta.txt"
CONFUSION_FILE = "tamil99_confusion.tsv"
PARALLEL_FILE = "foreign_parallel.tsv"


def _data(name: str):
    return resources.files("tamilspell.data").joinpath(name)


@lru_cache(maxsize=None)
def bundled_lexicon() -> Lexicon:
    """The small demonstration word list shipped with the package."""
    with _data(WORDLIST_FILE).open("rb") as fh:
        return load_wordlist(fh)


@lru_cache(maxsize=None)
def bundled_confusion_matrix() -> ConfusionMatrix:
    """Key-adjacency confusion matrix for the Tamil-99 layout."""
    with _data(CONFUSION_FILE).open("r", encoding="utf-8") as fh:
        return load_confusion_matrix(fh)


@lru_cache(maxsize=None)
def bundled_parallel_dict() -> dict[str, str]:
    """A starter foreign-to-Tamil substitution dictionary."""
    with _data(PARALLEL_FILE).open("r", encoding="utf-8") as fh:
        return load_parallel_dict(fh)
