"""Trie-backed lexicon keyed by Tamil letters.

Nodes branch on whole letters rather than code points, so membership and
prefix walks line up with the letter-level edit operations.  The structure
is immutable after loading; concurrent readers need no locking.
"""

from __future__ import annotations

import unicodedata
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Protocol

from .errors import WordListError
from .letters import letter_texts

__all__ = ["Lexicon", "WordStore", "load_wordlist"]


class WordStore(Protocol):
    """Membership interface the checker needs; swap in other backends here."""

    def is_word(self, word: str) -> bool: ...

    def prefix_exists(self, prefix) -> bool: ...

    def contains_letters(self, letters: Sequence[str]) -> bool: ...


class _Node:
    __slots__ = ("children", "is_word")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.is_word = False


class Lexicon:
    """A set of words with letter-wise prefix queries."""

    def __init__(self, words: Iterable[str] = ()):
        self._root = _Node()
        self._count = 0
        for word in words:
            self.add_word(word)

    @property
    def word_count(self) -> int:
        return self._count

    def __len__(self) -> int:
        return self._count

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and self.is_word(word)

    def add_word(self, word: str) -> bool:
        """Insert one word; returns False when it was already present."""
        letters = letter_texts(unicodedata.normalize("NFC", word))
        if not letters:
            return False
        node = self._root
        for letter in letters:
            node = node.children.setdefault(letter, _Node())
        if node.is_word:
            return False
        node.is_word = True
        self._count += 1
        return True

    def _walk(self, letters: Sequence[str]) -> _Node | None:
        node = self._root
        for letter in letters:
            node = node.children.get(letter)
            if node is None:
                return None
        return node

    def contains_letters(self, letters: Sequence[str]) -> bool:
        """Membership check for an already-tokenized letter sequence."""
        if not letters:
            return False
        node = self._walk(letters)
        return node is not None and node.is_word

    def words(self) -> Iterable[str]:
        """Yield every loaded word (trie order, not sorted)."""
        stack: list[tuple[str, _Node]] = [("", self._root)]
        while stack:
            prefix, node = stack.pop()
            if node.is_word:
                yield prefix
            for letter, child in node.children.items():
                stack.append((prefix + letter, child))

    def is_word(self, word: str) -> bool:
        """True when ``word`` (a string) was loaded into the lexicon."""
        return self.contains_letters(letter_texts(unicodedata.normalize("NFC", word)))

    def prefix_exists(self, prefix) -> bool:
        """True when at least one loaded word starts with ``prefix``.

        Accepts a string or a letter sequence.  The empty prefix exists
        exactly when the lexicon is non-empty.
        """
        if isinstance(prefix, str):
            letters = letter_texts(unicodedata.normalize("NFC", prefix))
        else:
            letters = letter_texts(prefix)
        if not letters:
            return self._count > 0
        return self._walk(letters) is not None


def load_wordlist(source, into: Lexicon | None = None) -> Lexicon:
    """Build a :class:`Lexicon` from a UTF-8 word list.

    One word per line; blank lines and lines starting with ``#`` are
    skipped, duplicates are ignored.  ``source`` may be a path or an open
    text/binary stream.  Undecodable bytes raise :class:`WordListError`
    with the offending line number.  Passing ``into`` merges the words
    into an existing lexicon instead of building a fresh one.
    """
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            return _load_lines(fh, name=str(source), into=into)
    return _load_lines(source, name=getattr(source, "name", "<stream>"), into=into)


def _load_lines(stream, name: str, into: Lexicon | None) -> Lexicon:
    lexicon = into if into is not None else Lexicon()
    for lineno, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise WordListError(f"{name}:{lineno}: undecodable bytes: {exc}") from exc
        else:
            line = raw
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        lexicon.add_word(word)
    return lexicon
