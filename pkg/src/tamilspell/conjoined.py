"""Recognition of two words written as one.

Two split families are generated.  A plain split cuts between letters:
தென்றல்காற்று -> தென்றல் + காற்று.  An uyirmei split cuts inside a letter,
because joining word-final mei with word-initial uyir is exactly how such
compounds fuse: கணவன் -> கண் + அவன் (the ண becomes ண் + அ).  A word the
lexicon already knows both halves of is reported as a recognized pair
rather than a misspelling.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum

from .letters import LetterKind, join_mei_uyir, split_mei_uyir, tokenize

__all__ = [
    "SplitKind",
    "SplitPair",
    "generate_ottru_splits",
    "generate_plain_splits",
    "recognize",
]


class SplitKind(Enum):
    PLAIN = "plain"
    OTTRU = "ottru"


@dataclass(frozen=True, slots=True)
class SplitPair:
    """One candidate decomposition of a word into two halves."""

    left: str
    right: str
    kind: SplitKind

    def reconstruct(self) -> str:
        """Re-fuse the halves back into the original word."""
        if self.kind is SplitKind.PLAIN:
            return self.left + self.right
        mei = tokenize(self.left)[-1]
        uyir = tokenize(self.right)[0]
        joined = join_mei_uyir(mei, uyir).text
        return self.left[: -len(mei.text)] + joined + self.right[len(uyir.text) :]


def generate_ottru_splits(word: str) -> list[SplitPair]:
    """Every split through an uyirmei letter, left to right.

    At each uyirmei position the letter decomposes into mei + uyir; the
    mei closes the left half and the uyir opens the right half:
    யாரிகுழந்து -> (ய், ஆரிகுழந்து), (யார், இகுழந்து), ...  A word with
    no uyirmei letter yields an empty list.
    """
    word = unicodedata.normalize("NFC", word)
    letters = tokenize(word)
    texts = [lt.text for lt in letters]
    pairs: list[SplitPair] = []
    for idx, letter in enumerate(letters):
        if letter.kind is not LetterKind.UYIRMEI:
            continue
        mei, uyir = split_mei_uyir(letter)
        left = "".join(texts[:idx]) + mei.text
        right = uyir.text + "".join(texts[idx + 1 :])
        pairs.append(SplitPair(left, right, SplitKind.OTTRU))
    return pairs


def generate_plain_splits(word: str) -> list[SplitPair]:
    """Every between-letter split; a word under two letters yields none."""
    word = unicodedata.normalize("NFC", word)
    texts = [lt.text for lt in tokenize(word)]
    return [
        SplitPair("".join(texts[:i]), "".join(texts[i:]), SplitKind.PLAIN)
        for i in range(1, len(texts))
    ]


def recognize(word: str, lexicon) -> list[SplitPair]:
    """Splits whose halves are both lexicon words; plain splits first.

    Duplicate (left, right) pairs keep their first occurrence.
    """
    found: list[SplitPair] = []
    seen: set[tuple[str, str]] = set()
    for pair in generate_plain_splits(word) + generate_ottru_splits(word):
        key = (pair.left, pair.right)
        if key in seen:
            continue
        seen.add(key)
        if lexicon.is_word(pair.left) and lexicon.is_word(pair.right):
            found.append(pair)
    return found
