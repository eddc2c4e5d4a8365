"""Keyboard-typo correction via a pruned substitution search.

A confusion matrix maps each letter to the letters a typist is likely to
hit instead (physically adjacent keys, usually).  Candidate generation
walks a substitution lattice: up to ``ed`` positions of the input are
replaced, each only by neighbours of the letter originally at that
position.  Compared with a full-alphabet lattice this prunes the search
by orders of magnitude while keeping exactly the plausible-typo words.

Uyirmei letters resolve through their mei: the matrix holds adjacency for
ள், and பளம் gets பழம் by joining the neighbour ழ் with the original ள's
uyir.  A full uyirmei key in the matrix overrides that resolution.
"""

from __future__ import annotations

import unicodedata
from collections.abc import Mapping, Sequence
from pathlib import Path

from . import _kernels
from .errors import MatrixFormatError
from .letters import Letter, LetterKind, join_mei_uyir, split_mei_uyir, tokenize
from .suggestion import Strategy, Suggestion

__all__ = [
    "ConfusionMatrix",
    "corrections",
    "generate_patterns",
    "load_confusion_matrix",
]


class ConfusionMatrix:
    """Letter -> likely-mistyped-neighbour lists."""

    def __init__(self, neighbors: Mapping[str, Sequence[str]]):
        table: dict[str, tuple[str, ...]] = {}
        for key, alts in neighbors.items():
            key = unicodedata.normalize("NFC", key)
            cleaned = []
            for alt in alts:
                alt = unicodedata.normalize("NFC", alt)
                if alt == key:
                    raise MatrixFormatError(f"{key!r} lists itself as a neighbour")
                if alt not in cleaned:
                    cleaned.append(alt)
            table[key] = tuple(cleaned)
        self._table = table

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key: object) -> bool:
        return key in self._table

    def alternates_for(self, letter: Letter | str) -> tuple[str, ...]:
        """Substitute letters for ``letter``; empty when unmapped.

        Direct table entries win.  An unmapped uyirmei falls back to its
        mei's entry, each mei neighbour re-joined with the original uyir
        (non-mei neighbours cannot carry an uyir and are skipped).
        """
        if isinstance(letter, Letter):
            text, kind = letter.text, letter.kind
        else:
            text = unicodedata.normalize("NFC", letter)
            tokens = tokenize(text)
            if len(tokens) != 1:
                raise ValueError(f"not a single letter: {letter!r}")
            text, kind = tokens[0].text, tokens[0].kind
        direct = self._table.get(text)
        if direct is not None:
            return direct
        if kind is LetterKind.UYIRMEI:
            mei, uyir = split_mei_uyir(Letter(text, kind))
            joined = []
            for alt in self._table.get(mei.text, ()):
                alt_tokens = tokenize(alt)
                if len(alt_tokens) == 1 and alt_tokens[0].kind is LetterKind.MEI:
                    joined.append(join_mei_uyir(alt_tokens[0], uyir).text)
            return tuple(joined)
        return ()


def load_confusion_matrix(source) -> ConfusionMatrix:
    """Parse a matrix file: ``letter<TAB>alt1 alt2 ...`` per line.

    Blank lines and ``#`` comments are skipped.  A missing tab, an entry
    that is not a single letter, or a letter listing itself raise
    :class:`MatrixFormatError` with the line number.  Repeated keys extend
    the earlier neighbour list.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.readlines()
        name = str(source)
    else:
        lines = list(source)
        name = getattr(source, "name", "<stream>")
    table: dict[str, list[str]] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise MatrixFormatError(f"{name}:{lineno}: expected 'letter<TAB>neighbours'")
        key_field, alt_field = line.split("\t", 1)
        key = _single_token(key_field.strip(), name, lineno)
        alts = table.setdefault(key, [])
        for field in alt_field.split():
            alt = _single_token(field, name, lineno)
            if alt == key:
                raise MatrixFormatError(f"{name}:{lineno}: {key!r} lists itself as a neighbour")
            if alt not in alts:
                alts.append(alt)
    return ConfusionMatrix(table)


def _single_token(field: str, name: str, lineno: int) -> str:
    field = unicodedata.normalize("NFC", field)
    tokens = tokenize(field)
    if len(tokens) != 1 or tokens[0].kind is LetterKind.MALFORMED:
        raise MatrixFormatError(f"{name}:{lineno}: not a single letter: {field!r}")
    return tokens[0].text


def generate_patterns(word: str, matrix: ConfusionMatrix, ed: int = 1) -> list[str]:
    """Substitution candidates with at most ``ed`` positions changed.

    Each changed position takes a neighbour of the letter originally
    there; the input itself is never emitted and duplicates are dropped.
    ``ed`` must satisfy 1 <= ed <= letter count.
    """
    word = unicodedata.normalize("NFC", word)
    letters = tokenize(word)
    n = len(letters)
    if not 1 <= ed <= n:
        raise ValueError(f"ed must be between 1 and the word's {n} letters, got {ed}")
    codec = _kernels.LetterCodec(lt.text for lt in letters)
    per_position = []
    for lt in letters:
        alts = [a for a in matrix.alternates_for(lt) if a != lt.text]
        per_position.append(codec.pack(alts))
    seen: set = set()
    out: list = []
    _kernels.generate_substitutions(
        codec.pack(lt.text for lt in letters), tuple(per_position), ed, None, seen, out
    )
    return [codec.text(b) for b in out]


def corrections(
    word: str,
    lexicon,
    matrix: ConfusionMatrix,
    ed: int = 2,
    ranker=None,
) -> list[Suggestion]:
    """Lattice candidates the lexicon recognizes.

    ``ed`` is clamped to the word's letter count.  Scored by the number of
    substituted positions, ranked (score, code-point order); ``ranker``
    may replace the final ordering.
    """
    if ed < 1:
        raise ValueError("ed must be >= 1")
    word = unicodedata.normalize("NFC", word)
    original = tuple(lt.text for lt in tokenize(word))
    if not original:
        return []
    found: list[Suggestion] = []
    for candidate in generate_patterns(word, matrix, min(ed, len(original))):
        cand_letters = tuple(lt.text for lt in tokenize(candidate))
        if lexicon.contains_letters(cand_letters):
            changed = sum(1 for a, b in zip(original, cand_letters) if a != b)
            found.append(Suggestion(candidate, Strategy.KEYBOARD, changed))
    found.sort(key=lambda s: (s.score, s.candidate))
    if ranker is not None:
        return list(ranker(word, found))
    return found
