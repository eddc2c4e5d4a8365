"""Edit-distance candidate generation over Tamil letter sequences.

All operations work on whole letters, never raw code points: deleting the
second letter of கடல் gives கல், and replacements draw from a letter
alphabet (247 standard, 323 with grantha).  ``edits1`` enumerates the
single-edit neighbourhood, ``edits_n`` expands it level by level, and
``suggest`` keeps the candidates a lexicon recognizes.

Candidate volume is the cost driver (a four-letter word has ~2200
single-edit neighbours over the standard alphabet), so generation runs in
the packed-id kernels and ``limit`` puts a hard cap on the total number of
candidates produced.
"""

from __future__ import annotations

import unicodedata
from collections.abc import Sequence

from . import _kernels
from .letters import Alphabet, alphabet as default_alphabet, letter_texts
from .suggestion import Strategy, Suggestion

__all__ = [
    "edit_operations",
    "edits1",
    "edits_n",
    "letter_edit_distance",
    "suggest",
]


def _coerce_word(word) -> tuple[str, ...]:
    if isinstance(word, str):
        word = unicodedata.normalize("NFC", word)
    letters = letter_texts(word)
    if not letters:
        raise ValueError("cannot generate edits for an empty word")
    return letters


def _coerce_alphabet(alphabet) -> tuple[str, ...]:
    if alphabet is None:
        return default_alphabet().letters
    if isinstance(alphabet, Alphabet):
        return alphabet.letters
    return letter_texts(alphabet)


def edit_operations(word, alphabet=None) -> dict[str, list[str]]:
    """Raw candidate lists per operation, before any deduplication.

    Returns the four lists keyed ``deletes``, ``transposes``, ``replaces``
    and ``inserts``.  For a word of n letters over an alphabet of A
    letters the sizes are exactly n, max(n-1, 0), n*A and (n+1)*A.
    """
    letters = _coerce_word(word)
    alpha = _coerce_alphabet(alphabet)
    splits = [(letters[:i], letters[i:]) for i in range(len(letters) + 1)]
    deletes = [a + b[1:] for a, b in splits if b]
    transposes = [a + (b[1], b[0]) + b[2:] for a, b in splits if len(b) > 1]
    replaces = [a + (c,) + b[1:] for a, b in splits if b for c in alpha]
    inserts = [a + (c,) + b for a, b in splits for c in alpha]
    return {
        "deletes": ["".join(w) for w in deletes],
        "transposes": ["".join(w) for w in transposes],
        "replaces": ["".join(w) for w in replaces],
        "inserts": ["".join(w) for w in inserts],
    }


def edits1(word, alphabet=None, limit: int | None = None) -> list[str]:
    """Every word one letter-edit away, deduplicated, in generation order.

    Order is deletes, transposes, replaces, inserts (positions left to
    right); with ``limit`` set, generation stops exactly at ``limit``
    candidates, so capped results are deterministic prefixes.
    """
    letters = _coerce_word(word)
    alpha = _coerce_alphabet(alphabet)
    codec = _kernels.LetterCodec(letters)
    packed_alpha = codec.pack(alpha)
    seen: set = set()
    out: list = []
    _kernels.generate_edits1(codec.pack(letters), packed_alpha, limit, seen, out)
    return [codec.text(b) for b in out]


def _leveled_candidates(
    letters: tuple[str, ...],
    alpha: tuple[str, ...],
    nedits: int,
    limit: int | None,
) -> tuple[_kernels.LetterCodec, list[bytes], list[int]]:
    """Expand level by level; returns (codec, packed candidates, levels)."""
    codec = _kernels.LetterCodec(letters)
    packed_alpha = codec.pack(alpha)
    seen: set = set()
    out: list = []
    levels: list[int] = []
    _kernels.generate_edits1(codec.pack(letters), packed_alpha, limit, seen, out)
    levels.extend([1] * len(out))
    frontier = (0, len(out))
    for level in range(2, nedits + 1):
        start, end = frontier
        for idx in range(start, end):
            source = out[idx]
            if not source:
                continue  # the empty word has no defined edit neighbourhood
            _kernels.generate_edits1(source, packed_alpha, limit, seen, out)
        levels.extend([level] * (len(out) - end))
        if len(out) == end:
            break
        frontier = (end, len(out))
    return codec, out, levels


def edits_n(word, alphabet=None, nedits: int = 1, limit: int | None = None) -> list[str]:
    """Candidates within ``nedits`` letter edits, in first-seen order."""
    if nedits < 1:
        raise ValueError("nedits must be >= 1")
    letters = _coerce_word(word)
    alpha = _coerce_alphabet(alphabet)
    codec, out, _ = _leveled_candidates(letters, alpha, nedits, limit)
    return [codec.text(b) for b in out]


def suggest(word, lexicon, alphabet=None, nedits: int = 2, limit: int | None = None) -> list[Suggestion]:
    """Edit candidates found in ``lexicon``, never including ``word`` itself.

    Ranked by edit level ascending, then code-point order.  ``lexicon``
    needs ``contains_letters`` (a :class:`tamilspell.lexicon.Lexicon`).
    """
    if nedits < 1:
        raise ValueError("nedits must be >= 1")
    letters = _coerce_word(word)
    alpha = _coerce_alphabet(alphabet)
    codec, out, levels = _leveled_candidates(letters, alpha, nedits, limit)
    source = codec.pack(letters)
    found: list[Suggestion] = []
    for packed, level in zip(out, levels):
        if packed == source:
            continue
        cand_letters = codec.unpack(packed)
        if lexicon.contains_letters(cand_letters):
            found.append(Suggestion("".join(cand_letters), Strategy.EDIT, level))
    found.sort(key=lambda s: (s.score, s.candidate))
    return found


def letter_edit_distance(a, b) -> int:
    """Unrestricted Damerau-Levenshtein distance between letter sequences.

    Insert, delete, replace and transpose all cost one, counted on whole
    letters; accepts strings or pre-tokenized sequences.
    """
    sa = letter_texts(unicodedata.normalize("NFC", a)) if isinstance(a, str) else letter_texts(a)
    sb = letter_texts(unicodedata.normalize("NFC", b)) if isinstance(b, str) else letter_texts(b)
    la, lb = len(sa), len(sb)
    if not la:
        return lb
    if not lb:
        return la
    maxdist = la + lb
    # Lowrance-Wagner matrix with a -1 guard row/column (offset by one).
    d = [[0] * (lb + 2) for _ in range(la + 2)]
    d[0][0] = maxdist
    for i in range(la + 1):
        d[i + 1][0] = maxdist
        d[i + 1][1] = i
    for j in range(lb + 1):
        d[0][j + 1] = maxdist
        d[1][j + 1] = j
    last_row: dict[str, int] = {}
    for i in range(1, la + 1):
        last_match_col = 0
        for j in range(1, lb + 1):
            row = last_row.get(sb[j - 1], 0)
            col = last_match_col
            if sa[i - 1] == sb[j - 1]:
                cost = 0
                last_match_col = j
            else:
                cost = 1
            d[i + 1][j + 1] = min(
                d[i][j] + cost,
                d[i + 1][j] + 1,
                d[i][j + 1] + 1,
                d[row][col] + (i - row - 1) + 1 + (j - col - 1),
            )
        last_row[sa[i - 1]] = i
    return d[la + 1][lb + 1]
