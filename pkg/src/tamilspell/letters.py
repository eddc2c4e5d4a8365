"""Tamil script model: code-point screening, letter tokenization, alphabets.

Tamil is an abugida, so a "letter" is usually a grapheme built from more
than one code point: a consonant plus pulli forms a mei (க + ் = க்), a
consonant alone carries an implicit அ, and a consonant plus a vowel sign
forms the other uyirmei shapes (க + ா = கா).  Edit operations that work on
raw code points produce garbage (deleting the ா from கா yields a different
letter, not a shorter word), so everything downstream runs on the letter
sequences produced by :func:`tokenize`.

Two alphabet tables are provided.  The standard table has 247 letters:
12 uyir, the ayudham ஃ, 18 mei and 216 uyirmei.  The extended table adds
the grantha consonants for 323 letters: mei forms for ஜ ஷ ஸ ஹ plus the
twelve vowel forms for each of ஜ ஷ ஸ ஹ க்ஷ ஶ.  The conjunct க்ஷ is treated
as a single consonant by the tokenizer; க்ஷ் and ஶ் therefore remain
tokenizable even though the table does not count them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

PULLI = "்"
AYUDHAM = "ஃ"  # ஃ
KSSA = "க்ஷ"  # conjunct consonant, three code points

UYIR_LETTERS = ("அ", "ஆ", "இ", "ஈ", "உ", "ஊ", "எ", "ஏ", "ஐ", "ஒ", "ஓ", "ஔ")

# Vowel sign used when a consonant combines with each uyir; அ is implicit.
VOWEL_SIGNS = {
    "அ": "",
    "ஆ": "ா",
    "இ": "ி",
    "ஈ": "ீ",
    "உ": "ு",
    "ஊ": "ூ",
    "எ": "ெ",
    "ஏ": "ே",
    "ஐ": "ை",
    "ஒ": "ொ",
    "ஓ": "ோ",
    "ஔ": "ௌ",
}
SIGN_TO_UYIR = {sign: uyir for uyir, sign in VOWEL_SIGNS.items() if sign}

CONSONANTS = (
    "க", "ங", "ச", "ஞ", "ட", "ண", "த", "ந", "ப",
    "ம", "ய", "ர", "ல", "வ", "ழ", "ள", "ற", "ன",
)
GRANTHA_CONSONANTS = ("ஜ", "ஷ", "ஸ", "ஹ", KSSA, "ஶ")
# Grantha consonants whose mei form counts toward the 323-letter table.
_GRANTHA_WITH_MEI = ("ஜ", "ஷ", "ஸ", "ஹ")

_UYIR_SET = frozenset(UYIR_LETTERS)
_SIGN_SET = frozenset(SIGN_TO_UYIR)
_SINGLE_CONSONANTS = frozenset(CONSONANTS) | {"ஜ", "ஷ", "ஸ", "ஹ", "ஶ"}


class LetterKind(Enum):
    """Classification of one token produced by :func:`tokenize`."""

    UYIR = "uyir"
    AYUDHAM = "ayudham"
    MEI = "mei"
    UYIRMEI = "uyirmei"
    OTHER = "other"          # non-Tamil pass-through (latin, digits, space, ...)
    MALFORMED = "malformed"  # combining mark with no consonant to attach to


_LETTER_KINDS = frozenset(
    {LetterKind.UYIR, LetterKind.AYUDHAM, LetterKind.MEI, LetterKind.UYIRMEI}
)


@dataclass(frozen=True, slots=True)
class Letter:
    """One tokenizer token: a Tamil letter, or a pass-through code point."""

    text: str
    kind: LetterKind

    @property
    def is_tamil_letter(self) -> bool:
        return self.kind in _LETTER_KINDS

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Alphabet:
    """An ordered letter table used for replace/insert candidate generation."""

    letters: tuple[str, ...]
    includes_grantha: bool

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters


def is_tamil_codepoint(ch: str) -> bool:
    """True when the single code point ``ch`` falls in the Tamil block."""
    if len(ch) != 1:
        raise ValueError(f"expected a single code point, got {len(ch)} characters")
    return "ஂ" <= ch <= "௺"


def has_tamil(text: str) -> bool:
    """True when any code point of ``text`` is Tamil."""
    return any("ஂ" <= ch <= "௺" for ch in text)


def tokenize(text: str) -> list[Letter]:
    """Split ``text`` into Tamil letters plus pass-through tokens.

    The concatenation of the returned token texts always equals the input;
    nothing is dropped.  A vowel sign or pulli with no consonant before it
    becomes a MALFORMED token, and any non-Tamil code point becomes an
    OTHER token.  Callers are expected to hand in NFC-normalized text.
    """
    tokens: list[Letter] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in _SINGLE_CONSONANTS:
            base, j = ch, i + 1
            if ch == "க" and text[i + 1 : i + 3] == PULLI + "ஷ":
                base, j = KSSA, i + 3
            nxt = text[j] if j < n else ""
            if nxt == PULLI:
                tokens.append(Letter(base + PULLI, LetterKind.MEI))
                i = j + 1
            elif nxt in _SIGN_SET:
                tokens.append(Letter(base + nxt, LetterKind.UYIRMEI))
                i = j + 1
            else:
                tokens.append(Letter(base, LetterKind.UYIRMEI))
                i = j
        elif ch in _UYIR_SET:
            tokens.append(Letter(ch, LetterKind.UYIR))
            i += 1
        elif ch == AYUDHAM:
            tokens.append(Letter(ch, LetterKind.AYUDHAM))
            i += 1
        elif ch in _SIGN_SET or ch == PULLI:
            tokens.append(Letter(ch, LetterKind.MALFORMED))
            i += 1
        else:
            tokens.append(Letter(ch, LetterKind.OTHER))
            i += 1
    return tokens


def classify(text: str) -> Letter:
    """Tokenize ``text`` and require exactly one token."""
    tokens = tokenize(text)
    if len(tokens) != 1:
        raise ValueError(f"expected a single letter, got {len(tokens)} tokens: {text!r}")
    return tokens[0]


def _as_letter(letter: Letter | str) -> Letter:
    return letter if isinstance(letter, Letter) else classify(letter)


def letter_texts(word: str | list[Letter] | tuple[str, ...]) -> tuple[str, ...]:
    """Coerce a word (string or pre-tokenized sequence) to letter texts."""
    if isinstance(word, str):
        return tuple(t.text for t in tokenize(word))
    return tuple(t.text if isinstance(t, Letter) else t for t in word)


def split_mei_uyir(letter: Letter | str) -> tuple[Letter, ...]:
    """Decompose a letter into its mei and uyir parts.

    An uyirmei splits into (mei, uyir): கா -> (க், ஆ) and bare க -> (க், அ).
    Uyir, ayudham and mei letters are already atomic and come back as a
    one-element tuple.  Anything that is not a Tamil letter is an error.
    """
    lt = _as_letter(letter)
    if lt.kind in (LetterKind.UYIR, LetterKind.AYUDHAM, LetterKind.MEI):
        return (lt,)
    if lt.kind is not LetterKind.UYIRMEI:
        raise ValueError(f"not a Tamil letter: {lt.text!r}")
    text = lt.text
    if text[-1] in SIGN_TO_UYIR:
        base, uyir = text[:-1], SIGN_TO_UYIR[text[-1]]
    else:
        base, uyir = text, "அ"
    return (Letter(base + PULLI, LetterKind.MEI), Letter(uyir, LetterKind.UYIR))


def join_mei_uyir(mei: Letter | str, uyir: Letter | str) -> Letter:
    """Compose a mei and an uyir into the uyirmei letter: க் + ஈ -> கீ."""
    m = _as_letter(mei)
    u = _as_letter(uyir)
    if m.kind is not LetterKind.MEI:
        raise ValueError(f"not a mei letter: {m.text!r}")
    if u.kind is not LetterKind.UYIR:
        raise ValueError(f"not an uyir letter: {u.text!r}")
    return Letter(m.text[:-1] + VOWEL_SIGNS[u.text], LetterKind.UYIRMEI)


def _build_alphabet(grantha: bool) -> Alphabet:
    letters: list[str] = list(UYIR_LETTERS)
    letters.append(AYUDHAM)
    vowel_order = tuple(VOWEL_SIGNS[u] for u in UYIR_LETTERS)
    for cons in CONSONANTS:
        letters.append(cons + PULLI)
        letters.extend(cons + sign for sign in vowel_order)
    if grantha:
        for cons in _GRANTHA_WITH_MEI:
            letters.append(cons + PULLI)
            letters.extend(cons + sign for sign in vowel_order)
        for cons in (KSSA, "ஶ"):
            letters.extend(cons + sign for sign in vowel_order)
    return Alphabet(tuple(letters), grantha)


_STANDARD = _build_alphabet(grantha=False)
_GRANTHA = _build_alphabet(grantha=True)


def alphabet(grantha: bool = False) -> Alphabet:
    """The 247-letter table, or the 323-letter table with ``grantha=True``."""
    return _GRANTHA if grantha else _STANDARD
