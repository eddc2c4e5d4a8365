"""Candidate-generation kernels with a compiled/pure implementation switch.

The hot loops of the package are edit-candidate expansion and the pruned
substitution search.  Both are implemented twice with identical semantics
and emission order: a Cython extension (``_speedups``) and a pure-Python
fallback (``pure``).  The compiled one is preferred when importable; set
``TAMILSPELL_PURE=1`` to force the fallback.

Kernels operate on packed words: every letter is interned to a uint16 id
by a :class:`LetterCodec` and a word becomes the ``bytes`` of its id
array.  That keeps candidate construction, hashing and deduplication cheap
and lets both implementations share one byte-level contract.
"""

from __future__ import annotations

import os
from array import array
from collections.abc import Iterable

_FORCE_PURE = os.environ.get("TAMILSPELL_PURE", "") not in ("", "0")

if _FORCE_PURE:
    from . import pure as _impl

    KERNEL_BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        KERNEL_BACKEND = "cython"
    except ImportError:
        from . import pure as _impl

        KERNEL_BACKEND = "pure"

generate_edits1 = _impl.generate_edits1
generate_substitutions = _impl.generate_substitutions


def kernel_backend() -> str:
    """Name of the active kernel implementation: ``cython`` or ``pure``."""
    return KERNEL_BACKEND


class LetterCodec:
    """Interns letters as uint16 ids so kernels can work on packed bytes."""

    __slots__ = ("_ids", "_letters")

    def __init__(self, letters: Iterable[str] = ()):
        self._ids: dict[str, int] = {}
        self._letters: list[str] = []
        for letter in letters:
            self.add(letter)

    def add(self, letter: str) -> int:
        """Intern one letter, returning its id."""
        ident = self._ids.get(letter)
        if ident is None:
            ident = len(self._letters)
            if ident > 0xFFFF:
                raise ValueError("letter table overflow")
            self._ids[letter] = ident
            self._letters.append(letter)
        return ident

    def pack(self, letters: Iterable[str]) -> bytes:
        """Encode a letter sequence as packed uint16 ids."""
        return array("H", [self.add(lt) for lt in letters]).tobytes()

    def unpack(self, packed: bytes) -> tuple[str, ...]:
        """Decode packed ids back to a letter tuple."""
        ids = array("H")
        ids.frombytes(packed)
        table = self._letters
        return tuple(table[i] for i in ids)

    def text(self, packed: bytes) -> str:
        """Decode packed ids straight to the word string."""
        return "".join(self.unpack(packed))
