"""Pure-Python kernels; the reference implementation of the byte contract.

Words are packed uint16 letter ids (two bytes per letter, native order).
The compiled twin in ``_speedups.pyx`` must emit the same candidates in
the same order; the test suite enforces equivalence.
"""

from __future__ import annotations


def generate_edits1(
    word: bytes,
    alphabet: bytes,
    limit: int | None,
    seen: set,
    out: list,
) -> None:
    """Append every single-edit neighbour of ``word`` to ``out``.

    Emission order: deletes, transposes, replaces, inserts; positions left
    to right, alphabet letters in table order.  ``seen`` carries the
    already-emitted candidates (shared across calls so multi-level
    expansion dedupes globally) and generation stops the moment ``out``
    reaches ``limit`` entries.
    """
    if limit is not None and len(out) >= limit:
        return
    nb = len(word)

    def emit(cand: bytes) -> bool:
        if cand not in seen:
            seen.add(cand)
            out.append(cand)
            if limit is not None and len(out) >= limit:
                return False
        return True

    for i in range(0, nb, 2):
        if not emit(word[:i] + word[i + 2 :]):
            return
    for i in range(0, nb - 2, 2):
        if not emit(word[:i] + word[i + 2 : i + 4] + word[i : i + 2] + word[i + 4 :]):
            return
    for i in range(0, nb, 2):
        pre, post = word[:i], word[i + 2 :]
        for j in range(0, len(alphabet), 2):
            if not emit(pre + alphabet[j : j + 2] + post):
                return
    for i in range(0, nb + 2, 2):
        pre, post = word[:i], word[i:]
        for j in range(0, len(alphabet), 2):
            if not emit(pre + alphabet[j : j + 2] + post):
                return


def generate_substitutions(
    word: bytes,
    alternates: tuple[bytes, ...],
    max_subs: int,
    limit: int | None,
    seen: set,
    out: list,
) -> None:
    """Append substitution patterns over per-position alternate letters.

    Depth-first: substitute position p, emit, then recurse into strictly
    later positions while the substitution budget lasts.  ``alternates[p]``
    holds the packed alternate ids for position p (original letter already
    excluded), so every path through the lattice yields a distinct word.
    """
    if max_subs < 1:
        raise ValueError("max_subs must be >= 1")
    n = len(word) // 2

    def rec(current: bytes, start: int, budget: int) -> bool:
        for p in range(start, n):
            alts = alternates[p]
            if not alts:
                continue
            pre, post = current[: 2 * p], current[2 * p + 2 :]
            for j in range(0, len(alts), 2):
                cand = pre + alts[j : j + 2] + post
                if cand not in seen:
                    seen.add(cand)
                    out.append(cand)
                    if limit is not None and len(out) >= limit:
                        return False
                if budget > 1 and not rec(cand, p + 1, budget - 1):
                    return False
        return True

    if limit is not None and len(out) >= limit:
        return
    rec(word, 0, max_subs)
