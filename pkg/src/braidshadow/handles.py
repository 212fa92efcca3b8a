"""Dehornoy handle reduction: an independent word-problem solver for B_d.

This shares no machinery with the Garside code and is used to cross-check
it.  A handle is a subword  sigma_i^e v sigma_i^{-e}  where v contains no
letter of index i or i-1; reducing it deletes the two outer letters and
conjugates each sigma_{i+1}^t inside v to sigma_{i+1}^{-e} sigma_i^t
sigma_{i+1}^{e}.  Any sequence of handle reductions terminates, and a
fully reduced nonempty word is never trivial.
"""

from __future__ import annotations

from .words import BraidWord, free_reduce

_MAX_STEPS = 2_000_000


def _find_leftmost_handle(letters: list[int]) -> tuple[int, int] | None:
    """Return (p, q) bounding the handle with the smallest closing index q."""
    # last[i] = position of the most recent letter of index i+1
    last: dict[int, int] = {}
    for q, x in enumerate(letters):
        i = abs(x)
        p = last.get(i)
        if p is not None and letters[p] == -x:
            # nearest index-i letter has opposite sign; the span is free of
            # index i by construction, check it is free of index i-1
            if all(abs(letters[t]) != i - 1 for t in range(p + 1, q)):
                return p, q
        last[i] = q
    return None


def handle_reduce(w: BraidWord, max_steps: int = _MAX_STEPS) -> BraidWord:
    """Reduce until no handle remains; the result is freely reduced too."""
    word = free_reduce(w)
    letters = list(word.letters)
    for _ in range(max_steps):
        found = _find_leftmost_handle(letters)
        if found is None:
            return BraidWord(w.strands, tuple(letters))
        p, q = found
        e = 1 if letters[p] > 0 else -1
        i = abs(letters[p])
        replacement: list[int] = []
        for t in letters[p + 1 : q]:
            if abs(t) == i + 1:
                s = 1 if t > 0 else -1
                replacement.extend([-e * (i + 1), s * i, e * (i + 1)])
            else:
                replacement.append(t)
        letters[p : q + 1] = replacement
        letters = list(free_reduce(BraidWord(w.strands, tuple(letters))).letters)
    raise RuntimeError("handle reduction did not terminate within step budget")


def is_trivial_word(w: BraidWord) -> bool:
    """True iff w represents the identity braid (via handle reduction)."""
    return not handle_reduce(w).letters


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    """Independent equality test: a b^{-1} handle-reduces to the empty word."""
    from .words import compose, invert

    return is_trivial_word(compose(a, invert(b)))
