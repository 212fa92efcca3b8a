"""Words in the Artin generators of the braid group B_d.

A word is a flat sequence of nonzero signed integers: the letter ``i > 0``
is the Artin generator sigma_i, the letter ``-i`` is its inverse.  No
reduction ever happens implicitly; use :func:`free_reduce` explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class BraidError(ValueError):
    """Raised for malformed braid data (bad strand counts, bad letters)."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_d (d = ``strands``)."""

    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidError(
                    f"letter {x} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return invert(self)


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenate two words.  No simplification is performed."""
    if a.strands != b.strands:
        raise BraidError(
            f"strand count mismatch: {a.strands} vs {b.strands}"
        )
    return BraidWord(a.strands, a.letters + b.letters)


def invert(w: BraidWord) -> BraidWord:
    """Reverse the word and negate every letter."""
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain (same group element)."""
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; a braid-group invariant."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def underlying_permutation(w: BraidWord) -> tuple[int, ...]:
    """Image of w in the symmetric group, 0-indexed.

    Returns a tuple p with p[i] = exit position of the strand entering at
    position i (positions 0..d-1; sigma_i maps to the transposition of
    positions i-1, i).
    """
    d = w.strands
    cur = list(range(d))  # cur[pos] = strand occupying pos
    for x in w.letters:
        i = abs(x) - 1
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    perm = [0] * d
    for pos, strand in enumerate(cur):
        perm[strand] = pos
    return tuple(perm)


def full_twist(d: int) -> BraidWord:
    """The full twist Delta_d^2 as the positive word (s1 s2 ... s_{d-1})^d.

    For d = 1 this is the empty word.  The word is positive, of length
    d(d-1), and its underlying permutation is the identity.
    """
    if d < 1:
        raise BraidError(f"full twist needs d >= 1, got {d}")
    return BraidWord(d, tuple(range(1, d)) * d)


def half_twist_word(d: int) -> BraidWord:
    """A positive word for the half twist Delta_d: (s1)(s2 s1)...(s_{d-1}..s1)."""
    if d < 1:
        raise BraidError(f"half twist needs d >= 1, got {d}")
    letters: list[int] = []
    for i in range(1, d):
        letters.extend(range(i, 0, -1))
    return BraidWord(d, tuple(letters))
