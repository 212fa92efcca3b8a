"""Left-greedy Garside normal form and the word problem in B_d.

A braid is written Delta^p x_1 ... x_k where Delta is the positive half
twist and each x_j is a permutation braid (a positive braid in which any
two strands cross at most once).  Permutation braids are stored as
permutation tuples, 0-indexed: x[i] is the exit position of the strand
entering at position i.  Two words represent the same element of B_d if
and only if their normal forms coincide, which gives the equality test.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .words import BraidError, BraidWord

Perm = tuple[int, ...]


def _identity_perm(d: int) -> Perm:
    return tuple(range(d))


def _w0(d: int) -> Perm:
    """Permutation of the half twist Delta."""
    return tuple(range(d - 1, -1, -1))


def _transposition(d: int, i: int) -> Perm:
    """Permutation of sigma_i (1-indexed generator)."""
    p = list(range(d))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _then(a: Perm, b: Perm) -> Perm:
    """Composite 'apply a, then b'."""
    return tuple(b[a[i]] for i in range(len(a)))


def _inverse(p: Perm) -> Perm:
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta: tau(p) = w0 p w0 (an involution)."""
    w0 = _w0(len(p))
    return _then(_then(w0, p), w0)


def _left_descents(p: Perm) -> list[int]:
    """0-indexed i such that sigma_{i+1} is a prefix of the permutation braid p."""
    return [i for i in range(len(p) - 1) if p[i] > p[i + 1]]


def _right_descent_mask(p: Perm) -> list[bool]:
    """mask[i] true iff sigma_{i+1} is a suffix of p."""
    q = _inverse(p)
    return [q[i] > q[i + 1] for i in range(len(p) - 1)]


@functools.lru_cache(maxsize=None)
def _weight_pair(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    """Rewrite the product of permutation braids x y as a left-weighted pair.

    Slides prefix generators of y onto the tail of x while lengths still
    add; the result x' y' satisfies S(y') contained in F(x') and
    represents the same positive braid.
    """
    xl = list(x)
    yl = list(y)
    moved = True
    while moved:
        moved = False
        fmask = _right_descent_mask(tuple(xl))
        for i in range(len(yl) - 1):
            if yl[i] > yl[i + 1] and not fmask[i]:
                # transfer sigma_{i+1}: append to x (swap values), strip from y (swap places)
                for k in range(len(xl)):
                    if xl[k] == i:
                        xl[k] = i + 1
                    elif xl[k] == i + 1:
                        xl[k] = i
                yl[i], yl[i + 1] = yl[i + 1], yl[i]
                moved = True
                break
    return tuple(xl), tuple(yl)


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy Garside normal form Delta^delta_power x_1 ... x_k."""

    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    def __post_init__(self) -> None:
        d = self.strands
        ident = _identity_perm(d)
        w0 = _w0(d)
        for f in self.factors:
            if f == ident or f == w0:
                raise BraidError("normal form factor is identity or half twist")

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors


def _normalize_factors(d: int, factors: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    ident = _identity_perm(d)
    w0 = _w0(d)
    out = [f for f in factors if f != ident]
    # Bubble passes until globally left-weighted; each pair fix is local.
    changed = True
    while changed:
        changed = False
        for j in range(len(out) - 1):
            x, y = _weight_pair(out[j], out[j + 1])
            if (x, y) != (out[j], out[j + 1]):
                out[j], out[j + 1] = x, y
                changed = True
        if changed:
            out = [f for f in out if f != ident]
    shift = 0
    while out and out[0] == w0:
        shift += 1
        out.pop(0)
    while out and out[-1] == ident:
        out.pop()
    return shift, tuple(out)


def normal_form(w: BraidWord) -> NormalForm:
    """Canonical form of a word; identical normal forms <=> equal braids."""
    d = w.strands
    if d == 1:
        return NormalForm(1, 0, ())
    p = 0
    factors: list[Perm] = []
    w0 = _w0(d)
    for x in w.letters:
        if x > 0:
            factors.append(_transposition(d, x))
        else:
            i = -x
            # sigma_i^{-1} = Delta^{-1} r with r the permutation braid Delta sigma_i^{-1}
            p -= 1
            factors = [_tau(f) for f in factors]
            r = list(w0)
            for k in range(d):
                if r[k] == i - 1:
                    r[k] = i
                elif r[k] == i:
                    r[k] = i - 1
            factors.append(tuple(r))
    shift, tup = _normalize_factors(d, factors)
    return NormalForm(d, p + shift, tup)


def normal_form_word(nf: NormalForm) -> BraidWord:
    """Serialize a normal form back to a braid word (same group element)."""
    d = nf.strands
    letters: list[int] = []
    half: list[int] = []
    for i in range(1, d):
        half.extend(range(i, 0, -1))
    if nf.delta_power >= 0:
        letters.extend(half * nf.delta_power)
    else:
        inv = [-x for x in reversed(half)]
        letters.extend(inv * (-nf.delta_power))
    for f in nf.factors:
        cur = list(f)
        while True:
            for i in range(d - 1):
                if cur[i] > cur[i + 1]:
                    letters.append(i + 1)
                    cur[i], cur[i + 1] = cur[i + 1], cur[i]
                    break
            else:
                break
    return BraidWord(d, tuple(letters))


def equal(a: BraidWord, b: BraidWord) -> bool:
    """True iff a and b represent the same element of B_d."""
    if a.strands != b.strands:
        raise BraidError(
            f"strand count mismatch: {a.strands} vs {b.strands}"
        )
    if a.strands == 1:
        return True
    return normal_form(a) == normal_form(b)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_trivial()
