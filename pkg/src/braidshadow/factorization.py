"""Band factorizations of the full twist and the Hurwitz action on them.

A band factor is a conjugate g sigma_1^{ek} g^{-1}; a factorization is an
ordered product of band factors whose target is the full twist Delta_d^2.
Hurwitz moves rewrite adjacent factor pairs without changing the product:
the right move sends (a, b) to (a b a^{-1}, a), the left move is its
inverse.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .garside import NormalForm, equal, normal_form
from .words import (
    BraidError,
    BraidWord,
    compose,
    exponent_sum,
    free_reduce,
    full_twist,
    identity,
    invert,
)


@dataclass(frozen=True)
class BandFactor:
    """One band g sigma_1^{sign * exponent} g^{-1}."""

    conjugator: BraidWord
    exponent: int = 1
    sign: int = 1

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise BraidError(f"band exponent must be >= 1, got {self.exponent}")
        if self.sign not in (1, -1):
            raise BraidError(f"band sign must be +1 or -1, got {self.sign}")
        if self.conjugator.strands < 2:
            raise BraidError("band factors need at least 2 strands")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    def word(self) -> BraidWord:
        """Expanded word g sigma_1^{sign*exponent} g^{-1} (no reduction)."""
        core = BraidWord(self.strands, (self.sign,) * self.exponent)
        return compose(compose(self.conjugator, core), invert(self.conjugator))

    def signed_exponent(self) -> int:
        return self.sign * self.exponent


def singular_factor(conjugator: BraidWord, n: int, sign: int = 1) -> BandFactor:
    """Band factor modelling an A_n singularity: conjugate of sigma_1^{sign*n}."""
    return BandFactor(conjugator, exponent=n, sign=sign)


@dataclass(frozen=True)
class Factorization:
    """Ordered band factors with implicit target Delta_d^2."""

    strands: int
    factors: tuple[BandFactor, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        for f in factors:
            if f.strands != self.strands:
                raise BraidError(
                    f"factor on {f.strands} strands in a {self.strands}-strand factorization"
                )

    def __len__(self) -> int:
        return len(self.factors)

    def is_smooth_quasipositive(self) -> bool:
        return all(f.sign == 1 and f.exponent == 1 for f in self.factors)

    def all_positive(self) -> bool:
        return all(f.sign == 1 for f in self.factors)


def expand(f: Factorization) -> BraidWord:
    """Concatenation of all expanded band factors, in order."""
    out = identity(f.strands)
    for factor in f.factors:
        out = compose(out, factor.word())
    return out


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a factorization against the full-twist target."""

    strands: int
    factor_count: int
    exponent_total: int
    product_ok: bool
    sum_ok: bool
    smooth: bool
    count_ok: bool | None  # n == d^2 - d; only meaningful when smooth
    assembly_compatible: bool  # every sign positive (diagram assembly accepts it)

    @property
    def valid(self) -> bool:
        flags = [self.product_ok, self.sum_ok]
        if self.count_ok is not None:
            flags.append(self.count_ok)
        return all(flags)


def validate(f: Factorization) -> ValidationReport:
    """Check product = Delta^2, exponent sum = d(d-1), and (if smooth) n = d^2-d.

    Invalid input yields a failing report, never an exception.  Negative
    bands are accepted here but rejected by diagram assembly; the
    ``assembly_compatible`` flag records the divergence.
    """
    d = f.strands
    total = sum(factor.signed_exponent() for factor in f.factors)
    smooth = f.is_smooth_quasipositive()
    return ValidationReport(
        strands=d,
        factor_count=len(f.factors),
        exponent_total=total,
        product_ok=equal(expand(f), full_twist(d)),
        sum_ok=(total == d * (d - 1)),
        smooth=smooth,
        count_ok=(len(f.factors) == d * d - d) if smooth else None,
        assembly_compatible=f.all_positive(),
    )


def standard_factorization(d: int) -> Factorization:
    """The cascade witness for Delta_d^2 = product of d(d-1) positive bands.

    Delta_d^2 = (s1 ... s_{d-1})^d and each s_i equals c_i s1 c_i^{-1} with
    c_i = (s1 ... s_{d-1})^{i-1}, so the full twist splits into d(d-1)
    bands with exponent 1 and positive sign.
    """
    if d < 2:
        raise BraidError(f"standard factorization needs d >= 2, got {d}")
    delta = tuple(range(1, d))
    factors = []
    for _rep in range(d):
        for i in range(1, d):
            conj = BraidWord(d, delta * (i - 1))
            factors.append(BandFactor(conj, 1, 1))
    return Factorization(d, tuple(factors))


def hurwitz_move(f: Factorization, i: int, direction: str = "right") -> Factorization:
    """Apply one Hurwitz move at slot i (1-indexed, 1 <= i <= n-1).

    The right move replaces (a, b) by (a b a^{-1}, a); the left move is
    its inverse, (a, b) -> (b, b^{-1} a b).  Conjugators are stored
    free-reduced; the expanded product is unchanged as a braid.
    """
    n = len(f.factors)
    if not 1 <= i <= n - 1:
        raise IndexError(f"move index {i} out of range for {n} factors")
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    a, b = f.factors[i - 1], f.factors[i]
    if direction == "right":
        new_conj = free_reduce(compose(a.word(), b.conjugator))
        moved = BandFactor(new_conj, b.exponent, b.sign)
        pair = (moved, a)
    else:
        new_conj = free_reduce(compose(invert(b.word()), a.conjugator))
        moved = BandFactor(new_conj, a.exponent, a.sign)
        pair = (b, moved)
    return Factorization(f.strands, f.factors[: i - 1] + pair + f.factors[i + 1 :])


FactorKey = tuple[int, tuple[tuple[int, ...], ...]]


def factor_canonical_key(factor: BandFactor) -> FactorKey:
    """Canonical form of a band factor as a group element (Garside NF)."""
    nf = normal_form(factor.word())
    return (nf.delta_power, nf.factors)


def factorization_key(f: Factorization) -> tuple[FactorKey, ...]:
    return tuple(factor_canonical_key(factor) for factor in f.factors)


@dataclass(frozen=True)
class HurwitzOrbit:
    """BFS closure of a factorization under Hurwitz moves.

    ``elements`` holds one witness per canonical node, sorted by canonical
    key so the output is independent of exploration order.  ``truncated``
    is set when the node budget was exhausted before closure.
    """

    elements: tuple[Factorization, ...]
    truncated: bool

    @property
    def size(self) -> int:
        return len(self.elements)


def hurwitz_orbit(f: Factorization, bound: int) -> HurwitzOrbit:
    """Enumerate the Hurwitz orbit of f, stopping once ``bound`` nodes are seen."""
    if bound < 1:
        raise ValueError(f"node budget must be >= 1, got {bound}")
    start_key = factorization_key(f)
    seen: dict[tuple[FactorKey, ...], Factorization] = {start_key: f}
    queue: deque[Factorization] = deque([f])
    truncated = False
    while queue:
        node = queue.popleft()
        n = len(node.factors)
        for i in range(1, n):
            for direction in ("right", "left"):
                nxt = hurwitz_move(node, i, direction)
                key = factorization_key(nxt)
                if key in seen:
                    continue
                if len(seen) >= bound:
                    truncated = True
                    queue.clear()
                    break
                seen[key] = nxt
                queue.append(nxt)
            if truncated:
                break
    ordered = tuple(seen[key] for key in sorted(seen))
    return HurwitzOrbit(elements=ordered, truncated=truncated)


def random_factorization(
    d: int,
    rng: random.Random,
    moves: int = 20,
    max_conjugator_length: int | None = None,
) -> Factorization:
    """Random valid smooth factorization: a bounded Hurwitz walk from standard.

    Moves that would push a free-reduced conjugator beyond the length cap
    are rejected, so every output is a valid factorization of Delta_d^2
    with short conjugators.
    """
    f = standard_factorization(d)
    n = len(f.factors)
    done = 0
    attempts = 0
    while done < moves and attempts < 50 * moves:
        attempts += 1
        i = rng.randint(1, n - 1)
        direction = rng.choice(("right", "left"))
        nxt = hurwitz_move(f, i, direction)
        if max_conjugator_length is not None and any(
            len(factor.conjugator) > max_conjugator_length for factor in nxt.factors
        ):
            continue
        f = nxt
        done += 1
    return f
