import random

import pytest

from braidshadow.factorization import (
    BandFactor,
    Factorization,
    expand,
    factorization_key,
    hurwitz_move,
    hurwitz_orbit,
    random_factorization,
    singular_factor,
    standard_factorization,
    validate,
)
from braidshadow.garside import equal
from braidshadow.words import BraidError, BraidWord, full_twist, identity


def test_band_factor_word():
    g = BraidWord(3, (2,))
    f = BandFactor(g, exponent=2, sign=-1)
    assert f.word().letters == (2, -1, -1, -2)
    assert f.signed_exponent() == -2


def test_band_factor_validation():
    with pytest.raises(BraidError):
        BandFactor(identity(2), exponent=0)
    with pytest.raises(BraidError):
        BandFactor(identity(2), sign=2)
    with pytest.raises(BraidError):
        BandFactor(identity(1))


def test_factorization_rejects_strand_mismatch():
    with pytest.raises(BraidError):
        Factorization(3, (BandFactor(identity(2)),))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_standard_factorization_validates(d):
    f = standard_factorization(d)
    report = validate(f)
    assert report.valid
    assert report.factor_count == d * d - d
    assert report.exponent_total == d * (d - 1)
    assert report.smooth and report.assembly_compatible


def test_standard_factorization_needs_two_strands():
    with pytest.raises(BraidError):
        standard_factorization(1)


def test_validate_flags_bad_product():
    f = Factorization(2, (BandFactor(identity(2)),))
    report = validate(f)
    assert not report.product_ok and not report.sum_ok and not report.valid


def test_singular_factor_cusp_is_valid_at_d2():
    f = Factorization(2, (singular_factor(identity(2), 2),))
    report = validate(f)
    assert report.valid and not report.smooth and report.count_ok is None


def test_hurwitz_move_preserves_product():
    rng = random.Random(99)
    f = standard_factorization(3)
    target = full_twist(3)
    for _ in range(50):
        i = rng.randint(1, len(f.factors) - 1)
        f = hurwitz_move(f, i, rng.choice(("left", "right")))
    assert equal(expand(f), target)


def test_hurwitz_moves_are_inverse():
    f = standard_factorization(3)
    for i in (1, 3, 5):
        back = hurwitz_move(hurwitz_move(f, i, "right"), i, "left")
        assert factorization_key(back) == factorization_key(f)
        back = hurwitz_move(hurwitz_move(f, i, "left"), i, "right")
        assert factorization_key(back) == factorization_key(f)


def test_hurwitz_move_index_errors():
    f = standard_factorization(2)
    with pytest.raises(IndexError):
        hurwitz_move(f, 2)
    with pytest.raises(ValueError):
        hurwitz_move(f, 1, "sideways")


def test_orbit_of_standard_d2_is_singleton():
    orbit = hurwitz_orbit(standard_factorization(2), 100)
    assert orbit.size == 1 and not orbit.truncated


def test_orbit_enumeration_is_deterministic():
    f = standard_factorization(3)
    runs = [hurwitz_orbit(f, 40) for _ in range(3)]
    keys = [tuple(factorization_key(e) for e in r.elements) for r in runs]
    assert keys[0] == keys[1] == keys[2]
    assert runs[0].truncated  # the d=3 orbit does not close within 40 nodes


def test_orbit_budget_validation():
    with pytest.raises(ValueError):
        hurwitz_orbit(standard_factorization(2), 0)


def test_random_factorization_is_valid_with_short_conjugators():
    rng = random.Random(5)
    for _ in range(5):
        f = random_factorization(3, rng, moves=8, max_conjugator_length=4)
        assert validate(f).valid
        assert all(len(g.conjugator) <= 4 for g in f.factors)
