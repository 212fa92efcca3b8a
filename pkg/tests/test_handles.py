import random

from hypothesis import given, settings, strategies as st

from braidshadow import garside
from braidshadow.handles import handle_reduce, is_trivial_word, words_equal
from braidshadow.words import BraidWord, compose, full_twist, identity, invert


def test_reduces_simple_handle():
    # sigma_1 sigma_3 sigma_1^{-1} has a handle around sigma_3
    w = BraidWord(4, (1, 3, -1))
    assert handle_reduce(w).letters == (3,)


def test_braid_relator_is_trivial():
    w = BraidWord(3, (1, 2, 1, -2, -1, -2))
    assert is_trivial_word(w)


def test_generator_is_not_trivial():
    assert not is_trivial_word(BraidWord(3, (1,)))
    assert not is_trivial_word(BraidWord(5, (-4,)))


def test_full_twist_times_inverse_is_trivial():
    for d in (2, 3, 4):
        tw = full_twist(d)
        assert is_trivial_word(compose(tw, invert(tw)))
        assert not is_trivial_word(tw)


def test_words_equal_examples():
    assert words_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not words_equal(BraidWord(3, (1,)), BraidWord(3, (2,)))
    assert words_equal(identity(2), BraidWord(2, (1, -1)))


def _random_word(rng, d, n):
    return BraidWord(
        d, tuple(rng.choice((1, -1)) * rng.randint(1, d - 1) for _ in range(n))
    )


def test_agrees_with_garside_on_random_sample():
    rng = random.Random(20240814)
    for _ in range(300):
        d = rng.randint(2, 5)
        a = _random_word(rng, d, rng.randint(0, 20))
        b = _random_word(rng, d, rng.randint(0, 20))
        assert words_equal(a, b) == garside.equal(a, b)


@given(
    st.integers(2, 5).flatmap(
        lambda d: st.lists(
            st.integers(1, d - 1).flatmap(lambda i: st.sampled_from([i, -i])),
            max_size=20,
        ).map(lambda ls: BraidWord(d, tuple(ls)))
    )
)
@settings(max_examples=120, deadline=None)
def test_reduction_preserves_the_braid(w):
    assert garside.equal(handle_reduce(w), w)
