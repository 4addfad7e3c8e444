import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import braid_words
from monodromy.braid import (
    BraidWord,
    FreeWord,
    WordLengthExceeded,
    artin_act,
    braid_equal,
    format_braid,
    free_reduce,
    generator_images,
    halftwist_word,
    parse_word,
    pure_braid_generator,
)


def B(n, *letters):
    return BraidWord(n, letters)


def test_free_reduce_examples():
    assert free_reduce(FreeWord(2, (1, 2, -2))).letters == (1,)
    assert free_reduce(FreeWord(2, ())).letters == ()
    assert free_reduce(FreeWord(2, (1, -1, 1))).letters == (1,)
    assert FreeWord(3, (1, 2, -2, -1, 3)).letters == (3,)


def test_artin_act_examples():
    assert artin_act(B(2, 1), FreeWord.generator(1, 2)).letters == (1, 2, -1)
    assert artin_act(B(2, 1), FreeWord.generator(2, 2)).letters == (1,)
    w = FreeWord(3, (1, -3, 2, 2))
    assert artin_act(B(3), w) == w
    assert artin_act(B(2, 1, -1), FreeWord.generator(2, 2)).letters == (2,)


def test_artin_act_rank_mismatch():
    with pytest.raises(ValueError):
        artin_act(B(3, 1), FreeWord(2, (1,)))


def test_braid_equal_examples():
    assert braid_equal(B(3, 1, 2, 1), B(3, 2, 1, 2))
    assert not braid_equal(B(2, 1), B(2))
    s13 = halftwist_word(1, 3, 3)
    cube = B(3, 1, 1, 1)
    assert braid_equal((s13 * cube) ** 3, (cube * s13) ** 3)
    with pytest.raises(ValueError):
        braid_equal(B(2, 1), B(3, 1))


def test_halftwist_examples():
    assert halftwist_word(1, 2, 3) == B(3, 1)
    assert halftwist_word(1, 3, 3) == B(3, 2, 1, -2)
    assert halftwist_word(2, 4, 4) == B(4, 3, 2, -3)
    assert halftwist_word(1, 4, 4) == B(4, 3, 2, 1, -2, -3)
    for bad in [(2, 2, 3), (0, 1, 3), (1, 4, 3)]:
        with pytest.raises(ValueError):
            halftwist_word(*bad)


def test_pure_generator_examples():
    assert pure_braid_generator(1, 2, 2) == B(2, 1, 1)
    assert pure_braid_generator(1, 3, 3) == B(3, 2, 1, 1, -2)
    assert pure_braid_generator(2, 3, 3) == B(3, 2, 2)
    for n in range(2, 7):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                A = pure_braid_generator(i, j, n)
                assert braid_equal(A, halftwist_word(i, j, n) ** 2)
                assert A.permutation() == tuple(range(n))


@pytest.mark.parametrize("n", range(2, 9))
def test_artin_relations(n):
    for i in range(1, n - 1):
        assert braid_equal(B(n, i, i + 1, i), B(n, i + 1, i, i + 1))
    for i in range(1, n):
        for j in range(i + 2, n):
            assert braid_equal(B(n, i, j), B(n, j, i))
    for i in range(1, n - 1):
        assert not braid_equal(B(n, i, i + 1), B(n, i + 1, i))


@pytest.mark.parametrize("n", range(2, 7))
def test_halftwist_permutation(n):
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            perm = halftwist_word(i, j, n).permutation()
            moved = {k for k in range(n) if perm[k] != k}
            assert moved == {i - 1, j - 1}
            assert perm[i - 1] == j - 1


def test_parse_and_format():
    assert parse_word("s1 s2^-1 s1^3") == (1, -2, 1, 1, 1)
    assert parse_word("") == ()
    assert format_braid((1, -2, 1, 1, 1)) == "s1 s2^-1 s1^3"
    assert str(BraidWord.parse("s2 s1^2 s4", 5)) == "s2 s1^2 s4"
    with pytest.raises(ValueError):
        parse_word("t1")
    with pytest.raises(ValueError):
        BraidWord.parse("s3", 3)


def test_length_budget():
    with pytest.raises(WordLengthExceeded):
        generator_images(B(3, 1, 2) ** 40, budget=50)


@settings(max_examples=150)
@given(st.data())
def test_action_law(data):
    n = data.draw(st.integers(2, 5))
    b1 = BraidWord(n, data.draw(braid_words(n, 6)))
    b2 = BraidWord(n, data.draw(braid_words(n, 6)))
    w = FreeWord(n, data.draw(st.lists(st.integers(1, n) | st.integers(-n, -1), max_size=6)))
    assert artin_act(b1 * b2, w) == artin_act(b1, artin_act(b2, w))


@settings(max_examples=100)
@given(st.data())
def test_inverse_is_identity(data):
    n = data.draw(st.integers(2, 5))
    b = BraidWord(n, data.draw(braid_words(n, 8)))
    assert braid_equal(b * b.inverse(), BraidWord(n))
    assert format_braid(parse_word(str(b))) == str(b)
