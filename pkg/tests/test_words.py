import pytest
from hypothesis import given, strategies as st

from braidmono import (
    BraidWord,
    FreeWord,
    WordError,
    braid_act_word,
    format_braid,
    format_word,
    parse_braid,
    parse_word,
)

pairs_st = st.lists(
    st.tuples(st.integers(1, 4), st.integers(-3, 3)), max_size=10
)


def test_reduction_basics():
    w = FreeWord.make(3, [(1, 1), (1, 1), (2, -1), (2, 1), (1, -2)])
    assert w.letters == ()
    w = FreeWord.make(3, [(1, 2), (2, 1), (2, -1), (1, -1)])
    assert w.letters == ((1, 1),)


def test_reduced_invariants_enforced():
    with pytest.raises(WordError):
        FreeWord(2, ((1, 0),))
    with pytest.raises(WordError):
        FreeWord(2, ((1, 1), (1, 2)))
    with pytest.raises(WordError):
        FreeWord(2, ((3, 1),))


def test_parse_format_roundtrip():
    for text in ["1", "g1", "g2'", "g1^3 g2' g1", "g3^-2"]:
        w = parse_word(text, 3)
        assert parse_word(format_word(w), 3) == w
    assert parse_word("g1 g1 g1", 2) == FreeWord(2, ((1, 3),))
    with pytest.raises(WordError):
        parse_word("h1", 3)
    with pytest.raises(WordError):
        parse_word("g5", 3)


@given(pairs_st, pairs_st, pairs_st)
def test_free_group_axioms(a, b, c):
    u, v, w = (FreeWord.make(4, x) for x in (a, b, c))
    assert (u * v) * w == u * (v * w)
    assert u * u.inverse() == FreeWord.identity(4)
    assert u.inverse().inverse() == u
    assert (u * v).inverse() == v.inverse() * u.inverse()


def test_pow():
    g = FreeWord.gen(3, 2)
    assert g ** 4 == FreeWord(3, ((2, 4),))
    assert g ** -2 == FreeWord(3, ((2, -2),))
    assert g ** 0 == FreeWord.identity(3)


def test_braid_word_validation():
    with pytest.raises(WordError):
        BraidWord(3, (("s", 1, 1),))  # sigma indices start at 2
    with pytest.raises(WordError):
        BraidWord(3, (("e", 4, 1),))
    with pytest.raises(WordError):
        BraidWord(3, (("s", 2, 2),))


def test_parse_braid_expands_powers():
    b = parse_braid("s2^3 e1'", 3)
    assert b.letters == (("s", 2, 1),) * 3 + (("e", 1, -1),)
    assert format_braid(b) == "s2^3 e1'"
    assert parse_braid("", 3) == BraidWord.identity(3)
    assert parse_braid("s2^0", 3) == BraidWord.identity(3)


def test_action_on_generators():
    m = 3
    s2 = parse_braid("s2", m)
    assert braid_act_word(s2, FreeWord.gen(m, 1)) == parse_word("g1 g2 g1'", m)
    assert braid_act_word(s2, FreeWord.gen(m, 2)) == parse_word("g1", m)
    assert braid_act_word(s2, FreeWord.gen(m, 3)) == parse_word("g3", m)
    s2i = parse_braid("s2'", m)
    assert braid_act_word(s2i, FreeWord.gen(m, 1)) == parse_word("g2", m)
    assert braid_act_word(s2i, FreeWord.gen(m, 2)) == parse_word("g2' g1 g2", m)
    # framing letters act trivially
    assert braid_act_word(parse_braid("e2^5", m), parse_word("g1 g2", m)) == parse_word("g1 g2", m)


def test_action_is_automorphism(rng):
    from conftest import rand_braid, rand_free

    for _ in range(50):
        b = rand_braid(rng, 4, 6)
        u, v = rand_free(rng, 4, 6), rand_free(rng, 4, 6)
        assert braid_act_word(b, u * v) == braid_act_word(b, u) * braid_act_word(b, v)
        assert braid_act_word(b, u.inverse()) == braid_act_word(b, u).inverse()


def test_action_composition_leftmost_last(rng):
    from conftest import rand_braid, rand_free

    for _ in range(50):
        b1 = rand_braid(rng, 4, 4)
        b2 = rand_braid(rng, 4, 4)
        w = rand_free(rng, 4, 5)
        assert braid_act_word(b1 * b2, w) == braid_act_word(b1, braid_act_word(b2, w))


def test_inverse_letter_action_cancels(rng):
    from conftest import rand_braid, rand_free

    for _ in range(30):
        b = rand_braid(rng, 4, 5)
        w = rand_free(rng, 4, 6)
        assert braid_act_word(b.inverse(), braid_act_word(b, w)) == w


BRAID_RELATIONS_M4 = [
    ("s2 s3 s2", "s3 s2 s3"),
    ("s3 s4 s3", "s4 s3 s4"),
    ("s2 s4", "s4 s2"),
    ("e1 s2", "s2 e2"),  # eps_{i-1} sigma_i = sigma_i eps_i
    ("e2 s2", "s2 e1"),
    ("e3 s2", "s2 e3"),
    ("e1 e2", "e2 e1"),
]


@pytest.mark.parametrize("lhs,rhs", BRAID_RELATIONS_M4)
def test_braid_relations_act_equally(lhs, rhs, rng):
    from conftest import rand_free

    u = parse_braid(lhs, 4)
    v = parse_braid(rhs, 4)
    for _ in range(20):
        w = rand_free(rng, 4, 6)
        assert braid_act_word(u, w) == braid_act_word(v, w)
