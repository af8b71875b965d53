import pytest
from hypothesis import given

from verbclosure.core.errors import ArityMismatch, VarIndexError
from verbclosure.models import FreeAut, FreeWord, NielsenMove
from verbclosure.services.freewords import (
    aut_apply,
    enumerate_reduced_words,
    exponent_gcd,
    exponent_sums,
    in_commutator_subgroup,
    nielsen_normalize,
    reduce,
)
from tests.strategies import free_words, raw_letters, words_with_auts


def test_reduce_cancels_and_merges():
    assert reduce([(1, 1), (1, -1)]).is_identity
    assert reduce([(1, 2), (2, 1), (2, -1), (1, 1)]).letters == ((1, 3),)
    assert reduce([(1, 1), (2, 2)]).letters == ((1, 1), (2, 2))


def test_reduce_rejects_nonpositive_index():
    with pytest.raises(VarIndexError):
        reduce([(0, 1)])


def test_exponent_sums(word):
    assert exponent_sums(word("[x,y]")) == (0, 0)
    assert exponent_sums(word("x^2*y^-3")) == (2, -3)
    assert exponent_sums(word("x y x")) == (2, 1)


def test_commutator_membership(word):
    assert in_commutator_subgroup(word("[x,y]"))
    assert not in_commutator_subgroup(word("x^2 [x,y]"))
    assert in_commutator_subgroup(FreeWord.identity(2))


def test_nielsen_x2y2_matches_witness(word):
    w = word("x^2 y^2")
    m, u, alpha = nielsen_normalize(w)
    assert m == 2
    assert exponent_sums(u) == (0, 0)
    assert alpha.apply(w) == FreeWord.generator(1, 2) ** 2 * u
    assert u == word("[x,y]")
    assert alpha.generator_image(1) == word("x y^-1")


@pytest.mark.parametrize(
    "text, m",
    [("x^3", 3), ("[x,y]", 0), ("x^2 y^4", 2), ("y^-3", 3), ("x^6 y^-4 z^9", 1)],
)
def test_nielsen_exponent(word, text, m):
    w = word(text)
    assert nielsen_normalize(w).m == m == exponent_gcd(w)


def test_nielsen_keeps_normal_forms_fixed(word):
    assert nielsen_normalize(word("x^3")).alpha.is_identity
    form = nielsen_normalize(word("[x,y]"))
    assert form.alpha.is_identity
    assert form.u == word("[x,y]")


def test_nielsen_moves_negative_sum_to_front(word):
    m, u, alpha = nielsen_normalize(word("y^-2"))
    assert m == 2
    assert u.is_identity
    assert alpha.apply(word("y^-2")) == word("x^2", 2)


@given(free_words())
def test_nielsen_normal_form_property(w):
    m, u, alpha = nielsen_normalize(w)
    assert m >= 0
    assert m == exponent_gcd(w)
    assert in_commutator_subgroup(u)
    assert alpha.apply(w) == FreeWord.generator(1, w.arity) ** m * u
    assert alpha.inverse().apply(alpha.apply(w)) == w


def test_aut_apply_substitutes_and_reduces(word):
    alpha = FreeAut((NielsenMove("multiply", 1, 2, -1),), 2)
    assert alpha.apply(word("x^2 y^2")) == word("x y^-1 x y")
    assert FreeAut.identity(2).apply(word("x y")) == word("x y")


def test_aut_arity_mismatch(word):
    with pytest.raises(ArityMismatch):
        FreeAut.identity(3).apply(word("x y"))


def test_generator_images():
    swap = FreeAut((NielsenMove("swap", 1, 2),), 2)
    assert swap.generator_image(1) == FreeWord.generator(2, 2)
    assert FreeAut.identity(1).generator_image(1) == FreeWord.generator(1, 1)
    with pytest.raises(VarIndexError):
        swap.generator_image(3)


def test_aut_validates_moves():
    with pytest.raises(ValueError):
        FreeAut((NielsenMove("multiply", 1, 2, 2),), 2)
    with pytest.raises(ValueError):
        FreeAut((NielsenMove("swap", 1, 1),), 2)
    with pytest.raises(VarIndexError):
        FreeAut((NielsenMove("invert", 3),), 2)


def test_enumerate_reduced_words_counts():
    words = enumerate_reduced_words(4, 2)
    # 1 + 4 + 12 + 36 + 108
    assert len(words) == 161
    assert len(set(words)) == 161
    assert words[0].is_identity
    assert all(w.length <= 4 for w in words)
    assert enumerate_reduced_words(0, 2) == (FreeWord.identity(2),)


def test_word_printing(word):
    assert str(word("x x y^-1")) == "x^2*y^-1"
    assert str(FreeWord.identity()) == "1"
    assert str(word("x5")) == "x5"


@given(raw_letters)
def test_reduce_is_idempotent(letters):
    once = reduce(letters)
    assert reduce(once.letters, once.arity) == once


@given(words_with_auts())
def test_automorphisms_preserve_exponent_gcd(pair):
    w, alpha = pair
    assert exponent_gcd(aut_apply(alpha, w)) == exponent_gcd(w)


@given(words_with_auts())
def test_inverse_automorphism_undoes_apply(pair):
    w, alpha = pair
    assert aut_apply(alpha.inverse(), aut_apply(alpha, w)) == w
