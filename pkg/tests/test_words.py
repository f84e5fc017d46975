from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from nckoszul.field import Field
from nckoszul.words import Alphabet, Poly, contains_subword, deglex_compare, deglex_key

F = Field()
AB = Alphabet(["a", "x", "y", "z"])
words = st.text(alphabet="\x00\x01\x02\x03", max_size=6)


def test_alphabet_basics():
    assert AB.word("x", "a") == "\x01\x00"
    assert AB.word("xa") == AB.word("x", "a")
    assert AB.show(AB.word("xxyya")) == "x^2*y^2*a"
    assert AB.compact(AB.word("xya")) == "xya"
    assert AB.show("") == "1"
    assert list(Alphabet(["p", "q"]).words(2)) == ["\x00\x00", "\x00\x01", "\x01\x00", "\x01\x01"]


def test_alphabet_rejects():
    with pytest.raises(ValueError):
        Alphabet(["x", "x"])
    with pytest.raises(ValueError):
        AB.letter("w")
    with pytest.raises(ValueError):
        Alphabet(["x"]).validate("\x01")


def test_deglex_examples():
    assert deglex_compare(AB.word("z"), AB.word("aa")) == -1
    assert deglex_compare(AB.word("xy"), AB.word("ya")) == -1
    assert deglex_compare(AB.word("ya"), AB.word("ya")) == 0


@given(words, words, words)
def test_deglex_is_multiplicative(u, v, w):
    if deglex_key(u) < deglex_key(v):
        assert deglex_key(w + u) < deglex_key(w + v)
        assert deglex_key(u + w) < deglex_key(v + w)


@given(words, words)
def test_deglex_total(u, v):
    assert deglex_compare(u, v) == -deglex_compare(v, u)
    assert (deglex_compare(u, v) == 0) == (u == v)


polys = st.dictionaries(words, st.integers(-5, 5), max_size=4).map(
    lambda d: Poly(F, {w: F.coerce(c) for w, c in d.items()}))


@given(polys, polys, polys)
def test_poly_product_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p) == Poly.zero(F)


def test_leading_word_and_show():
    p = Poly(F, {AB.word("xxyy"): 1, AB.word("aaaa"): 1})
    assert p.leading_word == AB.word("xxyy")
    assert p.show(AB) == "x^2*y^2 + a^4"
    assert p.degree == 4 and p.is_homogeneous() and not p.is_monomial()


def test_contains_subword():
    assert contains_subword(AB.word("xyxa"), [AB.word("ya")]) is False
    assert contains_subword(AB.word("xyxa"), [AB.word("xa")]) is True
