from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nckoszul.field import Field
from nckoszul.groebner import (
    Presentation,
    PresentationError,
    associated_graded,
    complete,
    is_groebner,
    normal_form,
    redundancy_check,
)
from nckoszul.presfile import parse_presentation
from nckoszul.words import Alphabet, Poly

from conftest import load
from oracles import ideal_span

XY = Alphabet(["x", "y"])


def pres(rels: str, gens: str = "x y") -> Presentation:
    return parse_presentation(f"generators {gens}\nrelations\n{rels}\n")


def test_quartic_relations_are_reduced_gb():
    P = load("quartic")
    G = complete(P, 12)
    assert G.finite and G.complete_at_truncation
    assert sorted(G.show()) == sorted(r.show(P.alphabet) for r in P.relations)


def test_infinite_basis_is_truncated():
    G = complete(pres("y^2 - x*y"), 8)
    assert not G.finite and G.complete_at_truncation
    # y x^k y - x^{k+1} y for k = 0..6
    assert G.show() == ["y^2 - x*y"] + [
        f"y*{'x' if k == 1 else f'x^{k}'}*y - x^{k + 1}*y" for k in range(1, 7)]


def test_commutator_basis():
    G = complete(pres("x*y - y*x"), 10)
    assert G.finite and G.show() == ["y*x - x*y"]


def test_truncation_below_relation_degree_rejected():
    with pytest.raises((ValueError, PresentationError)):
        complete(pres("x^3"), 2)


def test_is_groebner_witness():
    P = load("quartic")
    gd = P.group("gd")
    ok, w = is_groebner(gd, P.alphabet, 8)
    assert not ok and P.alphabet.compact(w) == "xxyyzz"
    assert is_groebner(P.relations, P.alphabet, 8) == (True, None)


def test_redundancy():
    P = pres("x*y, x*y*x")
    assert redundancy_check(P.relations, P.alphabet, 6) == [1]
    assert redundancy_check(pres("x*y, y*y*x").relations, XY, 6) == []


def test_associated_graded_nfg():
    G, certified = associated_graded(load("nfg_A"), 12)
    assert certified
    assert {r.show(G.alphabet) for r in G.relations} == {"e*f", "a*e", "l*m", "c*l", "a*b*c", "c*d*a"}


def test_empty_alphabet_and_empty_relations():
    P = Presentation(Alphabet([]), [], Field())
    assert complete(P, 5).finite
    assert complete(pres(""), 5).elements == []


def test_mixed_fields_rejected():
    with pytest.raises(PresentationError):
        Presentation(XY, [Poly(Field.rationals(), {"\x00\x01": 1})], Field())


quad = st.lists(st.tuples(st.sampled_from(["\x00\x00", "\x00\x01", "\x01\x00", "\x01\x01"]),
                          st.integers(-3, 3)), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(st.lists(quad, min_size=1, max_size=2))
def test_normal_forms_differ_by_ideal_elements(rels):
    F = Field(101)
    polys = [Poly.from_pairs(F, r) for r in rels]
    polys = [p for p in polys if p]
    if not polys:
        return
    P = Presentation(XY, polys, F)
    G = complete(P, 5)
    leads = G.leading_words
    for j in (3, 4):
        span = ideal_span(P, j)
        for w in span.words[::3]:
            nf = normal_form(Poly(F, {w: 1}), G)
            assert all(not any(L in v for L in leads) for v in nf.terms)
            diff = {span.index[v]: c for v, c in (Poly(F, {w: 1}) - nf).terms.items()}
            assert span.contains(diff)


@settings(max_examples=40, deadline=None)
@given(st.lists(quad, min_size=1, max_size=3))
def test_completion_resolves_all_ambiguities(rels):
    F = Field(101)
    polys = [p for p in (Poly.from_pairs(F, r) for r in rels) if p]
    if not polys:
        return
    G = complete(Presentation(XY, polys, F), 6)
    ok, _ = is_groebner(G.elements, XY, 6)
    assert ok
    # reduced: no leading word divides another element's word
    for g in G.elements:
        for h in G.elements:
            if g is not h:
                assert not any(h.leading_word in w for w in g.terms)
