from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nckoszul.constructions import (
    certify_k2_pipeline,
    expected_freeprod_ext,
    free_product,
    freeprod_hilbert_check,
)
from nckoszul.field import Field
from nckoszul.groebner import Presentation
from nckoszul.quotient import build_quotient
from nckoszul.resolution import anick_betti
from nckoszul.words import Alphabet, Poly
from nckoszul.yoneda import check_2d_determined, check_k2

from conftest import load


def test_free_product_of_nfg_pieces():
    A, B = load("nfg_A"), load("z4")
    spec = free_product(A, B)
    C = load("nfg_C")
    assert spec.renamed == {}
    assert spec.combined.alphabet == C.alphabet
    assert {r.show(C.alphabet) for r in spec.combined.relations} == {r.show(C.alphabet) for r in C.relations}


def test_free_product_renames_collisions():
    spec = free_product(load("z4"), load("z4"))
    assert spec.combined.alphabet.names == ("z", "z'")
    assert spec.renamed == {"z": "z'"}
    assert [r.show(spec.combined.alphabet) for r in spec.combined.relations] == ["z^4", "z'^4"]


def test_free_product_field_mismatch():
    with pytest.raises(ValueError):
        free_product(load("z4"), load("z4", "QQ"))


def test_nfg_free_product_ext():
    A, B = load("nfg_A"), load("z4")
    C = free_product(A, B).combined
    tA, tB, tC = (anick_betti(build_quotient(X, 12), 6, 12) for X in (A, B, C))
    assert tC.entries == expected_freeprod_ext(tA, tB).entries
    assert check_2d_determined(tC, 4, C.relation_degrees).holds
    assert freeprod_hilbert_check(A, B, 10)["holds"]


@st.composite
def small_monomial(draw, names):
    n = len(names)
    rels = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=2, max_size=3), max_size=3))
    F = Field()
    polys = list({"".join(map(chr, r)): Poly(F, {"".join(map(chr, r)): 1}) for r in rels}.values())
    return Presentation(Alphabet(names), polys, F)


@settings(max_examples=25, deadline=None)
@given(small_monomial(["x", "y"]), small_monomial(["u", "v"]))
def test_free_product_identities(P, Q):
    assert freeprod_hilbert_check(P, Q, 8)["holds"]
    C = free_product(P, Q).combined
    tables = [anick_betti(build_quotient(X, 8), 4, 8) for X in (P, Q, C)]
    assert tables[2].entries == expected_freeprod_ext(tables[0], tables[1]).entries


def test_pipeline_refuses_quartic():
    P = load("quartic")
    v = certify_k2_pipeline(P.alphabet, P.group("g2"), P.group("gd"), 4, P.field, 4, 8)
    assert v.status == "refused"
    assert "gd is not a Gröbner basis" in v.notes[0]
    assert "xxyyzz" in v.notes[0]
    assert v.report.fails and v.report.witness == (3, 6)


def test_pipeline_certifies_z4():
    P = load("z4")
    v = certify_k2_pipeline(P.alphabet, [], P.relations, 4, P.field)
    assert v.holds
    assert any("(i)" in n for n in v.notes) and any("(ii)" in n for n in v.notes)
    assert v.report.holds


def test_pipeline_redundancy_refusal():
    XY = Alphabet(["x", "y"])
    F = Field()
    g2 = [Poly(F, {XY.word("xy"): 1})]
    gd = [Poly(F, {XY.word("xyy"): 1})]
    v = certify_k2_pipeline(XY, g2, gd, 3, F, 3, 7, cross_check=False)
    assert v.status == "refused" and "redundant" in v.notes[0]


def test_pipeline_degree_precondition():
    XY = Alphabet(["x", "y"])
    F = Field()
    v = certify_k2_pipeline(XY, [Poly(F, {XY.word("xyx"): 1})], [], 3, F)
    assert v.status == "refused"


def test_pipeline_monomial_route_and_concurrence():
    XY = Alphabet(["x", "y"])
    F = Field()
    v = certify_k2_pipeline(XY, [Poly(F, {XY.word("yx"): 1})], [Poly(F, {XY.word("yyy"): 1})], 3, F, 5, 10)
    assert v.holds
    R = build_quotient(Presentation(XY, [Poly(F, {XY.word("yx"): 1}), Poly(F, {XY.word("yyy"): 1})], F), 10)
    assert check_k2(R, 5, 10).holds
