from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nckoszul.field import Field
from nckoszul.groebner import Presentation
from nckoszul.presfile import parse_presentation
from nckoszul.quotient import build_quotient
from nckoszul.resolution import BettiTable, anick_betti
from nckoszul.words import Alphabet, Poly
from nckoszul.yoneda import (
    CobarComplex,
    ExtClass,
    check_2d_determined,
    check_almost_linear,
    check_d_koszul,
    check_k2,
    check_koszul,
    cup_product,
    delta,
    ext_dims_cobar,
    generation_profile,
    gr_comparison,
    grading_forms,
    is_coboundary,
    monomial_k2_criteria,
    unit_class,
)

from conftest import load, quotient


def test_delta():
    assert [delta(i, 4) for i in range(7)] == [0, 1, 4, 5, 8, 9, 12]
    assert [delta(i, 2) for i in range(5)] == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        delta(-1, 3)


def test_grading_forms_quartic():
    forms = grading_forms(quotient("quartic"))
    # every form must vanish on the content difference x^2 y^2 - a^4 (letters a x y z)
    assert len(forms) == 3
    assert all(2 * f[1] + 2 * f[2] - 4 * f[0] == 0 for f in forms)


@pytest.mark.parametrize("name, jmax", [("z4", 8), ("comm", 6), ("xyx", 8), ("quartic", 5), ("comm_xyx", 6)])
def test_dd_is_zero(name, jmax):
    cx = CobarComplex(quotient(name), 4, jmax, prune=False)
    for j in range(1, jmax + 1):
        for i in range(0, min(j, 4) - 1):
            for key in cx.block(i, j):
                assert cx.dd_zero(i, j, key)


@pytest.mark.parametrize("name, imax, jmax", [("z4", 5, 10), ("xyx", 5, 10), ("comm", 4, 8),
                                             ("comm_xyx", 5, 9), ("quartic_A", 5, 10), ("free2", 5, 10)])
def test_cobar_matches_resolution(name, imax, jmax):
    Q = quotient(name)
    t = ext_dims_cobar(Q, imax, jmax)
    assert not t.undecided
    assert t.entries == anick_betti(Q, imax, jmax).entries


def test_pruning_is_exact():
    Q = quotient("xyx")
    assert ext_dims_cobar(Q, 4, 8, prune=True).entries == ext_dims_cobar(Q, 4, 8, prune=False).entries


def test_budget_refusal_is_reported():
    t = ext_dims_cobar(quotient("quartic"), 3, 6, budget=500)
    assert t.undecided and (3, 6) in t.undecided
    assert all(t.get(i, j) == anick_betti(quotient("quartic"), 3, 6).get(i, j)
               for i in range(4) for j in range(7) if (i, j) not in t.undecided)


# -- cup products ----------------------------------------------------------------------

COMM = quotient("comm", 8)
CX = CobarComplex(COMM, 5, 6, prune=False)


@st.composite
def cochain(draw, max_i=2, max_j=3):
    i = draw(st.integers(0, max_i))
    j = draw(st.integers(i, max_j))
    keys = sorted(CX.block(i, j))
    if not keys:
        return None
    key = draw(st.sampled_from(keys))
    n = len(CX.cells(i, j, key))
    vec = draw(st.dictionaries(st.integers(0, n - 1), st.integers(1, 100), max_size=4))
    return ExtClass(i, j, key, {k: COMM.field.coerce(v) for k, v in vec.items()})


@settings(max_examples=60, deadline=None)
@given(cochain(), cochain(), cochain(1, 2))
def test_cup_associative_and_unital(a, b, c):
    if a is None or b is None or c is None:
        return
    one = unit_class(CX)
    assert cup_product(CX, one, a).cocycle == a.cocycle == cup_product(CX, a, one).cocycle
    if a.j + b.j + c.j <= 6:
        left = cup_product(CX, cup_product(CX, a, b), c)
        right = cup_product(CX, a, cup_product(CX, b, c))
        assert left.cocycle == right.cocycle


def _d(x: ExtClass) -> ExtClass:
    return ExtClass(x.i + 1, x.j, x.key, CX.apply_d(x.i, x.j, x.key, x.cocycle))


@settings(max_examples=60, deadline=None)
@given(cochain(), cochain())
def test_leibniz(a, b):
    if a is None or b is None or a.j + b.j > 6 or a.i + b.i + 1 > 5:
        return
    f = COMM.field
    lhs = _d(cup_product(CX, a, b)).cocycle
    rhs = dict(cup_product(CX, _d(a), b).cocycle)
    sign = f.one if a.i % 2 == 0 else f.neg(f.one)
    f.addmul(rhs, sign, cup_product(CX, a, _d(b)).cocycle)
    assert lhs == rhs


def test_coboundary_times_cocycle_is_coboundary():
    one = COMM.field.one
    for i1, j1 in ((1, 1), (2, 2), (2, 3), (3, 3)):
        cocycles = [ExtClass(i1, j1, k, z) for k in CX.block(i1, j1) for z in CX.cocycles(i1, j1, k)]
        bounds = [_d(ExtClass(i1 - 1, j1, k, {x: one}))
                  for k in CX.block(i1 - 1, j1) for x in range(len(CX.cells(i1 - 1, j1, k)))]
        assert cocycles
        for z in cocycles:
            for b in bounds:
                assert is_coboundary(CX, cup_product(CX, b, z))
                assert is_coboundary(CX, cup_product(CX, z, b))


def test_unit_is_not_coboundary():
    assert not is_coboundary(CX, unit_class(CX))


# -- generation ------------------------------------------------------------------------

def test_quartic_generation():
    rep = generation_profile(quotient("quartic"), imax=4, jmax=7)
    # (3, 7) cannot be reached: E^2 lives in (2, 2) and (2, 4) only
    assert rep.not_generated() == [(3, 6), (3, 7)]
    assert rep.entries[(3, 7)].method == "bidegree-shortcut"
    assert rep.entries[(3, 5)].method == "chain-product" and rep.entries[(3, 5)].generated == 1
    assert rep.entries[(4, 6)].generated == 1
    assert rep.entries[(3, 6)].generated == 0


def test_gldim4_generation():
    rep = generation_profile(quotient("gldim4"), imax=5, jmax=7)
    assert rep.not_generated() == [(4, 5)]
    assert rep.entries[(4, 5)].method == "bidegree-shortcut"


def test_nfg_generation():
    rep = generation_profile(quotient("nfg_A"), imax=6, jmax=12)
    assert rep.not_generated() == [(i, 2 * i - 2) for i in range(3, 7)]
    assert not rep.undecided()


def test_koszul_generated_by_one():
    rep = generation_profile(quotient("comm"), imax=2, jmax=4)
    assert rep.not_generated_by_one() == []
    rep = generation_profile(quotient("z4"), imax=4, jmax=8)
    assert (2, 4) in rep.not_generated_by_one()


# -- verdicts --------------------------------------------------------------------------

def table(entries, imax=6, jmax=12):
    return BettiTable({(0, 0): 1, **entries}, imax, jmax, jmax)


def test_support_verdicts():
    assert check_koszul(table({(1, 1): 2, (2, 2): 1})).holds
    v = check_koszul(table({(1, 1): 2, (2, 3): 1, (3, 5): 1}))
    assert v.fails and v.witness == (2, 3)
    assert check_d_koszul(table({(1, 1): 1, (2, 4): 1, (3, 5): 1}), 4).holds
    assert check_d_koszul(table({(1, 1): 1, (2, 4): 1, (3, 6): 1}), 4).witness == (3, 6)
    assert check_2d_determined(table({(1, 1): 1, (2, 2): 1, (2, 4): 1, (3, 5): 1}), 4).holds
    assert check_2d_determined(table({(1, 1): 1, (3, 6): 1}), 4).witness == (3, 6)


def test_preconditions_refuse():
    v = check_d_koszul(table({}), 3, relation_degrees={2, 3})
    assert v.status == "refused"
    assert check_2d_determined(table({}), 4, relation_degrees={3}).status == "refused"


def test_verdict_payload():
    v = check_koszul(table({(2, 3): 1}), field="32003")
    assert v.to_dict() == {"property": "koszul", "result": "fails", "bounds": {"imax": 6, "jmax": 12},
                           "field": "32003", "witness": {"i": 2, "j": 3}}


def test_xyx_not_3_koszul():
    v = check_d_koszul(anick_betti(quotient("xyx"), 6, 12), 3, {3})
    assert v.fails and v.witness == (3, 5)


def test_k2_verdicts():
    assert check_k2(quotient("comm"), 4, 8).holds
    assert check_k2(quotient("z4"), 6, 12).holds
    v = check_k2(quotient("quartic"), 4, 8)
    assert v.fails and v.witness == (3, 6)


def test_almost_linear():
    P = load("quartic")
    A = P.with_relations(P.group("g2"))
    v = check_almost_linear(A, P.group("gd"), 4, 3, 8)
    assert v.fails and v.witness == (1, 5)
    assert check_almost_linear(A, [], 4).holds
    assert check_almost_linear(P, P.group("gd"), 4).status == "refused"


def xy_words(*ws):
    XY = Alphabet(["x", "y"])
    return XY, [XY.word(w) for w in ws]


def test_monomial_criteria_examples():
    XY, (xy, yx, yyy, xyx) = xy_words("xy", "yx", "yyy", "xyx")
    v = monomial_k2_criteria(XY, [xy], [yyy], 3)
    assert v.fails and v.witness == (1, 4)
    assert "subword" in monomial_k2_criteria(XY, [xy], [xyx], 3).notes[0]
    assert monomial_k2_criteria(XY, [yx], [yyy], 3).holds


def test_gr_comparison():
    out = gr_comparison(load("nfg_A"), 5, 10)
    assert out["holds"] and out["certified"]
    assert gr_comparison(load("comm"), 4, 8)["table"].entries == gr_comparison(load("comm"), 4, 8)["gr_table"].entries


# -- properties ------------------------------------------------------------------------

@st.composite
def quadratic_monomial(draw):
    n = draw(st.integers(1, 3))
    pairs = [chr(a) + chr(b) for a in range(n) for b in range(n)]
    rels = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True))
    F = Field()
    return Presentation(Alphabet("abc"[:n]), [Poly(F, {w: 1}) for w in rels], F)


@settings(max_examples=40, deadline=None)
@given(quadratic_monomial())
def test_quadratic_monomial_algebras_are_koszul_and_k2(P):
    Q = build_quotient(P, 8)
    t = anick_betti(Q, 5, 8)
    assert check_koszul(t).holds
    assert check_k2(Q, 4, 6, t).holds


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["x*y - y*x", "x*x - y*y", "x*y - 3*y*x", "x*y*x", "y*x*x - x*y*y"]),
       st.sampled_from(["", ", y^3", ", x*y*y"]))
def test_cobar_matches_resolution_random(rel, extra):
    P = parse_presentation(f"field 101\ngenerators x y\nrelations\n{rel}{extra}\n")
    Q = build_quotient(P, 7)
    assert ext_dims_cobar(Q, 4, 7).entries == anick_betti(Q, 4, 7).entries
