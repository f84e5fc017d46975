from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nckoszul.field import Field
from nckoszul.groebner import Presentation
from nckoszul.presfile import ParseError, format_presentation, parse_polynomial, parse_presentation
from nckoszul.words import Alphabet, Poly

from conftest import DATA, load

AXYZ = Alphabet(["a", "x", "y", "z"])


def test_quartic_file():
    P = load("quartic")
    assert P.alphabet.names == ("a", "x", "y", "z")
    assert P.field == Field(32003)
    assert [r.show(P.alphabet) for r in P.group("g2")] == ["x*a", "a*z", "a*y"]
    assert [r.show(P.alphabet) for r in P.group("gd")] == ["y^2*z^2", "x^2*y^2 + a^4"]


@pytest.mark.parametrize("text, expected", [
    ("3*x*y", "3*x*y"),
    ("3 x*y - y*x", "-y*x + 3*x*y"),
    ("1/2*x^2", "-16001*x^2"),
    ("-x^2*y + x*y*x", "x*y*x - x^2*y"),
    ("x*y - x*y", "0"),
])
def test_parse_polynomial(text, expected):
    XY = Alphabet(["x", "y"])
    assert parse_polynomial(text, XY, Field()).show(XY) == expected


@pytest.mark.parametrize("text, line, col", [
    ("generators x y\nrelations\nx*w\n", 3, 3),
    ("generators x y\nrelations\nx*y + y\n", 3, 1),
    ("generators x y\nrelations\nx\n", 3, 1),
    ("generators x y\nrelations\nx*y $ y\n", 3, 5),
    ("field 12\ngenerators x\n", 1, 7),
    ("relations\nx*y\n", 1, 1),
    ("generators x y\n[bad group\n", 2, 1),
    ("generators x y\nrelations\nx*y, x*y^\n", 3, 10),
])
def test_parse_errors_locate(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_presentation(text)
    assert (e.value.line, e.value.column) == (line, col)


def test_field_override_and_comments():
    text = "# leading comment\nfield 7   # small\ngenerators x y\nrelations\nx*y - 8*y*x  # trailing\n"
    P = parse_presentation(text)
    assert P.field == Field(7) and P.relations[0].show(P.alphabet) == "-y*x + x*y"
    Q = parse_presentation(text, "QQ")
    assert Q.field == Field.rationals() and Q.relations[0].show(Q.alphabet) == "-8*y*x + x*y"


def test_empty_relations_and_generators():
    P = parse_presentation("generators\nrelations\n")
    assert len(P.alphabet) == 0 and P.relations == []


@pytest.mark.parametrize("path", sorted(DATA.glob("*.pres")), ids=lambda p: p.stem)
def test_fixture_roundtrip(path):
    P = load(path.stem)
    text = format_presentation(P)
    assert parse_presentation(text) == P
    assert format_presentation(parse_presentation(text)) == text


terms = st.dictionaries(st.text(alphabet="\x00\x01\x02\x03", min_size=3, max_size=3),
                        st.fractions(max_denominator=7).filter(bool), min_size=1, max_size=4)


@settings(max_examples=80)
@given(st.lists(terms, max_size=4), st.sampled_from([Field(), Field.rationals(), Field(11)]),
       st.dictionaries(st.sampled_from(["g2", "gd", "extra"]), st.integers(0, 3), max_size=2))
def test_roundtrip_property(rels, field, groups):
    polys = [p for p in (Poly(field, {w: field.coerce(c) for w, c in t.items()}) for t in rels) if p]
    grp: dict = {}
    used = set()
    for name, k in groups.items():
        if k < len(polys) and k not in used:
            grp[name] = [k]
            used.add(k)
    P = Presentation(AXYZ, polys, field, grp)
    back = parse_presentation(format_presentation(P))
    assert back.field == P.field and back.alphabet == P.alphabet
    assert sorted(r.show(AXYZ) for r in back.relations) == sorted(r.show(AXYZ) for r in P.relations)
    assert {k: [back.relations[i] for i in v] for k, v in back.groups.items()} == \
        {k: [P.relations[i] for i in v] for k, v in P.groups.items()}
