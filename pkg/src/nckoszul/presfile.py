"""Text format for presentations.

::

    # comment
    field 32003            # or QQ, GF(7)
    generators a x y z     # ascending order
    relations
    [g2]
    x*a
    a*z, a*y
    [gd]
    y^2*z^2
    x^2*y^2 + a^4

Relations are one per line (commas also separate).  Lines before any
``[group]`` header are ungrouped.  Coefficients are integers or fractions and
may be written ``3*x*y``, ``3 x*y`` or ``3/2*x^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .field import Field, FieldError
from .groebner import Presentation, PresentationError
from .words import Alphabet, Poly


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_TOKEN = re.compile(rf"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>{NAME})|(?P<op>[-+*^]))")


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(s: str, lineno: int, col0: int) -> list[_Tok]:
    out = []
    pos = 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            ws = len(s[pos:]) - len(s[pos:].lstrip())
            raise ParseError(f"unexpected character {s[pos + ws]!r}", lineno, col0 + pos + ws + 1)
        kind = m.lastgroup
        out.append(_Tok(kind, m.group(kind), col0 + m.start(kind) + 1))
        pos = m.end()
    return out


def parse_polynomial(text: str, alphabet: Alphabet, field: Field, lineno: int = 1, col0: int = 0) -> Poly:
    toks = _tokenize(text, lineno, col0)
    if not toks:
        raise ParseError("empty polynomial", lineno, col0 + 1)
    pos = 0
    terms: dict = {}

    def peek():
        return toks[pos] if pos < len(toks) else None

    def fail(msg, tok=None):
        tok = tok or peek()
        col = tok.col if tok else col0 + len(text.rstrip()) + 1
        raise ParseError(msg, lineno, col)

    first = True
    while pos < len(toks):
        sign = 1
        t = peek()
        if t.kind == "op" and t.text in "+-":
            sign = -1 if t.text == "-" else 1
            pos += 1
        elif not first:
            fail("expected '+' or '-'")
        first = False
        coeff = field.coerce(sign)
        word = ""
        t = peek()
        if t is None:
            fail("missing term")
        if t.kind == "num":
            try:
                coeff = field.mul(coeff, field.coerce(t.text))
            except (FieldError, ZeroDivisionError) as e:
                fail(str(e), t)
            pos += 1
            t = peek()
            if t is not None and t.kind == "op" and t.text == "*":
                pos += 1
                t = peek()
                if t is None or t.kind != "name":
                    fail("expected a generator after '*'")
        while t is not None and t.kind == "name":
            try:
                letter = alphabet.letter(t.text)
            except ValueError:
                fail(f"unknown generator {t.text!r}", t)
            pos += 1
            power = 1
            t = peek()
            if t is not None and t.kind == "op" and t.text == "^":
                pos += 1
                t = peek()
                if t is None or t.kind != "num" or "/" in t.text:
                    fail("expected an integer exponent")
                power = int(t.text)
                if power < 1:
                    fail("exponent must be positive", t)
                pos += 1
                t = peek()
            word += letter * power
            if t is not None and t.kind == "op" and t.text == "*":
                pos += 1
                t = peek()
                if t is None or t.kind != "name":
                    fail("expected a generator after '*'")
        field.addmul(terms, coeff, {word: field.one})
    return Poly(field, terms)


def parse_presentation(text: str, field: Field | str | None = None) -> Presentation:
    """Parse presentation text.  ``field`` overrides the file's field line."""
    fld = None
    alphabet = None
    relations: list[Poly] = []
    groups: dict[str, list[int]] = {}
    current = None
    pending: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        body = line.strip()
        if not body:
            continue
        col = len(line) - len(line.lstrip())
        head, _, rest = body.partition(" ")
        if head == "field":
            try:
                fld = Field.parse(rest.strip())
            except (FieldError, ValueError) as e:
                raise ParseError(str(e), lineno, col + 7) from None
        elif head == "generators":
            names = rest.split()
            bad = [n for n in names if not re.fullmatch(NAME, n)]
            if bad:
                raise ParseError(f"invalid generator name {bad[0]!r}", lineno, col + line.strip().index(bad[0]) + 1)
            try:
                alphabet = Alphabet(names)
            except ValueError as e:
                raise ParseError(str(e), lineno, col + 1) from None
        elif body == "relations":
            current = None
        elif body.startswith("["):
            m = re.fullmatch(r"\[\s*(\w+)\s*\]", body)
            if not m:
                raise ParseError("malformed group header", lineno, col + 1)
            current = m.group(1)
            groups.setdefault(current, [])
        else:
            offset = col
            for piece in line[col:].split(","):
                if piece.strip():
                    pending.append((lineno, offset, piece, current))
                offset += len(piece) + 1
    if alphabet is None:
        raise ParseError("missing generators line", 1, 1)
    if field is not None:
        fld = field if isinstance(field, Field) else Field.parse(str(field))
    if fld is None:
        fld = Field()
    for lineno, offset, piece, grp in pending:
        p = parse_polynomial(piece, alphabet, fld, lineno, offset)
        if not p:
            raise ParseError("relation is zero", lineno, offset + 1)
        if not p.is_homogeneous():
            raise ParseError("relation is not homogeneous", lineno, offset + 1)
        if p.degree < 2:
            raise ParseError("relation has degree below 2", lineno, offset + 1)
        if grp is not None:
            groups[grp].append(len(relations))
        relations.append(p)
    try:
        return Presentation(alphabet, relations, fld, groups)
    except PresentationError as e:
        raise ParseError(str(e), 1, 1) from None


def field_spec(field: Field) -> str:
    return str(field.p) if field.is_prime_field else "QQ"


def format_presentation(P: Presentation) -> str:
    """Canonical text; ``parse_presentation`` reads it back to an equal presentation."""
    lines = [f"field {field_spec(P.field)}", "generators " + " ".join(P.alphabet.names), "relations"]
    grouped = {k for ks in P.groups.values() for k in ks}
    for k, r in enumerate(P.relations):
        if k not in grouped:
            lines.append(r.show(P.alphabet))
    for name in sorted(P.groups):
        lines.append(f"[{name}]")
        lines.extend(P.relations[k].show(P.alphabet) for k in P.groups[name])
    return "\n".join(lines) + "\n"


def load_presentation(path, field=None) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), field)
