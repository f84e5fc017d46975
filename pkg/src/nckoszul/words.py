"""Words over an ordered alphabet and polynomials in the free algebra.

A word is stored as a ``str`` whose characters are ``chr(i)`` for generator
index ``i``.  With that encoding Python's string comparison *is* the
lexicographic order induced by the alphabet, so the degree-lexicographic key
of a word is just ``(len(w), w)``, and subword tests are substring tests.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .field import Field, RawScalar

Word = str
EMPTY: Word = ""


def deglex_key(w: Word):
    return (len(w), w)


class Alphabet:
    """Ordered generator names; earlier names are smaller."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if any(not n for n in names):
            raise ValueError("empty generator name")
        self.names = tuple(names)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None

    def letter(self, name: str) -> Word:
        return chr(self.index(name))

    def word(self, *names: str) -> Word:
        """``word("x", "a")`` -> the word xa.  A single string of one-character
        names may also be passed: ``word("xa")``."""
        if len(names) == 1 and names[0] not in self._index:
            names = tuple(names[0])
        return "".join(chr(self.index(n)) for n in names)

    def from_indices(self, indices: Iterable[int]) -> Word:
        w = "".join(chr(i) for i in indices)
        self.validate(w)
        return w

    def validate(self, w: Word) -> None:
        n = len(self.names)
        for ch in w:
            if ord(ch) >= n:
                raise ValueError(f"generator index {ord(ch)} out of range for {self}")

    def show(self, w: Word) -> str:
        """Human-readable word, with runs collapsed to powers: ``x^2*y``."""
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[ord(w[i])]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    def compact(self, w: Word) -> str:
        """Concatenated names without separators (``xxyy``); for labels."""
        return "".join(self.names[ord(c)] for c in w)

    def words(self, degree: int) -> Iterator[Word]:
        """All words of a given length, in increasing lex order."""
        if degree == 0:
            yield EMPTY
            return
        letters = [chr(i) for i in range(len(self.names))]
        for w in self.words(degree - 1):
            for x in letters:
                yield w + x


def deglex_compare(u: Word, v: Word, alphabet: Alphabet | None = None) -> int:
    """-1, 0 or 1 as u is smaller than, equal to or greater than v."""
    if alphabet is not None:
        alphabet.validate(u)
        alphabet.validate(v)
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


class Poly:
    """Finite linear combination of words with nonzero coefficients.

    Treated as immutable once built.  ``terms`` maps words to raw field values.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict[Word, RawScalar] | None = None):
        self.field = field
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, field: Field, w: Word, coeff=1) -> "Poly":
        return cls(field, {w: field.coerce(coeff)})

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, {})

    @classmethod
    def from_pairs(cls, field: Field, pairs: Iterable[tuple[Word, object]]) -> "Poly":
        terms: dict[Word, RawScalar] = {}
        for w, c in pairs:
            field.addmul(terms, field.coerce(c), {w: field.one})
        return cls(field, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self.field}, {self.sorted_terms()!r})"

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise ValueError(f"polynomials over {self.field} and {other.field}")

    def sorted_terms(self) -> list[tuple[Word, RawScalar]]:
        """Terms in deglex-descending order."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def combine(self, c, other: "Poly") -> "Poly":
        """``self + c * other``."""
        self._check(other)
        terms = dict(self.terms)
        self.field.addmul(terms, self.field.coerce(c), other.terms)
        return Poly(self.field, terms)

    def __add__(self, other):
        return self.combine(1, other)

    def __sub__(self, other):
        return self.combine(-1, other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Poly":
        return Poly(self.field, self.field.scaled(self.field.coerce(c), self.terms))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        terms: dict[Word, RawScalar] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                f.addmul(terms, f.mul(a, b), {u + v: f.one})
        return Poly(f, terms)

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of a zero or inhomogeneous polynomial")
        return next(iter(degs))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self) -> tuple[Word, RawScalar]:
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        w = max(self.terms, key=deglex_key)
        return w, self.terms[w]

    @property
    def leading_word(self) -> Word:
        return self.leading_term()[0]

    def monic(self) -> "Poly":
        _, c = self.leading_term()
        return self.scale(self.field.inv(c))

    def show(self, alphabet: Alphabet) -> str:
        """Canonical text form, e.g. ``x^2*y^2 + a^4``."""
        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_terms():
            s = self.field.format(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            body = alphabet.show(w)
            if mag != "1":
                body = mag if not w else f"{mag}*{body}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)


def leading_term(p: Poly) -> tuple[Word, RawScalar]:
    return p.leading_term()


def poly_combine(p: Poly, c, q: Poly) -> Poly:
    return p.combine(c, q)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def contains_subword(w: Word, pieces: Iterable[Word]) -> bool:
    return any(s in w for s in pieces)
