"""Quotient algebras T(V)/I as computational objects.

Normal words are enumerated lazily per degree (algebras on 8
or 13 generators have far too many words in degree 12 to list eagerly); the
Hilbert function is counted with an automaton on the leading words and never
needs the words themselves.
"""

from __future__ import annotations

from functools import cached_property

from .field import Field
from .groebner import GroebnerBasis, Presentation, complete
from .linalg import Echelon
from .words import Poly, Word


class DegreeBoundError(ValueError):
    pass


class QuotientAlgebra:
    def __init__(self, presentation: Presentation, basis: GroebnerBasis, degree_bound: int):
        self.presentation = presentation
        self.basis = basis
        self.degree_bound = degree_bound
        self.field: Field = presentation.field
        self.alphabet = presentation.alphabet
        self.letters = [chr(i) for i in range(len(self.alphabet))]
        self._normal: dict[int, list[Word]] = {0: [""]}
        self._index: dict[int, dict[Word, int]] = {}

    @property
    def trusted_degree(self) -> float:
        return self.basis.trusted_degree

    @property
    def certified(self) -> bool:
        """True when the Gröbner basis is complete with no truncation."""
        return self.basis.finite

    def check_degree(self, j: int) -> None:
        if j > self.trusted_degree:
            raise DegreeBoundError(f"degree {j} exceeds trusted degree {self.trusted_degree}")

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.basis.elements)

    # -- bases ------------------------------------------------------------------

    def normal_words(self, j: int) -> list[Word]:
        """Degree-j normal words in increasing deglex order."""
        self.check_degree(j)
        if j in self._normal:
            return self._normal[j]
        prev = self.normal_words(j - 1)
        leads = set(self.basis.leading_words)
        lengths = sorted({len(w) for w in leads})
        out = []
        for u in prev:
            for x in self.letters:
                w = u + x
                if not any(len(w) >= L and w[-L:] in leads for L in lengths):
                    out.append(w)
        self._normal[j] = out
        return out

    def word_index(self, j: int) -> dict[Word, int]:
        idx = self._index.get(j)
        if idx is None:
            idx = self._index[j] = {w: i for i, w in enumerate(self.normal_words(j))}
        return idx

    @cached_property
    def _automaton(self):
        """Aho-Corasick automaton on the leading words: (delta, dead)."""
        leads = self.basis.leading_words
        nletters = len(self.letters)
        goto = [dict()]
        dead = [False]
        for w in leads:
            s = 0
            for ch in w:
                if ch not in goto[s]:
                    goto.append(dict())
                    dead.append(False)
                    goto[s][ch] = len(goto) - 1
                s = goto[s][ch]
            dead[s] = True
        fail = [0] * len(goto)
        order = []
        queue = list(goto[0].values())
        while queue:
            s = queue.pop(0)
            order.append(s)
            for ch, t in goto[s].items():
                f = fail[s]
                while f and ch not in goto[f]:
                    f = fail[f]
                fail[t] = goto[f][ch] if ch in goto[f] and goto[f][ch] != t else 0
                dead[t] = dead[t] or dead[fail[t]]
                queue.append(t)
        delta = []
        for s in range(len(goto)):
            row = []
            for x in self.letters[:nletters]:
                t = s
                while t and x not in goto[t]:
                    t = fail[t]
                row.append(goto[t].get(x, 0))
            delta.append(row)
        return delta, dead

    def hilbert(self, upto: int) -> list[int]:
        """dim A_j for j = 0..upto, counted on the automaton."""
        delta, dead = self._automaton
        counts = {0: 1}
        out = [1]
        for _ in range(upto):
            nxt: dict[int, int] = {}
            for s, c in counts.items():
                for t in delta[s]:
                    if not dead[t]:
                        nxt[t] = nxt.get(t, 0) + c
            counts = nxt
            out.append(sum(counts.values()))
        return out

    def inverse_hilbert(self, upto: int) -> list[int]:
        """Coefficients of 1/H_A(t) up to t^upto."""
        return series_inverse(self.hilbert(upto))

    # -- arithmetic ---------------------------------------------------------------

    def reduce(self, p: Poly) -> Poly:
        for w in p.terms:
            self.check_degree(len(w))
        return self.basis.normal_form(p)

    def mul(self, p: Poly, q: Poly) -> Poly:
        return self.reduce(p * q)

    def nf(self, terms: dict) -> dict:
        return self.basis.nf(terms)

    def word_product(self, u: Word, v: Word) -> dict:
        return self.basis.nf_word(u + v)

    def vector(self, terms: dict, j: int) -> dict:
        """Coordinates of a reduced degree-j element on the normal-word basis."""
        idx = self.word_index(j)
        return {idx[w]: c for w, c in terms.items()}

    def element(self, vec: dict, j: int) -> Poly:
        words = self.normal_words(j)
        return Poly(self.field, {words[i]: c for i, c in vec.items()})

    def poly(self, text_pairs) -> Poly:
        return self.presentation.poly(text_pairs)

    # -- ideals -------------------------------------------------------------------

    def left_ideal(self, gens, degree_bound: int) -> "GradedSubspace":
        return self._ideal(gens, degree_bound, two_sided=False)

    def two_sided_ideal(self, gens, degree_bound: int) -> "GradedSubspace":
        return self._ideal(gens, degree_bound, two_sided=True)

    def _ideal(self, gens, degree_bound: int, two_sided: bool) -> "GradedSubspace":
        self.check_degree(degree_bound)
        f = self.field
        by_deg: dict[int, list[dict]] = {}
        for g in gens:
            g = self.reduce(g)
            if g:
                if not g.is_homogeneous():
                    raise ValueError("ideal generators must be homogeneous")
                by_deg.setdefault(g.degree, []).append(g.terms)
        comps: dict[int, Echelon] = {}
        prev: list[dict] = []
        for j in range(0, degree_bound + 1):
            e = Echelon(f, reduced=True)
            words = self.normal_words(j - 1) if j > 0 else []
            for row in prev:
                terms = {words[i]: c for i, c in row.items()}
                for x in self.letters:
                    e.add(self.vector(self.nf({x + w: c for w, c in terms.items()}), j))
                    if two_sided:
                        e.add(self.vector(self.nf({w + x: c for w, c in terms.items()}), j))
            for t in by_deg.get(j, []):
                e.add(self.vector(t, j))
            comps[j] = e
            prev = list(e.rows.values())
        return GradedSubspace(self, comps)

    def __repr__(self):
        return f"QuotientAlgebra({len(self.alphabet)} generators, {len(self.basis.elements)} basis elements)"


class GradedSubspace:
    """Per-degree subspaces of a quotient algebra in canonical RREF."""

    def __init__(self, algebra: QuotientAlgebra, components: dict[int, Echelon]):
        self.algebra = algebra
        self.components = components

    @property
    def degree_bound(self) -> int:
        return max(self.components)

    def dim(self, j: int) -> int:
        return self.components[j].rank if j in self.components else 0

    def dims(self) -> list[int]:
        return [self.dim(j) for j in range(self.degree_bound + 1)]

    def basis(self, j: int) -> list[Poly]:
        e = self.components.get(j)
        if e is None:
            return []
        return [self.algebra.element(row, j) for _, row in sorted(e.rows.items(), reverse=True)]

    def contains(self, p: Poly) -> bool:
        p = self.algebra.reduce(p)
        if not p:
            return True
        j = p.degree
        return self.components[j].contains(self.algebra.vector(p.terms, j))

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.first_difference(other) is None

    def first_difference(self, other: "GradedSubspace") -> int | None:
        for j in sorted(set(self.components) | set(other.components)):
            a, b = self.components.get(j), other.components.get(j)
            if (a.canonical() if a else []) != (b.canonical() if b else []):
                return j
        return None


def build_quotient(P: Presentation, degree_bound: int) -> QuotientAlgebra:
    if degree_bound < 2:
        raise ValueError("degree bound must be at least 2")
    top = max([degree_bound, *P.relation_degrees])
    return QuotientAlgebra(P, complete(P, top), degree_bound)


def reduce_in_algebra(Q: QuotientAlgebra, p: Poly) -> Poly:
    return Q.reduce(p)


def series_inverse(h: list[int]) -> list[int]:
    """Inverse of a power series with constant term 1 (integer coefficients)."""
    if not h or h[0] != 1:
        raise ValueError("series must start with 1")
    inv = [1]
    for n in range(1, len(h)):
        inv.append(-sum(h[k] * inv[n - k] for k in range(1, n + 1)))
    return inv


def series_mul(a: list, b: list, upto: int) -> list:
    return [sum(a[k] * b[n - k] for k in range(n + 1) if k < len(a) and n - k < len(b)) for n in range(upto + 1)]
