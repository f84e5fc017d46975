"""Degree-truncated noncommutative Gröbner bases for homogeneous ideals.

Completion runs degree by degree.  In degree ``n`` the candidates are the
input relations of degree ``n`` and the S-polynomials of all overlap
ambiguities of degree ``n``; they are reduced by the basis found so far and
then put into reduced row echelon form together.  The rows become the new
basis elements, so the result is the (unique) reduced Gröbner basis of the
ideal, truncated at the requested degree.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import Field
from .linalg import Echelon
from .words import Alphabet, Poly, Word, deglex_key


class PresentationError(ValueError):
    pass


@dataclass
class Presentation:
    """Generators plus homogeneous relations over a field.

    ``groups`` optionally names subsets of the relations (``g2``/``gd``) by
    index into ``relations``.
    """

    alphabet: Alphabet
    relations: list[Poly]
    field: Field
    groups: dict[str, list[int]] = dc_field(default_factory=dict)

    def __post_init__(self):
        for k, r in enumerate(self.relations):
            if r.field != self.field:
                raise PresentationError(f"relation {k} is over {r.field}, not {self.field}")
            if not r:
                raise PresentationError(f"relation {k} is zero")
            if not r.is_homogeneous():
                raise PresentationError(f"relation {k} is not homogeneous")
            if r.degree < 2:
                raise PresentationError(f"relation {k} has degree {r.degree} < 2")
            for w in r.terms:
                self.alphabet.validate(w)

    @property
    def relation_degrees(self) -> set[int]:
        return {r.degree for r in self.relations}

    def is_monomial(self) -> bool:
        return all(r.is_monomial() for r in self.relations)

    def group(self, name: str) -> list[Poly]:
        return [self.relations[k] for k in self.groups.get(name, [])]

    def with_relations(self, relations: Sequence[Poly], groups=None) -> "Presentation":
        return Presentation(self.alphabet, list(relations), self.field, dict(groups or {}))

    def poly(self, pairs) -> Poly:
        """Build a polynomial from ``[(word-as-names, coeff), ...]``."""
        return Poly.from_pairs(self.field, [(self.alphabet.word(w), c) for w, c in pairs])


class Rewriter:
    """Rewriting modulo a list of monic polynomials (leading word -> tail).

    Reduction always rewrites at the leftmost occurrence of a leading word
    (the shortest one if several start there).  Word normal forms are
    memoised, which makes reducing a polynomial a linear map; this coincides
    with the strategy "rewrite the greatest reducible word first".
    """

    def __init__(self, field: Field, elements: Iterable[Poly] = ()):
        self.field = field
        self.rules: dict[Word, dict] = {}
        self.lengths: list[int] = []
        self._cache: dict[Word, dict] = {}
        for g in elements:
            self.add(g)

    def add(self, g: Poly) -> None:
        f = self.field
        lead, c = g.leading_term()
        if lead in self.rules:
            return
        inv = f.inv(c)
        tail = {w: f.neg(f.mul(inv, v)) for w, v in g.terms.items() if w != lead}
        self.rules[lead] = tail
        if len(lead) not in self.lengths:
            self.lengths.append(len(lead))
            self.lengths.sort()
        n = len(lead)
        self._cache = {w: v for w, v in self._cache.items() if len(w) < n}

    def find(self, w: Word) -> tuple[int, int] | None:
        rules = self.rules
        for s in range(len(w)):
            for L in self.lengths:
                if s + L > len(w):
                    break
                if w[s:s + L] in rules:
                    return s, L
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None

    def nf_word(self, w: Word) -> dict:
        """Normal form of a word as ``{word: coeff}``; do not mutate the result."""
        cache = self._cache
        hit = cache.get(w)
        if hit is not None:
            return hit
        f = self.field
        one = f.one
        stack = [w]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            m = self.find(u)
            if m is None:
                cache[u] = {u: one}
                stack.pop()
                continue
            s, L = m
            pre, post = u[:s], u[s + L:]
            tail = self.rules[u[s:s + L]]
            missing = [pre + t + post for t in tail if pre + t + post not in cache]
            if missing:
                stack.extend(missing)
                continue
            res: dict = {}
            for t, c in tail.items():
                f.addmul(res, c, cache[pre + t + post])
            cache[u] = res
            stack.pop()
        return cache[w]

    def nf(self, terms: dict) -> dict:
        f = self.field
        out: dict = {}
        for w, c in terms.items():
            f.addmul(out, c, self.nf_word(w))
        return out

    def trace(self, terms: dict) -> tuple[dict, list[tuple[object, Word, Word, Word]]]:
        """Reduce greatest-reducible-word first, recording each rewrite step.

        Returns ``(normal form, steps)`` where each step is
        ``(coeff, left, leading word, right)``: the step subtracted
        ``coeff * left * g * right`` for the element ``g`` with that leading
        word.  Summing the steps back reproduces ``terms - normal form``.
        """
        f = self.field
        cur = dict(terms)
        steps = []
        done: set = set()
        while True:
            cands = [w for w in cur if w not in done]
            if not cands:
                return cur, steps
            w = max(cands, key=deglex_key)
            m = self.find(w)
            if m is None:
                done.add(w)
                continue
            s, L = m
            c = cur.pop(w)
            lead = w[s:s + L]
            pre, post = w[:s], w[s + L:]
            for t, v in self.rules[lead].items():
                f.addmul(cur, f.mul(c, v), {pre + t + post: f.one})
            steps.append((c, pre, lead, post))


@dataclass
class GroebnerBasis:
    """Reduced, monic, degree-truncated Gröbner basis.

    ``complete_at_truncation``: every ambiguity of degree <= truncation_degree
    resolves.  ``finite``: every ambiguity of the (finite) element set
    resolves in every degree, i.e. this is a Gröbner basis with no truncation.
    """

    alphabet: Alphabet
    field: Field
    elements: list[Poly]
    truncation_degree: int
    complete_at_truncation: bool
    finite: bool = False

    def __post_init__(self):
        self.rewriter = Rewriter(self.field, self.elements)

    @property
    def leading_words(self) -> list[Word]:
        return [g.leading_word for g in self.elements]

    @property
    def trusted_degree(self) -> float:
        """Largest degree in which the basis is certified."""
        if not self.complete_at_truncation:
            return -1
        return float("inf") if self.finite else self.truncation_degree

    def normal_form(self, p: Poly) -> Poly:
        return Poly(self.field, self.rewriter.nf(p.terms))

    def nf(self, terms: dict) -> dict:
        return self.rewriter.nf(terms)

    def nf_word(self, w: Word) -> dict:
        return self.rewriter.nf_word(w)

    def is_normal(self, w: Word) -> bool:
        return self.rewriter.is_normal(w)

    def show(self) -> list[str]:
        return [g.show(self.alphabet) for g in self.elements]


def _overlaps(la: Word, lb: Word):
    """Proper overlaps: suffix of ``la`` equal to a prefix of ``lb``."""
    for k in range(1, min(len(la), len(lb))):
        if la[-k:] == lb[:k]:
            yield k


def _spoly(field: Field, ga: dict, la: Word, gb: dict, lb: Word, k: int) -> dict:
    """S-polynomial ``ga * Y - X * gb`` for ``la = X O``, ``lb = O Y``."""
    X, Y = la[:-k], lb[k:]
    out = {w + Y: c for w, c in ga.items()}
    field.addmul(out, field.neg(field.one), {X + w: c for w, c in gb.items()})
    return out


def complete(P: Presentation, truncation_degree: int) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal of ``P`` up to ``truncation_degree``."""
    f = P.field
    if P.relations and truncation_degree < max(P.relation_degrees):
        raise ValueError("truncation degree below the largest relation degree")
    by_degree: dict[int, list[dict]] = defaultdict(list)
    for r in P.relations:
        by_degree[r.degree].append(r.terms)
    rw = Rewriter(f)
    elems: list[tuple[Word, dict]] = []
    pending: dict[int, list[tuple[int, int, int]]] = defaultdict(list)

    def register(new_idx: list[int]):
        new = set(new_idx)
        for i in range(len(elems)):
            for j in range(len(elems)):
                if i not in new and j not in new:
                    continue
                la, lb = elems[i][0], elems[j][0]
                for k in _overlaps(la, lb):
                    pending[len(la) + len(lb) - k].append((i, j, k))

    degrees = sorted(set(by_degree) | set(pending))
    n = min(degrees) if degrees else truncation_degree + 1
    while n <= truncation_degree:
        cands = [rw.nf(t) for t in by_degree.get(n, [])]
        for i, j, k in pending.pop(n, []):
            (la, ga), (lb, gb) = elems[i], elems[j]
            cands.append(rw.nf(_spoly(f, ga, la, gb, lb, k)))
        cands = [c for c in cands if c]
        if cands:
            words = sorted({w for c in cands for w in c})
            col = {w: i for i, w in enumerate(words)}
            ech = Echelon(f, reduced=True)
            for c in cands:
                ech.add({col[w]: v for w, v in c.items()})
            start = len(elems)
            for piv in sorted(ech.rows):
                row = ech.rows[piv]
                g = {words[i]: v for i, v in row.items()}
                elems.append((words[piv], g))
                rw.add(Poly(f, g))
            register(list(range(start, len(elems))))
        n += 1

    finite = True
    for deg in sorted(pending):
        for i, j, k in pending[deg]:
            (la, ga), (lb, gb) = elems[i], elems[j]
            if rw.nf(_spoly(f, ga, la, gb, lb, k)):
                finite = False
                break
        if not finite:
            break
    elements = [Poly(f, g) for _, g in sorted(elems, key=lambda e: deglex_key(e[0]))]
    return GroebnerBasis(P.alphabet, f, elements, truncation_degree, True, finite)


def ambiguities(leads: Sequence[Word], max_degree: int):
    """All ambiguities of degree <= max_degree, sorted by (deglex word, indices).

    Yields ``(word, kind, i, j, data)``: ``kind`` is ``"overlap"`` with
    ``data = k`` (overlap length) or ``"inclusion"`` with ``data = position``
    of ``leads[j]`` inside ``leads[i]``.
    """
    out = []
    for i, la in enumerate(leads):
        for j, lb in enumerate(leads):
            for k in _overlaps(la, lb):
                w = la + lb[k:]
                if len(w) <= max_degree:
                    out.append((w, "overlap", i, j, k))
            if i != j and len(lb) <= len(la):
                if len(lb) == len(la) and (lb != la or j < i):
                    continue
                pos = la.find(lb)
                while pos >= 0:
                    if len(la) <= max_degree:
                        out.append((la, "inclusion", i, j, pos))
                    pos = la.find(lb, pos + 1)
    out.sort(key=lambda a: (deglex_key(a[0]), a[2], a[3], a[1]))
    return out


def is_groebner(S: Sequence[Poly], alphabet: Alphabet, truncation_degree: int):
    """(True, None) if every ambiguity of S up to the bound reduces to zero,
    else (False, first offending ambiguity word)."""
    if not S:
        return True, None
    f = S[0].field
    monic = [g.monic() for g in S]
    rw = Rewriter(f, monic)
    leads = [g.leading_word for g in monic]
    for w, kind, i, j, data in ambiguities(leads, truncation_degree):
        if kind == "overlap":
            s = _spoly(f, monic[i].terms, leads[i], monic[j].terms, leads[j], data)
        else:
            X, Y = leads[i][:data], leads[i][data + len(leads[j]):]
            s = dict(monic[i].terms)
            f.addmul(s, f.neg(f.one), {X + u + Y: c for u, c in monic[j].terms.items()})
        if rw.nf(s):
            return False, w
    return True, None


def redundancy_check(S: Sequence[Poly], alphabet: Alphabet, truncation_degree: int) -> list[int]:
    """Indices i with S[i] in the ideal generated by the other elements."""
    if not S:
        return []
    f = S[0].field
    out = []
    for i, s in enumerate(S):
        rest = [g for k, g in enumerate(S) if k != i]
        P = Presentation(alphabet, rest, f)
        G = complete(P, max(truncation_degree, s.degree, *(g.degree for g in rest)) if rest else truncation_degree)
        if not G.normal_form(s):
            out.append(i)
    return out


def associated_graded(P: Presentation, truncation_degree: int) -> tuple[Presentation, bool]:
    """Monomial presentation on the leading words of the reduced basis.

    Returns ``(presentation, certified)``; ``certified`` is False when the
    basis is infinite, so the relation list is only valid up to the bound.
    """
    G = complete(P, truncation_degree)
    rels = [Poly.word(P.field, w) for w in G.leading_words]
    return Presentation(P.alphabet, rels, P.field), G.finite


def normal_form(p: Poly, G: GroebnerBasis) -> Poly:
    return G.normal_form(p)
