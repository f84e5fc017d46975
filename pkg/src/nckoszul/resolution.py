"""Minimal graded free resolutions and Betti tables.

Two independent constructions are available.

``method="linear"``
    Degree-by-degree linear algebra: the kernel of each map is computed in
    every internal degree on the normal-word basis, and new generators are
    chosen as a complement of the image of the generators already found.
    Handles the trivial module and cyclic modules ``A/AJA``.  Cost grows with
    ``dim A_j``, so it is meant for small algebras and bounds.

``method="anick"``
    The normalized bar resolution collapsed by the algebraic Morse matching
    whose critical cells are the Anick chains, followed by Gaussian
    elimination of the unit entries.  Cost grows with the number of chains,
    which is what makes the 8- and 13-generator examples tractable.
    Trivial module only.

Maps act on row vectors by right multiplication: row ``r`` of a matrix is
the image of source generator ``r``, as a sparse dict ``{target column: element}``
whose values are normal-form elements ``{word: coeff}`` of the algebra.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .field import Field
from .linalg import Echelon, left_kernel
from .quotient import QuotientAlgebra
from .words import Poly, Word


class ResolutionError(ValueError):
    pass


Element = dict  # {word: coeff}, normal form


@dataclass
class FreeModule:
    degrees: list[int]

    def __len__(self):
        return len(self.degrees)

    def count(self, j: int) -> int:
        return sum(1 for d in self.degrees if d == j)


@dataclass
class GradedMap:
    source: FreeModule
    target: FreeModule
    rows: list[dict]  # rows[r] = {c: element}

    def entry(self, r: int, c: int) -> Element:
        return self.rows[r].get(c, {})

    def dense(self, algebra: QuotientAlgebra) -> list[list[Poly]]:
        f = algebra.field
        return [[Poly(f, row.get(c, {})) for c in range(len(self.target))] for row in self.rows]

    def show(self, algebra: QuotientAlgebra) -> list[list[str]]:
        return [[p.show(algebra.alphabet) for p in row] for row in self.dense(algebra)]


@dataclass
class BettiTable:
    """(i, j) -> dim Ext^{i,j}, decided for all i <= imax and j <= certified_degree."""

    entries: dict
    imax: int
    jmax: int
    certified_degree: int
    method: str = ""
    undecided: list = dc_field(default_factory=list)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def support(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.entries.items() if v)

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in self.entries.items() if a == i and v}

    def total(self, i: int) -> int:
        return sum(self.row(i).values())

    def is_certified(self, i: int, j: int) -> bool:
        return i <= self.imax and j <= self.certified_degree

    def restrict(self, imax: int, jmax: int) -> "BettiTable":
        ents = {k: v for k, v in self.entries.items() if k[0] <= imax and k[1] <= jmax and v}
        return BettiTable(ents, imax, jmax, min(self.certified_degree, jmax), self.method)

    def same_entries(self, other: "BettiTable", imax: int | None = None, jmax: int | None = None) -> bool:
        imax = min(self.imax, other.imax) if imax is None else imax
        jmax = min(self.certified_degree, other.certified_degree) if jmax is None else jmax
        return self.restrict(imax, jmax).entries == other.restrict(imax, jmax).entries

    def euler(self, j: int) -> int:
        return sum((-1) ** i * v for (i, jj), v in self.entries.items() if jj == j)

    def rows_csv(self) -> list[tuple[int, int, int, bool]]:
        return [(i, j, v, self.is_certified(i, j)) for (i, j), v in sorted(self.entries.items()) if v]


@dataclass
class Resolution:
    algebra: QuotientAlgebra
    modules: list[FreeModule]
    maps: list[GradedMap | None]  # maps[i]: F_i -> F_{i-1}; maps[0] is None
    module_spec: object
    imax: int
    jmax: int
    certified_degree: int
    method: str
    notes: list[str] = dc_field(default_factory=list)

    @property
    def length(self) -> int:
        """Largest i <= imax with F_i nonzero."""
        return max((i for i, m in enumerate(self.modules) if len(m)), default=0)


# ---------------------------------------------------------------------------
# shared helpers


def _mul_elem(Q: QuotientAlgebra, a: Element, b: Element) -> Element:
    f = Q.field
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            f.addmul(out, f.mul(x, y), Q.word_product(u, v))
    return out


def _left_word(Q: QuotientAlgebra, w: Word, b: Element) -> Element:
    f = Q.field
    out: dict = {}
    for v, y in b.items():
        f.addmul(out, y, Q.word_product(w, v))
    return out


def compose_rows(Q: QuotientAlgebra, upper: GradedMap, lower: GradedMap) -> list[dict]:
    """Matrix product ``upper * lower`` with entries reduced in the algebra."""
    f = Q.field
    out = []
    for row in upper.rows:
        acc: dict = {}
        for c, a in row.items():
            for k, b in lower.rows[c].items():
                prod = _mul_elem(Q, a, b)
                if prod:
                    cur = acc.setdefault(k, {})
                    f.addmul(cur, f.one, prod)
                    if not cur:
                        del acc[k]
        out.append(acc)
    return out


def check_complex(res: Resolution) -> bool:
    """Every composite of consecutive maps is zero."""
    Q = res.algebra
    for i in range(2, len(res.maps)):
        if any(compose_rows(Q, res.maps[i], res.maps[i - 1])):
            return False
    return True


def check_minimal(res: Resolution) -> bool:
    """No matrix entry has a nonzero constant term."""
    for m in res.maps[1:]:
        for row in m.rows:
            for e in row.values():
                if "" in e:
                    return False
    return True


def _betti_from_modules(modules: list[FreeModule], imax: int, jmax: int) -> dict:
    ents = {}
    for i, m in enumerate(modules[: imax + 1]):
        for d in m.degrees:
            if d <= jmax:
                ents[(i, d)] = ents.get((i, d), 0) + 1
    return ents


def betti_table(res: Resolution) -> BettiTable:
    ents = _betti_from_modules(res.modules, res.imax, res.certified_degree)
    return BettiTable(ents, res.imax, res.jmax, res.certified_degree, res.method)


# ---------------------------------------------------------------------------
# degree-wise linear algebra


class _DegreeBasis:
    """Coordinates of a free module in one internal degree: (gen, word) pairs."""

    def __init__(self, Q: QuotientAlgebra, module: FreeModule, j: int):
        self.offsets = {}
        self.pairs: list[tuple[int, Word]] = []
        for g, d in enumerate(module.degrees):
            if d <= j:
                self.offsets[g] = len(self.pairs)
                self.pairs.extend((g, w) for w in Q.normal_words(j - d))
        self.Q = Q
        self.j = j
        self.module = module

    def __len__(self):
        return len(self.pairs)

    def vector(self, elem: dict) -> dict:
        """{gen: element} -> coordinate dict."""
        out = {}
        for g, e in elem.items():
            if not e:
                continue
            idx = self.Q.word_index(self.j - self.module.degrees[g])
            off = self.offsets[g]
            for w, c in e.items():
                out[off + idx[w]] = c
        return out

    def element(self, vec: dict) -> dict:
        out: dict = {}
        for k, c in vec.items():
            g, w = self.pairs[k]
            out.setdefault(g, {})[w] = c
        return out


def _apply_word(Q: QuotientAlgebra, w: Word, row: dict) -> dict:
    """w * (image row) as {target gen: element}."""
    out = {}
    for c, e in row.items():
        p = _left_word(Q, w, e)
        if p:
            out[c] = p
    return out


def _first_syzygies(Q: QuotientAlgebra, module_spec, jmax: int) -> tuple[FreeModule, list[dict]]:
    """Generators of F_1 and their images in F_0 = A."""
    f = Q.field
    if module_spec is None:
        gens = [{0: {x: f.one}} for x in Q.letters]
        return FreeModule([1] * len(gens)), gens
    ideal = Q.two_sided_ideal(list(module_spec), jmax)
    degrees, images = [], []
    for j in range(1, jmax + 1):
        e = Echelon(f)
        words = Q.normal_words(j - 1)
        for row in ideal.components[j - 1].rows.values():
            terms = {words[i]: c for i, c in row.items()}
            for x in Q.letters:
                e.add(Q.vector(Q.nf({x + w: c for w, c in terms.items()}), j))
        for piv in sorted(ideal.components[j].rows, reverse=True):
            row = ideal.components[j].rows[piv]
            if e.add(row) is not None:
                degrees.append(j)
                images.append({0: Q.element(row, j).terms})
    return FreeModule(degrees), images


def _linear_resolution(Q: QuotientAlgebra, module_spec, imax: int, jmax: int) -> tuple[list, list]:
    f = Q.field
    F0 = FreeModule([0])
    F1, rows1 = _first_syzygies(Q, module_spec, jmax)
    modules = [F0, F1]
    maps: list = [None, GradedMap(F1, F0, rows1)]
    for i in range(1, imax):
        src, rows = modules[i], maps[i].rows
        nxt_deg: list[int] = []
        nxt_rows: list[dict] = []
        for j in range(min(src.degrees, default=jmax + 1), jmax + 1):
            dom = _DegreeBasis(Q, src, j)
            if not len(dom):
                continue
            cod = _DegreeBasis(Q, modules[i - 1], j)
            images = [cod.vector(_apply_word(Q, w, rows[g])) for g, w in dom.pairs]
            kernel = left_kernel(f, images)
            if not kernel:
                continue
            span = Echelon(f)
            for h, d in enumerate(nxt_deg):
                if d < j:
                    for u in Q.normal_words(j - d):
                        span.add(dom.vector(_apply_word(Q, u, nxt_rows[h])))
            for k in kernel:
                if span.add(k) is not None:
                    nxt_deg.append(j)
                    nxt_rows.append(dom.element(k))
        F = FreeModule(nxt_deg)
        modules.append(F)
        maps.append(GradedMap(F, src, nxt_rows))
    return modules, maps


# ---------------------------------------------------------------------------
# Anick chains and the Morse-reduced bar resolution


class MorseBar:
    """Algebraic Morse matching on the normalized bar resolution of k.

    Cells are tuples of nonempty normal words.  The bar differential is
    ``d[w1|...|wn] = w1 [w2|...|wn] + sum_t (-1)^t [..|w_t w_{t+1}|..]``.
    A cell is critical iff it is an Anick chain ("fully attached"): ``w1`` is a
    letter and each ``w_t w_{t+1}`` is reducible while ``w_t u`` is normal for
    every proper prefix ``u`` of ``w_{t+1}``.
    """

    def __init__(self, Q: QuotientAlgebra, with_action: bool = True):
        self.Q = Q
        self.f = Q.field
        self.with_action = with_action
        self.rewriter = Q.basis.rewriter
        self._reducible_prefix: dict[tuple[Word, Word], int | None] = {}

    def reducible_prefix(self, a: Word, b: Word) -> int | None:
        """Smallest k >= 1 with ``a + b[:k]`` reducible, or None."""
        key = (a, b)
        hit = self._reducible_prefix.get(key, -1)
        if hit != -1:
            return hit
        rules = self.rewriter.rules
        lengths = self.rewriter.lengths
        ab = a + b
        n = len(a)
        res = None
        for end in range(n + 1, len(ab) + 1):
            for L in lengths:
                s = end - L
                if s < 0:
                    break
                if s < n and ab[s:end] in rules:
                    res = end - n
                    break
            if res is not None:
                break
        self._reducible_prefix[key] = res
        return res

    def attached(self, a: Word, b: Word) -> bool:
        return self.reducible_prefix(a, b) == len(b)

    def chains(self, nmax: int, jmax: int) -> list[list[tuple[Word, ...]]]:
        """chains[n] = Anick chains with n entries and degree <= jmax."""
        rules = list(self.rewriter.rules)
        out: list[list] = [[()], [(x,) for x in self.Q.letters] if jmax >= 1 else []]
        for n in range(2, nmax + 1):
            level = []
            for c in out[n - 1]:
                deg = sum(map(len, c))
                last = c[-1]
                tails = set()
                for lw in rules:
                    for s in range(max(0, len(last) - len(lw) + 1), len(last)):
                        k = len(last) - s
                        if lw[:k] == last[s:] and len(lw) > k:
                            tails.add(lw[k:])
                for t in sorted(tails, key=lambda w: (len(w), w)):
                    if deg + len(t) <= jmax and self.attached(last, t) and self.rewriter.is_normal(t):
                        level.append(c + (t,))
            out.append(sorted(level, key=_cell_sort))
        return out

    def classify(self, cell):
        """('critical',) | ('upper',) | ('lower', partner, sign)."""
        if not cell:
            return ("critical",)
        first = cell[0]
        if len(first) > 1:
            return ("lower", (first[:1], first[1:]) + cell[1:], -1)
        t = 1
        n = len(cell)
        while t < n and self.attached(cell[t - 1], cell[t]):
            t += 1
        if t == n:
            return ("critical",)
        k = self.reducible_prefix(cell[t - 1], cell[t])
        if k is None:
            return ("upper",)
        w = cell[t]
        partner = cell[:t] + (w[:k], w[k:]) + cell[t + 1:]
        return ("lower", partner, -1 if (t + 1) % 2 else 1)

    def boundary(self, cell) -> list[tuple[tuple, Element]]:
        """Bar differential as [(cell, coefficient element)]."""
        f = self.f
        out = []
        if self.with_action:
            out.append((cell[1:], {cell[0]: f.one}))
        one = f.one
        for t in range(1, len(cell)):
            prod = self.Q.word_product(cell[t - 1], cell[t])
            sign = one if t % 2 == 0 else f.neg(one)
            for w, c in prod.items():
                out.append((cell[: t - 1] + (w,) + cell[t + 1:], {"": f.mul(sign, c)}))
        return out

    def differential(self, chain) -> dict:
        """Morse differential of a critical cell: {critical cell: element}."""
        f = self.f
        Q = self.Q
        acc: dict = {}
        heap: list = []

        def push(cell, coeff: Element):
            if not coeff:
                return
            cur = acc.get(cell)
            if cur is None:
                acc[cell] = dict(coeff)
                heapq.heappush(heap, (_cell_heap_key(cell), cell))
            else:
                f.addmul(cur, f.one, coeff)
                if not cur:
                    del acc[cell]

        for cell, coeff in self.boundary(chain):
            push(cell, coeff)
        result = {}
        while heap:
            _, cell = heapq.heappop(heap)
            coeff = acc.pop(cell, None)
            if coeff is None:
                continue
            kind = self.classify(cell)
            if kind[0] == "critical":
                result[cell] = coeff
                continue
            if kind[0] == "upper":
                continue
            _, partner, sign = kind
            # coeff * cell  ->  -(coeff / sign) * (d(partner) - sign * cell)
            scale = f.neg(f.inv(f.coerce(sign)))
            for c2, e in self.boundary(partner):
                if c2 == cell and set(e) == {""}:
                    e = dict(e)
                    e[""] = f.sub(e[""], f.coerce(sign))
                    if not e[""]:
                        continue
                push(c2, f.scaled(scale, _mul_elem(Q, coeff, e)))
        return result


def _cell_sort(cell):
    return (sum(map(len, cell)), "".join(cell), _cuts(cell))


def _cuts(cell) -> tuple:
    out, pos = [], 0
    for w in cell[:-1]:
        pos += len(w)
        out.append(pos)
    return tuple(out)


def _cell_heap_key(cell):
    w = "".join(cell)
    return (-len(w), tuple(-ord(ch) for ch in w), tuple(-c for c in _cuts(cell)))


def anick_complex(Q: QuotientAlgebra, nmax: int, jmax: int, with_action: bool = True):
    """Anick chains and Morse differentials.

    Returns ``(chains, maps)`` where ``maps[n]`` has one row per n-entry chain,
    indexed into ``chains[n-1]``.
    """
    mb = MorseBar(Q, with_action)
    chains = mb.chains(nmax, jmax)
    maps: list = [None]
    for n in range(1, nmax + 1):
        index = {c: k for k, c in enumerate(chains[n - 1])}
        rows = []
        for c in chains[n]:
            d = mb.differential(c)
            rows.append({index[c2]: e for c2, e in d.items() if e})
        maps.append(rows)
    return chains, maps


def _minimize(Q: QuotientAlgebra, degrees: list[list[int]], maps: list[list[dict]]):
    """Cancel unit entries by Gaussian elimination over the algebra.

    ``maps[n]`` is a list of rows (dict col -> element) from F_n to F_{n-1}.
    Returns new (degrees, maps) with no constant entries left.
    """
    f = Q.field
    alive = [set(range(len(d))) for d in degrees]
    top = len(maps) - 1
    for n in range(1, top + 1):
        rows = maps[n]
        while True:
            pivot = None
            for r in sorted(alive[n], key=lambda r: (degrees[n][r], r)):
                row = rows[r]
                for c in sorted(row):
                    if c in alive[n - 1] and "" in row[c]:
                        pivot = (r, c)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            r0, c0 = pivot
            lam_inv = f.inv(rows[r0][c0][""])
            prow = {k: e for k, e in rows[r0].items() if k in alive[n - 1] and k != c0}
            for b in alive[n]:
                if b == r0:
                    continue
                gamma = rows[b].get(c0)
                if not gamma or c0 not in alive[n - 1]:
                    continue
                g = f.scaled(f.neg(lam_inv), gamma)
                rb = rows[b]
                for k, delta in prow.items():
                    prod = _mul_elem(Q, g, delta)
                    if prod:
                        cur = rb.setdefault(k, {})
                        f.addmul(cur, f.one, prod)
                        if not cur:
                            del rb[k]
                del rb[c0]
            alive[n].discard(r0)
            alive[n - 1].discard(c0)
    new_degrees = []
    remap = []
    for n, d in enumerate(degrees):
        keep = sorted(alive[n])
        remap.append({old: new for new, old in enumerate(keep)})
        new_degrees.append([d[k] for k in keep])
    new_maps: list = [None]
    for n in range(1, top + 1):
        rows = []
        for r in sorted(alive[n]):
            rows.append({remap[n - 1][c]: e for c, e in maps[n][r].items() if c in alive[n - 1] and e})
        new_maps.append(rows)
    return new_degrees, new_maps


def _anick_resolution(Q: QuotientAlgebra, imax: int, jmax: int):
    chains, rows = anick_complex(Q, imax + 1, jmax, with_action=True)
    degrees = [[sum(map(len, c)) for c in level] for level in chains]
    degrees, rows = _minimize(Q, degrees, rows)
    modules = [FreeModule(d) for d in degrees[: imax + 1]]
    maps: list = [None] + [GradedMap(modules[n], modules[n - 1], rows[n]) for n in range(1, imax + 1)]
    return modules, maps


def anick_betti(Q: QuotientAlgebra, imax: int, jmax: int) -> BettiTable:
    """Betti numbers from the ranks of the scalar Morse complex (no minimization)."""
    f = Q.field
    chains, maps = anick_complex(Q, imax + 1, jmax, with_action=False)
    ranks = {}
    for n in range(1, imax + 2):
        by_deg: dict[int, list[dict]] = {}
        for c, row in zip(chains[n], maps[n]):
            by_deg.setdefault(sum(map(len, c)), []).append({k: e[""] for k, e in row.items() if "" in e})
        for j, rws in by_deg.items():
            e = Echelon(f)
            for r in rws:
                e.add(r)
            ranks[(n, j)] = e.rank
    ents = {}
    for n in range(0, imax + 1):
        counts: dict[int, int] = {}
        for c in chains[n]:
            j = sum(map(len, c))
            counts[j] = counts.get(j, 0) + 1
        for j, cnt in counts.items():
            b = cnt - ranks.get((n, j), 0) - ranks.get((n + 1, j), 0)
            if b:
                ents[(n, j)] = b
    return BettiTable(ents, imax, jmax, jmax, "anick-scalar")


# ---------------------------------------------------------------------------


def _certified_degree(Q: QuotientAlgebra, jmax: int) -> int:
    if not Q.basis.complete_at_truncation:
        raise ResolutionError("Gröbner basis incomplete at its truncation; resolution refused")
    t = Q.trusted_degree
    return int(min(jmax, t))


def minimal_resolution(Q: QuotientAlgebra, module_spec=None, imax: int = 6, jmax: int = 12,
                       method: str = "auto") -> Resolution:
    """Minimal graded free resolution of k (``module_spec=None``) or of the
    cyclic module ``A/AJA`` (``module_spec`` = list of polynomials J)."""
    cert = _certified_degree(Q, jmax)
    if method == "auto":
        method = "anick" if module_spec is None else "linear"
    if method == "anick":
        if module_spec is not None:
            raise ResolutionError("the Anick method resolves the trivial module only")
        modules, maps = _anick_resolution(Q, imax, cert)
    elif method == "linear":
        modules, maps = _linear_resolution(Q, module_spec, imax, cert)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Resolution(Q, modules, maps, module_spec, imax, jmax, cert, method)


# ---------------------------------------------------------------------------
# monomial algebras: the left-annihilator graph


@dataclass
class AnnihilatorGraph:
    """Vertices are normal monomials; ``u -> v`` when u is a minimal left
    annihilator of v.  An edge is essential when ``uv`` is itself an
    obstruction and inessential (drawn dotted) when the obstruction ends
    strictly inside v."""

    alphabet: object
    vertices: list[Word]
    seeds: list[Word]
    edges: list[tuple[Word, Word, bool]]
    degree_bound: int

    def successors(self, v: Word) -> list[Word]:
        return [a for a, b, _ in self.edges if b == v]

    def edge_set(self, essential: bool | None = None) -> set[tuple[str, str]]:
        show = self.alphabet.compact
        return {(show(a), show(b)) for a, b, e in self.edges if essential is None or e == essential}


def minimal_left_annihilators(leads, v: Word, is_normal) -> list[tuple[Word, bool]]:
    """Minimal monomials u with ``u v`` reducible, as (u, essential) pairs."""
    out = {}
    for s in leads:
        for k in range(1, len(s)):
            tail = s[k:]
            if len(tail) > len(v) or not v.startswith(tail):
                continue
            u = s[:k]
            if not is_normal(u) or not is_normal(u[1:] + v):
                continue
            essential = tail == v
            out[u] = out.get(u, False) or essential
    return sorted(out.items(), key=lambda t: (len(t[0]), t[0]))


def module_seed_words(Q: QuotientAlgebra, J: list[Word], degree_bound: int) -> list[Word]:
    """Minimal generators of the left ideal ``A J A`` of a monomial algebra, up to a degree."""
    J = sorted({w for w in J if Q.basis.is_normal(w)}, key=lambda w: (len(w), w))
    if not J:
        return []

    def j_free(w):
        return not any(j in w for j in J)

    out = []
    frontier = [j for j in J if j_free(j[1:]) and len(j) <= degree_bound]
    while frontier:
        nxt = []
        for w in frontier:
            out.append(w)
            if len(w) < degree_bound:
                for x in Q.letters:
                    u = w + x
                    if Q.basis.is_normal(u) and j_free(u[1:]):
                        nxt.append(u)
        frontier = nxt
    return sorted(set(out), key=lambda w: (len(w), w))


def annihilator_graph(Q: QuotientAlgebra, J: list[Word] | None = None, degree_bound: int | None = None) -> AnnihilatorGraph:
    """Left-annihilator graph seeded by the generators (``J=None``) or by the
    minimal generators of ``A J A`` for monomials J."""
    if not Q.is_monomial():
        raise ResolutionError("annihilator graph needs a monomial algebra")
    bound = Q.degree_bound if degree_bound is None else degree_bound
    leads = Q.basis.leading_words
    is_normal = Q.basis.is_normal
    seeds = list(Q.letters) if J is None else module_seed_words(Q, J, bound)
    seen = set(seeds)
    order = list(seeds)
    edges = []
    queue = list(seeds)
    while queue:
        v = queue.pop(0)
        for u, ess in minimal_left_annihilators(leads, v, is_normal):
            if len(u) > bound:
                continue
            edges.append((u, v, ess))
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    vertices = sorted(order, key=lambda w: (len(w), w))
    edges.sort(key=lambda e: ((len(e[0]), e[0]), (len(e[1]), e[1])))
    return AnnihilatorGraph(Q.alphabet, vertices, sorted(seeds, key=lambda w: (len(w), w)), edges, bound)


def resolution_from_graph(G: AnnihilatorGraph, imax: int, jmax: int | None = None) -> BettiTable:
    """Betti numbers from paths ending at a seed vertex: a path of i vertices
    with degree sum j contributes to beta_{i,j}."""
    jmax = G.degree_bound if jmax is None else jmax
    ents = {(0, 0): 1}
    into: dict[Word, list[Word]] = {}
    for u, v, _ in G.edges:
        into.setdefault(v, []).append(u)
    level = {v: {len(v): 1} for v in G.seeds if len(v) <= jmax}
    for i in range(1, imax + 1):
        for counts in level.values():
            for j, c in counts.items():
                ents[(i, j)] = ents.get((i, j), 0) + c
        nxt: dict[Word, dict[int, int]] = {}
        for v, counts in level.items():
            for u in into.get(v, ()):
                tgt = nxt.setdefault(u, {})
                for j, c in counts.items():
                    if j + len(u) <= jmax:
                        tgt[j + len(u)] = tgt.get(j + len(u), 0) + c
        level = {u: c for u, c in nxt.items() if c}
    return BettiTable(ents, imax, jmax, jmax, "annihilator-graph")


def export_dot(G: AnnihilatorGraph, name: str = "annihilators") -> str:
    show = G.alphabet.compact
    lines = [f"digraph {name} {{"]
    for v in G.vertices:
        lines.append(f'  "{show(v)}";')
    for u, v, ess in G.edges:
        style = "" if ess else " [style=dotted]"
        lines.append(f'  "{show(u)}" -> "{show(v)}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
