"""Ext by the reduced cobar complex, cup products, generation and verdicts.

Cochains of bidegree (i, j) are functions on i-tuples of nonempty normal
words of total length j.  The differential is dual to merging neighbours,

    (d f)(w_1, ..., w_{i+1}) = sum_t (-1)^(t+1) f(w_1, ..., NF(w_t w_{t+1}), ..., w_{i+1}),

and the cup product is concatenation of tuples with no extra sign.

Everything is split into blocks by a fine grading that the relations
preserve: the concatenated word itself for monomial algebras, otherwise the
values of the integer linear forms that vanish on every content difference
inside a Gröbner basis element.  For monomial algebras a block whose word has
an internal boundary crossed by no obstruction is a cone (toggle that cut)
and is skipped; this is exact, and can be switched off with ``prune=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product

from .linalg import Echelon, left_kernel
from .quotient import QuotientAlgebra
from .resolution import BettiTable, anick_betti
from .words import Word

DEFAULT_BUDGET = 2_000_000


class CobarBudgetError(RuntimeError):
    def __init__(self, i: int, j: int, size: int, budget: int):
        super().__init__(f"cobar block ({i},{j}) has {size} tuples, budget {budget}")
        self.i, self.j, self.size = i, j, size


def _compositions(j: int, i: int):
    if i == 0:
        if j == 0:
            yield ()
        return
    for first in range(1, j - i + 2):
        for rest in _compositions(j - first, i - 1):
            yield (first,) + rest


def grading_forms(Q: QuotientAlgebra) -> list[tuple[int, ...]]:
    """Integer linear forms on letter-content vectors preserved by the relations."""
    n = len(Q.letters)
    diffs = []
    for g in Q.basis.elements:
        words = list(g.terms)
        c0 = _content(words[0], n)
        for w in words[1:]:
            diffs.append([a - b for a, b in zip(_content(w, n), c0)])
    # nullspace of the difference matrix, over QQ, cleared to integers
    rows = [[Fraction(x) for x in r] for r in diffs]
    pivots = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    forms = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -rows[k][fc]
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        forms.append(tuple(int(x * den) for x in v))
    return forms


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _content(w: Word, n: int) -> list[int]:
    c = [0] * n
    for ch in w:
        c[ord(ch)] += 1
    return c


class CobarComplex:
    """Blocks of the reduced cobar complex, built on demand.

    ``block(i, j)`` maps grading keys to the list of basis tuples.
    """

    def __init__(self, Q: QuotientAlgebra, imax: int, jmax: int, budget: int = DEFAULT_BUDGET,
                 prune: bool = True):
        Q.check_degree(jmax)
        self.Q = Q
        self.f = Q.field
        self.imax, self.jmax = imax, jmax
        self.budget = budget
        self.monomial = Q.is_monomial()
        self.prune = prune and self.monomial
        self.forms = None if self.monomial else grading_forms(Q)
        self._blocks: dict[tuple[int, int], dict] = {}
        self._index: dict = {}
        self._rows: dict = {}
        self._covered: dict[int, list[Word]] | None = None

    # -- grading -------------------------------------------------------------------

    def key_of_word(self, w: Word):
        if self.monomial:
            return w
        n = len(self.Q.letters)
        c = _content(w, n)
        return tuple(sum(a * b for a, b in zip(form, c)) for form in self.forms)

    def combine_keys(self, k1, k2):
        if self.monomial:
            return k1 + k2
        return tuple(a + b for a, b in zip(k1, k2))

    def key_of(self, cell: tuple) -> object:
        if self.monomial:
            return "".join(cell)
        key = tuple(0 for _ in self.forms)
        for w in cell:
            key = self.combine_keys(key, self.key_of_word(w))
        return key

    # -- enumeration -----------------------------------------------------------------

    def size_estimate(self, i: int, j: int) -> int:
        h = self.Q.hilbert(j)
        total = 0
        for comp in _compositions(j, i):
            p = 1
            for part in comp:
                p *= h[part]
            total += p
        return total

    def covered_words(self, j: int) -> list[Word]:
        """Words of length j whose internal boundaries are all crossed by an obstruction."""
        if self._covered is None:
            self._covered = self._enumerate_covered(self.jmax)
        return self._covered.get(j, [])

    def _enumerate_covered(self, jmax: int) -> dict[int, list[Word]]:
        leads = self.Q.basis.leading_words
        out: dict[int, set] = {1: set(self.Q.letters)}
        # state: word W and the start of its last placed obstruction
        stack = [(L, 0) for L in leads if len(L) <= jmax]
        seen = set()
        while stack:
            W, last = stack.pop()
            if (W, last) in seen:
                continue
            seen.add((W, last))
            out.setdefault(len(W), set()).add(W)
            for L in leads:
                for s in range(last + 1, len(W)):
                    k = len(W) - s
                    if k < len(L) and W[s:] == L[:k] and s + len(L) <= jmax:
                        stack.append((W + L[k:], s))
        return {n: sorted(ws) for n, ws in out.items()}

    def _monomial_cells(self, W: Word, i: int) -> list[tuple]:
        n = len(W)
        out = []
        is_normal = self.Q.basis.is_normal

        def rec(start, parts):
            if len(parts) == i - 1:
                piece = W[start:]
                if piece and is_normal(piece):
                    out.append(tuple(parts) + (piece,))
                return
            for end in range(start + 1, n - (i - 1 - len(parts)) + 1):
                piece = W[start:end]
                if not is_normal(piece):
                    break
                parts.append(piece)
                rec(end, parts)
                parts.pop()

        rec(0, [])
        return out

    def block(self, i: int, j: int) -> dict:
        key = (i, j)
        hit = self._blocks.get(key)
        if hit is not None:
            return hit
        blocks: dict = {}
        if i == 0:
            if j == 0:
                blocks[self.key_of(())] = [()]
        elif i > j:
            pass
        elif self.prune:
            size = 0
            for W in self.covered_words(j):
                cells = self._monomial_cells(W, i)
                if cells:
                    blocks[W] = cells
                    size += len(cells)
                    if size > self.budget:
                        raise CobarBudgetError(i, j, size, self.budget)
        else:
            size = self.size_estimate(i, j)
            if size > self.budget:
                raise CobarBudgetError(i, j, size, self.budget)
            by_deg = {}
            for p in range(1, j + 1):
                grouped: dict = {}
                for w in self.Q.normal_words(p):
                    grouped.setdefault(self.key_of_word(w), []).append(w)
                by_deg[p] = grouped
            for comp in _compositions(j, i):
                for keys in product(*(list(by_deg[p]) for p in comp)):
                    total = keys[0]
                    for k in keys[1:]:
                        total = self.combine_keys(total, k)
                    lists = [by_deg[p][k] for p, k in zip(comp, keys)]
                    blocks.setdefault(total, []).extend(product(*lists))
        for k in blocks:
            blocks[k].sort(key=_cell_order)
        self._blocks[key] = blocks
        return blocks

    def cells(self, i: int, j: int, key) -> list[tuple]:
        return self.block(i, j).get(key, [])

    def index(self, i: int, j: int, key) -> dict:
        k = (i, j, key)
        idx = self._index.get(k)
        if idx is None:
            idx = self._index[k] = {c: n for n, c in enumerate(self.cells(i, j, key))}
        return idx

    # -- differential ----------------------------------------------------------------

    def merge_rows(self, i: int, j: int, key) -> list[dict]:
        """Matrix of d: C^{i} -> C^{i+1} on the block, one row per (i+1)-cell.

        Row for tau holds ``(d f)(tau) = sum_sigma row[sigma] f(sigma)``.
        """
        k = (i, j, key)
        hit = self._rows.get(k)
        if hit is not None:
            return hit
        f = self.f
        add, neg = f.add, f.neg
        idx = self.index(i, j, key)
        word_product = self.Q.word_product
        rows = []
        for tau in self.cells(i + 1, j, key):
            row: dict = {}
            for t in range(len(tau) - 1):
                odd = t % 2
                pre, post = tau[:t], tau[t + 2:]
                for w, c in word_product(tau[t], tau[t + 1]).items():
                    col = idx.get(pre + (w,) + post)
                    if col is None:
                        continue
                    v = neg(c) if odd else c
                    old = row.get(col)
                    row[col] = v if old is None else add(old, v)
            rows.append({c: v for c, v in row.items() if v})
        self._rows[k] = rows
        return rows

    def apply_d(self, i: int, j: int, key, vec: dict) -> dict:
        """d of a cochain given on the (i, j, key) basis; result on (i+1, j, key)."""
        f = self.f
        out = {}
        for r, row in enumerate(self.merge_rows(i, j, key)):
            s = f.zero
            for c, v in row.items():
                x = vec.get(c)
                if x:
                    s = f.add(s, f.mul(v, x))
            if s:
                out[r] = s
        return out

    def _transpose(self, rows: list[dict]) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                out.setdefault(c, {})[r] = v
        return out

    def rank_d(self, i: int, j: int, key) -> int:
        if i < 0:
            return 0
        e = Echelon(self.f)
        for row in self.merge_rows(i, j, key):
            if row:
                e.add(row)
        return e.rank

    def dd_zero(self, i: int, j: int, key) -> bool:
        """d^{i+1} d^{i} = 0 on the block, as an exact matrix identity."""
        f = self.f
        upper = self.merge_rows(i + 1, j, key)
        lower = self.merge_rows(i, j, key)
        for row in upper:
            acc: dict = {}
            for mid, a in row.items():
                f.addmul(acc, a, lower[mid])
            if acc:
                return False
        return True

    def cohomology_dim(self, i: int, j: int) -> int:
        total = 0
        keys = set(self.block(i, j))
        # also touch neighbours so budget errors surface for the right block
        self.block(i + 1, j)
        if i > 0:
            self.block(i - 1, j)
        for key in keys:
            n = len(self.cells(i, j, key))
            total += n - self.rank_d(i, j, key) - (self.rank_d(i - 1, j, key) if i > 0 else 0)
        return total

    def cocycles(self, i: int, j: int, key) -> list[dict]:
        cols = self._transpose(self.merge_rows(i, j, key))
        n = len(self.cells(i, j, key))
        return left_kernel(self.f, [cols.get(c, {}) for c in range(n)])

    def coboundaries(self, i: int, j: int, key) -> Echelon:
        e = Echelon(self.f)
        if i > 0:
            cols = self._transpose(self.merge_rows(i - 1, j, key))
            for c in sorted(cols):
                e.add(cols[c])
        return e

    def class_basis(self, i: int, j: int, key) -> list[dict]:
        """Cocycles whose classes form a basis of the cohomology block."""
        e = self.coboundaries(i, j, key)
        out = []
        for z in self.cocycles(i, j, key):
            if e.add(z) is not None:
                out.append(z)
        return out


def _cell_order(cell):
    return tuple((len(w), w) for w in cell)


def ext_dims_cobar(Q: QuotientAlgebra, imax: int, jmax: int, budget: int = DEFAULT_BUDGET,
                   prune: bool = True) -> BettiTable:
    """Ext dimensions as cobar cohomology.  Refused bidegrees are listed in
    ``table.undecided`` and left out of ``entries``."""
    cx = CobarComplex(Q, imax, jmax, budget, prune)
    ents, undecided = {}, []
    for j in range(0, jmax + 1):
        for i in range(0, min(imax, j) + 1):
            try:
                dim = cx.cohomology_dim(i, j)
            except CobarBudgetError:
                undecided.append((i, j))
                continue
            if dim:
                ents[(i, j)] = dim
    return BettiTable(ents, imax, jmax, jmax, "cobar", undecided)


# ---------------------------------------------------------------------------
# classes and products


@dataclass
class ExtClass:
    i: int
    j: int
    key: object
    cocycle: dict


def unit_class(cx: CobarComplex) -> ExtClass:
    return ExtClass(0, 0, cx.key_of(()), {0: cx.f.one})


def cup_product(cx: CobarComplex, a: ExtClass, b: ExtClass) -> ExtClass:
    i, j = a.i + b.i, a.j + b.j
    if i > cx.imax + 1 or j > cx.jmax:
        raise ValueError(f"product lands in ({i},{j}), outside the stored bounds")
    key = cx.combine_keys(a.key, b.key)
    ca, cb = cx.cells(a.i, a.j, a.key), cx.cells(b.i, b.j, b.key)
    idx = cx.index(i, j, key)
    f = cx.f
    out: dict = {}
    for s, x in a.cocycle.items():
        for t, y in b.cocycle.items():
            col = idx.get(ca[s] + cb[t])
            if col is None:
                # only possible for pruned (acyclic) target blocks
                continue
            f.addmul(out, f.mul(x, y), {col: f.one})
    return ExtClass(i, j, key, out)


def is_coboundary(cx: CobarComplex, c: ExtClass) -> bool:
    return cx.coboundaries(c.i, c.j, c.key).contains(c.cocycle)


# ---------------------------------------------------------------------------
# generation


@dataclass
class GenerationEntry:
    i: int
    j: int
    dim: int
    generated: int | None  # dim of the part generated by E^1 and E^2
    generated_by_one: int | None  # dim of the part generated by E^1
    method: str  # "definition" | "bidegree-shortcut" | "chain-product" | "undecided"


@dataclass
class GenerationReport:
    entries: dict = dc_field(default_factory=dict)
    imax: int = 0
    jmax: int = 0

    def not_generated(self) -> list[tuple[int, int]]:
        return sorted(k for k, e in self.entries.items() if e.generated is not None and e.generated < e.dim)

    def undecided(self) -> list[tuple[int, int]]:
        return sorted(k for k, e in self.entries.items() if e.generated is None)

    def not_generated_by_one(self) -> list[tuple[int, int]]:
        return sorted(k for k, e in self.entries.items()
                      if e.generated_by_one is not None and e.generated_by_one < e.dim)


def generation_profile(Q: QuotientAlgebra, table: BettiTable | None = None, imax: int = 6, jmax: int = 12,
                       budget: int = DEFAULT_BUDGET) -> GenerationReport:
    """Which part of each E^{i,j} is generated by E^1 + E^2 (and by E^1 alone)."""
    if table is None:
        table = anick_betti(Q, imax, jmax)
    jmax = min(jmax, table.certified_degree)
    imax = min(imax, table.imax)
    cx = CobarComplex(Q, imax, jmax, budget)
    report = GenerationReport({}, imax, jmax)
    # reps[(tag, i, j)] = {key: [cocycles spanning the generated part mod coboundaries]}
    reps: dict = {}
    dims: dict = {}  # (tag, i, j) -> dim or None (unknown)

    def beta(i, j):
        return table.get(i, j)

    for i in range(1, imax + 1):
        for j in range(i, jmax + 1):
            b = beta(i, j)
            if i <= 2:
                gen_all = b
                gen_one = b if i == 1 else None
                method = "definition"
                if i == 2:
                    gen_one, ok = _chain_generate(cx, reps, dims, "one", 2, j, b)
                    if not ok:
                        gen_one = None
                if b:
                    try:
                        reps[("all", i, j)] = _class_reps(cx, i, j)
                        if i == 1:
                            reps[("one", i, j)] = reps[("all", i, j)]
                    except CobarBudgetError:
                        pass
                dims[("all", i, j)] = gen_all
                dims[("one", i, j)] = gen_one
                if b:
                    report.entries[(i, j)] = GenerationEntry(i, j, b, gen_all, gen_one, method)
                continue
            if not b:
                dims[("all", i, j)] = 0
                dims[("one", i, j)] = 0
                continue
            entry = GenerationEntry(i, j, b, None, None, "undecided")
            for tag in ("all", "one"):
                src = _source_bound(dims, tag, i, j)
                if src == 0:
                    g, method = 0, "bidegree-shortcut"
                else:
                    g, ok = _chain_generate(cx, reps, dims, tag, i, j, b)
                    method = "chain-product" if ok else "undecided"
                    if not ok:
                        g = None
                dims[(tag, i, j)] = g
                if tag == "all":
                    entry.generated, entry.method = g, method
                else:
                    entry.generated_by_one = g
            report.entries[(i, j)] = entry
    return report


def _source_bound(dims, tag, i, j) -> int | None:
    """Upper bound for the dimension of the product space landing in (i, j)."""
    total = 0
    for a in range(1, i):
        for j1 in range(a, j - (i - a) + 1):
            d1, d2 = dims.get((tag, a, j1), 0), dims.get((tag, i - a, j - j1), 0)
            if d1 is None or d2 is None:
                return None
            total += d1 * d2
    return total


def _class_reps(cx: CobarComplex, i: int, j: int) -> dict:
    return {key: basis for key in cx.block(i, j) if (basis := cx.class_basis(i, j, key))}


def _chain_generate(cx: CobarComplex, reps, dims, tag, i, j, beta) -> tuple[int | None, bool]:
    """Dimension of the span of products landing in (i, j), from stored reps."""
    if not beta:
        reps[(tag, i, j)] = {}
        return 0, True
    try:
        blocks = cx.block(i, j)
        cx.block(i - 1, j)
    except CobarBudgetError:
        return None, False
    for a in range(1, i):
        for j1 in range(a, j - (i - a) + 1):
            if dims.get((tag, a, j1)) is None or dims.get((tag, i - a, j - j1)) is None:
                return None, False
    spans: dict = {}
    for a in range(1, i):
        for j1 in range(a, j - (i - a) + 1):
            left = reps.get((tag, a, j1), {})
            right = reps.get((tag, i - a, j - j1), {})
            if not left or not right:
                continue
            for k1, vs1 in left.items():
                for k2, vs2 in right.items():
                    key = cx.combine_keys(k1, k2)
                    if key not in blocks:
                        continue
                    e = spans.get(key)
                    if e is None:
                        e = spans[key] = (cx.coboundaries(i, j, key), [])
                    for v1 in vs1:
                        for v2 in vs2:
                            prod = cup_product(cx, ExtClass(a, j1, k1, v1), ExtClass(i - a, j - j1, k2, v2))
                            if prod.cocycle and e[0].add(prod.cocycle) is not None:
                                e[1].append(prod.cocycle)
    out = {k: v[1] for k, v in spans.items() if v[1]}
    reps[(tag, i, j)] = out
    return sum(len(v) for v in out.values()), True


# ---------------------------------------------------------------------------
# verdicts


def delta(i: int, d: int) -> int:
    """delta(2m) = dm, delta(2m+1) = dm + 1."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    m, r = divmod(i, 2)
    return d * m + r


@dataclass
class Verdict:
    name: str
    status: str  # holds | fails | undecided | refused
    imax: int
    jmax: int
    witness: tuple[int, int] | None = None
    field: str = ""
    notes: list[str] = dc_field(default_factory=list)
    undecided: list[tuple[int, int]] = dc_field(default_factory=list)
    report: object = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @property
    def fails(self) -> bool:
        return self.status == "fails"

    def to_dict(self) -> dict:
        out = {"property": self.name, "result": self.status,
               "bounds": {"imax": self.imax, "jmax": self.jmax}, "field": self.field}
        if self.witness is not None:
            out["witness"] = {"i": self.witness[0], "j": self.witness[1]}
        if self.undecided:
            out["undecided"] = [{"i": i, "j": j} for i, j in self.undecided]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _support_verdict(name, table: BettiTable, allowed, field="") -> Verdict:
    bad = [(i, j) for (i, j) in table.support() if i >= 1 and not allowed(i, j)]
    v = Verdict(name, "fails" if bad else "holds", table.imax, table.certified_degree, field=field)
    if bad:
        v.witness = min(bad)
    return v


def _field_name(Q) -> str:
    f = Q.field if Q is not None else None
    if f is None:
        return ""
    return str(f.p) if f.is_prime_field else "QQ"


def check_koszul(table: BettiTable, field: str = "") -> Verdict:
    return _support_verdict("koszul", table, lambda i, j: j == i, field)


def _degree_precondition(name, table, degrees, allowed, field) -> Verdict | None:
    if degrees is not None and not set(degrees) <= set(allowed):
        return Verdict(name, "refused", table.imax, table.certified_degree, field=field,
                       notes=[f"relation degrees {sorted(set(degrees))} not within {sorted(set(allowed))}"])
    return None


def check_d_koszul(table: BettiTable, d: int, relation_degrees=None, field: str = "") -> Verdict:
    bad = _degree_precondition("d-koszul", table, relation_degrees, {d}, field)
    if bad:
        return bad
    v = _support_verdict("d-koszul", table, lambda i, j: j == delta(i, d), field)
    v.notes.append(f"d = {d}")
    return v


def check_2d_determined(table: BettiTable, d: int, relation_degrees=None, field: str = "") -> Verdict:
    bad = _degree_precondition("2d-determined", table, relation_degrees, {2, d}, field)
    if bad:
        return bad
    v = _support_verdict("2d-determined", table, lambda i, j: j <= delta(i, d), field)
    v.notes.append(f"d = {d}; envelope j <= delta(i)")
    return v


def check_k2(Q: QuotientAlgebra, imax: int = 6, jmax: int = 12, table: BettiTable | None = None,
             budget: int = DEFAULT_BUDGET) -> Verdict:
    """E(A) generated by E^1 and E^2 up to the bounds."""
    if table is None:
        table = anick_betti(Q, imax, jmax)
    rep = generation_profile(Q, table, imax, jmax, budget)
    v = Verdict("k2", "holds", rep.imax, rep.jmax, field=_field_name(Q))
    bad = rep.not_generated()
    und = rep.undecided()
    if bad and (not und or min(bad) < min(und)):
        v.status = "fails"
        v.witness = min(bad)
        e = rep.entries[v.witness]
        v.notes.append(f"E^{{{e.i},{e.j}}} has dim {e.dim}, generated part {e.generated} ({e.method})")
    elif und:
        v.status = "undecided"
        v.undecided = und
        if bad:
            v.witness = min(bad)
    v.report = rep
    return v


def check_almost_linear(A_pres, J, d: int, imax: int = 4, jmax: int = 10, method: str = "auto") -> Verdict:
    """Ext_A^i(R, k) concentrated in internal degree d - 1 + i for 0 < i <= imax,
    where R = A / AJA."""
    from .presfile import field_spec
    from .quotient import build_quotient
    from .resolution import annihilator_graph, betti_table, minimal_resolution, resolution_from_graph

    fname = field_spec(A_pres.field)
    if any(r.degree != 2 for r in A_pres.relations):
        return Verdict("almost-linear", "refused", imax, jmax, field=fname,
                       notes=["the algebra A must be quadratic"])
    J = [p for p in J if p]
    if any(not p.is_homogeneous() or p.degree != d for p in J):
        return Verdict("almost-linear", "refused", imax, jmax, field=fname,
                       notes=[f"J must be homogeneous of degree {d}"])
    Q = build_quotient(A_pres, jmax)
    if not J:
        return Verdict("almost-linear", "holds", imax, jmax, field=fname,
                       notes=["J is empty, so R = A and Ext_A^{>0}(R, k) = 0"])
    monomial = Q.is_monomial() and all(p.is_monomial() for p in J)
    if method == "auto":
        method = "graph" if monomial else "linear"
    if method == "graph":
        words = [p.leading_word for p in J]
        table = resolution_from_graph(annihilator_graph(Q, words, jmax), imax, jmax)
    else:
        table = betti_table(minimal_resolution(Q, J, imax, jmax, "linear"))
    v = _support_verdict("almost-linear", table, lambda i, j: j == d - 1 + i, fname)
    v.report = table
    if v.holds:
        kv = check_koszul(anick_betti(Q, imax, jmax))
        if kv.holds:
            v.notes.append("A is Koszul within the bounds, so R is K2")
    return v


def monomial_k2_criteria(alphabet, I2: list[Word], J: list[Word], d: int, bound: int | None = None,
                         field=None) -> Verdict:
    """Subword condition plus equality of the left and two-sided ideals of J in
    A = k<V>/(I2).  A minimal left-ideal generator of degree > d forces one in
    degree d + 1, so ``bound = d + 1`` already decides the ideal equality."""
    from .field import Field
    from .groebner import Presentation
    from .quotient import build_quotient
    from .words import Poly

    f = field or Field()
    fname = str(f.p) if f.is_prime_field else "QQ"
    bound = d + 1 if bound is None else bound
    if any(len(w) != 2 for w in I2) or any(len(w) != d for w in J):
        return Verdict("monomial-k2", "refused", 1, bound, field=fname,
                       notes=[f"I2 must be quadratic and J of degree {d}"])
    v = Verdict("monomial-k2", "holds", 1, bound, field=fname)
    bad = [(alphabet.compact(j), alphabet.compact(s)) for j in J for s in I2 if s in j]
    if bad:
        v.status = "fails"
        v.notes.append(f"subword condition fails: {bad[0][1]} occurs in {bad[0][0]}")
        return v
    if not J:
        v.notes.append("J is empty")
        return v
    P = Presentation(alphabet, [Poly.word(f, w) for w in I2], f)
    Q = build_quotient(P, max(bound, 2))
    gens = [Poly.word(f, w) for w in J]
    left = Q.left_ideal(gens, bound)
    both = Q.two_sided_ideal(gens, bound)
    diff = left.first_difference(both)
    if diff is not None:
        v.status = "fails"
        v.witness = (1, diff)
        v.notes.append(f"left and two-sided ideals of J differ in degree {diff}")
    else:
        v.notes.append("Ext^1_A(R, k) = Ext^{1,d}_A(R, k): R has an almost linear resolution and is K2")
    return v


def gr_comparison(P, imax: int = 6, jmax: int = 12) -> dict:
    """beta_{i,j}(A) <= beta_{i,j}(gr A) at every computed bidegree."""
    from .groebner import associated_graded
    from .quotient import build_quotient

    Q = build_quotient(P, jmax)
    G, certified = associated_graded(P, jmax)
    tA = anick_betti(Q, imax, jmax)
    tG = anick_betti(build_quotient(G, jmax), imax, jmax)
    keys = sorted(set(tA.entries) | set(tG.entries))
    violations = [k for k in keys if tA.get(*k) > tG.get(*k)]
    return {"holds": not violations, "violations": violations, "table": tA, "gr_table": tG,
            "gr_presentation": G, "certified": certified}
