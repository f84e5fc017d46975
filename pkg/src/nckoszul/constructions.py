"""Free products and the merged-hypotheses K2 certificate."""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Presentation, is_groebner, redundancy_check
from .presfile import field_spec
from .quotient import build_quotient, series_inverse
from .resolution import BettiTable, anick_betti
from .words import Alphabet, Poly
from .yoneda import Verdict, check_d_koszul, check_k2


@dataclass
class FreeProductSpec:
    left: Presentation
    right: Presentation
    combined: Presentation
    renamed: dict[str, str]


def free_product(P: Presentation, Q: Presentation) -> FreeProductSpec:
    """Disjoint union of generators (left first) and of relations.

    Right-hand names that collide get primes appended until unique.
    """
    if P.field != Q.field:
        raise ValueError(f"free product of algebras over {P.field} and {Q.field}")
    names = list(P.alphabet.names)
    taken = set(names)
    renamed = {}
    for n in Q.alphabet.names:
        m = n
        while m in taken:
            m += "'"
        if m != n:
            renamed[n] = m
        taken.add(m)
        names.append(m)
    alphabet = Alphabet(names)
    shift = len(P.alphabet)
    moved = [Poly(Q.field, {"".join(chr(ord(c) + shift) for c in w): v for w, v in r.terms.items()})
             for r in Q.relations]
    groups = {k: list(v) for k, v in P.groups.items()}
    for k, idx in Q.groups.items():
        groups.setdefault(k, []).extend(i + len(P.relations) for i in idx)
    combined = Presentation(alphabet, list(P.relations) + moved, P.field, groups)
    return FreeProductSpec(P, Q, combined, renamed)


def freeprod_hilbert_check(P: Presentation, Q: Presentation, bound: int = 10) -> dict:
    """Coefficientwise check of 1/H_{A*B} = 1/H_A + 1/H_B - 1 up to ``bound``."""
    spec = free_product(P, Q)
    algebras = [build_quotient(X, bound) for X in (P, Q, spec.combined)]
    for X in algebras:
        if not X.basis.complete_at_truncation:
            raise ValueError("Gröbner data incomplete at the bound")
    ia, ib, ic = (series_inverse(X.hilbert(bound)) for X in algebras)
    predicted = [a + b - (1 if n == 0 else 0) for n, (a, b) in enumerate(zip(ia, ib))]
    mismatch = [n for n in range(bound + 1) if predicted[n] != ic[n]]
    return {"holds": not mismatch, "first_mismatch": mismatch[0] if mismatch else None,
            "inverse_left": ia, "inverse_right": ib, "inverse_combined": ic,
            "hilbert_combined": algebras[2].hilbert(bound)}


def expected_freeprod_ext(tableA: BettiTable, tableB: BettiTable) -> BettiTable:
    """Predicted Betti table of a free product: (0,0) -> 1, positive part additive."""
    imax = min(tableA.imax, tableB.imax)
    cert = min(tableA.certified_degree, tableB.certified_degree)
    ents = {(0, 0): 1}
    for t in (tableA, tableB):
        for (i, j), v in t.entries.items():
            if 1 <= i <= imax and j <= cert and v:
                ents[(i, j)] = ents.get((i, j), 0) + v
    return BettiTable(ents, imax, min(tableA.jmax, tableB.jmax), cert, "free-product prediction")


def certify_k2_pipeline(alphabet: Alphabet, g2: list[Poly], gd: list[Poly], d: int, field,
                        imax: int = 6, jmax: int = 12, cross_check: bool = True) -> Verdict:
    """Certify R = T(V)/(g2 + gd) as K2 from Gröbner-basis hypotheses.

    Hypotheses: g2, gd and their union are Gröbner bases and the union has no
    redundant element.  Then R is K2 if B = T(V)/(gd) is d-Koszul, or if the
    leading words of gd generate the same left and two-sided ideal in gr A.
    """
    from .yoneda import monomial_k2_criteria

    fname = field_spec(field)
    v = Verdict("certify-k2", "refused", imax, jmax, field=fname)
    if any(p.degree != 2 for p in g2) or any(p.degree != d for p in gd):
        v.notes.append(f"g2 must be quadratic and gd of degree {d}")
        return v
    union = list(g2) + list(gd)
    bound = max(jmax, 2 * d)
    for label, S in (("g2", g2), ("gd", gd), ("g2 + gd", union)):
        ok, witness = is_groebner(S, alphabet, bound)
        if not ok:
            v.notes.append(f"hypotheses not met: {label} is not a Gröbner basis "
                           f"(ambiguity {alphabet.compact(witness)} does not resolve)")
            return _with_cross_check(v, alphabet, union, field, imax, jmax, cross_check)
    redundant = redundancy_check(union, alphabet, bound)
    if redundant:
        shown = ", ".join(union[k].show(alphabet) for k in redundant)
        v.notes.append(f"hypotheses not met: g2 + gd has redundant elements ({shown})")
        return _with_cross_check(v, alphabet, union, field, imax, jmax, cross_check)
    routes = []
    if gd:
        B = build_quotient(Presentation(alphabet, list(gd), field), jmax)
        if check_d_koszul(anick_betti(B, imax, jmax), d).holds:
            routes.append("(i) B = T(V)/(gd) is d-Koszul")
    else:
        routes.append("(i) gd is empty")
    lead2 = [p.leading_word for p in g2]
    leadd = [p.leading_word for p in gd]
    crit = monomial_k2_criteria(alphabet, lead2, leadd, d, field=field)
    if crit.holds:
        routes.append("(ii) Ext^1 of gr R over gr A is concentrated in degree d")
    if not routes:
        v.status = "undecided"
        v.notes.append("hypotheses hold but neither route applies")
        return _with_cross_check(v, alphabet, union, field, imax, jmax, cross_check)
    v.status = "holds"
    v.notes.append("R is K2 (certified by the merged Gröbner hypotheses, up to bounds)")
    v.notes.extend(f"route {r}" for r in routes)
    return _with_cross_check(v, alphabet, union, field, imax, jmax, cross_check)


def _with_cross_check(v: Verdict, alphabet, union, field, imax, jmax, enabled: bool) -> Verdict:
    if not enabled:
        return v
    R = build_quotient(Presentation(alphabet, list(union), field), jmax)
    k2 = check_k2(R, imax, jmax)
    v.report = k2
    where = f" at {k2.witness}" if k2.witness else ""
    v.notes.append(f"direct check_k2 on R: {k2.status}{where}")
    if v.status == "holds" and k2.fails:
        v.status = "fails"
        v.witness = k2.witness
        v.notes.append("certificate withdrawn: contradicted by the direct computation")
    return v
