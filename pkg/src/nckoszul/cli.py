"""Command line interface.

Exit codes: 0 success / property holds, 1 property fails, 2 hypothesis or
precondition failure, 3 undecided within the bounds, 4 parse or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import certify_k2_pipeline, expected_freeprod_ext, free_product, freeprod_hilbert_check
from .field import Field, FieldError
from .groebner import PresentationError, associated_graded, complete
from .presfile import ParseError, field_spec, format_presentation, load_presentation
from .quotient import DegreeBoundError, build_quotient
from .resolution import (
    ResolutionError,
    annihilator_graph,
    anick_betti,
    betti_table,
    export_dot,
    minimal_resolution,
    resolution_from_graph,
)
from .yoneda import (
    DEFAULT_BUDGET,
    check_2d_determined,
    check_almost_linear,
    check_d_koszul,
    check_k2,
    check_koszul,
    ext_dims_cobar,
)

EXIT = {"holds": 0, "fails": 1, "refused": 2, "undecided": 3}


class Precondition(Exception):
    pass


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> None:
    _out(json.dumps(obj, indent=2, sort_keys=False))


def _load(args):
    field = Field.parse(args.field) if args.field is not None else None
    return load_presentation(args.file, field)


def _table_json(table, P, extra=None) -> dict:
    out = {
        "field": field_spec(P.field),
        "bounds": {"imax": table.imax, "jmax": table.jmax, "certified_degree": table.certified_degree},
        "method": table.method,
        "entries": [{"i": i, "j": j, "dim": v, "certified": c} for i, j, v, c in table.rows_csv()],
    }
    if table.undecided:
        out["undecided"] = [{"i": i, "j": j} for i, j in table.undecided]
    if extra:
        out.update(extra)
    return out


def _table_csv(table) -> str:
    lines = ["i,j,dim,certified"]
    lines += [f"{i},{j},{v},{'true' if c else 'false'}" for i, j, v, c in table.rows_csv()]
    return "\n".join(lines) + "\n"


def _emit_table(args, table, P, extra=None) -> None:
    if args.json:
        _json(_table_json(table, P, extra))
    else:
        _out(_table_csv(table))
        bounds = f"# bounds imax={table.imax} jmax={table.jmax} certified_degree={table.certified_degree}"
        sys.stderr.write(f"{bounds} field={field_spec(P.field)}\n")


def _emit_verdict(args, v) -> int:
    _json(v.to_dict())
    return EXIT[v.status]


# -- commands ------------------------------------------------------------------------


def cmd_gb(args) -> int:
    P = _load(args)
    G = complete(P, max(args.jmax, *P.relation_degrees) if P.relations else args.jmax)
    basis = G.show()
    if args.json:
        _json({"field": field_spec(P.field), "generators": list(P.alphabet.names), "basis": basis,
               "complete": G.finite, "truncation_degree": G.truncation_degree})
    else:
        _out("\n".join(basis + [f"# {'complete' if G.finite else 'truncated at degree ' + str(G.truncation_degree)}"]))
    return 0


def cmd_hilbert(args) -> int:
    P = _load(args)
    Q = build_quotient(P, max(args.jmax, 2))
    h = Q.hilbert(args.jmax)
    if args.json:
        _json({"field": field_spec(P.field), "jmax": args.jmax, "hilbert": h,
               "inverse": Q.inverse_hilbert(args.jmax), "complete": Q.certified})
    else:
        _out("j,dim\n" + "\n".join(f"{j},{d}" for j, d in enumerate(h)))
    return 0


def cmd_betti(args) -> int:
    P = _load(args)
    Q = build_quotient(P, max(args.jmax, 2))
    if args.method == "cobar":
        table = ext_dims_cobar(Q, args.imax, args.jmax, args.budget)
    elif args.method == "scalar":
        table = anick_betti(Q, args.imax, args.jmax)
    else:
        table = betti_table(minimal_resolution(Q, None, args.imax, args.jmax, args.method))
    _emit_table(args, table, P)
    return 3 if table.undecided else 0


def cmd_gr(args) -> int:
    P = _load(args)
    G, certified = associated_graded(P, max(args.jmax, *P.relation_degrees) if P.relations else args.jmax)
    if args.json:
        _json({"presentation": format_presentation(G), "certified": certified})
    else:
        _out(format_presentation(G) + ("" if certified else f"# valid up to degree {args.jmax}\n"))
    return 0


def _split(P, group: str):
    if group not in P.groups:
        raise Precondition(f"presentation has no [{group}] group")
    idx = set(P.groups[group])
    A = P.with_relations([r for k, r in enumerate(P.relations) if k not in idx])
    J = [P.relations[k] for k in sorted(idx)]
    return A, J


def cmd_anngraph(args) -> int:
    P = _load(args)
    if args.quotient_by:
        A, J = _split(P, args.quotient_by)
        if not all(p.is_monomial() for p in J):
            raise Precondition("module generators must be monomials")
        seeds = [p.leading_word for p in J]
    else:
        A, seeds = P, None
    if args.gr:
        A, _ = associated_graded(A, max(args.jmax, *A.relation_degrees) if A.relations else args.jmax)
    Q = build_quotient(A, max(args.jmax, 2))
    if not Q.is_monomial():
        raise Precondition("annihilator graph needs a monomial algebra (see the gr command)")
    G = annihilator_graph(Q, seeds, args.jmax)
    dot = export_dot(G)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    table = resolution_from_graph(G, args.imax, args.jmax)
    if args.json:
        _json(_table_json(table, P, {"vertices": [P.alphabet.compact(v) for v in G.vertices],
                                     "edges": [{"from": P.alphabet.compact(u), "to": P.alphabet.compact(v),
                                                "essential": e} for u, v, e in G.edges]}))
    elif args.dot:
        _out(_table_csv(table))
    else:
        _out(dot)
    return 0


def cmd_modres(args) -> int:
    P = _load(args)
    A, J = _split(P, args.quotient_by)
    Q = build_quotient(A, max(args.jmax, 2))
    monomial = Q.is_monomial() and all(p.is_monomial() for p in J)
    if args.method == "graph" or (args.method == "auto" and monomial):
        if not monomial:
            raise Precondition("the graph method needs monomial data")
        table = resolution_from_graph(annihilator_graph(Q, [p.leading_word for p in J], args.jmax),
                                      args.imax, args.jmax)
    else:
        table = betti_table(minimal_resolution(Q, J, args.imax, args.jmax, "linear"))
    _emit_table(args, table, P, {"module": f"A/({args.quotient_by})"})
    return 0


def _need_d(args, P) -> int:
    if args.d is not None:
        return args.d
    degs = sorted(d for d in P.relation_degrees if d != 2)
    if len(degs) == 1:
        return degs[0]
    raise Precondition("--d is required")


def cmd_check(args) -> int:
    P = _load(args)
    fname = field_spec(P.field)
    prop = args.property
    if prop == "almost-linear":
        A, J = _split(P, args.quotient_by or "gd")
        d = args.d if args.d is not None else (J[0].degree if J else 2)
        return _emit_verdict(args, check_almost_linear(A, J, d, args.imax, args.jmax))
    Q = build_quotient(P, max(args.jmax, 2))
    if prop == "k2":
        return _emit_verdict(args, check_k2(Q, args.imax, args.jmax))
    table = anick_betti(Q, args.imax, args.jmax)
    if prop == "koszul":
        v = check_koszul(table, fname)
    elif prop == "dkoszul":
        v = check_d_koszul(table, _need_d(args, P), P.relation_degrees, fname)
    else:
        v = check_2d_determined(table, _need_d(args, P), P.relation_degrees, fname)
    return _emit_verdict(args, v)


def cmd_freeprod(args) -> int:
    field = Field.parse(args.field) if args.field is not None else None
    L, R = load_presentation(args.file, field), load_presentation(args.file2, field)
    spec = free_product(L, R)
    if not args.verify:
        if args.json:
            _json({"presentation": format_presentation(spec.combined), "renamed": spec.renamed})
        else:
            _out(format_presentation(spec.combined))
        return 0
    hil = freeprod_hilbert_check(L, R, min(args.jmax, 10))
    tables = [anick_betti(build_quotient(X, max(args.jmax, 2)), args.imax, args.jmax)
              for X in (L, R, spec.combined)]
    predicted = expected_freeprod_ext(tables[0], tables[1])
    agree = predicted.same_entries(tables[2])
    _json({"presentation": format_presentation(spec.combined), "renamed": spec.renamed,
           "field": field_spec(spec.combined.field),
           "bounds": {"imax": args.imax, "jmax": args.jmax},
           "hilbert_identity": hil["holds"], "betti_prediction_matches": agree})
    return 0 if hil["holds"] and agree else 1


def cmd_certify(args) -> int:
    P = _load(args)
    g2, gd = P.group("g2"), P.group("gd")
    if "g2" not in P.groups and "gd" not in P.groups:
        raise Precondition("certify-k2 needs [g2] and [gd] groups")
    d = args.d if args.d is not None else (gd[0].degree if gd else 2)
    v = certify_k2_pipeline(P.alphabet, g2, gd, d, P.field, args.imax, args.jmax)
    return _emit_verdict(args, v)


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--imax", type=int, default=6, help="largest cohomological degree (default 6)")
    common.add_argument("--jmax", type=int, default=12, help="largest internal degree (default 12)")
    common.add_argument("--field", default=None,
                        help="override the file's field: a prime, GF(p) or QQ (files default to 32003)")
    common.add_argument("--json", action="store_true", help="JSON output")

    p = argparse.ArgumentParser(
        prog="nckoszul",
        description="Gröbner bases, minimal resolutions and Ext-algebra checks for graded algebras.",
        epilog="exit codes: 0 ok/holds, 1 fails, 2 precondition or refused, 3 undecided, 4 parse or I/O error",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("file")
        s.set_defaults(func=func)
        return s

    add("gb", cmd_gb, "reduced Gröbner basis and completeness")
    add("hilbert", cmd_hilbert, "Hilbert function")
    s = add("betti", cmd_betti, "Betti table of the trivial module")
    s.add_argument("--method", choices=["anick", "linear", "cobar", "scalar"], default="anick")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cobar tuples per bidegree")
    add("gr", cmd_gr, "associated graded (monomial) presentation")
    s = add("anngraph", cmd_anngraph, "left-annihilator graph of a monomial algebra")
    s.add_argument("--dot", metavar="PATH", help="write the graph in DOT format")
    s.add_argument("--quotient-by", metavar="GROUP", help="seed with the module generators of a group")
    s.add_argument("--gr", action="store_true", help="use the associated graded algebra")
    s = add("modres", cmd_modres, "Ext_A(A/AJA, k) with J a relation group")
    s.add_argument("--quotient-by", metavar="GROUP", default="gd")
    s.add_argument("--method", choices=["auto", "linear", "graph"], default="auto")
    s = sub.add_parser("check", parents=[common], help="property verdicts")
    s.add_argument("property", choices=["koszul", "dkoszul", "2d", "k2", "almost-linear"])
    s.add_argument("file")
    s.add_argument("--d", type=int, default=None)
    s.add_argument("--quotient-by", metavar="GROUP", default=None)
    s.set_defaults(func=cmd_check)
    s = add("freeprod", cmd_freeprod, "free product of two presentations")
    s.add_argument("file2")
    s.add_argument("--verify", action="store_true", help="check the Hilbert identity and Betti prediction")
    s = add("certify-k2", cmd_certify, "K2 certificate from Gröbner hypotheses on [g2]/[gd]")
    s.add_argument("--d", type=int, default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FieldError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 4
    except (Precondition, PresentationError, ResolutionError, DegreeBoundError) as e:
        sys.stderr.write(f"precondition: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
