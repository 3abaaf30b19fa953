"""
Command-line front end.

Exit status: 0 when the checked statement holds, 1 when it is falsified
(the report carries the witness), 2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .enumeration import PREDICATES, enumerate_lattices
from .errors import AlphaCutError, EmptyCutSupport, GroupError, InputError, InternalInconsistency, InvalidSpace
from .fuzzyset import alpha_cut, cut_family, fuzzy_alpha_cut
from .group import check_fuzzy_binary_op, check_fuzzy_group, restrict_to_cut
from .jsonio import fuzzyset_from_dict, group_from_dict, load_lattice, read_json, rough_from_dict, space_from_dict
from .lattice import check_arrow_properties, classify, is_prelinear, is_semilinear, to_dot
from .localic import AXIOMS, LOCALIC_FRAME, close_family, relation_RL, check_localic_axioms
from .rough import fuzzy_approx, pawlak_approx, prob_approx, rough_membership
from .topology import check_topology, subspace_via_cut

OK, FALSIFIED, BAD_INPUT = 0, 1, 2


class Report:
    def __init__(self, data, rows=None, status=OK, raw_text=None):
        self.data = data
        self.rows = rows or []
        self.status = status
        self.raw_text = raw_text

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.data, indent=2, ensure_ascii=False, default=_jsonable) + "\n"
        if self.raw_text is not None:
            return self.raw_text
        return format_table(self.rows)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    return str(value)


def format_table(rows):
    if not rows:
        return ""
    rows = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    lines = ["  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _witness(w):
    return "" if w is None else json.dumps(w, default=_jsonable)


def _load_fuzzy(path):
    return fuzzyset_from_dict(read_json(path), Path(path).parent)


def _parse_alpha(raw, lattice):
    """Threshold as typed; numeric for the unit interval."""
    if raw in lattice:
        return raw
    if not lattice.is_finite:
        try:
            return float(Fraction(raw))
        except (ValueError, ZeroDivisionError):
            pass
    from .errors import UnknownElement

    raise UnknownElement(f"alpha {raw!r} is not a lattice element")


# ---------------------------------------------------------------------------
# verbs


def cmd_classify(args):
    L = load_lattice(args.lattice)
    report = classify(L)
    props = check_arrow_properties(L, subset_bound=args.subset_bound, seed=args.seed)
    data = {**report.to_dict(), "arrow_properties": props.to_dict()}
    rows = [["property", "holds", "witness"]]
    for name in ("frame", "prelinear", "semilinear"):
        check = getattr(report, name)
        rows.append([name, check.holds, _witness(check.witness)])
    for key, r in props.results.items():
        rows.append([f"arrow law {key}", r.holds, _witness(r.witness) or r.note])
    holds = report.is_frame and report.is_prelinear and report.is_semilinear and props.all_hold
    return Report(data, rows, OK if holds else FALSIFIED)


def cmd_cut(args):
    A = _load_fuzzy(args.fuzzy_set)
    alpha = _parse_alpha(args.alpha, A.lattice)
    cut = fuzzy_alpha_cut(A, alpha)
    crisp = alpha_cut(A, alpha)
    data = {"alpha": alpha, "fuzzy_cut": cut.membership, "crisp_cut": crisp.sorted_members()}
    rows = [["point", "membership", "fuzzy cut", "in crisp cut"]]
    for x in A.base:
        rows.append([x, A(x), cut(x), x in crisp])
    return Report(data, rows)


def cmd_verify_localic(args):
    A = _load_fuzzy(args.fuzzy_set)
    cuts = cut_family(A)
    family = close_family(cuts)
    R = relation_RL(family, args.arrow)
    report = check_localic_axioms(family, R, subset_bound=args.subset_bound, seed=args.seed, verbose=args.verbose)
    data = {
        **report.to_dict(),
        "arrow": args.arrow,
        "cut_family_size": len(cuts),
        "family": [F.membership for F in family],
    }
    if args.verbose:
        data["relation"] = R.to_dict()["values"]
    rows = [["axiom", "pass", "statement", "witness"]]
    for key, r in report.axioms.items():
        rows.append([key, r.holds, AXIOMS[key], _witness(r.witness)])
    rows.append(["verdict", report.verdict, "", ""])
    return Report(data, rows, OK if report.verdict == LOCALIC_FRAME else FALSIFIED)


def cmd_check_topology(args):
    space = space_from_dict(read_json(args.space), Path(args.space).parent)
    result = check_topology(space, subset_bound=args.subset_bound, seed=args.seed)
    data = {"topology": {"holds": result.holds}}
    if result.witness is not None:
        data["topology"]["witness"] = list(result.witness)
    rows = [["check", "holds", "witness"], ["L-topology", result.holds, _witness(result.witness)]]
    status = OK if result.holds else FALSIFIED
    if args.alpha is not None and result.holds:
        try:
            sub = subspace_via_cut(space, _parse_alpha(args.alpha, space.carrier.lattice), subset_bound=args.subset_bound, seed=args.seed)
        except InternalInconsistency as exc:
            data["subspace"] = {"holds": False, "error": str(exc)}
            rows.append([f"subspace at {args.alpha}", False, str(exc)])
            return Report(data, rows, FALSIFIED)
        data["subspace"] = {"holds": True, **sub.to_dict()}
        rows.append([f"subspace at {args.alpha}", True, f"{len(sub.opens)} opens"])
    return Report(data, rows, status)


def _group_rows(G):
    rows = [["support", ", ".join(map(str, G.support))], ["identity", G.identity]]
    rows += [[f"inverse of {a}", b] for a, b in G.inverses.items()]
    return rows


def cmd_check_group(args):
    A, gr = group_from_dict(read_json(args.group), Path(args.group).parent)
    op = check_fuzzy_binary_op(A, gr)
    op_data = {"holds": op.holds}
    op_row = ["binary operation", op.holds]
    if not op:
        op_data["witness"] = list(op.witness)
        op_row.append(_witness(op.witness))
    # the group laws are still checked on a broken table, since they often name the cause
    try:
        G = check_fuzzy_group(A, gr)
    except GroupError as exc:
        data = {
            "binary_operation": op_data,
            "group": {"holds": False, "error": type(exc).__name__, "message": str(exc), "witness": exc.witness},
        }
        return Report(data, [op_row, ["group", False, type(exc).__name__, _witness(exc.witness)]], FALSIFIED)
    if not op:
        data = {"binary_operation": op_data, "group": {"holds": False}}
        return Report(data, [op_row, ["group", False, "table is not a fuzzy operation"]], FALSIFIED)
    data = {"binary_operation": op_data, "group": {"holds": True, **G.to_dict()}}
    return Report(data, [op_row, ["group", True], *_group_rows(G)])


def cmd_subgroup(args):
    A, gr = group_from_dict(read_json(args.group), Path(args.group).parent)
    op = check_fuzzy_binary_op(A, gr)
    if not op:
        data = {"binary_operation": {"holds": False, "witness": list(op.witness)}}
        return Report(data, [["binary operation", False, _witness(op.witness)]], FALSIFIED)
    try:
        G = check_fuzzy_group(A, gr)
        alpha = _parse_alpha(args.alpha, A.lattice)
        H = restrict_to_cut(G, alpha)
    except (GroupError, EmptyCutSupport, InternalInconsistency) as exc:
        data = {"subgroup": {"holds": False, "error": type(exc).__name__, "message": str(exc)}}
        return Report(data, [["subgroup", False, type(exc).__name__, str(exc)]], FALSIFIED)
    data = {
        "alpha": alpha,
        "subgroup": {"holds": True, **H.to_dict(), "carrier": H.carrier.membership, "gr": H.op.to_list()},
    }
    return Report(data, [["subgroup", True], *_group_rows(H)])


def cmd_rough(args):
    space, target, alpha, beta = rough_from_dict(read_json(args.space))
    alpha = args.alpha if args.alpha is not None else alpha
    beta = args.beta if args.beta is not None else beta
    mu = rough_membership(space, target)
    lower, upper = pawlak_approx(space, target)
    order = list(space.universe)

    def ordered(s):
        return [x for x in order if x in s]

    data = {
        "membership": {x: str(mu(x)) for x in order},
        "pawlak": {"lower": ordered(lower), "upper": ordered(upper)},
    }
    rows = [["point", "block", "mu"]]
    rows += [[x, ",".join(map(str, space.block_of(x))), mu(x)] for x in order]
    rows.append(["pawlak lower", ",".join(map(str, ordered(lower)))])
    rows.append(["pawlak upper", ",".join(map(str, ordered(upper)))])
    if alpha is not None and beta is not None:
        if Fraction(str(beta)) < Fraction(str(alpha)):
            plo, pup = prob_approx(space, target, str(alpha), str(beta))
            data["probabilistic"] = {"lower": ordered(plo), "upper": ordered(pup)}
            rows.append(["prob lower", ",".join(map(str, ordered(plo)))])
            rows.append(["prob upper", ",".join(map(str, ordered(pup)))])
        flo, fup = fuzzy_approx(space, target, str(alpha), str(beta))
        data["fuzzy"] = {
            "lower": {x: str(flo[x]) for x in order},
            "upper": {x: str(fup[x]) for x in order},
        }
        rows.append(["fuzzy lower", " ".join(f"{x}:{flo[x]}" for x in order)])
        rows.append(["fuzzy upper", " ".join(f"{x}:{fup[x]}" for x in order)])
    return Report(data, rows)


def cmd_enumerate(args):
    sizes = range(2, args.size + 1) if args.up_to else [args.size]
    lattices, summary = [], []
    for n in sizes:
        total = distributive = prelinear = semilinear = matched = 0
        for L in enumerate_lattices(n, args.distributive):
            total += 1
            frame = L.frame_check.holds
            pre, semi = is_prelinear(L), is_semilinear(L)
            distributive += frame
            prelinear += pre.holds
            semilinear += semi.holds
            keep = True
            witness = None
            if args.predicate:
                keep, witness = _predicate(args.predicate, pre, semi)
            if keep:
                matched += 1
                entry = {"size": n, **L.to_dict(), "frame": frame, "prelinear": pre.holds, "semilinear": semi.holds}
                if witness is not None:
                    entry["witness"] = list(witness)
                lattices.append(entry)
        summary.append({"size": n, "lattices": total, "distributive": distributive, "prelinear": prelinear, "semilinear": semilinear, "matched": matched})
    data = {"summary": summary, "lattices": lattices}
    rows = [["size", "lattices", "distributive", "prelinear", "semilinear", "matched"]]
    rows += [[s["size"], s["lattices"], s["distributive"], s["prelinear"], s["semilinear"], s["matched"]] for s in summary]
    return Report(data, rows)


def _predicate(name, pre, semi):
    if name == "not_prelinear":
        return not pre.holds, pre.witness
    if name == "not_semilinear":
        return not semi.holds, semi.witness
    if name == "prelinear_and_not_semilinear":
        return pre.holds and not semi.holds, semi.witness
    return semi.holds and not pre.holds, pre.witness


def cmd_export_dot(args):
    L = load_lattice(args.lattice)
    dot = to_dot(L, Path(args.lattice).stem if not args.lattice.startswith("builtin:") else args.lattice[8:])
    return Report({"dot": dot}, raw_text=dot)


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for every sampling path")
    common.add_argument("--subset-bound", type=int, default=6, help="quantify subsets exhaustively up to this family size")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="alphacut", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", parents=[common], help="frame, prelinear and semilinear tests with witnesses")
    p.add_argument("--lattice", required=True, help="lattice JSON file or builtin:<name>")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cut", parents=[common], help="crisp and fuzzy alpha-cut of a fuzzy set")
    p.add_argument("--fuzzy-set", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("verify-localic", parents=[common], help="localic-frame axioms on the cut family")
    p.add_argument("--fuzzy-set", required=True)
    p.add_argument("--arrow", choices=["godel", "residuated"], default="godel")
    p.set_defaults(func=cmd_verify_localic)

    p = sub.add_parser("check-topology", parents=[common], help="L-topology conditions, optionally the cut subspace")
    p.add_argument("--space", required=True)
    p.add_argument("--alpha")
    p.set_defaults(func=cmd_check_topology)

    p = sub.add_parser("check-group", parents=[common], help="fuzzy binary operation and fuzzy group laws")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_check_group)

    p = sub.add_parser("subgroup", parents=[common], help="restrict a fuzzy group to an alpha-cut")
    p.add_argument("--group", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("rough", parents=[common], help="rough membership and approximations")
    p.add_argument("--space", required=True)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.set_defaults(func=cmd_rough)

    p = sub.add_parser("enumerate", parents=[common], help="bounded lattices up to isomorphism")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--up-to", action="store_true", help="every size from 2 to --size")
    p.add_argument("--distributive", action="store_true")
    p.add_argument("--predicate", choices=PREDICATES)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export-dot", parents=[common], help="Hasse diagram as Graphviz DOT")
    p.add_argument("--lattice", required=True)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        report = args.func(args)
    except InputError as exc:
        print(f"alphacut: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (AlphaCutError, InvalidSpace) as exc:
        print(f"alphacut: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FALSIFIED
    text = report.render(args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
