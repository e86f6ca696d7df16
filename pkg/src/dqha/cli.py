"""Command line front end.

Exit codes: 0 every check passed, 1 a check failed or a construction was
refused, 2 the input could not be parsed or has the wrong shape.
"""

import argparse
import json
import sys
from itertools import product

from .algebra import build_variant, check_dqha_axioms, derive_twist_pair
from .canonical import check_pq_identities, check_U_identities, compute_pq, compute_U
from .documents import Loader, dumps, to_doc
from .duals import check_dual_lemma, yd_dual
from .errors import DQHAError, ParseError, ShapeError, ValidationFailed
from .examples import pool_comodules
from .report import Report, single_check
from .yd import (COACTION_SIDE, YetterDrinfeldModule, braiding, braiding_inverse,
                 check_alt_axiom, check_braiding_inverse, check_center_condition, check_yd,
                 convert_flavor, h_as_yd, tensor_yd)


class Output:
    def __init__(self, fmt, out=sys.stdout, err=sys.stderr):
        self.fmt = fmt
        self.out = out
        self.err = err

    def report(self, rep, stream=None):
        stream = stream or self.out
        stream.write((rep.to_json() if self.fmt == "json" else rep.to_text()) + "\n")


def _field_fmt(F, x):
    return F.format(x)


def _matrix_payload(A):
    return [[_field_fmt(A.field, x) for x in row] for row in A.rows]


def _matrix_text(A):
    cells = _matrix_payload(A)
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _form_payload(H, form):
    return {",".join(H.basis_name(i) for i in idx): _field_fmt(H.field, v) for idx, v in form.items()}


def _form_text(H, name, form):
    if form.arity != 2:
        return "\n".join("%s(%s) = %s" % (name, k, v) for k, v in _form_payload(H, form).items())
    names = [H.basis_name(i) for i in range(H.dim)]
    cells = [[_field_fmt(H.field, form(a, b)) for b in range(H.dim)] for a in range(H.dim)]
    width = max(len(x) for x in names + [c for r in cells for c in r])
    head = " " * (width + 3) + " ".join(n.rjust(width) for n in names)
    rows = ["%s |  %s" % (names[a].rjust(width), " ".join(c.rjust(width) for c in cells[a]))
            for a in range(H.dim)]
    return "%s(a, b), rows a, columns b:\n%s\n%s" % (name, head, "\n".join(rows))


def _validated(obj):
    rep = check_yd(obj) if isinstance(obj, YetterDrinfeldModule) else check_dqha_axioms(obj)
    if not rep.passed:
        raise ValidationFailed("%s fails %s" % (obj.name, ", ".join(rep.failed_names())), rep)
    return obj


def _module(loader, ref):
    M = loader.read(ref)
    if not isinstance(M, YetterDrinfeldModule):
        raise ParseError("%s is not a module document" % ref)
    return M


def _algebra(loader, ref):
    H = loader.read(ref)
    if isinstance(H, YetterDrinfeldModule):
        raise ParseError("%s is not an algebra document" % ref)
    return H


def _emit_document(args, out, obj, rep):
    text = dumps(to_doc(obj))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.report(rep)
    else:
        out.out.write(text)
        out.report(rep, out.err)
    return 0 if rep.passed else 1


# --- verbs ------------------------------------------------------------------------------

def cmd_validate(args, loader, out):
    obj = loader.read(args.path)
    rep = check_yd(obj) if isinstance(obj, YetterDrinfeldModule) else check_dqha_axioms(obj)
    out.report(rep)
    return 0 if rep.passed else 1


EMITTABLE = ("f", "g", "pq", "U", "variants")


def cmd_derive(args, loader, out):
    H = _validated(_algebra(loader, args.path))
    emit = [x.strip() for x in args.emit.split(",") if x.strip()] if args.emit else ["f", "g"]
    bad = [x for x in emit if x not in EMITTABLE]
    if bad:
        raise ParseError("--emit takes a subset of %s, got %s" % (",".join(EMITTABLE), ",".join(bad)))
    rep = Report("derived structure: %s" % H.name)
    tables = {}
    tp = derive_twist_pair(H, strict=False)
    if "f" in emit or "g" in emit:
        rep.extend(tp.report.checks)
        if "f" in emit:
            tables["f"] = tp.f
        if "g" in emit:
            tables["g"] = tp.g
    if "pq" in emit or "U" in emit:
        pq = compute_pq(H)
        if "pq" in emit:
            tables.update(zip(("pR", "qR", "pL", "qL"), pq))
            rep.extend(check_pq_identities(H, pq, tp).checks)
        if "U" in emit:
            U = compute_U(H, pq, tp, validate=False)
            tables["U"] = U
            rep.extend(check_U_identities(H, U, pq, tp).checks)
    variants = {}
    if "variants" in emit:
        for kind in ("op", "cop", "opcop"):
            K = build_variant(H, kind)
            variants[kind] = K
            r = check_dqha_axioms(K)
            for c in r.checks:
                c.name = "%s:%s" % (kind, c.name)
            rep.extend(r.checks)
    if out.fmt == "json":
        payload = {"algebra": H.name,
                   "forms": {k: _form_payload(H, v) for k, v in tables.items()},
                   "variants": {k: to_doc(v) for k, v in variants.items()},
                   "report": rep.to_dict()}
        out.out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for k, v in tables.items():
            out.out.write(_form_text(H, k, v) + "\n\n")
        for k, v in variants.items():
            out.out.write("variant %s: %s\n" % (k, v.name))
        out.report(rep)
    return 0 if rep.passed else 1


def cmd_braid(args, loader, out):
    M = _validated(_module(loader, args.first))
    N = _validated(_module(loader, args.second))
    c = braiding(M, N)
    A = braiding_inverse(M, N) if args.inverse else c
    rep = Report("braiding %s%s, %s" % ("inverse " if args.inverse else "", M.name, N.name))
    if args.check:
        r = check_braiding_inverse(M, N)
        rep.extend(r.checks)
    if out.fmt == "json":
        out.out.write(json.dumps({"matrix": _matrix_payload(A), "report": rep.to_dict()}, indent=2) + "\n")
    else:
        out.out.write(_matrix_text(A) + "\n")
        if args.check:
            ok = rep.passed
            out.out.write("identity: %s\n" % ("pass" if ok else "FAIL"))
            out.report(rep)
    return 0 if rep.passed else 1


def cmd_dual(args, loader, out):
    M = _validated(_module(loader, args.path))
    pair = yd_dual(M, args.hand, strict=False)
    return _emit_document(args, out, pair.dual, pair.report)


def cmd_tensor(args, loader, out):
    M = _validated(_module(loader, args.first))
    N = _validated(_module(loader, args.second))
    T = tensor_yd(M, N)
    return _emit_document(args, out, T, check_yd(T))


def cmd_convert(args, loader, out):
    M = _validated(_module(loader, args.path))
    T = convert_flavor(M, args.to)
    return _emit_document(args, out, T, check_yd(T))


def cmd_report(args, loader, out):
    obj = loader.read(args.path)
    if isinstance(obj, YetterDrinfeldModule):
        rep = module_report(obj)
    else:
        rep = algebra_report(obj)
    out.report(rep)
    return 0 if rep.passed else 1


def algebra_report(H):
    rep = Report("full report: %s" % H.name)
    rep.extend(check_dqha_axioms(H).checks)
    if not rep.passed:
        return rep
    tp = derive_twist_pair(H, strict=False)
    rep.extend(tp.report.checks)
    if H.has_bijective_antipode:
        pq = compute_pq(H)
        rep.extend(check_pq_identities(H, pq, tp).checks)
        rep.extend(check_U_identities(H, None, pq, tp).checks)
        rep.extend(check_dual_lemma(H, pq, tp).checks)
        rep.extend(check_yd(h_as_yd(H, pq, tp, validate=False)).checks)
    return rep


def module_report(M):
    rep = Report("full report: %s" % M.name)
    rep.extend(check_yd(M).checks)
    if not rep.passed:
        return rep
    if M.flavor == "LL":
        rep.extend(check_alt_axiom(M).checks[1:])
    pool = pool_comodules(M.H, side=COACTION_SIDE[M.flavor])
    center = [check_center_condition(M, X, Y) for X, Y in product(pool, pool)]
    for name in ("center_hexagon", "center_unit"):
        bad = [i for i, r in enumerate(center) if not r[name].passed]
        rep.add(single_check(name, not bad, note="%d comodule pairs" % len(center)))
    if M.H.has_bijective_antipode:
        rep.extend(check_braiding_inverse(M, M).checks)
        if M.flavor == "LL":
            for hand in ("left", "right"):
                r = yd_dual(M, hand, strict=False).report
                for c in r.checks:
                    c.name = "%s_dual:%s" % (hand, c.name)
                rep.extend(r.checks)
    return rep


# --- entry point -----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="dqha", description="Exact checks and constructions for "
                                "dual quasi-Hopf algebras and their Yetter-Drinfeld modules.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="reinterpret scalars in this field (q or fp:<p>)")
    common.add_argument("--report", choices=("text", "json"), default="text", help="report format")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("validate", parents=[common], help="check the axioms of a document")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("derive", parents=[common], help="print derived forms with their identity suites")
    d.add_argument("path")
    d.add_argument("--emit", help="comma separated subset of " + ",".join(EMITTABLE))
    d.set_defaults(func=cmd_derive)

    b = sub.add_parser("braid", parents=[common], help="braiding matrix N (x) M -> M (x) N")
    b.add_argument("first")
    b.add_argument("second")
    b.add_argument("--inverse", action="store_true", help="print the inverse M (x) N -> N (x) M")
    b.add_argument("--check", action="store_true", help="verify both composites are the identity")
    b.set_defaults(func=cmd_braid)

    du = sub.add_parser("dual", parents=[common], help="left or right dual of an LL module")
    du.add_argument("path")
    du.add_argument("--hand", choices=("left", "right"), default="left")
    du.add_argument("--out", help="write the document here instead of stdout")
    du.set_defaults(func=cmd_dual)

    t = sub.add_parser("tensor", parents=[common], help="tensor product of two modules")
    t.add_argument("first")
    t.add_argument("second")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tensor)

    c = sub.add_parser("convert", parents=[common], help="change the flavor of a module")
    c.add_argument("path")
    c.add_argument("--to", default="LL", choices=("LL", "RR"))
    c.add_argument("--out")
    c.set_defaults(func=cmd_convert)

    r = sub.add_parser("report", parents=[common], help="run every applicable suite")
    r.add_argument("path")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(args.report, stdout, stderr)
    loader = Loader(field=args.field)
    try:
        return args.func(args, loader, out)
    except (ParseError, ShapeError) as exc:
        stderr.write("error: %s\n" % exc)
        return 2
    except ValidationFailed as exc:
        stderr.write("error: %s\n" % exc)
        if exc.report is not None:
            out.report(exc.report, stderr)
        return 1
    except DQHAError as exc:
        stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
