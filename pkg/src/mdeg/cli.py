"""Command-line interface.

One ring file per invocation (``-`` reads stdin); subcommands dispatch to
the library and print either text or canonical JSON (sorted exponents,
string coefficients, stable key order).  Exit codes: 0 ok, 2 input error,
3 computation error, 4 check failed.
"""

import argparse
import json
import os
import sys

from .errors import InputError, MdegError, Unstable
from .genin import gin, gin_structure_report
from .groebner import Ideal, contract
from .hilbert import (
    arithmetic_multidegree,
    geometric_multidegrees,
    hilbert_function_oracle,
    k_polynomial,
    multidegree_C,
    multidegree_G,
)
from .inputlang import format_ring_file, parse_input
from .intpoly import IntegerPolynomial
from .monomial import MonomialIdeal
from .orders import MonomialOrder, grevlex, lex, weight_order
from .polymatroid import exchange_check, snp_check, support_points
from .standardize import cs_check, standardize, standardize_ideal, verify_standardization

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_COMPUTE = 3
EXIT_CHECK_FAILED = 4


def _read_session(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e}")
    return parse_input(text)


def _resolve_order(ring, spec):
    if spec is None or spec == "grevlex":
        return grevlex(ring)
    if spec == "lex":
        return lex(ring)
    if spec == "diag":
        return lex(ring)
    if spec.startswith("weights:"):
        rows = []
        for chunk in spec[len("weights:") :].split(";"):
            rows.append(tuple(int(w) for w in chunk.split(",")))
        return weight_order(ring, rows)
    raise InputError(f"unknown order {spec!r}")


def _seed(args):
    env = os.environ.get("MDEG_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _ring_json(ring):
    return {
        "field": f"Fp {ring.field.p}" if getattr(ring.field, "p", 0) else "QQ",
        "vars": list(ring.names),
        "degrees": [list(d) for d in ring.degrees],
    }


def _emit_poly(args, session, kind, poly, meta=None, names=None):
    meta = meta or {}
    if args.json:
        obj = {
            "ring": _ring_json(session.ring),
            "result": {"kind": kind, "poly": poly.to_json_obj(), "meta": meta},
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(poly.__str__(names))
        for k in sorted(meta):
            print(f"# {k}: {meta[k]}", file=sys.stderr)


def _monomial_ideal_from(session, name):
    from .monomial import from_polynomial_gens

    gens = session.ideals.get(name)
    if gens is None:
        raise InputError(f"no ideal named {name!r} in the input")
    try:
        return from_polynomial_gens(session.ring, gens)
    except ValueError as e:
        raise InputError(str(e))


def _mono_json(I):
    return sorted(list(g) for g in I.gens)


def cmd_kpoly(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    _emit_poly(args, session, "kpoly", k_polynomial(I, order))
    return EXIT_OK


def cmd_cee(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    _emit_poly(args, session, "cee", multidegree_C(I, order))
    return EXIT_OK


def cmd_gee(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    _emit_poly(args, session, "gee", multidegree_G(I, order))
    return EXIT_OK


def cmd_arith(args):
    session = _read_session(args.file)
    I = _monomial_ideal_from(session, args.ideal)
    _emit_poly(args, session, "arith", arithmetic_multidegree(I))
    return EXIT_OK


def cmd_geom(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    table = geometric_multidegrees(I, order)
    if args.json:
        obj = {
            "ring": _ring_json(session.ring),
            "result": {
                "kind": "geom",
                "poly": table.cee.to_json_obj(),
                "meta": {
                    "dim": table.dim,
                    "entries": [
                        {"n": list(n), "e": v}
                        for n, v in sorted(table.entries.items())
                    ],
                    "msupp": [list(n) for n in table.msupp],
                },
            },
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(f"dim = {table.dim}")
        print(f"C = {table.cee}")
        for n, v in sorted(table.entries.items()):
            print(f"e({','.join(str(x) for x in n)}) = {v}")
    return EXIT_OK


def cmd_gin(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    res = gin(I, order=order, trials=args.trials, seed=_seed(args))
    meta = {"trials": res.trials, "seed": res.seed, "borel": res.borel}
    if args.json:
        obj = {
            "ring": _ring_json(session.ring),
            "result": {"kind": "gin", "gens": _mono_json(res.ideal), "meta": meta},
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(res.ideal)
        for k in sorted(meta):
            print(f"# {k}: {meta[k]}", file=sys.stderr)
    return EXIT_OK


def cmd_gin_report(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    rep = gin_structure_report(
        I, order=order, trials=args.trials, seed=_seed(args)
    )
    if args.json:
        obj = {
            "ring": _ring_json(session.ring),
            "result": {
                "kind": "gin-report",
                "clauses": {k: bool(v) for k, v in sorted(rep.clauses.items())},
                "gens": _mono_json(rep.gin.ideal),
                "meta": {
                    "mlength": {
                        ",".join(str(j) for j in J): v
                        for J, v in sorted(rep.contraction_mlength.items())
                    }
                },
            },
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        for k, v in sorted(rep.clauses.items()):
            print(f"{k}: {'pass' if v else 'FAIL'}")
        for J, v in sorted(rep.contraction_mlength.items()):
            print(f"MLength(gin(I_({','.join(str(j) for j in J)}))) = {v}")
    return EXIT_OK if rep.ok() else EXIT_CHECK_FAILED


def cmd_project(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    blocks = [int(b) for b in args.blocks.split(",")]
    IJ = contract(I, blocks, keep_grading=True)
    out_name = args.ideal
    if args.json:
        obj = {
            "ring": _ring_json(IJ.ring),
            "result": {
                "kind": "project",
                "gens": [str(g) for g in IJ.gens],
                "meta": {"blocks": blocks},
            },
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        sys.stdout.write(format_ring_file(IJ.ring, {out_name: list(IJ.gens)}))
    return EXIT_OK


def cmd_cs_check(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    verdict = cs_check(I, trials=args.trials, seed=_seed(args), paranoid=args.paranoid)
    if args.json:
        obj = {
            "ring": _ring_json(session.ring),
            "result": {
                "kind": "cs-check",
                "is_cs": verdict.is_cs,
                "gin": _mono_json(verdict.gin),
                "meta": {"field": repr(verdict.field), "detail": verdict.detail},
            },
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print("CS" if verdict.is_cs else "not CS")
        print(f"# {verdict.detail}", file=sys.stderr)
    return EXIT_OK


def cmd_standardize(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    std = standardize(session.ring)
    J, _ = standardize_ideal(I, std)
    if args.verify:
        rep = verify_standardization(I, std_map=std)
        for k, v in sorted(rep.items()):
            print(f"{k}: {'pass' if v else 'FAIL'}", file=sys.stderr)
        if not all(rep.values()):
            return EXIT_CHECK_FAILED
    if args.emit_ring or not args.json:
        sys.stdout.write(format_ring_file(std.target, {args.ideal: list(J.gens)}))
    else:
        obj = {
            "ring": _ring_json(std.target),
            "result": {
                "kind": "standardize",
                "gens": [str(g) for g in J.gens],
                "meta": {
                    "copies": {
                        session.ring.names[i]: [std.target.names[j] for j in std.copy_index[i]]
                        for i in range(session.ring.n)
                    }
                },
            },
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    return EXIT_OK


def cmd_polymatroid_check(args):
    if args.points:
        pts = _read_points(args.points)
    else:
        session = _read_session(args.file)
        I = session.ideal(args.from_cee)
        order = _resolve_order(session.ring, args.order)
        pts = support_points(multidegree_C(I, order))
    ok, witness = exchange_check(pts)
    if args.json:
        obj = {
            "result": {
                "kind": "polymatroid-check",
                "ok": ok,
                "witness": [list(w) if isinstance(w, tuple) else w for w in witness]
                if witness
                else None,
                "meta": {"points": sorted(list(q) for q in pts)},
            }
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print("polymatroid" if ok else f"not a polymatroid: witness {witness}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_snp_check(args):
    if args.points:
        pts = _read_points(args.points)
        ok, witness = snp_check(pts)
    else:
        session = _read_session(args.file)
        I = session.ideal(args.ideal)
        order = _resolve_order(session.ring, args.order)
        ok, witness = snp_check(multidegree_C(I, order))
    if args.json:
        obj = {
            "result": {
                "kind": "snp-check",
                "ok": ok,
                "witness": list(witness) if witness else None,
            }
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print("SNP" if ok else f"not SNP: missing lattice point {witness}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _read_points(path):
    pts = set()
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.split("#")[0].strip()
                if not line:
                    continue
                try:
                    pts.add(tuple(int(x) for x in line.replace(",", " ").split()))
                except ValueError:
                    raise InputError("bad point line", lineno, 1)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    if len({len(q) for q in pts}) > 1:
        raise InputError("points have inconsistent dimensions")
    return pts


def cmd_det(args):
    from .determinantal import build_determinantal, closed_formulas, determinantal_ring
    from .orders import diagonal_order

    m, n, r = args.m, args.n, args.r
    names = [f"t{i}" for i in range(1, m + 1)] + [f"s{j}" for j in range(1, n + 1)]
    if args.formulas_only:
        if r != m:
            raise InputError("closed formulas exist only for maximal minors (r = m)")
        H, K = closed_formulas(m, n)
        if args.json:
            obj = {
                "result": {
                    "kind": "det",
                    "C": H.to_json_obj(),
                    "K": K.to_json_obj(),
                    "meta": {"m": m, "n": n, "r": r, "formulas_only": True},
                }
            }
            print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
        else:
            print(f"C = {H.__str__(names)}")
            print(f"K = {K.__str__(names)}")
        return EXIT_OK
    ring, I = build_determinantal(m, n, r)
    order = diagonal_order(ring)
    C = multidegree_C(I, order)
    K = k_polynomial(I, order)
    meta = {"m": m, "n": n, "r": r}
    diff = None
    if r == m:
        H, Kf = closed_formulas(m, n)
        diff = {"C": (C - H).to_json_obj(), "K": (K - Kf).to_json_obj()}
        meta["matches_closed_formulas"] = C == H and K == Kf
    if args.json:
        obj = {
            "result": {
                "kind": "det",
                "C": C.to_json_obj(),
                "K": K.to_json_obj(),
                "diff": diff,
                "meta": meta,
            }
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(f"C = {C.__str__(names)}")
        print(f"K = {K.__str__(names)}")
        if diff is not None:
            ok = meta["matches_closed_formulas"]
            print(f"# closed formulas match: {ok}", file=sys.stderr)
    return EXIT_OK


def cmd_hf_oracle(args):
    session = _read_session(args.file)
    I = session.ideal(args.ideal)
    order = _resolve_order(session.ring, args.order)
    bound = tuple(int(b) for b in args.bound.split(","))
    table = hilbert_function_oracle(I, bound, order)
    if args.json:
        obj = {
            "ring": _ring_json(session.ring),
            "result": {
                "kind": "hf-oracle",
                "table": [
                    {"nu": list(nu), "hf": v} for nu, v in sorted(table.items())
                ],
                "meta": {"bound": list(bound)},
            },
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        for nu, v in sorted(table.items()):
            print(f"HF({','.join(str(x) for x in nu)}) = {v}")
    return EXIT_OK


def _add_common(sp, file_arg=True, ideal_arg=True):
    if file_arg:
        sp.add_argument("file", help="ring file, or - for stdin")
    if ideal_arg:
        sp.add_argument("--ideal", required=True, help="name of the ideal")
    sp.add_argument("--order", default=None, help="grevlex | lex | diag | weights:r1c1,r1c2;r2c1,...")
    sp.add_argument("--json", action="store_true", help="canonical JSON output")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="mdeg",
        description="Multidegree computations in positively multigraded rings",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn in (
        ("kpoly", cmd_kpoly),
        ("cee", cmd_cee),
        ("gee", cmd_gee),
        ("geom", cmd_geom),
    ):
        sp = sub.add_parser(name)
        _add_common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("arith", help="arithmetic multidegree (monomial ideals)")
    sp.add_argument("file")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_arith)

    for name, fn in (("gin", cmd_gin), ("gin-report", cmd_gin_report)):
        sp = sub.add_parser(name)
        _add_common(sp)
        sp.add_argument("--trials", type=int, default=2)
        sp.add_argument("--seed", type=int, default=0)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("project", help="contraction to a block subset")
    sp.add_argument("file")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--blocks", required=True, help="e.g. 2,3")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_project)

    sp = sub.add_parser("cs-check", help="Cartwright-Sturmfels detection")
    _add_common(sp)
    sp.add_argument("--trials", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--paranoid", action="store_true")
    sp.set_defaults(fn=cmd_cs_check)

    sp = sub.add_parser("standardize")
    sp.add_argument("file")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--emit-ring", action="store_true")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_standardize)

    sp = sub.add_parser("polymatroid-check")
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--from-cee", dest="from_cee", default=None, help="ideal name")
    sp.add_argument("--points", default=None, help="file of lattice points")
    sp.add_argument("--order", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_polymatroid_check)

    sp = sub.add_parser("snp-check")
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--ideal", default=None)
    sp.add_argument("--points", default=None)
    sp.add_argument("--order", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_snp_check)

    sp = sub.add_parser("det", help="determinantal ideals, fine grading")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--formulas-only", dest="formulas_only", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_det)

    sp = sub.add_parser("hf-oracle")
    sp.add_argument("file")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--bound", required=True, help="e.g. 2,2,2")
    sp.add_argument("--order", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_hf_oracle)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "polymatroid-check" and not args.points:
        if not args.file or not args.from_cee:
            print("polymatroid-check needs --points or a ring file with --from-cee", file=sys.stderr)
            return EXIT_INPUT
    if args.command == "snp-check" and not args.points:
        if not args.file or not args.ideal:
            print("snp-check needs --points or a ring file with --ideal", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.fn(args)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Unstable as e:
        print(f"computation error: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    except MdegError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    except (ValueError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
