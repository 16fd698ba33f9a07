"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 bad input or parameters,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atw, formats, hammingx, rankcodes, spreads
from .errors import BudgetExceeded, ContradictionError
from .fqlinalg import DEFAULT_BUDGET
from .gfcore import parse_field_spec, tower
from .search import SearchJob, run_search

OK, FAILED, BAD_INPUT, BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _emit(args, data: dict, out=None):
    out = out or sys.stdout
    if args.json:
        print(json.dumps(data, sort_keys=False), file=out)
        return
    width = max((len(k) for k in data), default=0)
    for k, v in data.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        print(f"{k.ljust(width)}  {v}", file=out)


def _write(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_code(path: str, compress: bool = False) -> rankcodes.RankCode:
    C = formats.read_code(formats.read_text(path))
    if not rankcodes.is_nondegenerate(C):
        if not compress:
            raise InputError(
                f"{path}: the code is degenerate (its columns are F_q-dependent); "
                "compress it first with --compress or rankcodes.compress_degenerate"
            )
        C, _ = rankcodes.compress_degenerate(C)
    return C


# ---------------------------------------------------------------------------
# subcommands


def cmd_field(args) -> int:
    F = parse_field_spec(args.spec)
    data = {"spec": F.spec, "p": F.p, "degree": F.degree, "order": F.order, "modulus": F.modulus,
            "primitive_element": F.primitive_element}
    if args.op:
        vals = args.operands
        need = {"add": 2, "mul": 2, "sub": 2, "div": 2, "inv": 1, "neg": 1, "pow": 2, "frob": 2}[args.op]
        if len(vals) != need:
            raise InputError(f"{args.op} takes {need} operands")
        elems = vals if args.op not in ("pow", "frob") else vals[:1]
        if any(not 0 <= v < F.order for v in elems):
            raise InputError(f"operand outside F_{F.order}")
        fn = {"add": F.add, "mul": F.mul, "sub": F.sub, "div": F.div, "inv": F.inv, "neg": F.neg,
              "pow": F.pow, "frob": F.frobenius}[args.op]
        try:
            data["result"] = fn(*vals)
        except ZeroDivisionError as e:
            raise InputError(str(e)) from None
    _emit(args, data)
    return OK


# documented short names accepted alongside the descriptive ones
_KIND_ALIASES = {"example1": "subfield-atw", "example2": "block-two-weight"}
_CHECK_ALIASES = {"theorem6": "subspread"}

_PARAMS = {
    "subfield-atw": "qdm",
    "block-two-weight": "qdk",
    "gabidulin": "qmlk",
    "hadamard": "qmk",
    "expand-mrd": "qtlm",
}


def _construct(args) -> rankcodes.RankCode:
    kind = _KIND_ALIASES.get(args.kind, args.kind)
    missing = [f"--{c}" for c in _PARAMS[kind] if getattr(args, c) is None]
    if missing:
        raise InputError(f"{kind} needs {' '.join(missing)}")
    if kind == "subfield-atw":
        return atw.subfield_atw_code(args.q, args.d, args.m)
    if kind == "block-two-weight":
        return atw.block_two_weight_code(args.q, args.d, args.k)
    if kind == "gabidulin":
        return rankcodes.gabidulin(tower(args.q, args.m), args.l, args.k)
    if kind == "hadamard":
        return rankcodes.hadamard_code(args.q, args.m, args.k)
    if kind == "expand-mrd":
        if args.m % args.t:
            raise InputError(f"t={args.t} must divide m={args.m}")
        mid = tower(args.q**args.t, args.m // args.t)
        C_mrd = rankcodes.gabidulin(mid, args.l, 2)
        base = tower(args.q, args.m)
        if base.sup != mid.sup:
            raise InputError("intermediate tower does not share the top field")
        return atw.expand_mrd_to_atw(C_mrd, base)
    raise InputError(f"unknown construction {kind!r}")


def cmd_construct(args) -> int:
    C = _construct(args)
    _write(args.output, formats.format_matrix(C))
    info = {"field": C.sup.spec, "base": C.base.sub.spec, "k": C.k, "n": C.n}
    _emit(args, info, out=sys.stderr if args.output in (None, "-") else sys.stdout)
    return OK


def cmd_analyze(args) -> int:
    C = _load_code(args.file, args.compress)
    if args.metric == "rank":
        dist = rankcodes.rank_weight_distribution(C, args.budget)
        rep = atw.analyze_atw(C, args.budget)
        data = {"distribution": dist.to_dict(), "report": rep.to_dict()}
    else:
        H = hammingx.hamming_expansion(C, args.budget)
        dist = hammingx.hamming_weight_distribution(H, args.budget)
        rep = hammingx.analyze_hamming_two_weight(H, C, args.budget)
        data = {"distribution": dist.to_dict(), "report": rep.to_dict()}
    _emit(args, data)
    return OK


def cmd_verify(args) -> int:
    what = _CHECK_ALIASES.get(args.what, args.what)
    data: dict = {"check": what}
    if what == "spread":
        S = formats.parse_spread(formats.read_text(args.file))
        res = spreads.verify_spread(S)
        ok, data["problems"] = res.ok, res.problems
    else:
        C = _load_code(args.file)
        if what == "atw":
            rep = atw.analyze_atw(C, args.budget)
            ok = rep.is_antipodal
            data["report"] = rep.to_dict()
        elif what == "mrd":
            ok = rankcodes.is_mrd(C, args.budget)
            data["d"] = rankcodes.min_distance(C, args.budget)
        elif what == "subspread":
            r = spreads.check_subspread_criterion(C, args.budget)
            ok = r.agree
            data.update(atw=r.atw, subspread=r.subspread, t_prime=r.t_prime,
                        spread_size=r.spread_size, induced_count=r.induced_count)
        elif what == "weight-corr":
            corr = hammingx.weight_correspondence(C)
            ok = all(w == hammingx.expanded_weight(C.q, C.n, t) for t, w in corr)
            data["pairs"] = {f"{t}->{w}": c for (t, w), c in sorted(corr.items())}
        elif what == "induced-by-mrd":
            ok = atw.is_induced_by_mrd(C, args.budget)
        elif what == "half-classify":
            r = atw.classify_half_distance(C, args.budget)
            ok = r.kind == atw.HalfKind.CANONICAL
            data.update(kind=r.kind.value, subfield_degree=r.subfield_degree,
                        G=[list(row) for row in r.G] if r.G else None)
        else:
            raise InputError(f"unknown check {what!r}")
    data["pass"] = bool(ok)
    _emit(args, data)
    return OK if ok else FAILED


def cmd_spread(args) -> int:
    if args.action == "extract":
        C = _load_code(args.file)
        S = spreads.spread_from_atw(C)
        _write(args.output, formats.format_spread(S))
        return OK
    S = formats.parse_spread(formats.read_text(args.file))
    if args.action == "split":
        idx = spreads.direct_sum_indices(S)
        _emit(args, {"blocks": len(idx), "indices": idx,
                     "bases": [[list(v) for v in S.elements[i].basis] for i in idx]})
        return OK
    if args.w is None:
        raise InputError("project needs --w '<v1>;<v2>;...'")
    W = formats.parse_subspace(args.w, S.field, S.N)
    parts, rep = spreads.project_spread(S, W)
    _emit(args, {"dim_W": W.dim, "count": rep.count, "dims": rep.dims, "t_prime": rep.t_prime,
                 "subspread": rep.is_subspread})
    return OK if rep.is_subspread else FAILED


def cmd_expand_hamming(args) -> int:
    C = _load_code(args.file)
    H = hammingx.hamming_expansion(C, args.budget)
    _write(args.output, formats.format_matrix(H))
    return OK


def cmd_search(args) -> int:
    job = SearchJob(args.q, args.m, args.n, args.k,
                    mode="sample" if args.sample else "exhaustive",
                    count=args.sample or 0, seed=args.seed,
                    atw_only=args.atw_only, two_weight_only=args.two_weight_only, budget=args.budget)
    try:
        job.validate()
    except ValueError as e:
        raise InputError(str(e)) from None
    for rec in run_search(job, threads=args.threads):
        if args.json:
            print(json.dumps(rec))
        elif rec.get("summary"):
            print("summary " + " ".join(f"{k}={json.dumps(v)}" for k, v in rec.items() if k != "summary"))
        else:
            print(f"{rec['index']:>10}  d={rec['d']}  support={rec['support']}  atw={rec['atw']}  "
                  f"signature={rec['signature']}  basis={rec['basis']}")
    return OK


def cmd_equiv(args) -> int:
    C1, C2 = _load_code(args.file1), _load_code(args.file2)
    if (C1.k, C1.n) != (C2.k, C2.n) or C1.sup != C2.sup or C1.base.sub != C2.base.sub:
        raise InputError("codes have different parameters or fields")
    res = rankcodes.codes_equivalent(C1, C2, args.budget)
    _emit(args, {"status": res.status, "alpha": res.alpha, "M": res.M, "searched": res.searched})
    return {"yes": OK, "no": FAILED}.get(res.status, BUDGET)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max enumerated objects")

    p = argparse.ArgumentParser(prog="atwrank", description="Antipodal two-weight rank-metric code toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", parents=[common], help="field parameters and arithmetic")
    f.add_argument("spec", help="p^D or p^D:modulus")
    f.add_argument("op", nargs="?", choices=["add", "sub", "mul", "div", "inv", "neg", "pow", "frob"])
    f.add_argument("operands", nargs="*", type=int, help="element reprs (exponent or Q last for pow/frob)")
    f.set_defaults(func=cmd_field)

    c = sub.add_parser("construct", parents=[common], help="write a generator matrix")
    c.add_argument("kind", choices=["subfield-atw", "block-two-weight", "gabidulin", "hadamard", "expand-mrd",
                                    *_KIND_ALIASES])
    for name in ("q", "d", "m", "k", "l", "t"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", parents=[common], help="weight distribution and ATW report")
    a.add_argument("file")
    a.add_argument("--metric", choices=["rank", "hamming-expansion"], default="rank")
    a.add_argument("--compress", action="store_true", help="drop F_q-dependent columns first")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="pass/fail checks")
    v.add_argument("what", choices=["atw", "mrd", "spread", "subspread", "weight-corr", "induced-by-mrd",
                                    "half-classify", *_CHECK_ALIASES])
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spread", parents=[common], help="extract, split or project spreads")
    s.add_argument("action", choices=["extract", "split", "project"])
    s.add_argument("file")
    s.add_argument("--w", help="spanning vectors of W, ';'-separated")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_spread)

    h = sub.add_parser("expand-hamming", parents=[common], help="associated Hamming-metric code")
    h.add_argument("file")
    h.add_argument("-o", "--output")
    h.set_defaults(func=cmd_expand_hamming)

    r = sub.add_parser("search", parents=[common], help="scan q-systems")
    for name in ("q", "m", "n", "k"):
        r.add_argument(f"--{name}", type=int, required=True)
    r.add_argument("--sample", type=int, metavar="COUNT", help="random sample instead of exhaustive scan")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--atw-only", action="store_true")
    r.add_argument("--two-weight-only", action="store_true")
    r.add_argument("--threads", type=int, default=1)
    r.set_defaults(func=cmd_search)

    e = sub.add_parser("equiv", parents=[common], help="search for a code equivalence")
    e.add_argument("file1")
    e.add_argument("file2")
    e.set_defaults(func=cmd_equiv, budget=3 * 10**5)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return BUDGET
    except ContradictionError as e:
        print(f"error: {e}", file=sys.stderr)
        return FAILED
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
