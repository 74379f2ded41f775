"""Command-line front end.

Exit codes: 0 success (or property true), 1 property false (witness JSON
printed), 2 usage error, 3 budget exceeded.  Same argv and seed always
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as B
from . import construct as K
from . import cosets as CS
from . import hmds as HM
from . import repro, serialize
from .codes import is_mds, min_distance
from .errors import BudgetExceeded, LmdsError, SearchBudgetExceeded, UnknownCase
from .fields import make_field

DEFAULT_BUDGET = CS.DEFAULT_BUDGET


def _parse_field(spec: str):
    """Field shorthand: '7' or 'q7' for GF(7), '2^13' for GF(2^13) with the
    canonical modulus, or a path to a JSON field descriptor."""
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return serialize.field_from_json(json.load(fh))
    text = spec.lstrip("qQ")
    if "^" in text:
        p, m = text.split("^", 1)
        p, m = int(p), int(m)
        if m == 1:
            return make_field(p)
        return make_field(p, [(m, None)])
    return make_field(int(text))


def _load_code(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return serialize.code_from_json(json.load(fh))


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(serialize.dumps(payload))
    else:
        print(human)


def _cmd_bounds(args) -> int:
    report = B.bound_report(args.n, args.k, q=args.q, L=args.L,
                            eps=args.eps, tau=args.tau)
    print(serialize.dumps(report) if args.json else serialize.dumps_pretty(report))
    return 0


def _cmd_check(args) -> int:
    code = _load_code(args.code)
    budget = args.budget
    prop = args.property
    witness = None
    if prop == "mds":
        result = is_mds(code, recheck=True)
        payload = {"property": prop, "result": result}
    elif prop == "distance":
        d = min_distance(code, budget=budget, use_cache=False)
        payload = {"property": prop, "result": d}
        _emit(args, payload, f"minimum distance: {d}")
        return 0
    elif prop == "2mds":
        if args.method == "det":
            result, witness = HM.is_2mds(code)
        else:
            result, witness = CS.is_strongly_list_decodable(
                code, T=2 * (code.n - code.k), L=2, budget=budget)
        payload = {"property": prop, "method": args.method, "result": result}
    elif prop == "lightly2mds":
        if args.method == "det":
            result, witness = HM.lightly_2mds_det(code)
        else:
            result, witness = CS.is_lightly_list_decodable_bruteforce(
                code, T=2 * (code.n - code.k), L=2, budget=budget)
        payload = {"property": prop, "method": args.method, "result": result}
    elif prop == "listdecodable":
        if args.tau is None or args.L is None:
            raise UsageError("listdecodable needs --tau and --L")
        result, witness = CS.is_list_decodable(code, args.tau, args.L, budget)
        payload = {"property": prop, "tau": args.tau, "L": args.L, "result": result}
    elif prop == "strong":
        if args.T is None or args.L is None:
            raise UsageError("strong needs --T and --L")
        result, witness = CS.is_strongly_list_decodable(code, args.T, args.L, budget)
        payload = {"property": prop, "T": args.T, "L": args.L, "result": result}
    elif prop == "lmdsprofile":
        lmax = args.lmax if args.lmax is not None else B.thresholds(code.n, code.k).high_l
        rep = CS.l_mds_profile(code, l_max=lmax, budget=budget)
        payload = {"property": prop, **rep.to_json()}
        _emit(args, payload, serialize.dumps_pretty(payload))
        return 0
    elif prop == "bonneau":
        result = CS.bonneau_check(code, budget)
        payload = {"property": prop, "result": result}
    else:
        raise UsageError(f"unknown property {prop!r}")
    if witness is not None:
        payload["witness"] = witness.to_json()
    _emit(args, payload, f"{prop}: {payload['result']}"
          + ("" if witness is None else f"\nwitness: {serialize.dumps(witness.to_json())}"))
    return 0 if payload["result"] else 1


def _cmd_construct(args) -> int:
    if args.kind == "rho3":
        code, plan = K.rho3_construction(args.h)
    elif args.kind == "general":
        code, plan = K.general_construction(args.rho, args.h)
    elif args.kind == "greedy":
        if args.field is None or args.n is None:
            raise UsageError("greedy needs --field and --n")
        field = _parse_field(args.field)
        code = K.greedy_rho3(field, args.n)
    else:
        raise UsageError(f"unknown construction {args.kind!r}")
    doc = serialize.code_to_json(code)
    text = serialize.dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        _emit(args, {"written": args.out, "n": code.n, "k": code.k},
              f"wrote [{code.n},{code.k}] code over {code.field.name} to {args.out}")
    else:
        print(text)
    return 0


def _cmd_repro(args) -> int:
    if args.dump:
        print(serialize.dumps_pretty(repro.dump_fixtures()))
        return 0
    if args.case == "all":
        ids = repro.cases_for_tier(args.tier)
    else:
        ids = [args.case]
    results = []
    all_pass = True
    for cid in ids:
        res = repro.run_case(cid, args.budget, args.seed)
        results.append(res)
        all_pass = all_pass and res["pass"]
        if not args.json:
            status = "PASS" if res["pass"] else "FAIL"
            print(f"case {cid}: {status} ({res['seconds']}s)")
            if not res["pass"]:
                detail = {k: v for k, v in res.items() if k not in ("case", "tier")}
                print(serialize.dumps_pretty(detail))
    if args.json:
        print(serialize.dumps(results))
    return 0 if all_pass else 1


def _cmd_experiment(args) -> int:
    field = _parse_field(args.field)
    result = HM.random_2mds_fraction(args.n, args.k, field, args.samples, args.seed)
    print(serialize.dumps(result) if args.json
          else serialize.dumps_pretty(result))
    return 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_globals(parser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true",
                        default=d if suppress else False,
                        help="machine-readable output")
    parser.add_argument("--budget", type=int,
                        default=d if suppress else int(
                            os.environ.get("HMDS_BUDGET", DEFAULT_BUDGET)),
                        help="enumeration budget in vectors (env HMDS_BUDGET)")
    parser.add_argument("--seed", type=int, default=d if suppress else 0,
                        help="seed for randomized cases")
    parser.add_argument("--threads", type=int, default=d if suppress else 1,
                        help="worker count (accepted for compatibility; execution "
                             "is deterministic and single-process)")


def build_parser() -> _Parser:
    p = _Parser(prog="lmdslab", description=__doc__)
    _add_globals(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="bound/threshold report")
    _add_globals(b, suppress=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--q", type=int)
    b.add_argument("--L", type=int)
    b.add_argument("--eps", type=float)
    b.add_argument("--tau", type=int)
    b.set_defaults(fn=_cmd_bounds)

    c = sub.add_parser("check", help="test a property of a code")
    _add_globals(c, suppress=True)
    c.add_argument("--code", required=True, help="path to a code JSON descriptor")
    c.add_argument("--property", required=True,
                   choices=["mds", "distance", "2mds", "lightly2mds",
                            "listdecodable", "strong", "lmdsprofile", "bonneau"])
    c.add_argument("--method", choices=["det", "brute"], default="det")
    c.add_argument("--tau", type=int)
    c.add_argument("--L", type=int)
    c.add_argument("--T", type=int)
    c.add_argument("--lmax", type=int)
    c.set_defaults(fn=_cmd_check)

    k = sub.add_parser("construct", help="build a 2-MDS GRS code")
    _add_globals(k, suppress=True)
    k.add_argument("kind", choices=["rho3", "general", "greedy"])
    k.add_argument("--rho", type=int, default=3)
    k.add_argument("--h", type=int, default=3)
    k.add_argument("--n", type=int)
    k.add_argument("--field", help="field shorthand (e.g. 2^13) or descriptor path")
    k.add_argument("--out", help="write the code JSON here")
    k.set_defaults(fn=_cmd_construct)

    r = sub.add_parser("repro", help="run reproduction cases")
    _add_globals(r, suppress=True)
    r.add_argument("--case", default="all")
    r.add_argument("--tier", choices=["fast", "standard", "long"], default="standard")
    r.add_argument("--dump", action="store_true", help="print the embedded fixtures")
    r.set_defaults(fn=_cmd_repro)

    e = sub.add_parser("experiment", help="random-code 2-MDS fraction")
    _add_globals(e, suppress=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--field", required=True, help="field shorthand (e.g. 2^16)")
    e.add_argument("--samples", type=int, default=200)
    e.set_defaults(fn=_cmd_experiment)
    return p


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, SearchBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except UnknownCase as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except LmdsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
