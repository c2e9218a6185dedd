"""Command-line front end: construct, wronskian, verify, roots.

Exit codes: 0 pass, 1 mathematical refutation, 2 usage/validation error,
3 singular (non-normal) system, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analyze import (
    DOMAIN_POSITIVE,
    DOMAIN_REAL,
    PositivityCertificate,
    RootSolveError,
    certify_positive,
    complex_roots,
    interlacing_check,
    real_zero_profile,
    rootset_to_csv_rows,
    type1_wronskian_grid_sign,
    write_roots_csv,
)
from .construct import (
    SingularSystemError,
    at_system_probe,
    construct_type1,
    construct_type2,
    lowered_family,
    raising_apply,
    type2,
)
from .indices import MultiIndex, PathSpec
from .poly import Poly
from .rationals import rat, rat_from_str, rat_str
from .sturm import RationalInterval
from .weights import InvalidFamilyError, WeightFamily
from .wronskians import (
    TuranVariant,
    WronskianRequest,
    confluent_check,
    hankel_wronskian_identity_check,
    moment_acp,
    path_independence_check,
    turan_expression,
    turanian,
    wronskian,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_NUMERICAL = 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _parse_family(s: str) -> WeightFamily:
    try:
        return WeightFamily.from_json(json.loads(s))
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise CliError(f"bad --family JSON: {e}") from None
    except InvalidFamilyError as e:
        raise CliError(str(e)) from None


def _parse_index(s: str) -> MultiIndex:
    try:
        return MultiIndex(tuple(int(t) for t in s.split(",")))
    except (ValueError, TypeError) as e:
        raise CliError(f"bad multi-index {s!r}: {e}") from None


def _parse_path(args, family: WeightFamily) -> PathSpec:
    start = _parse_index(args.n)
    l = args.l if args.l is not None else 1
    if args.steps:
        steps = tuple(int(t) for t in args.steps.split(","))
        if args.l is not None and len(steps) != args.l - 1:
            raise CliError("--steps length must be l-1")
    else:
        steps = (args.j,) * (l - 1)
    path = PathSpec(start, steps)
    try:
        path.indices()
    except ValueError as e:
        raise CliError(str(e)) from None
    return path


def _poly_json(p: Poly) -> dict:
    return {
        "poly": p.to_strings(),
        "degree": p.degree,
        "leading": rat_str(p.leading),
    }


def _interval_json(iv: RationalInterval) -> list[str]:
    return [rat_str(iv.lo), rat_str(iv.hi)]


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _seed(args) -> int:
    env = os.environ.get("MOPW_SEED")
    if env is not None:
        return int(env)
    return args.seed if getattr(args, "seed", None) is not None else 0


# -- subcommands --------------------------------------------------------------


def cmd_construct(args) -> int:
    family = _parse_family(args.family)
    n = _parse_index(args.n)
    if args.type1:
        form = construct_type1(family, n)
        _emit({"coeff_polys": [p.to_strings() for p in form.coeff_polys]})
        return EXIT_OK
    if args.method == "moments":
        p = construct_type2(family, n)
    elif args.method == "closed-form":
        p = type2(family, n)
    else:  # both
        p = type2(family, n)
        q = construct_type2(family, n)
        if p != q:
            _emit({"ok": False, "reason": "closed form and moment solve disagree"})
            return EXIT_REFUTED
    _emit(_poly_json(p))
    return EXIT_OK


def cmd_wronskian(args) -> int:
    family = _parse_family(args.family)
    if args.hankel:
        n = _parse_index(args.n)
        p = turanian(family, n, args.j, args.l or 1)
        _emit(_poly_json(p))
        return EXIT_OK
    path = _parse_path(args, family)
    if args.moments:
        _, p = moment_acp(family, path, rat(0))
    else:
        p = wronskian(WronskianRequest(family, path))
    _emit(_poly_json(p))
    return EXIT_OK


def cmd_roots(args) -> int:
    family = _parse_family(args.family)
    rows = []
    if args.series_by == "l":
        n = _parse_index(args.n)
        lvalues = [int(t) for t in args.l_values.split(",")]
        sweeps = [(PathSpec.horizontal(n, l, args.j), f"l={l}") for l in lvalues]
    else:
        if not args.n_values:
            raise CliError("--n-values is required with --series-by n")
        starts = [_parse_index(t) for t in args.n_values.split(";")]
        l = args.l or 2
        sweeps = [
            (PathSpec.horizontal(s, l, args.j), "n=" + "-".join(map(str, s.entries)))
            for s in starts
        ]
    for path, label in sweeps:
        w = wronskian(WronskianRequest(family, path))
        if w.degree < 1:
            continue
        rs = complex_roots(w)
        rows.extend(rootset_to_csv_rows(rs, label))
    text = write_roots_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    family = _parse_family(args.family) if args.family else None
    sub = args.check

    if sub == "theorem1":
        path = _parse_path(args, family)
        if path.length % 2 != 0:
            raise CliError("theorem1 needs even l")
        w = wronskian(WronskianRequest(family, path))
        res = certify_positive(w, DOMAIN_REAL)
        if isinstance(res, PositivityCertificate):
            _emit({"ok": True, "details": {"degree": w.degree}})
            return EXIT_OK
        _emit({"ok": False, "witness": rat_str(res.witness)})
        return EXIT_REFUTED

    if sub == "theorem2":
        path = _parse_path(args, family)
        if path.length % 2 != 1:
            raise CliError("theorem2 needs odd l")
        w = wronskian(WronskianRequest(family, path))
        prof = real_zero_profile(w)
        expected = path.start.size
        ok = prof.count == expected and prof.simple
        detail = {"count": prof.count, "expected": expected, "simple": prof.simple}
        # interlacing against the shifted path (drop first index, extend by one)
        if ok and path.length > 1:
            nxt = PathSpec(path.indices()[1], path.steps[1:] + (path.steps[-1],))
            w2 = wronskian(WronskianRequest(family, nxt))
            inter_ok, inter_detail = interlacing_check(w, w2)
            ok = ok and inter_ok
            detail["interlacing"] = inter_detail
        _emit({"ok": ok, "details": detail})
        return EXIT_OK if ok else EXIT_REFUTED

    if sub == "theorem3":
        path = _parse_path(args, family)
        lo = rat_from_str(args.grid_min) if args.grid_min else (
            rat(1, 10) if family.support_positive else rat(-5)
        )
        hi = rat_from_str(args.grid_max) if args.grid_max else rat(5)
        npts = args.grid_points
        grid = [lo + (hi - lo) * rat(i, npts - 1) for i in range(npts)]
        rep = type1_wronskian_grid_sign(family, path, grid, args.precision_bits)
        _emit({"ok": rep["constant_sign"], "details": {"signs": rep["signs"]}})
        return EXIT_OK if rep["constant_sign"] else EXIT_REFUTED

    if sub == "turan":
        n = _parse_index(args.n)
        variant = _make_variant(args, family)
        expr = turan_expression(family, n, variant)
        domain = DOMAIN_REAL if variant.tag in ("hermite-pair", "hermite-diag") else DOMAIN_POSITIVE
        res = certify_positive(expr, domain)
        if isinstance(res, PositivityCertificate):
            _emit({"ok": True, "details": {"degree": expr.degree}})
            return EXIT_OK
        _emit(
            {
                "ok": False,
                "witness": rat_str(res.witness) if res.witness is not None else None,
                "value": rat_str(res.value) if res.value is not None else None,
            }
        )
        return EXIT_REFUTED

    if sub == "hankel-id":
        if family.kind != "hermite":
            raise CliError("hankel-id is a multiple Hermite identity")
        n = _parse_index(args.n)
        ok = hankel_wronskian_identity_check(n, family.c, args.j, args.l or 2)
        _emit({"ok": ok})
        return EXIT_OK if ok else EXIT_REFUTED

    if sub == "path-free":
        n = _parse_index(args.n)
        ok = path_independence_check(family, n, args.l or 2, cap=args.cap, seed=_seed(args))
        _emit({"ok": ok})
        return EXIT_OK if ok else EXIT_REFUTED

    if sub == "confluent":
        path = _parse_path(args, family)
        z = rat_from_str(args.z)
        eps_list = [rat_from_str(t) for t in args.eps.split(",")]
        res = confluent_check(family, path, z, eps_list)
        resid = [abs(r) for _, r in res]
        ratios = [
            float(a / b) for a, b in zip(resid, resid[1:]) if b != 0
        ]
        ok = all(r > 1 for r in ratios) if len(resid) > 1 else True
        _emit(
            {
                "ok": ok,
                "details": {
                    "residuals": [rat_str(r) for r in resid],
                    "ratios": ratios,
                },
            }
        )
        return EXIT_OK if ok else EXIT_REFUTED

    if sub == "at-probe":
        n = _parse_index(args.n)
        rep = at_system_probe(family, n, trials=args.trials, seed=_seed(args))
        _emit({"ok": not rep["suspect"], "details": rep})
        return EXIT_OK if not rep["suspect"] else EXIT_REFUTED

    if sub == "raising":
        n = _parse_index(args.n)
        raised = raising_apply(family, n, args.j)
        low = lowered_family(family, args.j)
        direct = type2(low, n.step(args.j))
        ok = raised == direct
        _emit({"ok": ok})
        return EXIT_OK if ok else EXIT_REFUTED

    raise CliError(f"unknown verify subcommand {sub!r}")


def _make_variant(args, family: WeightFamily) -> TuranVariant:
    v = args.variant
    if v == "pair":
        return TuranVariant.hermite_pair(args.j, args.k)
    if v == "diag":
        return TuranVariant.hermite_diag(args.j)
    if v == "plain":
        return TuranVariant.plain(args.j)
    if v == "two-param":
        if family.kind == "laguerre1":
            return TuranVariant.laguerre1_two_param(args.j, args.k)
        if family.kind == "laguerre2":
            return TuranVariant.laguerre2_two_param(args.j, args.k)
        raise CliError("two-param variant needs a Laguerre family")
    raise CliError(f"unknown variant {v!r}")


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mopw",
        description="Exact Wronskians and Turanians of multiple orthogonal polynomials",
    )
    ap.add_argument("--config", help="JSON file with default option values")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, path_opts=True):
        p.add_argument("--family", help="weight family as JSON")
        p.add_argument("--n", help="multi-index, e.g. 3,3")
        if path_opts:
            p.add_argument("--l", type=int, help="path length")
            p.add_argument("--steps", help="explicit step directions, e.g. 1,1,2")
            p.add_argument("--j", type=int, default=1, help="default step direction")
        p.add_argument("--seed", type=int, help="RNG seed (MOPW_SEED wins)")

    p = sub.add_parser("construct", help="type I / type II polynomials")
    common(p, path_opts=False)
    p.add_argument("--method", choices=["moments", "closed-form", "both"], default="closed-form")
    p.add_argument("--type1", action="store_true", help="emit the type I linear form")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("wronskian", help="Wronskian / Turanian along a path")
    common(p)
    p.add_argument("--hankel", action="store_true", help="Turanian instead of Wronskian")
    p.add_argument("--moments", action="store_true", help="divide by prod i! (ACP moment)")
    p.set_defaults(func=cmd_wronskian)

    p = sub.add_parser("verify", help="certify the sign / identity statements")
    p.add_argument(
        "check",
        choices=[
            "theorem1",
            "theorem2",
            "theorem3",
            "turan",
            "hankel-id",
            "path-free",
            "confluent",
            "at-probe",
            "raising",
        ],
    )
    common(p)
    p.add_argument("--variant", choices=["pair", "diag", "plain", "two-param"], default="diag")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--z", default="0", help="evaluation point (confluent)")
    p.add_argument("--eps", default="1/10,1/100,1/1000")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--cap", type=int, default=50, help="max paths enumerated (path-free)")
    p.add_argument("--grid-points", type=int, default=25)
    p.add_argument("--grid-min")
    p.add_argument("--grid-max")
    p.add_argument("--precision-bits", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="export complex zeros of swept Wronskians as CSV")
    common(p)
    p.add_argument("--series-by", choices=["l", "n"], default="l")
    p.add_argument("--l-values", default="2,4,6", help="path lengths when sweeping l")
    p.add_argument("--n-values", help="semicolon-separated start indices when sweeping n")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_roots)

    return ap


def _apply_config(args) -> None:
    if not args.config:
        return
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise CliError(f"bad --config: {e}") from None
    for key, value in cfg.items():
        attr = key.replace("-", "_")
        if getattr(args, attr, None) in (None, False):
            if isinstance(value, (dict, list)):
                value = json.dumps(value)
            setattr(args, attr, value)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _apply_config(args)
        if getattr(args, "family", None) is None:
            raise CliError("--family is required")
        needs_n = not (args.command == "roots" and args.series_by == "n")
        if needs_n and getattr(args, "n", None) is None:
            raise CliError("--n is required")
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except InvalidFamilyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SingularSystemError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SINGULAR
    except (RootSolveError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
