"""Command-line front end.

One binary, subcommand style; all numerics live in the library.  Output is
JSON (default) or CSV with a fixed column set, 17-significant-digit
decimal serialization so values round-trip bit-exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from . import inhom, lg, oracle, plane, tp
from .errors import (AccuracyError, DomainError, OrderError, ParcylError,
                     PairError, PoleError)

FUNCTIONS = ("U+", "U+'", "U-", "V-", "U+i", "U-i", "W+x", "W-x",
             "W0", "W3", "UR", "WR")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _result_payload(cv) -> dict:
    v = cv.value
    return {
        "value_mantissa_re": _fmt(v.mantissa.real),
        "value_mantissa_im": _fmt(v.mantissa.imag),
        "log_scale": _fmt(v.log_scale),
        "rel_bound": _fmt(cv.rel_bound),
        "order": cv.order,
        "domain_ok": cv.domain_ok,
        "noncertified_terms": list(cv.noncertified),
    }


def _oracle_payload(ov) -> dict:
    v = ov.value
    return {
        "value_mantissa_re": _fmt(v.mantissa.real),
        "value_mantissa_im": _fmt(v.mantissa.imag),
        "log_scale": _fmt(v.log_scale),
        "est_acc": _fmt(ov.est_acc),
        "method": ov.method,
    }


def _error_exit(exc: Exception) -> int:
    code = {
        PairError: "EMPTY_PAIR",
        PoleError: "POLE",
        DomainError: "DOMAIN",
        OrderError: "ORDER",
        AccuracyError: "ACCURACY",
    }.get(type(exc), "ERROR")
    print(json.dumps({"error": code, "detail": str(exc)}))
    return 2


def _dispatch(args) -> object:
    z = complex(args.z) if args.z is not None else complex(args.x)
    u, order = args.u, args.order
    fn = args.function
    if fn == "U+":
        return lg.pcf_U_pos(u, z, order, "+z")
    if fn == "U+'":
        return lg.pcf_Uprime_pos(u, z, order, "+z")
    if fn == "U-":
        return tp.pcf_U_neg(u, z, order)
    if fn == "V-":
        return tp.pcf_V_neg(u, z, order)
    if fn == "U+i":
        return tp.pcf_U_rotated(u, z, order, "+i")
    if fn == "U-i":
        return tp.pcf_U_rotated(u, z, order, "-i")
    if fn == "W+x":
        return tp.weber_W_real(u, z.real, order, "+x")
    if fn == "W-x":
        return tp.weber_W_real(u, z.real, order, "-x")
    if fn == "W0":
        return lg.weber_neg_Wj(u, z, order, 0)
    if fn == "W3":
        return lg.weber_neg_Wj(u, z, order, 3)
    if fn == "UR":
        pair = _parse_pair(args.pair)
        return inhom.inhom_series(u, z, order, args.R, "plus", pair)
    if fn == "WR":
        pair = _parse_pair(args.pair)
        return inhom.inhom_series(u, z, order, args.R, "weber-", pair)
    raise ValueError(f"unknown function {fn}")


def _parse_pair(text: str) -> tuple[int, int]:
    j, k = (int(p) for p in text.split(","))
    if (j, k) == (1, 3):
        raise PairError("the (1,3) recession pair has an empty domain")
    return (j, k)


def cmd_eval(args) -> int:
    try:
        cv = _dispatch(args)
    except ParcylError as exc:
        return _error_exit(exc)
    if args.format == "csv":
        v = cv.value
        print("u,re_z,im_z,order,mantissa_re,mantissa_im,log_scale,bound")
        z = complex(args.z) if args.z is not None else complex(args.x)
        print(",".join(_fmt(t) for t in
                       (args.u, z.real, z.imag)) +
              f",{cv.order}," +
              ",".join(_fmt(t) for t in
                       (v.mantissa.real, v.mantissa.imag, v.log_scale,
                        cv.rel_bound)))
    else:
        print(json.dumps(_result_payload(cv)))
    return 0


def cmd_oracle(args) -> int:
    z = complex(args.z) if args.z is not None else complex(args.x)
    try:
        if args.function in ("U+", "U+'"):
            ov = oracle.oracle_U(args.u / 2.0, math.sqrt(2 * args.u) * z)
        elif args.function in ("U-", "V-"):
            a = args.u / 2.0
            ov = (oracle.oracle_V_neg(a, math.sqrt(2 * args.u) * z)
                  if args.function == "V-" else
                  oracle.oracle_U(-a, math.sqrt(2 * args.u) * z))
        elif args.function == "UR":
            pair = _parse_pair(args.pair)
            ov = oracle.oracle_inhom(args.u / 2.0, math.sqrt(2 * args.u) * z,
                                     args.R, pair)
        else:
            raise DomainError(f"no oracle route for {args.function}")
    except ParcylError as exc:
        return _error_exit(exc)
    print(json.dumps(_oracle_payload(ov)))
    return 0


def cmd_map(args) -> int:
    """Accuracy map over a grid: asymptotic vs oracle vs certified bound."""
    re0, re1, nre = args.grid_re
    im0, im1, nim = args.grid_im
    points = [complex(re0 + (re1 - re0) * i / max(nre - 1, 1),
                      im0 + (im1 - im0) * j / max(nim - 1, 1))
              for i in range(int(nre)) for j in range(int(nim))]

    def work(z):
        try:
            cv = lg.pcf_U_pos(args.u, z, args.order, "+z")
            ov = oracle.oracle_U(args.u / 2.0, math.sqrt(2 * args.u) * z)
            actual = abs((cv.value / ov.value).to_complex() - 1.0)
            return (z, cv, actual)
        except ParcylError:
            return (z, None, None)

    with ThreadPoolExecutor(max_workers=args.workers) as ex:
        rows = list(ex.map(work, points))
    print("u,re_z,im_z,order,mantissa_re,mantissa_im,log_scale,bound,actual_err,ok")
    bad = 0
    for z, cv, actual in rows:
        if cv is None:
            continue
        v = cv.value
        ok = actual <= cv.rel_bound
        bad += (not ok)
        print(",".join(_fmt(t) for t in (args.u, z.real, z.imag)) +
              f",{cv.order}," +
              ",".join(_fmt(t) for t in (v.mantissa.real, v.mantissa.imag,
                                         v.log_scale, cv.rel_bound, actual))
              + f",{int(ok)}")
    return 0 if bad == 0 else 1


def cmd_domain(args) -> int:
    d = plane.DomainId(args.tag)
    z = complex(args.z)
    print(json.dumps({"tag": args.tag, "z": [z.real, z.imag],
                      "contains": plane.domain_contains(z, d)}))
    return 0


def cmd_coeff_dump(args) -> int:
    from .coeffs import get_tables

    t = get_tables()
    fam = {"Ebar": t.Ebar, "Etilde": t.Etilde, "E": t.E}.get(args.family)
    if fam is not None:
        out = []
        for s in range(1, min(args.smax, t.s_max) + 1):
            out.append({"family": args.family, "s": s,
                        "coefficients": [str(c) for c in fam[s].coeffs]})
        print(json.dumps(out))
        return 0
    if args.family == "airy":
        out = [{"family": "a", "coefficients": [str(c) for c in t.airy.a[1:]]},
               {"family": "a_tilde",
                "coefficients": [str(c) for c in t.airy.a_tilde[1:]]}]
        print(json.dumps(out))
        return 0
    if args.family == "G":
        g = t.G(args.R, "plus" if args.variant == "plus" else "minus")
        out = [{"family": "G", "s": s, "R": args.R,
                "pole_power": g[s].pole_power,
                "numerator": [str(c) for c in g[s].numerator.coeffs]}
               for s in range(min(args.smax, len(g) - 1) + 1)]
        print(json.dumps(out))
        return 0
    print(json.dumps({"error": "ORDER", "detail": f"unknown family {args.family}"}))
    return 2


def _grid(text: str) -> tuple[float, float, float]:
    a, b, n = text.split(":")
    return (float(a), float(b), int(n))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parcyl",
                                description="parabolic cylinder / Weber "
                                            "special-function engine")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, oracle_cmd=False):
        sp.add_argument("--function", required=True, choices=FUNCTIONS)
        sp.add_argument("--u", type=float, required=True)
        sp.add_argument("--z", type=str, default=None,
                        help="complex argument, e.g. '1.5+0.5j'")
        sp.add_argument("--x", type=float, default=None)
        sp.add_argument("--order", type=int, default=3)
        sp.add_argument("--R", type=int, default=0)
        sp.add_argument("--pair", type=str, default="0,2")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    se = sub.add_parser("eval", help="evaluate an expansion with its bound")
    common(se)
    se.set_defaults(func=cmd_eval)

    so = sub.add_parser("oracle", help="independent reference value")
    common(so, oracle_cmd=True)
    so.set_defaults(func=cmd_oracle)

    sm = sub.add_parser("map", help="accuracy map over a grid (CSV)")
    sm.add_argument("--u", type=float, required=True)
    sm.add_argument("--order", type=int, default=3)
    sm.add_argument("--grid-re", type=_grid, default=(0.5, 3.0, 6))
    sm.add_argument("--grid-im", type=_grid, default=(0.0, 0.0, 1))
    sm.add_argument("--workers", type=int, default=4)
    sm.set_defaults(func=cmd_map)

    sd = sub.add_parser("domain", help="validity-domain membership")
    sd.add_argument("--tag", required=True, choices=plane.DOMAIN_TAGS)
    sd.add_argument("--z", type=str, required=True)
    sd.set_defaults(func=cmd_domain)

    sc = sub.add_parser("coeff-dump", help="emit coefficient tables as JSON")
    sc.add_argument("--family", required=True,
                    choices=("Ebar", "Etilde", "E", "airy", "G"))
    sc.add_argument("--smax", type=int, default=6)
    sc.add_argument("--R", type=int, default=0)
    sc.add_argument("--variant", choices=("plus", "minus"), default="plus")
    sc.set_defaults(func=cmd_coeff_dump)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
