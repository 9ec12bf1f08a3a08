"""Command-line front end: ``compute``, ``verify`` and ``list``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import afftrudi as AT
from . import bcsym as BC
from . import qtseries as QS
from . import symfun as SF
from . import verify as V
from .exactalg import LaurentPoly, TruncSeries, VarSet, from_json, series_text, to_json
from .partitions import Partition, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
OBJECTS = ("e", "schur", "hl", "bc-hl", "classical-char", "jt-sum", "cylindric", "kostka", "qt-series", "theta")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    format: str = "table"
    threads: int | None = None
    fixtures: str | None = None
    order: int | None = None


# ---------------------------------------------------------------------------
# rendering


def _t_power(e2: int) -> str:
    """T^e2 written in t."""
    if e2 % 2 == 0:
        e = e2 // 2
        return "t" if e == 1 else f"t^{e}"
    return f"t^({e2}/2)"


def _coef_text(c: dict[int, int]) -> str:
    """Polynomial in t (keys are T-exponents), ascending, no spaces: 1-t, 1+t+t^2."""
    out = ""
    for e2 in sorted(c):
        v = c[e2]
        mon = _t_power(e2) if e2 else ""
        mag = abs(v)
        body = mon if mag == 1 and mon else (f"{mag}*{mon}" if mon else str(mag))
        if not out:
            out = ("-" if v < 0 else "") + body
        else:
            out += ("-" if v < 0 else "+") + body
    return out


def _x_monomial(names: Sequence[str], exps: Sequence[int]) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)


def render(p: LaurentPoly) -> str:
    """Human form grouped by monomials in everything except T, e.g. ``x1^2 + (1-t)*x1*x2``."""
    names = p.vs.names
    ti = p.vs.index.get("T")
    groups: dict[tuple[int, ...], dict[int, int]] = {}
    for exps, c in p.terms():
        rest = tuple(e for i, e in enumerate(exps) if i != ti)
        te = exps[ti] if ti is not None else 0
        groups.setdefault(rest, {})[te] = c
    if not groups:
        return "0"
    rnames = [n for i, n in enumerate(names) if i != ti]
    # by sorted exponent shape first (dominance-like), then lexicographically
    keys = sorted(groups, key=lambda k: (tuple(sorted(k, reverse=True)), k), reverse=True)
    parts: list[tuple[str, str]] = []
    for k in keys:
        c = groups[k]
        mon = _x_monomial(rnames, k)
        if len(c) == 1:
            (e2, v), = c.items()
            sign = "-" if v < 0 else "+"
            cabs = _coef_text({e2: abs(v)})
            if not mon:
                body = cabs
            elif cabs == "1":
                body = mon
            else:
                body = f"{cabs}*{mon}"
        else:
            sign = "+"
            body = f"({_coef_text(c)})*{mon}" if mon else _coef_text(c)
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _poly_payload(p: LaurentPoly) -> dict:
    return {"type": "poly", "value": to_json(p), "text": render(p)}


def _series_payload(s: TruncSeries) -> dict:
    return {"type": "series", "order": s.order, "value": to_json(s.poly), "text": series_text(s)}


def _coeff_payload(coeffs: list[int]) -> dict:
    return {"type": "coefficients", "value": coeffs, "text": ",".join(map(str, coeffs))}


def payload_value(obj: dict) -> Any:
    """Rebuild the value a ``compute`` JSON payload describes."""
    if obj["type"] == "poly":
        return from_json(obj["value"])
    if obj["type"] == "series":
        return TruncSeries(from_json(obj["value"]), obj["order"])
    if obj["type"] == "coefficients":
        return list(obj["value"])
    raise ValueError(f"unknown payload type {obj['type']!r}")


# ---------------------------------------------------------------------------
# compute


def _lam(args) -> Partition:
    if args.lam is None:
        raise UsageError("--lambda is required")
    try:
        return parse(args.lam)
    except ValueError as exc:
        raise UsageError(f"--lambda: {exc}") from None


def _req(args, *names: str) -> None:
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required")


def _t_exp(text: str | None) -> int | None:
    """``q`` -> 1, ``q^m`` -> m, absent -> formal t."""
    if text is None or text == "t":
        return None
    if text == "q":
        return 1
    if text.startswith("q^"):
        try:
            return int(text[2:])
        except ValueError:
            pass
    raise UsageError(f"--t must be t, q or q^m, got {text!r}")


def _param_poly(text: str, vs: VarSet) -> LaurentPoly:
    """Small parameter expressions: integers, t, -t, t^(1/2), -t^(1/2)."""
    s = text.replace(" ", "")
    sign = -1 if s.startswith("-") else 1
    s = s.lstrip("-")
    T = vs.gen("T")
    table = {"t": T * T, "t^(1/2)": T, "sqrt(t)": T}
    if s in table:
        return sign * table[s]
    try:
        return vs.const(sign * int(s))
    except ValueError:
        raise UsageError(f"cannot read parameter {text!r}") from None


def compute(args) -> dict:
    obj = args.object
    if obj == "e":
        _req(args, "r", "vars")
        return _poly_payload(SF.elementary(args.r, args.vars))
    if obj == "schur":
        _req(args, "vars")
        method = args.method or "bialternant"
        if method not in SF.SCHUR_METHODS:
            raise UsageError(f"--method must be one of {SF.SCHUR_METHODS}")
        return _poly_payload(SF.schur(_lam(args), args.vars, method))
    if obj == "hl":
        _req(args, "vars")
        return _poly_payload(SF.hall_littlewood(_lam(args), args.vars))
    if obj == "bc-hl":
        _req(args, "vars")
        vs = BC.bc_varset(args.vars)
        if args.family:
            if args.family not in BC.BC_FAMILIES:
                raise UsageError(f"--family must be one of {BC.BC_FAMILIES}")
            s1, s2 = BC.family_parameters(args.family, vs)
        else:
            s1, s2 = _param_poly(args.s1 or "0", vs), _param_poly(args.s2 or "0", vs)
        return _poly_payload(BC.hl_bc(_lam(args), args.vars, s1, s2, vs))
    if obj == "classical-char":
        _req(args, "vars", "family")
        if args.family not in BC.CHARACTER_FAMILIES:
            raise UsageError(f"--family must be one of {BC.CHARACTER_FAMILIES}")
        return _poly_payload(BC.classical_character(args.family, _lam(args), args.vars))
    if obj == "jt-sum":
        _req(args, "k", "n")
        fam = args.family or "GL"
        if fam == "GL":
            _req(args, "r")
            return _poly_payload(AT.affine_jt_gl(args.k, args.r, args.n))
        if fam == "B_tt":
            return _poly_payload(AT.affine_jt_b_tt(args.k, args.n))
        if fam not in BC.BC_FAMILIES:
            raise UsageError(f"--family must be GL, B_tt or one of {BC.BC_FAMILIES}")
        return _poly_payload(AT.affine_jt_bc(fam, args.k, args.n))
    if obj == "cylindric":
        _req(args, "n", "k", "ell")
        return _poly_payload(AT.cylindric_schur_det(_lam(args), args.n, args.k, args.ell))
    if obj == "kostka":
        _req(args, "k", "r", "ell")
        if args.mu is None:
            raise UsageError("--mu is required")
        return _poly_payload(AT.level_restricted_kostka(AT.KostkaParams(args.k, args.ell, args.r, parse(args.mu))))
    if obj == "qt-series":
        return _compute_series(args)
    if obj == "theta":
        return _compute_theta(args)
    raise UsageError(f"unknown object {obj!r}")


def _order(args, default: int = 10) -> int:
    return default if args.order is None else args.order


def _finish_series(s: TruncSeries, t_exp: int | None) -> dict:
    if s.vs.nvars == 1:
        try:
            return _coeff_payload(QS.q_coefficients(s))
        except ValueError:
            pass
    return _series_payload(s)


def _compute_series(args) -> dict:
    _req(args, "check", "k")
    D = _order(args)
    t_exp = _t_exp(args.t)
    sigma = args.sigma or 0
    if args.check not in QS.THEOREMS + QS.EXTRA_SUMS:
        raise UsageError(f"--check must be one of {QS.THEOREMS + QS.EXTRA_SUMS}")
    side = args.side or "sum"
    try:
        if side == "sum":
            s = QS.rr_sum_side(args.check, args.k, sigma, D, t_exp)
        elif side == "product":
            s = QS.rr_product_side(args.check, args.k, sigma, D, t_exp)
        else:
            raise UsageError("--side must be sum or product")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _finish_series(s, t_exp)


def _compute_theta(args) -> dict:
    D = _order(args)
    _req(args, "k", "n")
    try:
        if args.corollary:
            side = args.side or "product"
            fn = QS.character_product if side == "product" else QS.character_sum
            return _finish_series(fn(args.corollary, args.k, args.n, D), 1)
        if args.duality:
            lhs, rhs = QS.theta_duality_sides(args.duality, args.k, args.n, D)
            return _finish_series(rhs if args.side == "rhs" else lhs, 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("theta needs --corollary or --duality")


# ---------------------------------------------------------------------------
# verify and list


def _specs_for(args) -> list[V.CheckSpec]:
    params = V.parse_params(args.params or "")
    if args.id is not None:
        e = V.entry(args.id)
        if params:
            rows = [params]
        else:
            rows = e.grid() or [{}]
    else:
        if params:
            raise V.InvalidParameters("--params needs --id")
        rows = None
    if rows is not None:
        specs = [V.make_spec(args.id, r) for r in rows]
        if args.status:
            specs = [s for s in specs if s.status == args.status]
    else:
        specs = V.expand(args.status, args.id_prefix, args.max_cost)
    if args.max_cost is not None:
        specs = [s for s in specs if s.cost <= args.max_cost]
    if args.order is not None:
        specs = [V.make_spec(s.id, {**s.param_dict, "D": args.order}) if "D" in s.param_dict else s for s in specs]
    return specs


def cmd_verify(args) -> int:
    specs = _specs_for(args)
    reports = V.run_specs(specs, args.threads, fixtures=args.fixtures, update_fixtures=args.update_fixtures)
    if args.format == "json":
        print(V.reports_json(reports))
    else:
        print(V.summary_table(reports))
    failed = [r for r in reports if r.status == "fail"]
    for r in failed:
        print(f"FAIL {r.id} {json.dumps(r.params, sort_keys=True)}: {json.dumps(r.witness, sort_keys=True)}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _default_params(e: V.Entry) -> dict:
    grid = e.grid()
    row = dict(grid[0]) if grid else {}
    row.update(e.defaults)
    return {k: list(v) if isinstance(v, tuple) else v for k, v in row.items()}


def cmd_list(args) -> int:
    rows = []
    for e in V.REGISTRY.values():
        if args.status and e.status != args.status:
            continue
        if args.id_prefix and not e.id.startswith(args.id_prefix):
            continue
        rows.append({"id": e.id, "status": e.status, "anchor": e.anchor, "params": _default_params(e),
                     "instances": len(e.grid())})
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True, indent=1))
        return EXIT_OK
    table = [("id", "status", "anchor", "default params")]
    for r in rows:
        p = ",".join(f"{k}={v}" for k, v in r["params"].items())
        table.append((r["id"], r["status"], r["anchor"], p))
    widths = [max(len(t[i]) for t in table) for i in range(4)]
    for t in table:
        print("  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip())
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affinejt", description="Affine Jacobi-Trudi formulas and q,t-series identities.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one object")
    c.add_argument("object", choices=OBJECTS)
    c.add_argument("--lambda", dest="lam")
    c.add_argument("--mu")
    for name in ("vars", "r", "k", "n", "ell", "sigma"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--method")
    c.add_argument("--family")
    c.add_argument("--s1")
    c.add_argument("--s2")
    c.add_argument("--check")
    c.add_argument("--t")
    c.add_argument("--side")
    c.add_argument("--corollary")
    c.add_argument("--duality")
    c.add_argument("--order", type=_positive)
    c.add_argument("--format", choices=("json", "table"), default="table")

    v = sub.add_parser("verify", help="run registry checks")
    v.add_argument("--id")
    v.add_argument("--id-prefix")
    v.add_argument("--status", choices=V.STATUS_CLASSES)
    v.add_argument("--params")
    v.add_argument("--max-cost", type=int)
    v.add_argument("--order", type=_positive, help="q-order D for series checks")
    v.add_argument("--format", choices=("json", "table"), default="table")
    v.add_argument("--threads", type=_positive)
    v.add_argument("--fixtures")
    v.add_argument("--update-fixtures", action="store_true")

    li = sub.add_parser("list", help="list registry entries")
    li.add_argument("--status", choices=V.STATUS_CLASSES)
    li.add_argument("--id-prefix")
    li.add_argument("--format", choices=("json", "table"), default="table")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "compute":
            out = compute(args)
            print(json.dumps(out, sort_keys=True) if args.format == "json" else out["text"])
            return EXIT_OK
        if args.command == "verify":
            if args.update_fixtures and not args.fixtures:
                raise UsageError("--update-fixtures needs --fixtures DIR")
            return cmd_verify(args)
        return cmd_list(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except V.UnknownCheck as exc:
        print(f"unknown check id {exc.args[0]!r}", file=sys.stderr)
    except V.InvalidParameters as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
