"""Named-check registry and the engine that runs it.

Each registry entry knows how to build both sides of one identity from
parameters, which parameter sets make up its regression grid, and how
expensive an instance is.  ``run_check`` turns one instance into a
``CheckReport``; ``run_suite`` fans a filtered grid out over worker processes
and hands the reports back in registry order.
"""

from __future__ import annotations

import json
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb
from pathlib import Path
from typing import Any, Callable, Iterable, Mapping, Sequence

from . import afftrudi as AT
from . import bcsym as BC
from . import qtseries as QS
from . import symfun as SF
from .exactalg import LaurentPoly, TruncSeries, VarSet, qbinom, to_text
from .partitions import Composition, Partition, enumerate_partitions, in_cylindric_range, partitions_in_box

STATUS_CLASSES = ("proven", "conjecture", "extras")
KINDS = ("exact_polynomial", "truncated_series")
THREADS_ENV = "AFFINEJT_THREADS"


class UnknownCheck(KeyError):
    pass


class InvalidParameters(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameters


INT_PARAMS = {"k", "r", "n", "ell", "sigma", "s", "D", "K", "cap", "N", "t_value", "p_order"}
PARTITION_PARAMS = {"lam", "mu"}
COMPOSITION_PARAMS = {"alpha"}


def coerce_param(name: str, value: Any) -> Any:
    if name in INT_PARAMS:
        if isinstance(value, bool):
            raise InvalidParameters(f"{name} must be an integer")
        try:
            return int(value)
        except (TypeError, ValueError):
            raise InvalidParameters(f"{name} must be an integer, got {value!r}") from None
    if name in PARTITION_PARAMS or name in COMPOSITION_PARAMS:
        if isinstance(value, str):
            body = value.strip().strip("()[]")
            value = [int(v) for v in re.split(r"[\s,.;:]+", body) if v] if body not in ("", "-") else []
        try:
            return Partition(value) if name in PARTITION_PARAMS else Composition(value)
        except (TypeError, ValueError) as exc:
            raise InvalidParameters(f"{name}: {exc}") from None
    return str(value)


def parse_params(text: str) -> dict[str, Any]:
    """``k=2,lam=[2,1],family=B0``; commas inside brackets stay with their value."""
    out: dict[str, Any] = {}
    if not text.strip():
        return out
    for item in re.split(r",(?![^\[\(]*[\]\)])", text):
        if "=" not in item:
            raise InvalidParameters(f"expected name=value, got {item!r}")
        name, _, value = item.partition("=")
        out[name.strip()] = value.strip()
    return out


def _jsonable(v: Any) -> Any:
    if isinstance(v, tuple):
        return list(v)
    return v


# ---------------------------------------------------------------------------
# comparisons and witnesses


@dataclass
class Comparison:
    """One side-by-side equality; ``expect_equal=False`` marks a printed variant expected to fail."""

    label: str
    lhs: Any
    rhs: Any
    expect_equal: bool = True


def _mono_text(vs: VarSet, exps: Sequence[int]) -> str:
    return to_text(vs.monomial(exps)) if any(exps) else "1"


def mismatch(lhs: Any, rhs: Any) -> dict | None:
    """First discrepancy between two values of the same shape, or None."""
    if isinstance(lhs, TruncSeries):
        w = lhs.first_mismatch(rhs)
        if w is None:
            return None
        exps, a, b = w
        return {"monomial": _mono_text(lhs.vs, exps), "lhs": str(a), "rhs": str(b)}
    if isinstance(lhs, LaurentPoly):
        if isinstance(rhs, int):
            rhs = lhs.vs.const(rhs)
        if lhs == rhs:
            return None
        exps, _ = next(iter((lhs - rhs).terms()))
        return {"monomial": _mono_text(lhs.vs, exps), "lhs": str(lhs.coeff(exps)), "rhs": str(rhs.coeff(exps))}
    if isinstance(lhs, dict):
        for key in sorted(set(lhs) | set(rhs), key=lambda p: (sum(p), tuple(p))):
            a, b = lhs.get(key), rhs.get(key)
            if (a or None) != (b or None):
                return {"partition": list(key), "lhs": to_text(a) if a else "0", "rhs": to_text(b) if b else "0"}
        return None
    if isinstance(lhs, (list, tuple)):
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            if a != b:
                return {"index": i, "lhs": str(a), "rhs": str(b)}
        if len(lhs) != len(rhs):
            return {"index": min(len(lhs), len(rhs)), "lhs": f"len {len(lhs)}", "rhs": f"len {len(rhs)}"}
        return None
    return None if lhs == rhs else {"lhs": str(lhs), "rhs": str(rhs)}


# ---------------------------------------------------------------------------
# registry types


@dataclass(frozen=True)
class Entry:
    id: str
    kind: str
    anchor: str
    status: str
    params: tuple[str, ...]
    run: Callable[..., list[Comparison]]
    grid: Callable[[], Iterable[dict]]
    validate: Callable[..., None] = lambda **_: None
    cost: Callable[..., int] = lambda **_: 1
    tier: Callable[..., str] | None = None
    defaults: Mapping[str, Any] = field(default_factory=dict)
    note: str = ""

    def status_for(self, params: Mapping[str, Any]) -> str:
        return self.tier(**params) if self.tier else self.status


@dataclass(frozen=True)
class CheckSpec:
    id: str
    kind: str
    params: tuple[tuple[str, Any], ...]
    anchor: str
    status: str
    cost: int

    @property
    def param_dict(self) -> dict[str, Any]:
        return dict(self.params)


@dataclass
class CheckReport:
    id: str
    params: dict[str, Any]
    status: str
    order: int | None
    elapsed_ms: float
    witness: dict | None = None
    note: str = ""

    def to_json(self, timing: bool = True) -> dict:
        out: dict[str, Any] = {
            "id": self.id,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "status": self.status,
            "order": self.order,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


REGISTRY: dict[str, Entry] = {}


def register(entry: Entry) -> Entry:
    if entry.id in REGISTRY:
        raise ValueError(f"duplicate check id {entry.id!r}")
    if entry.status not in STATUS_CLASSES or entry.kind not in KINDS:
        raise ValueError(f"bad registry entry {entry.id!r}")
    REGISTRY[entry.id] = entry
    return entry


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameters(msg)


def _grid(**axes: Iterable) -> Callable[[], list[dict]]:
    names = list(axes)
    values = [list(v) for v in axes.values()]
    return lambda: [dict(zip(names, combo)) for combo in product(*values)]


def _rows(rows: Iterable[dict]) -> Callable[[], list[dict]]:
    rows = list(rows)
    return lambda: [dict(r) for r in rows]


def _eq(label: str, lhs: Any, rhs: Any) -> Comparison:
    return Comparison(label, lhs, rhs)


# ---------------------------------------------------------------------------
# Schur functions and classical dual Jacobi-Trudi forms


def _run_schur(lam, n):
    base = SF.schur(lam, n)
    out = [_eq(m, SF.schur(lam, n, m), base) for m in SF.SCHUR_METHODS[1:]]
    return out


register(Entry(
    "jt.schur", "exact_polynomial", "Jacobi-Trudi and dual Jacobi-Trudi identities for Schur functions", "proven",
    ("lam", "n"), _run_schur,
    _rows({"lam": lam, "n": n} for n in range(1, 5) for lam in partitions_in_box(min(n, 3), 3)),
    validate=lambda lam, n: _need(n >= 0 and len(lam) <= n, "need l(lam) <= n"),
    cost=lambda lam, n: (n + 1) ** max(len(lam), 1) * (sum(lam) + 1),
))


def _run_classical(family, lam, n):
    vs = BC.bc_varset(n)
    return [_eq("dual JT", BC.classical_dual_jt(family, lam, n, vs), BC.classical_character(family, lam, n, vs))]


def _valid_classical(family, lam, n):
    _need(family in BC.CHARACTER_FAMILIES, f"family must be one of {BC.CHARACTER_FAMILIES}")
    _need(n >= 1 and len(lam) <= n, "need n >= 1 and l(lam) <= n")


register(Entry(
    "jt.classical", "exact_polynomial", "dual Jacobi-Trudi forms of the classical B, C and D characters", "proven",
    ("family", "lam", "n"), _run_classical,
    _rows({"family": f, "lam": lam, "n": n} for f in BC.CHARACTER_FAMILIES for n in range(1, 4)
          for lam in partitions_in_box(n, 2)),
    validate=_valid_classical,
    cost=lambda family, lam, n: 4 ** n * (sum(lam) + 1),
))


def _run_classical_rect(family, k, n):
    vs = BC.bc_varset(n)
    return [_eq("rectangle", BC.classical_rect_dual_jt(family, k, n, vs), BC.classical_character(family, [k] * n, n, vs))]


register(Entry(
    "jt.classical-rect", "exact_polynomial", "dual Jacobi-Trudi forms of the classical B, C and D characters", "proven",
    ("family", "k", "n"), _run_classical_rect,
    _grid(family=BC.CHARACTER_FAMILIES, k=range(0, 3), n=range(1, 4)),
    validate=lambda family, k, n: (_need(family in BC.CHARACTER_FAMILIES, "unknown family"), _need(k >= 0 and n >= 1, "need k >= 0, n >= 1")),
    cost=lambda family, k, n: 4 ** n * (k * n + 1),
))


# ---------------------------------------------------------------------------
# the affine GL_n formula and the six BC-type families


def _run_thm11(k, r, n):
    vs = SF.sym_varset(n)
    return [_eq("affine JT", AT.affine_jt_gl(k, r, n, vs), SF.hall_littlewood([k] * r, n, vs))]


register(Entry(
    "thm1.1", "exact_polynomial", "affine dual Jacobi-Trudi formula for GL_n Hall-Littlewood polynomials", "proven",
    ("k", "r", "n"), _run_thm11,
    _grid(k=range(1, 4), r=range(0, 4), n=range(1, 6)),
    validate=lambda k, r, n: _need(k >= 1 and r >= 0 and n >= 1, "need k >= 1, r >= 0, n >= 1"),
    cost=lambda k, r, n: (n + 1) ** k * comb(n + k * r, n),
    defaults={"k": 2, "r": 2, "n": 3},
))


def _bc_family_entry(family: str) -> None:
    def run(k, n):
        vs = BC.bc_varset(n)
        return [_eq(family, AT.affine_jt_bc(family, k, n, vs), AT.affine_jt_bc_target(family, k, n, vs))]

    lo = 1 if family == "B1" else 0
    register(Entry(
        f"conj-{family}", "exact_polynomial", "affine Jacobi-Trudi formulas for BC_n-type Hall-Littlewood polynomials",
        "conjecture", ("k", "n"), run,
        _grid(k=range(1, 3), n=range(1, 4)),
        validate=lambda k, n: _need(k >= lo and n >= 1, f"need k >= {lo}, n >= 1"),
        cost=lambda k, n: (2 * n + 2) ** k * 4 ** n,
        tier=lambda k, n: "proven" if k <= 1 else "conjecture",
        defaults={"k": 1, "n": 2},
    ))


for _fam in BC.BC_FAMILIES:
    _bc_family_entry(_fam)


def _t1_entry(family: str) -> None:
    def run(k, n):
        vs = BC.bc_varset(n)
        return [_eq("t = 1", AT.at_t_one(AT.affine_jt_bc(family, k, n, vs)), AT.affine_jt_bc_t1_target(family, k, n, vs))]

    register(Entry(
        f"conj-{family}-t1", "exact_polynomial", "BC-type affine Jacobi-Trudi formulas at t = 1", "proven",
        ("k", "n"), run, _grid(k=range(0, 3), n=range(1, 4)),
        validate=lambda k, n: _need(k >= 0 and n >= 1, "need k >= 0, n >= 1"),
        cost=lambda k, n: (2 * n + 2) ** k * 4 ** n,
    ))


for _fam in ("B0", "BC"):
    _t1_entry(_fam)


def _littlewood_entry(family: str) -> None:
    def run(k, n):
        vs = BC.bc_varset(n)
        return [_eq(family, BC.bounded_littlewood_lhs(family, k, n, vs), BC.bounded_littlewood_rhs(family, k, n, vs))]

    register(Entry(
        f"littlewood-{family}", "exact_polynomial", "bounded Littlewood identities for B_n, C_n and BC_n", "proven",
        ("k", "n"), run, _grid(k=range(0, 3), n=range(1, 4)),
        validate=lambda k, n: _need(k >= 0 and n >= 1, "need k >= 0, n >= 1"),
        cost=lambda k, n: comb(2 * k + n, n) * 4 ** n,
    ))


for _fam in BC.BC_FAMILIES:
    _littlewood_entry(_fam)


register(Entry(
    "ep-lemma", "exact_polynomial", "x-monomial times dot-e expanded in two-column Hall-Littlewood polynomials", "proven",
    ("n", "k"), lambda n, k: [_eq("expansion", *BC.ep_lemma_sides(n, k))],
    _rows({"n": n, "k": k} for n in range(1, 4) for k in range(0, n + 1)),
    validate=lambda n, k: _need(0 <= k <= n, "need 0 <= k <= n"),
    cost=lambda n, k: 6 ** n,
))


# ---------------------------------------------------------------------------
# Hall-Littlewood polynomials


register(Entry(
    "hl.limits", "exact_polynomial", "Hall-Littlewood polynomials at t = 0 and t = 1", "proven",
    ("lam", "n", "t_value"), lambda lam, n, t_value: [_eq(f"t = {t_value}", *SF.hl_limit_sides(lam, n, t_value))],
    _rows({"lam": lam, "n": n, "t_value": tv} for n in range(1, 5) for lam in partitions_in_box(min(n, 3), 3) for tv in (0, 1)),
    validate=lambda lam, n, t_value: _need(t_value in (0, 1) and len(lam) <= n, "need t_value in {0, 1} and l(lam) <= n"),
    cost=lambda lam, n, t_value: (n + 1) ** len(lam) * (sum(lam) + 1),
))


def _run_stability(lam, n):
    big = SF.hall_littlewood(lam, n)
    small_vs = SF.sym_varset(n - 1)
    cut = big.subs({f"x{n}": 0}, small_vs)
    target = SF.hall_littlewood(lam, n - 1, small_vs) if len(lam) <= n - 1 else small_vs.zero()
    return [_eq("x_n = 0", cut, target)]


register(Entry(
    "hl.stability", "exact_polynomial", "Hall-Littlewood stability under adding a zero variable", "proven",
    ("lam", "n"), _run_stability,
    _rows({"lam": lam, "n": n} for n in range(2, 5) for lam in enumerate_partitions(max_size=4, max_length=n)),
    validate=lambda lam, n: _need(n >= 2 and len(lam) <= n, "need n >= 2 and l(lam) <= n"),
))

register(Entry(
    "hl.single-row", "exact_polynomial", "Schur expansion of the single-row Hall-Littlewood polynomial", "proven",
    ("k", "n"), lambda k, n: [_eq("hook sum", *SF.single_row_sides(k, n))],
    _grid(k=range(1, 6), n=range(1, 6)),
    validate=lambda k, n: _need(k >= 1 and n >= 1, "need k, n >= 1"),
    cost=lambda k, n: comb(n + k, k) * k,
))

register(Entry(
    "hl.two-column", "exact_polynomial", "Lassalle-Schlosser formula for two-column Hall-Littlewood polynomials", "proven",
    ("r", "n"), lambda r, n: [_eq("e-products", *SF.two_column_sides(r, n))],
    _grid(r=range(0, 4), n=range(1, 6)),
    validate=lambda r, n: _need(r >= 0 and n >= 1, "need r >= 0, n >= 1"),
))

register(Entry(
    "kirillov", "exact_polynomial", "Kirillov's transition from e_alpha to Hall-Littlewood polynomials", "proven",
    ("alpha", "n"), lambda alpha, n: [_eq("e_alpha", *SF.kirillov_sides(alpha, n))],
    _rows({"alpha": a, "n": n} for n in range(1, 5) for length in range(1, 4)
          for a in product(range(1, 4), repeat=length)),
    validate=lambda alpha, n: _need(n >= 1, "need n >= 1"),
    cost=lambda alpha, n: (n + 1) ** len(alpha) * (sum(alpha) + 1),
))


def _run_reduction(k, r, mu, alpha):
    vs = VarSet(("T",))
    lam = Partition([k] * r + list(mu))
    shifted = tuple(a - r for a in alpha)
    return [_eq("peel (k^r)", SF.kirillov_R(lam, alpha, vs), SF.kirillov_R(mu, shifted, vs))]


def _reduction_rows():
    for k in (2, 3):
        for r in (1, 2):
            for mu in enumerate_partitions(max_size=k + 1, max_part=k - 1):
                for extra in product(range(0, 3), repeat=k):
                    if sum(extra) == mu.size:
                        yield {"k": k, "r": r, "mu": mu, "alpha": Composition(e + r for e in extra)}


register(Entry(
    "kirillov.reduction", "exact_polynomial", "Kirillov's transition from e_alpha to Hall-Littlewood polynomials", "proven",
    ("k", "r", "mu", "alpha"), _run_reduction, _rows(_reduction_rows()),
    validate=lambda k, r, mu, alpha: _need(len(alpha) == k and min(alpha, default=r) >= r and mu.part(1) < k,
                                          "need alpha with k entries >= r and mu_1 < k"),
))

register(Entry(
    "pieri", "exact_polynomial", "e-Pieri rule for Hall-Littlewood polynomials", "proven",
    ("mu", "r", "n"), lambda mu, r, n: [_eq("P_mu e_r", *SF.pieri_sides(mu, r, n))],
    _rows({"mu": mu, "r": r, "n": n} for n in range(1, 4) for mu in enumerate_partitions(max_size=3, max_length=n)
          for r in range(0, n + 1)),
    validate=lambda mu, r, n: _need(len(mu) <= n and 0 <= r, "need l(mu) <= n, r >= 0"),
))


def _run_rogers_szego(k, lam):
    vs = VarSet(("A", "B", "T"))
    A, B, T = vs.gens("A", "B", "T")
    t = T * T
    out = [
        _eq("symmetric in a, b", SF.rs_h(lam, 2 * k + 1, A, B, t), SF.rs_h(lam, 2 * k + 1, B, A, t)),
        _eq("h-tilde", A ** lam.conjugate().part(2 * k + 1) * SF.rs_h(lam, 2 * k + 1, -A, -B, t), SF.rs_h_tilde(lam, k, A, B, t)),
    ]
    if k >= 1 and set(lam) <= {1}:
        r = len(lam)
        col = sum(((-1) ** r * A ** (r - i) * B ** i * qbinom(r, i, t) for i in range(r + 1)), vs.zero())
        out.append(_eq("single column", SF.rs_h(lam, 2 * k + 1, A, B, t), col))
    return out


register(Entry(
    "rogers-szego", "exact_polynomial", "Rogers-Szego polynomials indexed by partitions", "proven",
    ("k", "lam"), _run_rogers_szego,
    _rows({"k": k, "lam": lam} for k in range(0, 3) for lam in enumerate_partitions(max_part=2 * k + 1, max_size=6)),
    validate=lambda k, lam: _need(k >= 0 and lam.part(1) <= 2 * k + 1, "need lam_1 <= 2k+1"),
))

_PIERI_ROWS = [(1, 0, 2), (2, 1, 4), (3, 1, 5), (2, 2, 6), (3, 2, 5)]


def _run_bounded_pieri(n, k, cap):
    basis = SF.bounded_pieri_expansions(n, k, cap)
    poly = SF.bounded_pieri_polys(n, k, cap)
    return [_eq("P-basis", *basis), _eq("polynomial", *poly)]


register(Entry(
    "bounded-pieri", "exact_polynomial", "bounded e-Pieri identity with Rogers-Szego coefficients", "proven",
    ("n", "k", "cap"), _run_bounded_pieri,
    _rows({"n": n, "k": k, "cap": c} for n, k, c in _PIERI_ROWS),
    validate=lambda n, k, cap: _need(n >= 1 and k >= 0 and cap >= 0, "need n >= 1, k >= 0, cap >= 0"),
    cost=lambda n, k, cap: comb(n + cap, n) ** 2,
))

register(Entry(
    "bounded-pieri-oddk", "exact_polynomial", "bounded e-Pieri identity with Rogers-Szego coefficients", "proven",
    ("which", "n", "k", "cap"), lambda which, n, k, cap: [_eq(which, *SF.oddk_sides(which, n, k, cap))],
    _rows({"which": w, "n": n, "k": k, "cap": c} for w in "at" for n, k, c in _PIERI_ROWS),
    validate=lambda which, n, k, cap: _need(which in ("a", "t") and n >= 1 and k >= 0, "need which in {a, t}"),
    cost=lambda which, n, k, cap: comb(n + cap, n) ** 2,
))

register(Entry(
    "modified-hl", "truncated_series", "modified Hall-Littlewood polynomials at a geometric alphabet", "proven",
    ("lam", "n", "D"), lambda lam, n, D: [_eq("P' vs P", *QS.modified_hl_sides(lam, n, D))],
    _rows({"lam": lam, "n": n, "D": 10} for n in range(1, 4) for lam in enumerate_partitions(max_size=5)),
    validate=lambda lam, n, D: _need(sum(lam) <= SF.POWER_SUM_MAX_DEGREE and n >= 1 and D >= 0,
                                    f"need |lam| <= {SF.POWER_SUM_MAX_DEGREE}, n >= 1"),
    cost=lambda lam, n, D: 2 ** sum(lam) * D,
    defaults={"D": 10},
))


# ---------------------------------------------------------------------------
# determinant lemma, delta identity, Kostka, summations


def _det_entry(kind: str, short: str) -> None:
    lo = 1 if kind == "plus_form" else 0
    register(Entry(
        f"detlemma-{short}", "exact_polynomial", "determinant transforms between e(x^+-) and e(x^+-, 1)", "proven",
        ("k", "n", "K"), lambda k, n, K: [_eq(kind, *AT.det_transform_sides(kind, k, n, K))],
        _rows({"k": k, "n": n, "K": K} for k in range(lo, 4) for n in range(1, 5) for K in (2 * k, 2 * k + 1, 2 * k + 2)),
        validate=lambda k, n, K: _need(k >= lo and n >= 1 and K >= 0, f"need k >= {lo}, n >= 1, K >= 0"),
        cost=lambda k, n, K: (2 * n + 2) ** k * 4 ** n,
    ))


_det_entry("plus_form", "plus")
_det_entry("minus_form", "minus")


def _run_ss_delta(k, mu, s):
    vs = VarSet(("T",))
    return [_eq("delta", AT.ss_delta_sum(k, mu, s, vs), vs.const(1 if s == 0 else 0))]


register(Entry(
    "ss-delta", "exact_polynomial", "Schilling-Shimozono delta identity at trivial level", "proven",
    ("k", "mu", "s"), _run_ss_delta,
    _rows({"k": k, "mu": mu, "s": s} for k in range(1, 4) for s in range(0, 3)
          for mu in enumerate_partitions(size=k * s, max_part=k - 1)),
    validate=lambda k, mu, s: _need(k >= 1 and s >= 0 and mu.size == k * s and mu.part(1) < k,
                                   "need mu |- ks with mu_1 < k"),
))


def _run_kostka(k, r, ell):
    n = k * r
    vs = SF.sym_varset(n)
    return [_eq("P-expansion", SF.expand_in_hl(AT.s_klt(k, r, ell, n, vs), k * r, n), AT.kostka_expansion_prediction(k, r, ell, vs))]


register(Entry(
    "kostka", "exact_polynomial", "level-restricted generalised Kostka polynomials", "proven",
    ("k", "r", "ell"), _run_kostka, _grid(k=range(1, 4), r=range(1, 3), ell=(1, 2)),
    validate=lambda k, r, ell: _need(k >= 1 and r >= 0 and ell >= 1, "need k >= 1, ell >= 1"),
    cost=lambda k, r, ell: 8 ** (k * r),
))

register(Entry(
    "ak-summation", "exact_polynomial", "A_{k-1}^{(1)} basic hypergeometric summation", "proven",
    ("k", "n", "r"), lambda k, n, r: [_eq("summation", *AT.ak_summation_sides(k, n, r))],
    _rows({"k": k, "n": n, "r": r} for k in range(1, 4) for n in range(0, 6) for r in range(0, n + 1)),
    validate=lambda k, n, r: _need(k >= 1 and 0 <= r <= n, "need k >= 1, 0 <= r <= n"),
))

register(Entry(
    "krattenthaler", "exact_polynomial", "A_{k-1}^{(1)} basic hypergeometric summation", "proven",
    ("alpha", "n"), lambda alpha, n: [_eq("determinant", *AT.krattenthaler_sides(alpha, n))],
    _rows({"alpha": a, "n": n} for n in range(0, 5) for length in range(1, 4) for a in product(range(0, 4), repeat=length)),
))


# ---------------------------------------------------------------------------
# cylindric Schur functions


def _cyl_rows():
    for n in range(1, 5):
        for k in range(1, 4):
            for ell in range(0, 3):
                for lam in partitions_in_box(n, k):
                    if in_cylindric_range(lam, n, k, ell):
                        yield {"lam": lam, "n": n, "k": k, "ell": ell}


def _run_cyl(lam, n, k, ell):
    vs = SF.sym_varset(n)
    return [_eq("tableaux", AT.cylindric_schur_det(lam, n, k, ell, vs), AT.cssyt_weight_sum(lam, n, k, ell, vs))]


register(Entry(
    "cyl", "exact_polynomial", "cylindric Schur functions as affine determinants", "proven",
    ("lam", "n", "k", "ell"), _run_cyl, _rows(_cyl_rows()),
    validate=lambda lam, n, k, ell: _need(in_cylindric_range(lam, n, k, ell), "lam is not in Par_{n,k}^ell"),
    cost=lambda lam, n, k, ell: (n + 1) ** sum(lam),
))

register(Entry(
    "cyl-ell0", "exact_polynomial", "cylindric Schur functions at level 0 and 1", "proven",
    ("k", "r", "n"), lambda k, r, n: [_eq("e_r(x^k)", *AT.cylindric_ell0_sides(k, r, n))],
    _rows({"k": k, "r": r, "n": n} for n in range(1, 5) for k in range(1, 4) for r in range(0, n + 1)),
    validate=lambda k, r, n: _need(k >= 1 and 0 <= r <= n, "need k >= 1, 0 <= r <= n"),
))

register(Entry(
    "cyl-ell1", "exact_polynomial", "cylindric Schur functions at level 0 and 1", "proven",
    ("lam", "k", "n"), lambda lam, k, n: [_eq("monomial sum", *AT.cylindric_ell1_sides(lam, k, n))],
    _rows({"lam": lam, "k": k, "n": n} for n in range(1, 4) for k in range(1, 4)
          for lam in partitions_in_box(n, k) if in_cylindric_range(lam, n, k, 1)),
    validate=lambda lam, k, n: _need(in_cylindric_range(lam, n, k, 1), "lam is not in Par_{n,k}^1"),
))

register(Entry(
    "gl-t1", "exact_polynomial", "affine GL_n formula at t = 1", "proven",
    ("k", "r", "n"), lambda k, r, n: [_eq("m_(k^r)", *AT.gl_t_one_sides(k, r, n))],
    _grid(k=range(1, 4), r=range(0, 4), n=range(1, 5)),
    validate=lambda k, r, n: _need(k >= 1 and r >= 0 and n >= 1, "need k >= 1, r >= 0, n >= 1"),
))


def _run_s_klt(k, r, ell, n):
    vs = SF.sym_varset(n)
    val = AT.s_klt(k, r, ell, n, vs)
    out = []
    if ell == 0:
        out.append(_eq("ell = 0", val, SF.hall_littlewood([k] * r, n, vs)))
    if ell >= r:
        out.append(_eq("ell >= r", val, SF.schur([k] * r, n, vs=vs)))
    if ell == 1:
        rhs = vs.zero()
        for mu in enumerate_partitions(size=k * r, max_part=k, max_length=n):
            rhs = rhs + SF.monomial_symmetric(mu, n, vs)
        out.append(_eq("t = 1, ell = 1", AT.at_t_one(val), rhs))
    return out


register(Entry(
    "s_klt", "exact_polynomial", "t-deformed cylindric Schur functions of rectangular shape", "proven",
    ("k", "r", "ell", "n"), _run_s_klt,
    _rows({"k": k, "r": r, "ell": ell, "n": n} for k in range(1, 4) for r in range(0, 3) for ell in range(0, 3)
          for n in range(1, 4) if ell in (0, 1) or ell >= r),
    validate=lambda k, r, ell, n: _need(k >= 1 and r >= 0 and ell >= 0 and n >= 1 and (ell <= 1 or ell >= r),
                                       "need ell in {0, 1} or ell >= r"),
))


def _run_cylf(kind, k, n):
    sides = AT.cylindric_f_sides(kind, k, n)
    prod = sides[-1]
    return [_eq(f"det {i + 1}", d, prod) for i, d in enumerate(sides[:-1])]


register(Entry(
    "cylf-signed_Fbar", "exact_polynomial", "t = 1 determinant evaluations in terms of cylindric partitions", "proven",
    ("k", "n"), lambda k, n: _run_cylf("signed_Fbar", k, n), _grid(k=range(0, 3), n=range(0, 4)),
    validate=lambda k, n: _need(k >= 0 and n >= 0, "need k, n >= 0"),
))

register(Entry(
    "cylf-unsigned_F", "exact_polynomial", "t = 1 determinant evaluations in terms of cylindric partitions", "conjecture",
    ("k", "n"), lambda k, n: _run_cylf("unsigned_F", k, n), _grid(k=range(0, 3), n=range(0, 4)),
    validate=lambda k, n: _need(k >= 0 and n >= 0, "need k, n >= 0"),
    tier=lambda k, n: "proven" if k <= 1 else "conjecture",
))

register(Entry(
    "cyl-t1-recast", "exact_polynomial", "t = 1 recast as signed cylindric tableaux sums", "extras",
    ("k", "ell", "n"), lambda k, ell, n: [_eq("signed tableaux", *AT.cylindric_signed_sides(k, ell, n))],
    _grid(k=range(1, 3), ell=range(0, 2), n=range(1, 4)),
    validate=lambda k, ell, n: _need(k >= 0 and ell >= 0 and n >= 1, "need n >= 1"),
))


# ---------------------------------------------------------------------------
# q-binomial layer


def _run_spec_e(kind, n, r):
    return [_eq(kind, QS.specialize_e(kind, n, r), QS.specialize_e_direct(kind, n, r))]


register(Entry(
    "spec_e", "exact_polynomial", "principal specialisations of elementary symmetric functions", "proven",
    ("kind", "n", "r"), _run_spec_e,
    _rows({"kind": kd, "n": n, "r": r} for kd in ("half", "integer") for n in range(0, 5) for r in range(-n - 2, n + 3)),
    validate=lambda kind, n, r: _need(kind in ("half", "integer") and n >= 0, "kind must be half or integer"),
))


def _run_spec_hl(lam, D):
    # the Weyl oracle symmetrises over D + 1 variables, so cap its order
    w = min(D, 4)
    out = [_eq("Weyl sum", QS.specialize_hl(lam, w), QS.specialize_hl_weyl(lam, w))]
    out.append(_eq("t = q", QS.specialize_hl(lam, D, QS.QV, 1), QS.specialize_hl_at_t_q(lam, D)))
    return out


register(Entry(
    "spec_hl", "truncated_series", "principal specialisations of Hall-Littlewood polynomials", "proven",
    ("lam", "D"), _run_spec_hl,
    _rows({"lam": lam, "D": 6} for lam in enumerate_partitions(max_size=6)),
    validate=lambda lam, D: _need(D >= 0, "need D >= 0"),
    cost=lambda lam, D: (D + 1) ** 3 * (sum(lam) + 1),
    defaults={"D": 6},
))


def _run_bailey_unit(N, D):
    alpha, beta = QS.unit_bailey_pair(N, 2 * D)
    w = QS.bailey_pair_mismatch(alpha, beta, 0, N, 2 * D)
    return [_eq("relation", None if w is None else list(map(str, w)), None)]


register(Entry(
    "bailey-unit", "truncated_series", "Bailey pairs and the unit pair", "proven",
    ("N", "D"), _run_bailey_unit, _rows([{"N": 6, "D": 20}]),
    validate=lambda N, D: _need(N >= 0 and D >= 0, "need N, D >= 0"),
    defaults={"D": 20},
))


def _run_bailey_delta(N, D):
    order = 2 * D
    Q = QS.QV.gen("Q")
    alpha = [TruncSeries(QS.QV.one() if j == 0 else QS.QV.zero(), order) for j in range(N + 1)]
    out = []
    for n in range(N + 1):
        beta = QS.bailey_beta(alpha, 0, n, order)
        closed = TruncSeries(qbinom(2 * n, n, Q * Q), order) / TruncSeries(QS.qpoch(Q * Q, Q * Q, 2 * n), order)
        out.append(_eq(f"beta_{n}", beta, closed))
    derived = [QS.bailey_beta(alpha, 1, n, order) for n in range(N + 1)]
    w = QS.bailey_pair_mismatch(alpha, derived, 1, N, order)
    out.append(_eq("derived pair", None if w is None else list(map(str, w)), None))
    return out


register(Entry(
    "bailey-delta", "truncated_series", "Bailey pairs and the unit pair", "proven",
    ("N", "D"), _run_bailey_delta, _rows([{"N": 6, "D": 20}]),
    validate=lambda N, D: _need(N >= 0 and D >= 0, "need N, D >= 0"),
    defaults={"D": 20},
))


def _slater_entry(ident: str) -> None:
    parity = {"A12_even": 0, "A12_odd": 1, "F1": 0, "F2": 1}.get(ident)

    def run(s):
        return [_eq(ident, *QS.slater_sides(ident, s))]

    register(Entry(
        f"slater-{ident}", "exact_polynomial", "Slater-type q-binomial identities behind the k = 1 cases", "proven",
        ("s",), run,
        _rows({"s": s} for s in range(0, 11) if parity is None or s % 2 == parity),
        validate=lambda s: _need(s >= 0 and (parity is None or s % 2 == parity), "s out of range or of the wrong parity"),
    ))


for _id in QS.SLATER_IDS:
    _slater_entry(_id)


def _finite_entry(variant: str) -> None:
    def run(sigma, n):
        out = [_eq(variant, *QS.finite_rr_sides(sigma, n, variant))]
        if variant == "foda_quano":
            out.append(_eq("product", QS.finite_rr_sides(sigma, n, variant)[0], QS.foda_quano_product(sigma, n)))
        return out

    register(Entry(
        f"finite-{variant}", "exact_polynomial", "finite analogues of the Rogers-Ramanujan identities", "proven",
        ("sigma", "n"), run, _grid(sigma=(0, 1), n=range(0, 7)),
        validate=lambda sigma, n: _need(sigma in (0, 1) and n >= 0, "need sigma in {0, 1}, n >= 0"),
    ))


for _v in QS.FINITE_VARIANTS:
    _finite_entry(_v)


def _macdonald_entry(system: str) -> None:
    low = 2 if system == "D_n1_variant" else 0
    def run(k, p_order):
        return [_eq(system, QS.macdonald_sum_side(system, k, p_order), QS.macdonald_product_side(system, k, p_order))]

    register(Entry(
        f"macdonald-{system}", "truncated_series", "Macdonald identities for affine root systems", "proven",
        ("k", "p_order"), run, _grid(k=range(low, 3), p_order=(3,)),
        validate=lambda k, p_order: _need(k >= low and p_order >= 0, f"need k >= {low}, p_order >= 0"),
        cost=lambda k, p_order: (p_order + 2) ** (k + 1),
        defaults={"p_order": 3},
    ))


for _s in QS.MACDONALD_SYSTEMS:
    _macdonald_entry(_s)


# ---------------------------------------------------------------------------
# q,t-Rogers-Ramanujan series


_THEOREM_IDS = {"T15": "thm1.5", "T16a": "thm1.6a", "T16b": "thm1.6b", "T17": "thm1.7", "T18": "thm1.8"}


def _theorem_entry(theorem: str, cid: str, status: str, anchor: str) -> None:
    def run(k, sigma, D):
        return [_eq("bivariate", QS.rr_sum_side(theorem, k, sigma, D), QS.rr_product_side(theorem, k, sigma, D))]

    register(Entry(
        cid, "truncated_series", anchor, status,
        ("k", "sigma", "D"), run, _grid(k=range(1, 3), sigma=(0, 1), D=(10,)),
        validate=lambda k, sigma, D: _need(k >= 1 and sigma in (0, 1) and D >= 0, "need k >= 1, sigma in {0, 1}"),
        cost=lambda k, sigma, D: (D + 1) ** 2 * k,
        defaults={"D": 10},
    ))


for _th, _cid in _THEOREM_IDS.items():
    _theorem_entry(_th, _cid, "proven", "q,t-Rogers-Ramanujan identities")


def _run_classical_rr(sigma, D):
    residues = (1, 4) if sigma == 0 else (2, 3)
    counts = QS.partition_count_series(residues, 5, D)
    return [
        _eq("sum side", QS.q_coefficients(QS.rr_sum_side("T15", 1, sigma, D, 1)), counts),
        _eq("product side", QS.q_coefficients(QS.rr_product_side("T15", 1, sigma, D, 1)), counts),
    ]


register(Entry(
    "classical-rr", "truncated_series", "classical Rogers-Ramanujan identities", "proven",
    ("sigma", "D"), _run_classical_rr, _grid(sigma=(0, 1), D=(50,)),
    validate=lambda sigma, D: _need(sigma in (0, 1) and D >= 0, "need sigma in {0, 1}"),
    cost=lambda sigma, D: D ** 2,
    defaults={"D": 50},
))


def _corollary_entry(name: str) -> None:
    c = QS.COROLLARIES[name]

    def run(k, n, D):
        out = [_eq("sum = product", QS.character_sum(name, k, n, D), QS.character_product(name, k, n, D))]
        if c.max_part(k) % 2 == 0:
            out.append(_eq("theorem product", *QS.corollary_reduction(name, k, n, D)))
        return out

    register(Entry(
        f"cor5.{name[2:]}", "truncated_series", "character identities for affine Lie algebras", "proven",
        ("k", "n", "D"), run,
        _rows({"k": k, "n": n, "D": 20} for k in (1, 2) for n in range(c.min_n, 3)),
        validate=lambda k, n, D: _need(k >= 1 and n >= c.min_n and D >= 0,
                                      f"need k >= 1, n >= {c.min_n}" + (f" ({c.note})" if c.note else "")),
        cost=lambda k, n, D: (D + 1) ** 2 * k,
        defaults={"D": 20},
        note=c.note,
    ))


for _name in QS.COROLLARIES:
    _corollary_entry(_name)


def _run_floor(k, sigma, D):
    out = [_eq("product", QS.floor_multisum(k, sigma, D), QS.floor_multisum_product(k, sigma, D))]
    if sigma == 0:
        order = 2 * D
        Q = QS.QV.gen("Q")
        m0 = QS.pochhammer_trunc(Q * Q, Q ** 4, None, order)
        out.append(_eq("n = 0 character sum", QS.character_sum("5.15", k, 0, D) / m0, QS.floor_multisum(k, 0, D)))
    return out


register(Entry(
    "floor-multisum", "truncated_series", "character identities for affine Lie algebras", "proven",
    ("k", "sigma", "D"), _run_floor, _grid(k=range(1, 4), sigma=(0, 1), D=(30,)),
    validate=lambda k, sigma, D: _need(k >= 1 and sigma in (0, 1), "need k >= 1, sigma in {0, 1}"),
    cost=lambda k, sigma, D: (D + 1) ** 2 * k,
    defaults={"D": 30},
))


def _duality_entry(name: str) -> None:
    register(Entry(
        f"duality-{name}", "truncated_series", "level-rank theta function dualities", "proven",
        ("k", "n", "D"), lambda k, n, D: [_eq(name, *QS.theta_duality_sides(name, k, n, D))],
        _grid(k=range(1, 4), n=range(1, 4), D=(20,)),
        validate=lambda k, n, D: _need(k >= 1 and n >= 1 and D >= 0, "need k, n >= 1"),
        cost=lambda k, n, D: D * (k + n) ** 2,
        defaults={"D": 20},
    ))


for _name in QS.THETA_DUALITIES:
    _duality_entry(_name)


# ---------------------------------------------------------------------------
# extras


def _run_b_tt(k, n):
    vs = BC.bc_varset(n)
    return [_eq("B_n(t, t)", AT.affine_jt_b_tt(k, n, vs), AT.affine_jt_b_tt_target(k, n, vs))]


register(Entry(
    "extra-A2km1", "exact_polynomial", "additional A_{2k-1}^{(2)} Jacobi-Trudi identity", "conjecture",
    ("k", "n"), _run_b_tt, _grid(k=range(1, 3), n=range(1, 4)),
    validate=lambda k, n: _need(k >= 0 and n >= 1, "need n >= 1"),
    cost=lambda k, n: (2 * n + 2) ** k * 4 ** n,
))

_theorem_entry("A2km1_tt", "extra-A2km1-series", "extras", "additional A_{2k-1}^{(2)} Jacobi-Trudi identity")

register(Entry(
    "extra-klone", "truncated_series", "the k = l = 1 example and a Virasoro character", "extras",
    ("sigma", "D"), lambda sigma, D: [_eq("bivariate", QS.klone_sum_side(sigma, D), QS.klone_product_side(sigma, D))],
    _grid(sigma=(0, 1), D=(10,)),
    validate=lambda sigma, D: _need(sigma in (0, 1) and D >= 0, "need sigma in {0, 1}"),
    defaults={"D": 10},
))

register(Entry(
    "extra-klone-finite", "exact_polynomial", "the k = l = 1 example and a Virasoro character", "extras",
    ("sigma", "n"), lambda sigma, n: [_eq("finite", *QS.klone_finite_sides(sigma, n))],
    _grid(sigma=(0, 1), n=range(0, 6)),
    validate=lambda sigma, n: _need(sigma in (0, 1) and n >= 0, "need sigma in {0, 1}"),
))


def _run_virasoro(sigma, D):
    prod = QS.virasoro_product(sigma, D)
    return [
        _eq("t = q", QS.klone_sum_side(sigma, D, 1), prod),
        _eq("fermionic sum", QS.virasoro_sum(sigma, D), prod),
    ]


register(Entry(
    "extra-virasoro", "truncated_series", "the k = l = 1 example and a Virasoro character", "extras",
    ("sigma", "D"), _run_virasoro, _grid(sigma=(0, 1), D=(30,)),
    validate=lambda sigma, D: _need(sigma in (0, 1) and D >= 0, "need sigma in {0, 1}"),
    defaults={"D": 30},
))


# printed variants that are expected to differ from the verified forms


def _run_misprint_a5(n):
    lhs, rhs = QS.slater_sides("A5", n)
    out = [_eq("q^{n^2}", lhs, rhs)]
    if n >= 1:
        out.append(Comparison("printed t^{n^2}", lhs.embed(QS.QT), QS.a5_printed_rhs(n), False))
    return out


def _run_misprint_a34(s):
    lhs, rhs = QS.slater_sides("A34", s)
    out = [_eq("corrected", lhs, rhs)]
    if s not in (0, 2):
        out.append(Comparison("printed", QS.a34_printed_lhs(s), rhs, False))
    return out


def _run_misprint_t18(k, sigma, D):
    lhs = QS.rr_sum_side("T18", k, sigma, D)
    return [
        _eq("(p^2; p^2)", lhs, QS.rr_product_side("T18", k, sigma, D)),
        Comparison("printed (p; p)^2", lhs, QS.rr_product_side("T18", k, sigma, D, variant="printed"), False),
    ]


def _run_misprint_two_row(r, n):
    lhs, rhs = QS.two_row_at_t_one(r, n)
    Q = QS.QV.gen("Q")
    return [
        _eq("with q^{r(r-1)}", lhs, rhs),
        Comparison("printed", lhs, qbinom(n, r, Q ** 4), False),
    ]


def _run_misprint_floor(k, sigma, D):
    prod = QS.floor_multisum_product(k, sigma, D)
    return [
        _eq("sigma |n| / 2", QS.floor_multisum(k, sigma, D), prod),
        Comparison("printed sigma |n|", QS.floor_multisum(k, sigma, D, "printed"), prod, False),
    ]


def _run_misprint_cor53(k, n, D):
    c = QS.COROLLARIES["5.3"]
    base = QS.theorem_recipe(c.theorem, c.sigma)
    printed = QS.hl_sum(base, c.max_part(k), 2 * D, QS.QV, 2 * n)
    prod = QS.character_product("5.3", k, n, D)
    return [
        _eq("t = q^{2n-2}", QS.character_sum("5.3", k, n, D), prod),
        Comparison("printed t = q^{2n}", printed, prod, False),
    ]


_MISPRINT_ANCHOR = "printed variants differing from the verified forms"
register(Entry(
    "misprint-A5", "exact_polynomial", _MISPRINT_ANCHOR, "extras", ("n",), _run_misprint_a5,
    _rows({"n": n} for n in range(1, 7)), validate=lambda n: _need(n >= 0, "need n >= 0"),
    note="A5 right side: q^{n^2} holds, the printed t^{n^2} does not",
))
register(Entry(
    "misprint-A34", "exact_polynomial", _MISPRINT_ANCHOR, "extras", ("s",), _run_misprint_a34,
    _rows({"s": s} for s in (1, 3, 4, 5, 6, 7, 8)), validate=lambda s: _need(s >= 0, "need s >= 0"),
    note="A3/A4 left side needs (-1)^y and exponent (3y-2)y/2; the printed form agrees by accident at s = 0, 2",
))
register(Entry(
    "misprint-T18", "truncated_series", _MISPRINT_ANCHOR, "extras", ("k", "sigma", "D"), _run_misprint_t18,
    _grid(k=(1, 2), sigma=(0, 1), D=(10,)),
    validate=lambda k, sigma, D: _need(k >= 1 and sigma in (0, 1), "need k >= 1, sigma in {0, 1}"),
    defaults={"D": 10}, note="the T18 product carries (p^2; p^2), not (p; p)^2",
))
register(Entry(
    "misprint-two-row", "exact_polynomial", _MISPRINT_ANCHOR, "extras", ("r", "n"), _run_misprint_two_row,
    _rows({"r": r, "n": n} for r in range(2, 4) for n in range(r, 6)),
    validate=lambda r, n: _need(r >= 2 and n >= r, "need n >= r >= 2"),
    note="P_(2^r)(1, .., q^{n-1}; 1) carries q^{r(r-1)}",
))
register(Entry(
    "misprint-floor", "truncated_series", _MISPRINT_ANCHOR, "extras", ("k", "sigma", "D"), _run_misprint_floor,
    _grid(k=(1, 2), sigma=(1,), D=(20,)),
    validate=lambda k, sigma, D: _need(k >= 1 and sigma == 1, "the printed form only differs at sigma = 1"),
    defaults={"D": 20}, note="the linear term of the floor-indexed multisum is sigma |n| / 2",
))
register(Entry(
    "misprint-cor5.3", "truncated_series", _MISPRINT_ANCHOR, "extras", ("k", "n", "D"), _run_misprint_cor53,
    _grid(k=(1, 2), n=(1, 2), D=(10,)),
    validate=lambda k, n, D: _need(k >= 1 and n >= 1, "need k, n >= 1"),
    defaults={"D": 10}, note="cor5.3 needs t = q^{2n-2}",
))


# ---------------------------------------------------------------------------
# coverage


ANCHORS = (
    "Jacobi-Trudi and dual Jacobi-Trudi identities for Schur functions",
    "affine dual Jacobi-Trudi formula for GL_n Hall-Littlewood polynomials",
    "dual Jacobi-Trudi forms of the classical B, C and D characters",
    "affine Jacobi-Trudi formulas for BC_n-type Hall-Littlewood polynomials",
    "BC-type affine Jacobi-Trudi formulas at t = 1",
    "q,t-Rogers-Ramanujan identities",
    "cylindric Schur functions as affine determinants",
    "cylindric Schur functions at level 0 and 1",
    "Hall-Littlewood polynomials at t = 0 and t = 1",
    "Hall-Littlewood stability under adding a zero variable",
    "Kirillov's transition from e_alpha to Hall-Littlewood polynomials",
    "e-Pieri rule for Hall-Littlewood polynomials",
    "Rogers-Szego polynomials indexed by partitions",
    "bounded e-Pieri identity with Rogers-Szego coefficients",
    "modified Hall-Littlewood polynomials at a geometric alphabet",
    "bounded Littlewood identities for B_n, C_n and BC_n",
    "x-monomial times dot-e expanded in two-column Hall-Littlewood polynomials",
    "determinant transforms between e(x^+-) and e(x^+-, 1)",
    "Schilling-Shimozono delta identity at trivial level",
    "Schur expansion of the single-row Hall-Littlewood polynomial",
    "Lassalle-Schlosser formula for two-column Hall-Littlewood polynomials",
    "affine GL_n formula at t = 1",
    "t-deformed cylindric Schur functions of rectangular shape",
    "level-restricted generalised Kostka polynomials",
    "A_{k-1}^{(1)} basic hypergeometric summation",
    "Bailey pairs and the unit pair",
    "Slater-type q-binomial identities behind the k = 1 cases",
    "t = 1 determinant evaluations in terms of cylindric partitions",
    "principal specialisations of elementary symmetric functions",
    "principal specialisations of Hall-Littlewood polynomials",
    "finite analogues of the Rogers-Ramanujan identities",
    "Macdonald identities for affine root systems",
    "classical Rogers-Ramanujan identities",
    "character identities for affine Lie algebras",
    "level-rank theta function dualities",
    "additional A_{2k-1}^{(2)} Jacobi-Trudi identity",
    "the k = l = 1 example and a Virasoro character",
    "t = 1 recast as signed cylindric tableaux sums",
)


def coverage_gaps(registry: Mapping[str, Entry] | None = None) -> list[str]:
    """Anchors with no registry entry; also flags entries citing an unlisted anchor."""
    registry = REGISTRY if registry is None else registry
    used = {e.anchor for e in registry.values()}
    gaps = [a for a in ANCHORS if a not in used]
    stray = sorted(a for a in used - set(ANCHORS) if a != _MISPRINT_ANCHOR)
    return gaps + [f"unlisted anchor: {a}" for a in stray]


# ---------------------------------------------------------------------------
# execution


def entry(check_id: str) -> Entry:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None


def make_spec(check_id: str, params: Mapping[str, Any] | None = None, **kw: Any) -> CheckSpec:
    """Resolve an id and raw parameters into a validated CheckSpec."""
    e = entry(check_id)
    raw = dict(e.defaults)
    raw.update(params or {})
    raw.update(kw)
    unknown = set(raw) - set(e.params)
    if unknown:
        raise InvalidParameters(f"{check_id} does not take {sorted(unknown)}")
    missing = [p for p in e.params if p not in raw]
    if missing:
        raise InvalidParameters(f"{check_id} needs {missing}")
    values = {p: coerce_param(p, raw[p]) for p in e.params}
    try:
        e.validate(**values)
    except InvalidParameters:
        raise
    except (TypeError, ValueError) as exc:
        raise InvalidParameters(str(exc)) from None
    return CheckSpec(e.id, e.kind, tuple(values.items()), e.anchor, e.status_for(values), int(e.cost(**values)))


def _order_of(spec: CheckSpec, comparisons: Sequence[Comparison]) -> int | None:
    if spec.kind != "truncated_series":
        return None
    orders = [c.lhs.order for c in comparisons if isinstance(c.lhs, TruncSeries)]
    if orders:
        return min(orders)
    d = spec.param_dict.get("D")
    return None if d is None else 2 * d


def _snapshot(comparisons: Sequence[Comparison]) -> list[str] | None:
    for c in comparisons:
        if isinstance(c.lhs, TruncSeries):
            return [to_text(x) for x in c.lhs.coefficients()]
    return None


def fixture_path(directory: str | os.PathLike, spec: CheckSpec) -> Path:
    tail = "_".join(f"{k}-{'.'.join(map(str, v)) if isinstance(v, tuple) else v}" for k, v in spec.params)
    return Path(directory) / f"{spec.id}__{tail}.json"


def run_check(spec: CheckSpec, fixtures: str | os.PathLike | None = None, update_fixtures: bool = False) -> CheckReport:
    """Evaluate one instance.  Identical specs give identical reports apart from elapsed_ms."""
    if not isinstance(spec, CheckSpec):
        raise TypeError("run_check takes a CheckSpec; see make_spec")
    e = entry(spec.id)
    params = spec.param_dict
    start = time.perf_counter()
    comparisons = e.run(**params)
    witness = None
    for c in comparisons:
        w = mismatch(c.lhs, c.rhs)
        if c.expect_equal and w is not None:
            witness = {"label": c.label, **w}
            break
        if not c.expect_equal and w is None:
            witness = {"label": c.label, "expected": "a discrepancy", "found": "equality"}
            break
    if witness is None and fixtures is not None and spec.kind == "truncated_series":
        snap = _snapshot(comparisons)
        path = fixture_path(fixtures, spec)
        if snap is not None and update_fixtures:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps({"id": spec.id, "params": {k: _jsonable(v) for k, v in spec.params},
                                        "coefficients": snap}, indent=1) + "\n")
        elif snap is not None and path.exists():
            stored = json.loads(path.read_text())["coefficients"]
            w = mismatch(snap[: len(stored)], stored[: len(snap)])
            if w is not None:
                witness = {"label": "fixture", **w}
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(
        spec.id, {k: _jsonable(v) for k, v in spec.params}, "fail" if witness else "pass",
        _order_of(spec, comparisons), elapsed, witness, e.note,
    )


def expand(status_class: str | None = None, id_prefix: str | None = None, max_cost: int | None = None,
           ids: Sequence[str] | None = None) -> list[CheckSpec]:
    """Grid instances of the matching entries, in registry order."""
    if status_class is not None and status_class not in STATUS_CLASSES:
        raise InvalidParameters(f"status must be one of {STATUS_CLASSES}")
    out = []
    for e in REGISTRY.values():
        if ids is not None and e.id not in ids:
            continue
        if id_prefix is not None and not e.id.startswith(id_prefix):
            continue
        for row in e.grid():
            spec = make_spec(e.id, row)
            if status_class is not None and spec.status != status_class:
                continue
            if max_cost is not None and spec.cost > max_cost:
                continue
            out.append(spec)
    return out


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _run_packed(args: tuple) -> CheckReport:
    spec, fixtures, update = args
    return run_check(spec, fixtures, update)


def run_specs(specs: Sequence[CheckSpec], threads: int | None = None,
              fixtures: str | os.PathLike | None = None, update_fixtures: bool = False) -> list[CheckReport]:
    threads = default_threads() if threads is None else max(1, threads)
    jobs = [(s, fixtures, update_fixtures) for s in specs]
    if threads == 1 or len(jobs) <= 1:
        return [_run_packed(j) for j in jobs]
    # biggest first keeps the tail short; map() restores order
    order = sorted(range(len(jobs)), key=lambda i: -jobs[i][0].cost)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        done = list(pool.map(_run_packed, [jobs[i] for i in order], chunksize=1))
    reports: list[CheckReport | None] = [None] * len(jobs)
    for i, r in zip(order, done):
        reports[i] = r
    return reports  # type: ignore[return-value]


def run_suite(status_class: str | None = None, id_prefix: str | None = None, max_cost: int | None = None,
              threads: int | None = None, **kw: Any) -> list[CheckReport]:
    return run_specs(expand(status_class, id_prefix, max_cost), threads, **kw)


def reports_json(reports: Sequence[CheckReport], timing: bool = True) -> str:
    return json.dumps([r.to_json(timing) for r in reports], sort_keys=True, indent=1)


def summary_table(reports: Sequence[CheckReport]) -> str:
    rows = [("id", "params", "status", "order", "ms")]
    for r in reports:
        p = ",".join(f"{k}={_fmt(v)}" for k, v in r.params.items())
        rows.append((r.id, p, r.status, "-" if r.order is None else str(r.order), f"{r.elapsed_ms:.0f}"))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    n_fail = sum(r.status == "fail" for r in reports)
    lines.append(f"{len(reports)} checks, {len(reports) - n_fail} pass, {n_fail} fail")
    return "\n".join(lines)


def _fmt(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(map(str, v)) + "]"
    return str(v)


# thin report-returning wrappers named after the identities they check


def det_transform_check(kind: str, k: int, n: int, K: int) -> CheckReport:
    return run_check(make_spec("detlemma-" + {"plus_form": "plus", "minus_form": "minus"}[kind], k=k, n=n, K=K))


def ss_delta_check(k: int, mu: Sequence[int], s: int) -> CheckReport:
    return run_check(make_spec("ss-delta", k=k, mu=mu, s=s))


def cylindric_f_check(kind: str, k: int, n: int) -> CheckReport:
    return run_check(make_spec(f"cylf-{kind}", k=k, n=n))


def bounded_pieri_identity_check(n: int, k: int, degree_cap: int) -> CheckReport:
    return run_check(make_spec("bounded-pieri", n=n, k=k, cap=degree_cap))


def modified_hl_spec_check(lam: Sequence[int], n: int, D: int) -> CheckReport:
    return run_check(make_spec("modified-hl", lam=lam, n=n, D=D))


def slater_binomial_identity(ident: str, s: int) -> CheckReport:
    return run_check(make_spec(f"slater-{ident}", s=s))


def finite_rr_poly(sigma: int, n: int, variant: str) -> CheckReport:
    return run_check(make_spec(f"finite-{variant}", sigma=sigma, n=n))


def theta_duality_check(name: str, k: int, n: int, D: int) -> CheckReport:
    return run_check(make_spec(f"duality-{name}", k=k, n=n, D=D))


def bailey_pair_verify(alpha: Sequence[TruncSeries], beta: Sequence[TruncSeries], ell: int, N: int) -> CheckReport:
    """Ad hoc pairs are not registry instances, so the report is assembled here."""
    start = time.perf_counter()
    order = min(s.order for s in list(alpha) + list(beta))
    w = QS.bailey_pair_mismatch(alpha, beta, ell, N, order, alpha[0].vs)
    witness = None
    if w is not None:
        n, (exps, a, b) = w
        witness = {"n": n, "monomial": _mono_text(alpha[0].vs, exps), "lhs": str(a), "rhs": str(b)}
    return CheckReport("bailey", {"ell": ell, "N": N}, "fail" if witness else "pass", order,
                       (time.perf_counter() - start) * 1000, witness)
