"""GL_n symmetric functions: e, h, m, Schur, Hall-Littlewood and friends.

Symmetric polynomials are plain :class:`LaurentPoly` values in a VarSet that
starts with ``x1..xn``; the default VarSet is ``(x1, .., xn, T)`` with
``t = T**2``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exactalg import (
    LaurentPoly,
    NotDivisible,
    VarSet,
    determinant,
    divide,
    poly_in,
    qbinom,
    qfactorial,
    xnames,
)
from .partitions import Composition, Partition, enumerate_partitions, horizontal_strips_below

HLExpansion = dict  # Partition -> LaurentPoly


def sym_varset(n: int, *extra: str) -> VarSet:
    return VarSet(xnames(n) + (extra or ("T",)))


def _vs(n: int, vs: VarSet | None) -> VarSet:
    vs = vs or sym_varset(n)
    for name in xnames(n):
        if name not in vs.index:
            raise ValueError(f"{vs} lacks {name}")
    return vs


def tpow(vs: VarSet) -> LaurentPoly:
    """The monomial t = T**2."""
    return vs.gen("T") ** 2


def _xvec(vs: VarSet, n: int, exps: Sequence[int]) -> int:
    vec = [0] * vs.nvars
    for i, e in enumerate(exps):
        vec[vs.index[f"x{i + 1}"]] = e
    return vs.pack(vec)


def sgn(perm: Sequence[int]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


# ---------------------------------------------------------------------------
# classical bases


def elementary(r: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = _vs(n, vs)
    if r < 0 or r > n:
        return vs.zero()
    out = {}
    for combo in itertools.combinations(range(n), r):
        e = [0] * n
        for i in combo:
            e[i] = 1
        out[_xvec(vs, n, e)] = 1
    return LaurentPoly(vs, out, 1 if r else 0)


def complete(r: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = _vs(n, vs)
    if r < 0 or (n == 0 and r > 0):
        return vs.zero()
    out = {}
    for combo in itertools.combinations_with_replacement(range(n), r):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out[_xvec(vs, n, e)] = 1
    return LaurentPoly(vs, out)


def monomial_symmetric(lam: Sequence[int], n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = _vs(n, vs)
    lam = Partition(lam)
    if len(lam) > n:
        return vs.zero()
    padded = tuple(lam) + (0,) * (n - len(lam))
    out = {_xvec(vs, n, p): 1 for p in set(itertools.permutations(padded))}
    return LaurentPoly(vs, out)


def power_sum(r: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = _vs(n, vs)
    if r == 0:
        return vs.const(n)
    return LaurentPoly(vs, {_xvec(vs, n, [r if j == i else 0 for j in range(n)]): 1 for i in range(n)})


def elementary_product(alpha: Sequence[int], n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = _vs(n, vs)
    out = vs.one()
    for a in alpha:
        out = out * elementary(a, n, vs)
    return out


def alternant(exps: Sequence[int], n: int, vs: VarSet | None = None) -> LaurentPoly:
    """sum_w sgn(w) x^{w(exps)}."""
    vs = _vs(n, vs)
    out = {}
    for perm in itertools.permutations(range(n)):
        e = [0] * n
        for i, p in enumerate(perm):
            e[p] = exps[i]
        out[_xvec(vs, n, e)] = sgn(perm)
    return LaurentPoly(vs, out)


def vandermonde(n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = _vs(n, vs)
    out = vs.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (vs.gen(f"x{i}") - vs.gen(f"x{j}"))
    return out


def divide_by_vandermonde(f: LaurentPoly, n: int) -> LaurentPoly:
    """Exact division by prod_{i<j}(x_i - x_j), one linear factor at a time."""
    vs = f.vs
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = divide(f, vs.gen(f"x{i}") - vs.gen(f"x{j}"))
    return f


def is_symmetric(f: LaurentPoly, n: int) -> bool:
    for i in range(1, n):
        if f.permute({f"x{i}": f"x{i + 1}", f"x{i + 1}": f"x{i}"}) != f:
            return False
    return True


# ---------------------------------------------------------------------------
# Schur functions

SCHUR_METHODS = ("bialternant", "jacobi_trudi_h", "jacobi_trudi_e", "tableaux")


def schur(lam: Sequence[int], n: int, method: str = "bialternant", vs: VarSet | None = None, k: int | None = None) -> LaurentPoly:
    """s_lam(x1..xn); ``k`` sizes the dual Jacobi-Trudi matrix (default lam_1)."""
    vs = _vs(n, vs)
    lam = Partition(lam)
    if len(lam) > n:
        return vs.zero()
    if method == "bialternant":
        padded = list(lam) + [0] * (n - len(lam))
        num = alternant([padded[j] + n - 1 - j for j in range(n)], n, vs)
        return divide_by_vandermonde(num, n)
    if method == "jacobi_trudi_h":
        m = len(lam)
        if m == 0:
            return vs.one()
        return determinant([[complete(lam[i] - i + j, n, vs) for j in range(m)] for i in range(m)])
    if method == "jacobi_trudi_e":
        conj = lam.conjugate()
        m = k if k is not None else len(conj)
        if m < len(conj):
            raise ValueError("k must be at least lam_1")
        if m == 0:
            return vs.one()
        return determinant([[elementary(conj.part(i + 1) - i + j, n, vs) for j in range(m)] for i in range(m)])
    if method == "tableaux":
        from .partitions import enumerate_ssyt

        out: dict[int, int] = {}
        for t in enumerate_ssyt(lam, (), n):
            key = _xvec(vs, n, t.weight(n))
            out[key] = out.get(key, 0) + 1
        return LaurentPoly(vs, out)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Hall-Littlewood polynomials


def v_lambda(lam: Sequence[int], n: int, vs: VarSet) -> LaurentPoly:
    """v_lam(t) = prod_{i>=0} [m_i]_t! with m_0 = n - l(lam)."""
    lam = Partition(lam)
    t = tpow(vs)
    out = qfactorial(n - len(lam), t)
    for m in lam.multiplicities().values():
        out = out * qfactorial(m, t)
    return out


def hl_numerator(lam: Sequence[int], n: int, vs: VarSet) -> LaurentPoly:
    """x^lam prod_{i<j} (x_i - t x_j)."""
    lam = Partition(lam)
    t = tpow(vs)
    padded = list(lam) + [0] * (n - len(lam))
    out = LaurentPoly(vs, {_xvec(vs, n, padded): 1})
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (vs.gen(f"x{i}") - t * vs.gen(f"x{j}"))
    return out


def antisymmetrize(f: LaurentPoly, n: int) -> LaurentPoly:
    """sum_{w in S_n} sgn(w) w(f).

    Terms are first straightened to strictly decreasing x-exponents (a term
    with a repeated exponent is killed by its own transposition), then each
    surviving class is expanded over S_n once.
    """
    vs = f.vs
    xi = [vs.index[f"x{i}"] for i in range(1, n + 1)]
    other = [i for i in range(vs.nvars) if i not in xi]
    classes: dict[tuple[int, ...], dict[int, int]] = {}
    for exps, c in f.terms():
        xe = [exps[i] for i in xi]
        if len(set(xe)) < n:
            continue
        order = sorted(range(n), key=lambda i: -xe[i])
        sign = sgn(order)
        beta = tuple(xe[i] for i in order)
        rest = [0] * vs.nvars
        for i in other:
            rest[i] = exps[i]
        rk = vs.pack(rest)
        bucket = classes.setdefault(beta, {})
        bucket[rk] = bucket.get(rk, 0) + sign * c
    out: dict[int, int] = {}
    perms = [(p, sgn(p)) for p in itertools.permutations(range(n))]
    units = vs._units
    for beta, coeffs in classes.items():
        coeffs = {k: c for k, c in coeffs.items() if c}
        if not coeffs:
            continue
        for perm, s in perms:
            off = sum(beta[i] * units[xi[p]] for i, p in enumerate(perm))
            for rk, c in coeffs.items():
                key = rk + off
                v = out.get(key, 0) + s * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return LaurentPoly(vs, out)


def hall_littlewood(lam: Sequence[int], n: int, vs: VarSet | None = None) -> LaurentPoly:
    """P_lam(x1..xn; t) from its defining Weyl-group sum, divided out exactly."""
    vs = _vs(n, vs)
    lam = Partition(lam)
    if len(lam) > n:
        return vs.zero()
    if n == 0:
        return vs.one()
    num = antisymmetrize(hl_numerator(lam, n, vs), n)
    sym = divide_by_vandermonde(num, n)
    try:
        return divide(sym, v_lambda(lam, n, vs))
    except NotDivisible as exc:  # pragma: no cover - would be an implementation bug
        raise NotDivisible(f"v_lambda division failed for {lam}, n={n}") from exc


# -- one-variable branching ---------------------------------------------------


@lru_cache(maxsize=None)
def psi_exponents(lam: Partition, mu: Partition) -> tuple[int, ...]:
    """Exponents m with psi_{lam/mu}(t) = prod (1 - t^m); lam/mu a horizontal strip."""
    lc, mc = lam.conjugate(), mu.conjugate()
    top = lam.part(1) + 1
    theta = [lc.part(j) - mc.part(j) for j in range(1, top + 2)]
    out = []
    for j in range(1, top + 1):
        if theta[j - 1] == 0 and theta[j] == 1:
            out.append(mu.multiplicity(j))
    return tuple(out)


def psi(lam: Partition, mu: Partition, t: LaurentPoly) -> LaurentPoly:
    out = t.vs.one()
    for m in psi_exponents(lam, mu):
        out = out * (1 - t ** m)
    return out


def hl_branching(lam: Sequence[int], n: int, vs: VarSet | None = None) -> LaurentPoly:
    """P_lam via peeling off x_n repeatedly (tableau formula with psi weights)."""
    vs = _vs(n, vs)
    lam = Partition(lam)
    t = tpow(vs)

    @lru_cache(maxsize=None)
    def rec(mu: Partition, m: int) -> LaurentPoly:
        if len(mu) > m:
            return vs.zero()
        if m == 0:
            return vs.one()
        xm = vs.gen(f"x{m}")
        acc = vs.zero()
        for nu in horizontal_strips_below(mu):
            if len(nu) > m - 1:
                continue
            acc = acc + psi(mu, nu, t) * xm ** (mu.size - nu.size) * rec(nu, m - 1)
        return acc

    return rec(lam, n)


def hl_monomial_coefficients(mu: Sequence[int], n: int, vs: VarSet) -> dict[Partition, LaurentPoly]:
    """{nu: coefficient of x^nu in P_mu(x1..xn)} for partitions nu (dominant monomials)."""
    mu = Partition(mu)
    return _hl_mono(mu, n, vs)


@lru_cache(maxsize=None)
def _hl_mono(mu: Partition, n: int, vs: VarSet) -> dict[Partition, LaurentPoly]:
    if len(mu) > n:
        return {}
    t = tpow(vs)
    # states: partition reached after i variables -> {exponent prefix: weight}
    states: dict[Partition, dict[tuple[int, ...], LaurentPoly]] = {Partition(): {(): vs.one()}}
    inside = _inside(mu)
    for i in range(n):
        new: dict[Partition, dict[tuple[int, ...], LaurentPoly]] = {}
        for nu, prefixes in states.items():
            for lam in inside.get(nu, ()):
                add = lam.size - nu.size
                w = psi(lam, nu, t)
                for pre, c in prefixes.items():
                    if pre and add > pre[-1]:
                        continue  # keep only weakly decreasing exponent vectors
                    key = pre + (add,)
                    bucket = new.setdefault(lam, {})
                    bucket[key] = bucket[key] + c * w if key in bucket else c * w
        states = new
    out = {}
    for pre, c in states.get(mu, {}).items():
        if c:
            out[Partition(pre)] = c
    return out


@lru_cache(maxsize=None)
def _inside(mu: Partition) -> dict[Partition, tuple[Partition, ...]]:
    """nu -> partitions lam inside mu with lam/nu a horizontal strip."""
    subs = list(enumerate_partitions(max_part=mu.part(1), max_length=len(mu)))
    subs = [p for p in subs if mu.contains(p)]
    table: dict[Partition, list[Partition]] = {p: [] for p in subs}
    for lam in subs:
        for nu in horizontal_strips_below(lam):
            table[nu].append(lam)
    return {k: tuple(v) for k, v in table.items()}


# ---------------------------------------------------------------------------
# transition coefficients and expansions


def kirillov_R(lam: Sequence[int], alpha: Sequence[int], vs: VarSet) -> LaurentPoly:
    """R_{lam, alpha}(t) from the nested-chain sum over SSYT of shape lam'."""
    lam = Partition(lam)
    alpha = Composition(alpha)
    if lam.size != alpha.size or (lam and lam[0] > len(alpha)):
        return vs.zero()
    t = tpow(vs)
    target = lam.conjugate()
    k = len(alpha)
    total = vs.zero()

    def strips_above(nu: Partition, size: int) -> Iterable[Partition]:
        # partitions rho inside target with nu < rho and |rho/nu| = size
        rows = len(nu) + 1
        bounds = []
        for i in range(1, rows + 1):
            hi = min(target.part(i), nu.part(i - 1) if i > 1 else target.part(1))
            bounds.append(range(nu.part(i), hi + 1))
        for parts in itertools.product(*bounds):
            if sum(parts) - nu.size == size:
                rho = Partition(parts)
                if tuple(rho) == tuple(p for p in parts if p) and rho.interlaces(nu):
                    yield rho

    def rec(i: int, nu: Partition, weight: LaurentPoly) -> None:
        nonlocal total
        if i == k:
            if nu == target:
                total = total + weight
            return
        for rho in strips_above(nu, alpha[i]):
            w = weight
            if i >= 1:  # chain index i+1 >= 2
                for j in range(1, i + 1):
                    w = w * qbinom(rho.part(j) - rho.part(j + 1), rho.part(j) - nu.part(j), t)
                    if not w:
                        break
            if w:
                rec(i + 1, rho, w)

    rec(0, Partition(), vs.one())
    return total


def dominant_coefficients(f: LaurentPoly, n: int) -> dict[Partition, LaurentPoly]:
    """Coefficients of x^nu for partitions nu, as polynomials in the non-x generators."""
    vs = f.vs
    xi = [vs.index[f"x{i}"] for i in range(1, n + 1)]
    out: dict[Partition, dict[int, int]] = {}
    for exps, c in f.terms():
        xe = [exps[i] for i in xi]
        if any(e < 0 for e in xe) or any(a < b for a, b in zip(xe, xe[1:])):
            continue
        rest = list(exps)
        for i in xi:
            rest[i] = 0
        bucket = out.setdefault(Partition(xe), {})
        k = vs.pack(rest)
        bucket[k] = bucket.get(k, 0) + c
    return {p: LaurentPoly(vs, {k: c for k, c in b.items() if c}) for p, b in out.items()}


def expand_in_hl(f: LaurentPoly, degree: int, n: int, check: bool = True) -> HLExpansion:
    """Coefficients c_lam with f = sum c_lam P_lam(x1..xn; t)."""
    vs = f.vs
    if check and not is_symmetric(f, n):
        raise ValueError("input is not symmetric in x1..xn")
    lo, hi = f.total_degree(xnames(n))
    if f and (lo != degree or hi != degree):
        raise ValueError(f"input is not homogeneous of degree {degree}")
    residual = dominant_coefficients(f, n)
    out: HLExpansion = {}
    while True:
        residual = {p: c for p, c in residual.items() if c}
        if not residual:
            return out
        top = max(residual, key=tuple)
        c = residual[top]
        out[top] = c
        for nu, k in hl_monomial_coefficients(top, n, vs).items():
            residual[nu] = residual.get(nu, vs.zero()) - c * k


def reassemble(expansion: Mapping[Partition, LaurentPoly], n: int, vs: VarSet) -> LaurentPoly:
    out = vs.zero()
    for lam, c in expansion.items():
        out = out + c * hall_littlewood(lam, n, vs)
    return out


def pieri_e(mu: Sequence[int], r: int, n: int, vs: VarSet) -> HLExpansion:
    """P_mu * e_r = sum_lam prod_i [lam'_i - lam'_{i+1}, lam'_i - mu'_i]_t P_lam."""
    mu = Partition(mu)
    t = tpow(vs)
    out: HLExpansion = {}
    if r < 0:
        return out
    mc = mu.conjugate()
    # lam' = mc plus a horizontal strip of size r
    rows = len(mc) + 1
    bounds = [range(mc.part(i), (mc.part(i - 1) if i > 1 else mc.part(1) + r) + 1) for i in range(1, rows + 1)]
    for parts in itertools.product(*bounds):
        if sum(parts) != mc.size + r:
            continue
        lc = Partition(parts)
        if not lc.interlaces(mc):
            continue
        lam = lc.conjugate()
        if len(lam) > n:
            continue
        w = vs.one()
        for i in range(1, len(lc) + 1):
            w = w * qbinom(lc.part(i) - lc.part(i + 1), lc.part(i) - mc.part(i), t)
        if w:
            out[lam] = out.get(lam, vs.zero()) + w
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Rogers-Szego polynomials


def rs_H(m: int, x: LaurentPoly, t: LaurentPoly) -> LaurentPoly:
    """H_m(x; t) = sum_i x^i [m, i]_t."""
    vs = x.vs
    out = vs.zero()
    xp = vs.one()
    for i in range(m + 1):
        out = out + xp * qbinom(m, i, t)
        xp = xp * x
    return out


def rs_h(lam: Sequence[int], k: int, a: LaurentPoly, b: LaurentPoly, t: LaurentPoly) -> LaurentPoly:
    """h_lam^{(k)}(a, b; t)."""
    lam = Partition(lam)
    out = a.vs.one()
    for i in range(1, k):
        m = lam.multiplicity(i)
        if i % 2:
            out = out * (-a) ** m * rs_H(m, b * a ** -1, t)
        else:
            out = out * rs_H(m, a * b, t)
    return out


def rs_h_tilde(lam: Sequence[int], k: int, a: LaurentPoly, b: LaurentPoly, t: LaurentPoly, pairs: int | None = None) -> LaurentPoly:
    """a^{l(lam^o)} prod_{i=1}^{pairs} H_{m_{2i-1}}(b/a) H_{m_{2i}}(ab), pairs defaulting to k."""
    lam = Partition(lam)
    pairs = k if pairs is None else pairs
    out = a ** len(lam.odd_part())
    for i in range(1, pairs + 1):
        out = out * rs_H(lam.multiplicity(2 * i - 1), b * a ** -1, t) * rs_H(lam.multiplicity(2 * i), a * b, t)
    return out


# ---------------------------------------------------------------------------
# power sums (for the modified Hall-Littlewood specialisation)

POWER_SUM_MAX_DEGREE = 8


@lru_cache(maxsize=None)
def power_sum_monomial(mu: Partition, nu: Partition) -> int:
    """Coefficient of m_nu in p_mu: ways to distribute the parts of mu onto the rows of nu."""
    target = list(nu)

    def rec(i: int, rem: tuple[int, ...]) -> int:
        if i == len(mu):
            return 1 if not any(rem) else 0
        total = 0
        for j, r in enumerate(rem):
            if r >= mu[i]:
                total += rec(i + 1, rem[:j] + (r - mu[i],) + rem[j + 1:])
        return total

    return rec(0, tuple(target))


def hl_power_sum_expansion(lam: Sequence[int], vs: VarSet) -> tuple[int, dict[Partition, LaurentPoly]]:
    """(N, {mu: N * c_{lam,mu}(t)}) with P_lam = sum c_{lam,mu} p_mu, N = |lam|!."""
    lam = Partition(lam)
    d = lam.size
    if d > POWER_SUM_MAX_DEGREE:
        raise ValueError(f"power-sum conversion is limited to degree {POWER_SUM_MAX_DEGREE}")
    N = factorial(d)
    conv = hl_monomial_coefficients(lam, max(d, 1), vs)
    parts = sorted(enumerate_partitions(size=d), key=tuple)  # lex increasing
    coeffs: dict[Partition, LaurentPoly] = {}
    for nu in parts:
        acc = conv.get(nu, vs.zero()) * N
        for mu, c in coeffs.items():
            L = power_sum_monomial(mu, nu)
            if L:
                acc = acc - c * L
        diag = power_sum_monomial(nu, nu)
        coeffs[nu] = acc.exact_div_int(diag)
    return N, {mu: c for mu, c in coeffs.items() if c}


# ---------------------------------------------------------------------------
# small identities used by the verification registry


def hl_limit_sides(lam: Sequence[int], n: int, t_value: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(P_lam(x; t_value), s_lam or m_lam) for t_value in {0, 1}."""
    vs = sym_varset(n)
    xv = VarSet(xnames(n)) if n else VarSet(("T",))
    P = hall_littlewood(lam, n, vs).subs({"T": t_value}, xv)
    if t_value == 0:
        other = schur(lam, n, vs=vs).subs({}, xv)
    elif t_value == 1:
        other = monomial_symmetric(lam, n, vs).subs({}, xv)
    else:
        raise ValueError("t_value must be 0 or 1")
    return P, other


def single_row_sides(k: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """P_(k) against sum_a (-t)^a s_(k-a, 1^a)."""
    vs = sym_varset(n)
    t = tpow(vs)
    rhs = vs.zero()
    for a in range(k):
        rhs = rhs + (-t) ** a * schur([k - a] + [1] * a, n, vs=vs)
    return hall_littlewood([k], n, vs), rhs


def two_column_sides(r: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """P_(2^r) against sum_i (-1)^i t^{C(i,2)} e_{r+i} e_{r-i}."""
    vs = sym_varset(n)
    T = vs.gen("T")
    rhs = vs.zero()
    for i in range(-r, r + 1):
        rhs = rhs + (-1) ** (i % 2) * T ** (i * (i - 1)) * elementary(r + i, n, vs) * elementary(r - i, n, vs)
    return hall_littlewood([2] * r, n, vs), rhs


def kirillov_sides(alpha: Sequence[int], n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """e_alpha against sum_lam R_{lam,alpha}(t) P_lam."""
    vs = sym_varset(n)
    alpha = Composition(alpha)
    d = sum(alpha)
    exp = {lam: kirillov_R(lam, alpha, vs) for lam in enumerate_partitions(size=d) if len(lam) <= n}
    return elementary_product(alpha, n, vs), reassemble(exp, n, vs)


def pieri_sides(mu: Sequence[int], r: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    vs = sym_varset(n)
    return hall_littlewood(mu, n, vs) * elementary(r, n, vs), reassemble(pieri_e(mu, r, n, vs), n, vs)


def _pieri_varset(n: int) -> VarSet:
    return VarSet(xnames(n) + ("A", "B", "T"))


def bounded_pieri_expansions(n: int, k: int, cap: int, a=None, b=None) -> tuple[HLExpansion, HLExpansion]:
    """Both sides of the bounded e-Pieri identity in the P-basis, |lam| <= cap.

    Left: prod(1 + a x_i) sum_{mu_1 <= 2k} b^{l(mu^o)} P_mu via pieri_e; right:
    sum_{lam_1 <= 2k+1} htilde_lam^{(k)}(a, b; t) P_lam.  ``a``/``b`` default to
    the formal generators A and B.
    """
    vs = _pieri_varset(n)
    a = vs.gen("A") if a is None else a
    b = vs.gen("B") if b is None else b
    t = tpow(vs)
    lhs: HLExpansion = {}
    for mu in enumerate_partitions(max_part=2 * k, max_length=n, max_size=cap):
        w = b ** len(mu.odd_part())
        for r in range(0, min(n, cap - mu.size) + 1):
            for lam, c in pieri_e(mu, r, n, vs).items():
                lhs[lam] = lhs.get(lam, vs.zero()) + w * a ** r * c
    rhs: HLExpansion = {}
    for lam in enumerate_partitions(max_part=2 * k + 1, max_length=n, max_size=cap):
        rhs[lam] = rs_h_tilde(lam, k, a, b, t)
    clean = lambda d: {p: c for p, c in d.items() if c}  # noqa: E731
    return clean(lhs), clean(rhs)


def bounded_pieri_polys(n: int, k: int, cap: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Second route: both sides as explicit polynomials in x (degree <= cap), P_lam from the Weyl sum."""
    vs = _pieri_varset(n)
    a, b, t = vs.gen("A"), vs.gen("B"), tpow(vs)
    names = xnames(n)
    prod = vs.one()
    for i in range(1, n + 1):
        prod = prod * (1 + a * vs.gen(f"x{i}"))
    lsum = vs.zero()
    for mu in enumerate_partitions(max_part=2 * k, max_length=n, max_size=cap):
        lsum = lsum + b ** len(mu.odd_part()) * hall_littlewood(mu, n, vs)
    lhs = prod * lsum
    rhs = vs.zero()
    for lam in enumerate_partitions(max_part=2 * k + 1, max_length=n, max_size=cap):
        rhs = rhs + rs_h_tilde(lam, k, a, b, t) * hall_littlewood(lam, n, vs)

    def cut(f: LaurentPoly) -> LaurentPoly:
        out = vs.zero()
        for d in range(cap + 1):
            out = out + f.homogeneous_part(names, d)
        return out

    return cut(lhs), cut(rhs)


def oddk_sides(which: str, n: int, k: int, cap: int) -> tuple[HLExpansion, HLExpansion]:
    """The b = 0 (``"a"``) and a = 1, b = t^{1/2} (``"t"``) cases of the bounded e-Pieri sum.

    Left side comes from the general P-basis expansion, right side from the
    closed forms a^{l(lam^o)} and prod_{i <= 2k} (-t^{1/2}; t^{1/2})_{m_i}.
    """
    vs = _pieri_varset(n)
    A, T = vs.gen("A"), vs.gen("T")
    if which == "a":
        lhs, _ = bounded_pieri_expansions(n, k, cap, a=A, b=vs.zero())
        coef = lambda lam: A ** len(lam.odd_part())  # noqa: E731
    elif which == "t":
        lhs, _ = bounded_pieri_expansions(n, k, cap, a=vs.one(), b=T)

        def coef(lam: Partition) -> LaurentPoly:
            out = vs.one()
            for i in range(1, 2 * k + 1):
                m = lam.multiplicity(i)
                for j in range(m):
                    out = out * (1 + T ** (j + 1))
            return out
    else:
        raise ValueError(f"unknown case {which!r}")
    rhs = {lam: coef(lam) for lam in enumerate_partitions(max_part=2 * k + 1, max_length=n, max_size=cap)}
    return lhs, {p: c for p, c in rhs.items() if c}
