"""Hyperoctahedral-invariant Laurent polynomials.

Covers the odd/even orthogonal and symplectic Schur functions, the BC_n
Hall-Littlewood polynomials with their B_n and C_n specialisations, and the
left-hand sides of the bounded Littlewood identities.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .exactalg import LaurentPoly, VarSet, determinant, divide, qpoch, xnames
from .partitions import Partition, enumerate_partitions
from .symfun import _xvec, hall_littlewood, sgn, tpow, v_lambda

BC_FAMILIES = ("B0", "B_neg_sqrt", "B1", "C0", "Ct", "BC")
CHARACTER_FAMILIES = ("so_odd", "o_even", "sp")


def bc_varset(n: int, *extra: str) -> VarSet:
    return VarSet(xnames(n) + (extra or ("T",)))


def is_bc_symmetric(f: LaurentPoly, n: int) -> bool:
    from .symfun import is_symmetric

    if not is_symmetric(f, n):
        return False
    if n == 0:
        return True
    x1 = f.vs.gen("x1")
    return f.subs({"x1": x1 ** -1}) == f


# ---------------------------------------------------------------------------
# e_r over x^{+-} and (x^{+-}, 1)


@lru_cache(maxsize=None)
def _dot_e_all(n: int, vs: VarSet) -> tuple[LaurentPoly, ...]:
    # coefficients of z^r in prod_i (1 + z x_i)(1 + z / x_i)
    polys = [vs.one()]
    for i in range(1, n + 1):
        x = vs.gen(f"x{i}")
        for a in (x, x ** -1):
            nxt = [vs.zero()] * (len(polys) + 1)
            for r, p in enumerate(polys):
                nxt[r] = nxt[r] + p
                nxt[r + 1] = nxt[r + 1] + p * a
            polys = nxt
    return tuple(polys)


def dot_e(r: int, n: int, vs: VarSet) -> LaurentPoly:
    """e_r(x_1, 1/x_1, .., x_n, 1/x_n)."""
    if r < 0 or r > 2 * n:
        return vs.zero()
    return _dot_e_all(n, vs)[r]


def ddot_e(r: int, n: int, vs: VarSet) -> LaurentPoly:
    """e_r(x^{+-}, 1) = dot_e(r) + dot_e(r-1)."""
    return dot_e(r, n, vs) + dot_e(r - 1, n, vs)


# ---------------------------------------------------------------------------
# classical characters


def classical_character(family: str, lam: Sequence[int], n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or bc_varset(n)
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"l({lam}) exceeds n={n}")
    if n == 0:
        return vs.one()
    parts = list(lam) + [0] * (n - len(lam))
    xs = [vs.gen(f"x{i}") for i in range(1, n + 1)]
    if family == "so_odd":
        M = [[x ** (-parts[j] + j) - x ** (parts[j] + 2 * n - j - 1) for j in range(n)] for x in xs]
        linear = [1 - x for x in xs]
    elif family == "o_even":
        M = [[x ** (-parts[j] + j) + x ** (parts[j] + 2 * n - j - 2) for j in range(n)] for x in xs]
        linear = []
    elif family == "sp":
        M = [[x ** (-parts[j] + j) - x ** (parts[j] + 2 * n - j) for j in range(n)] for x in xs]
        linear = [f for x in xs for f in (1 - x, 1 + x)]
    else:
        raise ValueError(f"unknown family {family!r}")
    num = determinant(M)
    for f in linear:
        num = divide(num, f)
    for i in range(n):
        for j in range(i + 1, n):
            num = divide(num, xs[i] - xs[j])
            num = divide(num, xs[i] * xs[j] - 1)
    if family == "o_even" and len(lam) < n:
        num = num.exact_div_int(2)
    return num


# ---------------------------------------------------------------------------
# BC_n Hall-Littlewood polynomials


def _signed_antisymmetrize(f: LaurentPoly, n: int) -> LaurentPoly:
    """sum over signed permutations w of sgn(w) w(f), sgn(w) = sgn(pi) prod eps_i.

    Each monomial is straightened to strictly decreasing positive x-exponents;
    monomials with a zero or a repeated absolute exponent cancel.
    """
    vs = f.vs
    xi = [vs.index[f"x{i}"] for i in range(1, n + 1)]
    classes: dict[tuple[int, ...], dict[int, int]] = {}
    for exps, c in f.terms():
        xe = [exps[i] for i in xi]
        ab = [abs(e) for e in xe]
        if 0 in ab or len(set(ab)) < n:
            continue
        sign = 1
        for e in xe:
            if e < 0:
                sign = -sign
        order = sorted(range(n), key=lambda i: -ab[i])
        sign *= sgn(order)
        beta = tuple(ab[i] for i in order)
        rest = list(exps)
        for i in xi:
            rest[i] = 0
        rk = vs.pack(rest)
        bucket = classes.setdefault(beta, {})
        bucket[rk] = bucket.get(rk, 0) + sign * c
    group = []
    for perm in itertools.permutations(range(n)):
        ps = sgn(perm)
        for eps in itertools.product((1, -1), repeat=n):
            s = ps
            for e in eps:
                s *= e
            group.append((perm, eps, s))
    units = vs._units
    out: dict[int, int] = {}
    for beta, coeffs in classes.items():
        coeffs = {k: c for k, c in coeffs.items() if c}
        if not coeffs:
            continue
        for perm, eps, s in group:
            off = sum(eps[i] * beta[i] * units[xi[p]] for i, p in enumerate(perm))
            for rk, c in coeffs.items():
                key = rk + off
                v = out.get(key, 0) + s * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return LaurentPoly(vs, out)


def _bc_numerator(lam: Partition, n: int, s1: LaurentPoly, s2: LaurentPoly, vs: VarSet) -> LaurentPoly:
    t = tpow(vs)
    parts = list(lam) + [0] * (n - len(lam))
    xs = [vs.gen(f"x{i}") for i in range(1, n + 1)]
    out = LaurentPoly(vs, {_xvec(vs, n, [-p - 1 for p in parts]): (-1) ** n})
    for x in xs:
        out = out * ((1 - s1 * x) * (1 - s2 * x))
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (-(t * xs[i] - xs[j]) * (1 - t * xs[i] * xs[j]) * (xs[i] * xs[j]) ** -1)
    return out


def _divide_by_bc_delta(f: LaurentPoly, n: int) -> LaurentPoly:
    """Exact division by prod (x_i - 1/x_i) prod_{i<j} (x_i + 1/x_i - x_j - 1/x_j)."""
    vs = f.vs
    xs = [vs.gen(f"x{i}") for i in range(1, n + 1)]
    mono = vs.one()
    for x in xs:
        mono = mono * x
    for i in range(n):
        for j in range(i + 1, n):
            mono = mono * xs[i] * xs[j]
    f = f * mono
    for x in xs:
        f = divide(f, x - 1)
        f = divide(f, x + 1)
    for i in range(n):
        for j in range(i + 1, n):
            f = divide(f, xs[i] - xs[j])
            f = divide(f, xs[i] * xs[j] - 1)
    return f


def hl_bc(lam: Sequence[int], n: int, s1: LaurentPoly | int, s2: LaurentPoly | int, vs: VarSet | None = None) -> LaurentPoly:
    """P^{BC_n}_lam(x; t, s1, s2) with s1, s2 given as elements of ``vs``."""
    vs = vs or bc_varset(n)
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"l({lam}) exceeds n={n}")
    s1 = s1 if isinstance(s1, LaurentPoly) else vs.const(s1)
    s2 = s2 if isinstance(s2, LaurentPoly) else vs.const(s2)
    if n == 0:
        return vs.one()
    num = _signed_antisymmetrize(_bc_numerator(lam, n, s1, s2, vs), n)
    f = _divide_by_bc_delta(num, n)
    norm = qpoch(s1 * s2, tpow(vs), n - len(lam)) * v_lambda(lam, n, vs)
    return divide(f, norm)


def hl_b(lam: Sequence[int], n: int, s: LaurentPoly | int, vs: VarSet | None = None) -> LaurentPoly:
    return hl_bc(lam, n, s, -1, vs)


def hl_c(lam: Sequence[int], n: int, s_half: LaurentPoly | int, vs: VarSet | None = None) -> LaurentPoly:
    """P^{C_n}_lam(x; t, s) where ``s_half`` is a square root of s (e.g. the generator S, s = S**2)."""
    vs = vs or bc_varset(n)
    s_half = s_half if isinstance(s_half, LaurentPoly) else vs.const(s_half)
    return hl_bc(lam, n, s_half, -s_half, vs)


def hl_bc_rect_t1(k: int, n: int, s1: LaurentPoly | int, s2: LaurentPoly | int, vs: VarSet | None = None) -> LaurentPoly:
    """The t = 1 product formula for P^{BC_n}_{(k^n)}."""
    vs = vs or bc_varset(n)
    s1 = s1 if isinstance(s1, LaurentPoly) else vs.const(s1)
    s2 = s2 if isinstance(s2, LaurentPoly) else vs.const(s2)
    out = vs.one()
    for i in range(1, n + 1):
        x = vs.gen(f"x{i}")
        num = (1 - s1 * x) * (1 - s2 * x) * x ** -k - (s1 - x) * (s2 - x) * x ** k
        out = out * divide(num, 1 - x * x)
    return out


def family_parameters(family: str, vs: VarSet) -> tuple[LaurentPoly, LaurentPoly]:
    """(s1, s2) for the six rectangular targets."""
    T = vs.gen("T")
    table = {
        "B0": (vs.zero(), vs.const(-1)),
        "B_neg_sqrt": (-T, vs.const(-1)),
        "B1": (vs.one(), vs.const(-1)),
        "C0": (vs.zero(), vs.zero()),
        "Ct": (T, -T),
        "BC": (-T, vs.zero()),
    }
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[family]


def family_target(family: str, k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or bc_varset(n)
    s1, s2 = family_parameters(family, vs)
    return hl_bc([k] * n, n, s1, s2, vs)


# ---------------------------------------------------------------------------
# bounded Littlewood sums


def _tp(vs: VarSet, m: int) -> LaurentPoly:
    """(t; t^2)_m."""
    t = tpow(vs)
    return qpoch(t, t * t, m)


def bounded_littlewood_weight(family: str, lam: Partition, k: int, vs: VarSet) -> LaurentPoly | None:
    """Weight of P_lam in the family's sum, or None when lam is excluded."""
    T = vs.gen("T")
    mult = lam.multiplicities()
    low = range(1, 2 * k)
    if family == "B0":
        return vs.one()
    if family == "B_neg_sqrt":
        w = vs.one()
        for i in low:
            w = w * qpoch(-T, T, mult.get(i, 0))
        return w
    if family == "B1":
        if any(p < 2 * k and m % 2 for p, m in mult.items()):
            return None
        w = vs.one()
        for i in low:
            w = w * _tp(vs, mult.get(i, 0) // 2)
        return w
    if family == "C0":
        return vs.one() if lam.is_even() else None
    if family == "Ct":
        if any(p % 2 and m % 2 for p, m in mult.items()):
            return None
        w = T ** len(lam.odd_part())
        for i in low:
            w = w * _tp(vs, -(-mult.get(i, 0) // 2))
        return w
    if family == "BC":
        return T ** len(lam.odd_part())
    raise ValueError(f"unknown family {family!r}")


def bounded_littlewood_lhs(family: str, k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or bc_varset(n)
    out = vs.zero()
    for lam in enumerate_partitions(max_part=2 * k, max_length=n):
        w = bounded_littlewood_weight(family, lam, k, vs)
        if w is not None and w:
            out = out + w * hall_littlewood(lam, n, vs)
    return out


def bounded_littlewood_rhs(family: str, k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or bc_varset(n)
    mono = vs.one()
    for i in range(1, n + 1):
        mono = mono * vs.gen(f"x{i}")
    return mono ** k * family_target(family, k, n, vs)


def ep_lemma_sides(n: int, k: int, vs: VarSet | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of (x_1..x_n) dot_e_{n-k} = sum [s, (s-k)/2]_t P_{(2^r,1^s)}."""
    from .exactalg import qbinom

    vs = vs or bc_varset(n)
    mono = vs.one()
    for i in range(1, n + 1):
        mono = mono * vs.gen(f"x{i}")
    lhs = mono * dot_e(n - k, n, vs)
    rhs = vs.zero()
    t = tpow(vs)
    for s in range(n + 1):
        if (s - k) % 2:
            continue
        for r in range(n - s + 1):
            c = qbinom(s, (s - k) // 2, t)
            if c:
                rhs = rhs + c * hall_littlewood([2] * r + [1] * s, n, vs)
    return lhs, rhs


# ---------------------------------------------------------------------------
# dual Jacobi-Trudi forms of the classical characters


def classical_dual_jt(family: str, lam: Sequence[int], n: int, vs: VarSet | None = None, k: int | None = None) -> LaurentPoly:
    """k x k determinant in dot_e for lam inside (k^n); k defaults to lam_1."""
    vs = vs or bc_varset(n)
    lam = Partition(lam)
    k = lam.part(1) if k is None else k
    if lam.part(1) > k or len(lam) > n:
        raise ValueError(f"{lam} is not inside ({k}^{n})")
    if k == 0:
        return vs.one()
    conj = lam.conjugate()
    e = lambda r: dot_e(r, n, vs)  # noqa: E731
    if family == "so_odd":
        M = [[e(conj.part(i) - i + j) + e(conj.part(i) - i - j + 1) for j in range(1, k + 1)] for i in range(1, k + 1)]
        return determinant(M)
    if family == "o_even":
        M = [[e(conj.part(i) - i + j) + e(conj.part(i) - i - j + 2) for j in range(1, k + 1)] for i in range(1, k + 1)]
        return determinant(M).exact_div_int(2)
    if family == "sp":
        M = [[e(conj.part(i) - i + j) - e(conj.part(i) - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]
        return determinant(M)
    raise ValueError(f"unknown family {family!r}")


def classical_rect_dual_jt(family: str, k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    """The (k^n) specialisations, written with dot_e_r = dot_e_{2n-r}."""
    vs = vs or bc_varset(n)
    if k == 0:
        return vs.one()
    e = lambda r: dot_e(r, n, vs)  # noqa: E731
    rng = range(1, k + 1)
    if family == "so_odd":
        return determinant([[e(n - i + j) + e(n + i + j - 1) for j in rng] for i in rng])
    if family == "o_even":
        return determinant([[e(n - i + j) + e(n + i + j - 2) for j in rng] for i in rng]).exact_div_int(2)
    if family == "sp":
        return determinant([[e(n - i + j) - e(n + i + j) for j in rng] for i in rng])
    raise ValueError(f"unknown family {family!r}")
