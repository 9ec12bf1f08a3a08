"""Affine Jacobi-Trudi determinant sums and their companions.

Every sum here has the shape ``sum_y det(M(y))`` where row ``i`` of ``M``
depends on ``y_i`` alone.  The evaluator bounds each ``y_i`` by the range in
which some elementary symmetric function in the row is nonzero, then either
enumerates the box (reference route) or collapses it: multilinearity in rows
gives ``sum_y det M(y) = det(sum_{y_i} Z^{y_i} row_i(y_i))`` and the lattice
constraint on ``|y|`` becomes a selection of ``Z``-powers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, floor
from typing import Callable, Sequence

from .bcsym import bc_varset, ddot_e, dot_e, family_parameters, hl_b, hl_bc, hl_bc_rect_t1
from .exactalg import LaurentPoly, VarSet, determinant, qbinom, qpoch, xnames
from .partitions import (
    Partition,
    enumerate_cssyt,
    enumerate_partitions,
    partitions_in_box,
    in_cylindric_range,
)
from .symfun import _xvec, elementary, kirillov_R, monomial_symmetric, sgn, sym_varset, tpow

Row = Callable[[int, int], list]  # (i, y) -> k entries, i is 1-based
CONSTRAINTS = ("none", "zero", "even")


class WindowError(AssertionError):
    """A row predicted to vanish outside its window did not."""


def e_window(bases: Sequence[int], K: int, alphabet: int) -> tuple[int, int]:
    """Smallest y-interval outside which every e_{a - K y}, a in bases, vanishes."""
    if K <= 0:
        raise ValueError("lattice step K must be positive for a finite sum")
    lo = min(ceil(Fraction(a - alphabet, K)) for a in bases)
    hi = max(floor(Fraction(a, K)) for a in bases)
    return lo, hi


@dataclass
class LatticeDetSum:
    """sum over y in Z^k (optionally |y| = 0 or |y| even) of det(row_i(y_i))."""

    k: int
    row: Row
    windows: list[tuple[int, int]]
    vs: VarSet
    constraint: str = "none"
    marker: str | None = None  # generator carrying u^{y_i}, if any
    checked: bool = field(default=False, init=False)

    def check_windows(self) -> None:
        for i, (lo, hi) in enumerate(self.windows, start=1):
            for y in (lo - 1, hi + 1):
                if any(self.row(i, y)):
                    raise WindowError(f"row {i} is nonzero at y={y} outside [{lo}, {hi}]")
        self.checked = True

    def _admissible(self, ys: Sequence[int]) -> bool:
        s = sum(ys)
        if self.constraint == "zero":
            return s == 0
        if self.constraint == "even":
            return s % 2 == 0
        return True

    def _weight(self, ys: Sequence[int]) -> LaurentPoly:
        if self.marker is None:
            return self.vs.one()
        return self.vs.gen(self.marker) ** sum(ys)

    def enumerate(self) -> LaurentPoly:
        """Reference route: one determinant per lattice point."""
        if self.k == 0:
            return self.vs.one()
        total = self.vs.zero()
        cache: dict[tuple[int, int], list] = {}
        ranges = [range(lo, hi + 1) for lo, hi in self.windows]
        for ys in itertools.product(*ranges):
            if not self._admissible(ys):
                continue
            rows = []
            for i, y in enumerate(ys, start=1):
                r = cache.get((i, y))
                if r is None:
                    r = cache[(i, y)] = self.row(i, y)
                if not any(r):
                    break
                rows.append(r)
            else:
                total = total + self._weight(ys) * determinant(rows)
        return total

    def collapse(self) -> LaurentPoly:
        """Fast route: a single determinant with a marker generator for y."""
        if self.k == 0:
            return self.vs.one()
        if self.constraint == "none":
            rows = []
            for i, (lo, hi) in enumerate(self.windows, start=1):
                acc = [self.vs.zero()] * self.k
                for y in range(lo, hi + 1):
                    w = self._weight([y])
                    acc = [a + w * e for a, e in zip(acc, self.row(i, y))]
                rows.append(acc)
            return determinant(rows)
        zvs = self.vs.extend("_Z")
        Z = zvs.gen("_Z")
        rows = []
        for i, (lo, hi) in enumerate(self.windows, start=1):
            acc = [zvs.zero()] * self.k
            for y in range(lo, hi + 1):
                w = self._weight([y]).embed(zvs) * Z ** y
                acc = [a + w * e.embed(zvs) for a, e in zip(acc, self.row(i, y))]
            rows.append(acc)
        full = determinant(rows)
        out = self.vs.zero()
        for e, part in full.by_power("_Z").items():
            if (self.constraint == "zero" and e == 0) or (self.constraint == "even" and e % 2 == 0):
                out = out + part.embed(self.vs)
        return out

    def evaluate(self, method: str = "collapse") -> LaurentPoly:
        if not self.checked:
            self.check_windows()
        if method == "collapse":
            return self.collapse()
        if method == "enumerate":
            return self.enumerate()
        raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# GL_n


def _e_table(n: int, vs: VarSet) -> Callable[[int], LaurentPoly]:
    cache: dict[int, LaurentPoly] = {}

    def e(m: int) -> LaurentPoly:
        if m < 0 or m > n:
            return vs.zero()
        v = cache.get(m)
        if v is None:
            v = cache[m] = elementary(m, n, vs)
        return v

    return e


def affine_jt_gl_sum(k: int, r: int, n: int, vs: VarSet | None = None, level: int = 0) -> LatticeDetSum:
    """sum_{|y|=0} det(t^{(k+l) C(y_i,2) + i y_i} e_{r-i+j-(k+l) y_i})."""
    if k < 1:
        raise ValueError("k must be positive")
    vs = vs or sym_varset(n)
    e = _e_table(n, vs)
    T = vs.gen("T")
    K = k + level

    def row(i: int, y: int) -> list:
        w = T ** (K * y * (y - 1) + 2 * i * y)
        return [w * e(r - i + j - K * y) for j in range(1, k + 1)]

    windows = [e_window([r - i + j for j in range(1, k + 1)], K, n) for i in range(1, k + 1)]
    return LatticeDetSum(k, row, windows, vs, "zero")


def affine_jt_gl(k: int, r: int, n: int, vs: VarSet | None = None, method: str = "collapse") -> LaurentPoly:
    return affine_jt_gl_sum(k, r, n, vs).evaluate(method)


def s_klt(k: int, r: int, ell: int, n: int, vs: VarSet | None = None, method: str = "collapse") -> LaurentPoly:
    """The t-deformed cylindric function S^{k,l}_{(k^r)}(t)."""
    return affine_jt_gl_sum(k, r, n, vs, level=ell).evaluate(method)


def cylindric_schur_det(lam: Sequence[int], n: int, k: int, ell: int, vs: VarSet | None = None, method: str = "collapse") -> LaurentPoly:
    lam = Partition(lam)
    if not in_cylindric_range(lam, n, k, ell):
        raise ValueError(f"{lam} is not in Par_{{{n},{k}}}^{ell}")
    vs = vs or sym_varset(n)
    if k == 0:
        return vs.one()
    e = _e_table(n, vs)
    conj = lam.conjugate()
    K = k + ell

    def row(i: int, y: int) -> list:
        return [e(conj.part(i) - i + j - K * y) for j in range(1, k + 1)]

    windows = [e_window([conj.part(i) - i + j for j in range(1, k + 1)], K, n) for i in range(1, k + 1)]
    return LatticeDetSum(k, row, windows, vs, "zero").evaluate(method)


def cssyt_weight_sum(lam: Sequence[int], n: int, k: int, ell: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or sym_varset(n)
    out: dict[int, int] = {}
    for t in enumerate_cssyt(lam, n, k, ell):
        key = _xvec(vs, n, t.weight())
        out[key] = out.get(key, 0) + 1
    return LaurentPoly(vs, out)


# ---------------------------------------------------------------------------
# BC_n families


@dataclass(frozen=True)
class BCFamilySpec:
    K: int
    signed: bool
    constraint: str
    j_shift: int  # T-exponent is K y^2 - (2 j - j_shift) y
    second_offset: int  # second e-index is n + i + j - K y + second_offset
    combine: int  # +1 or -1
    halve: bool


def bc_family_spec(family: str, k: int) -> BCFamilySpec:
    table = {
        "B0": BCFamilySpec(2 * k + 1, True, "none", 1, -1, 1, False),
        "B_neg_sqrt": BCFamilySpec(2 * k, False, "none", 1, -1, 1, False),
        "B1": BCFamilySpec(2 * k, True, "none", 2, -2, 1, True),
        "C0": BCFamilySpec(2 * k + 2, False, "none", 0, 0, -1, False),
        "Ct": BCFamilySpec(2 * k, False, "even", 0, 0, -1, False),
        "BC": BCFamilySpec(2 * k + 1, True, "none", 0, 0, -1, False),
    }
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[family]


def _bc_row_sum(spec: BCFamilySpec, k: int, n: int, vs: VarSet, efun, alphabet: int, first_offset: int = 0, second_extra: int = 0, marker: str | None = None, K: int | None = None) -> LatticeDetSum:
    K = spec.K if K is None else K
    T = vs.gen("T")

    def row(i: int, y: int) -> list:
        out = []
        for j in range(1, k + 1):
            w = T ** (K * y * y - (2 * j - spec.j_shift) * y)
            if spec.signed and y % 2:
                w = -w
            a = efun(n - i + j - K * y + first_offset)
            b = efun(n + i + j - K * y + spec.second_offset + second_extra)
            out.append(w * (a + b if spec.combine > 0 else a - b))
        return out

    bases = []
    for i in range(1, k + 1):
        bases.append([n - i + j + first_offset for j in range(1, k + 1)] + [n + i + j + spec.second_offset + second_extra for j in range(1, k + 1)])
    windows = [e_window(b, K, alphabet) for b in bases]
    return LatticeDetSum(k, row, windows, vs, spec.constraint, marker)


def affine_jt_bc(family: str, k: int, n: int, vs: VarSet | None = None, method: str = "collapse") -> LaurentPoly:
    """Right-hand side of the conjectured BC-type affine dual Jacobi-Trudi formula."""
    vs = vs or bc_varset(n)
    spec = bc_family_spec(family, k)
    if k == 0:
        val = vs.one()
    else:
        val = _bc_row_sum(spec, k, n, vs, lambda r: dot_e(r, n, vs), 2 * n).evaluate(method)
    return val.exact_div_int(2) if spec.halve else val


def affine_jt_bc_target(family: str, k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or bc_varset(n)
    s1, s2 = family_parameters(family, vs)
    return hl_bc([k] * n, n, s1, s2, vs)


def affine_jt_bc_t1_target(family: str, k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    """t = 1 value of the family's target from the rectangular product formula (T -> 1)."""
    vs = vs or bc_varset(n)
    s1, s2 = family_parameters(family, vs)
    one = {"T": vs.one()}
    return hl_bc_rect_t1(k, n, s1.subs(one), s2.subs(one), vs)


def at_t_one(f: LaurentPoly) -> LaurentPoly:
    return f.subs({"T": f.vs.one()})


# ---------------------------------------------------------------------------
# determinant transforms between dot_e and ddot_e


def det_transform_sides(kind: str, k: int, n: int, K: int, vs: VarSet | None = None, method: str = "collapse") -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the e(x^{+-}) <-> e(x^{+-}, 1) determinant transform with formal u = U."""
    vs = vs or bc_varset(n, "T", "U")
    if kind == "plus_form":
        spec = BCFamilySpec(K, False, "none", 1, -1, 1, False)
    elif kind == "minus_form":
        spec = BCFamilySpec(K, False, "none", 0, 0, -1, False)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if k == 0:
        if kind == "plus_form":
            raise ValueError("plus_form needs k >= 1 (the empty determinant breaks the factor 1/2)")
        return vs.one(), vs.one()
    lhs = _bc_row_sum(spec, k, n, vs, lambda r: dot_e(r, n, vs), 2 * n, marker="U").evaluate(method)
    # right side: first index shifted up by one; second index n+i+j-Ky-1 (plus) or n+i+j-Ky (minus)
    rhs = _bc_row_sum(spec, k, n, vs, lambda r: ddot_e(r, n, vs), 2 * n + 1, first_offset=1, marker="U").evaluate(method)
    if kind == "plus_form":
        rhs = rhs.exact_div_int(2)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Schilling-Shimozono delta identity


def ss_delta_sum(k: int, mu: Sequence[int], s: int, vs: VarSet | None = None, level: int = 0) -> LaurentPoly:
    """sum_{y in Q} sum_sigma sgn(sigma) t^{sum((k+l) y_i^2/2 + i y_i)} R_{mu,(s^k)+sigma-rho-(k+l)y}(t)."""
    mu = Partition(mu)
    vs = vs or VarSet(("T",))
    T = vs.gen("T")
    K = k + level
    size = mu.size
    cache: dict[tuple[int, ...], LaurentPoly] = {}

    def R(alpha: tuple[int, ...]) -> LaurentPoly:
        v = cache.get(alpha)
        if v is None:
            v = cache[alpha] = kirillov_R(mu, alpha, vs)
        return v

    windows = [range(ceil(Fraction(s + 1 - i - size, K)), floor(Fraction(s + k - i, K)) + 1) for i in range(1, k + 1)]
    total = vs.zero()
    perms = [(p, sgn(p)) for p in itertools.permutations(range(k))]
    for ys in itertools.product(*windows):
        if sum(ys):
            continue
        w = T ** sum(K * y * y + 2 * i * y for i, y in enumerate(ys, start=1))
        for p, sg in perms:
            alpha = tuple(s + (p[i] + 1) - (i + 1) - K * ys[i] for i in range(k))
            if min(alpha) < 0 or sum(alpha) != size:
                continue
            r = R(alpha)
            if r:
                total = total + sg * w * r
    return total


# ---------------------------------------------------------------------------
# level-restricted Kostka polynomials


def cartan_A(rank: int) -> list[list[int]]:
    return [[2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(rank)] for a in range(rank)]


def cartan_A_inverse(rank: int) -> list[list[Fraction]]:
    h = rank + 1
    return [[Fraction(min(a, b)) - Fraction(a * b, h) for b in range(1, rank + 1)] for a in range(1, rank + 1)]


def phi_ell(mu: Sequence[int], k: int, ell: int) -> Fraction:
    mu = Partition(mu)
    Ci = cartan_A_inverse(k - 1)
    m = [mu.multiplicity(a) for a in range(1, k)]
    return sum((Ci[a][b] * m[a] * m[b] for a in range(k - 1) for b in range(k - 1)), Fraction(0)) / (2 * ell)


@dataclass(frozen=True)
class KostkaParams:
    k: int
    ell: int
    r: int
    mu: Partition


def _half_power(vs: VarSet, exponent: Fraction) -> LaurentPoly:
    """t^exponent as a power of T; the exponent must be a half-integer."""
    twice = exponent * 2
    if twice.denominator != 1:
        raise ArithmeticError(f"t-exponent {exponent} is not a half-integer")
    return vs.gen("T") ** int(twice)


def _tau_terms(k: int, ell: int, mu: Partition, vs: VarSet):
    """Yield (t-exponent, q-binomial product) for each admissible tau.

    Besides nu_i^{(a)} in N_0, the row combinations sum_b (C^{-1})_{a,b} nu_i^{(b)}
    of the A_{k-1} inverse Cartan matrix must be integral; without that
    congruence the sum overcounts (e.g. k = l = 2, mu = (1,1) gives 1 + t^{1/2}
    instead of t^{1/2}).
    """
    t = tpow(vs)
    A, L = k - 1, ell - 1
    if A == 0 or L == 0:
        yield Fraction(0), vs.one()
        return
    C = cartan_A(A)
    Ci = cartan_A_inverse(L)
    CAi = cartan_A_inverse(A)
    m = [mu.multiplicity(a) for a in range(1, k)]
    # from CAi . nu >= 0: tau_j^{(c)} <= M_c C^{-1}_{j,1} / C^{-1}_{j,j}
    M = [sum(CAi[c][a] * m[a] for a in range(A)) for c in range(A)]
    bounds = [range(0, floor(M[c] * Ci[j][0] / Ci[j][j]) + 1) for c in range(A) for j in range(L)]
    for flat in itertools.product(*bounds):
        tau = [list(flat[c * L:(c + 1) * L]) for c in range(A)]
        nu = [
            [m[a] * Ci[i][0] - sum(C[a][b] * Ci[i][j] * tau[b][j] for b in range(A) for j in range(L)) for i in range(L)]
            for a in range(A)
        ]
        if any(v.denominator != 1 or v < 0 for row in nu for v in row):
            continue
        if any(sum(CAi[a][b] * nu[b][i] for b in range(A)).denominator != 1 for a in range(A) for i in range(L)):
            continue
        expo = sum(
            (C[a][b] * Ci[i][j] * tau[a][i] * tau[b][j] for a in range(A) for b in range(A) for i in range(L) for j in range(L)),
            Fraction(0),
        ) / 2
        w = vs.one()
        for a in range(A):
            for i in range(L):
                w = w * qbinom(int(nu[a][i]) + tau[a][i], tau[a][i], t)
        yield expo, w


def _check_kostka(p: KostkaParams) -> Partition:
    mu = Partition(p.mu)
    if mu.size != p.k * p.r:
        raise ValueError(f"|mu| = {mu.size} differs from k*r = {p.k * p.r}")
    if mu and mu[0] > p.k:
        raise ValueError("mu_1 exceeds k")
    if p.ell < 1:
        raise ValueError("level must be positive")
    return mu


def level_restricted_kostka(p: KostkaParams, vs: VarSet | None = None) -> LaurentPoly:
    """The tau-sum for K^l_{(k^r), mu}(t), including the t^{k C(r,2)} prefactor."""
    vs = vs or VarSet(("T",))
    mu = _check_kostka(p)
    total = vs.zero()
    for expo, w in _tau_terms(p.k, p.ell, mu, vs):
        total = total + _half_power(vs, expo) * w
    return tpow(vs) ** (p.k * comb(p.r, 2)) * total


def kostka_expansion_prediction(k: int, r: int, ell: int, vs: VarSet) -> dict[Partition, LaurentPoly]:
    """{mu: t^{-k C(r,2) + phi_l(mu)} K^l(t)} over mu |- kr with mu_1 <= k.

    phi_l(mu) is folded into each term before the half-integrality check, since
    for l > 2 it is only the sum that lands in (1/2)Z.
    """
    out = {}
    for mu in enumerate_partitions(size=k * r, max_part=k):
        _check_kostka(KostkaParams(k, ell, r, mu))
        phi = phi_ell(mu, k, ell)
        c = vs.zero()
        for expo, w in _tau_terms(k, ell, mu, vs):
            c = c + _half_power(vs, phi + expo) * w
        if c:
            out[mu] = c
    return out


# ---------------------------------------------------------------------------
# the A_{k-1}^{(1)} q-binomial summation


def ak_summation_sides(k: int, n: int, r: int, vs: VarSet | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    vs = vs or VarSet(("T",))
    t = tpow(vs)
    lhs = vs.zero()
    # [n+k-1, n-r-k y_i+i-1] vanishes unless 0 <= n-r-k y_i+i-1 <= n+k-1
    windows = [range(ceil(Fraction(-r + i - k, k)), floor(Fraction(n - r + i - 1, k)) + 1) for i in range(1, k + 1)]
    for ys in itertools.product(*windows):
        if sum(ys):
            continue
        term = vs.one()
        for i in range(k):
            for j in range(i + 1, k):
                term = term * (1 - t ** (k * (ys[i] - ys[j]) - (i + 1) + (j + 1)))
        for i, y in enumerate(ys, start=1):
            term = term * t ** (k * (k + 1) * (y * (y - 1) // 2) - i * y) * qbinom(n + k - 1, n - r - k * y + i - 1, t)
        lhs = lhs + term
    rhs = qbinom(n, r, t)
    for i in range(1, k + 1):
        rhs = rhs * qpoch(t ** (n + i), t, k - i)
    return lhs, rhs


def krattenthaler_sides(a: Sequence[int], n: int, vs: VarSet | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """det(t^{(j-i) a_i} [n, a_i + j]) * prod (t^{n+i}; t)_{k-i} against the product side."""
    vs = vs or VarSet(("T",))
    t = tpow(vs)
    k = len(a)
    M = [[t ** ((j - i) * a[i - 1]) * qbinom(n, a[i - 1] + j, t) for j in range(1, k + 1)] for i in range(1, k + 1)]
    lhs = determinant(M) if k else vs.one()
    for i in range(1, k + 1):
        lhs = lhs * qpoch(t ** (n + i), t, k - i)
    rhs = vs.one()
    for i in range(k):
        for j in range(i + 1, k):
            rhs = rhs * (1 - t ** (a[i] - a[j]))
    for i in range(k):
        rhs = rhs * qbinom(n + k - 1, n - a[i] - 1, t)
    return lhs, rhs


def principal_specialise_x(f: LaurentPoly, n: int) -> LaurentPoly:
    """f(1, t, .., t^{n-1}) inside the VarSet (T,)."""
    tv = VarSet(("T",))
    T = tv.gen("T")
    images = {f"x{i}": T ** (2 * (i - 1)) for i in range(1, n + 1)}
    return f.subs(images, tv)


# ---------------------------------------------------------------------------
# t = 1 cylindric F functions


def _F(i: int, N: int, n: int, e, signed: bool, vs: VarSet) -> LaurentPoly:
    out = vs.zero()
    for m in range(n + 1):
        # m + N y + i in [0, n]
        for y in range(ceil(Fraction(-m - i, N)), floor(Fraction(n - m - i, N)) + 1):
            term = e(m) * e(m + N * y + i)
            out = out + (-term if signed and y % 2 else term)
    return out


def cylindric_f_sides(kind: str, k: int, n: int, vs: VarSet | None = None) -> tuple[LaurentPoly, ...]:
    """(det_1, [det_2,] product) for the t = 1 F-bar / F determinant evaluations."""
    vs = vs or sym_varset(n)
    e = _e_table(n, vs)
    xs = [vs.gen(f"x{i}") for i in range(1, n + 1)]
    if kind == "signed_Fbar":
        K = 2 * k + 1
        Fb = lambda i: _F(i, K, n, e, True, vs)  # noqa: E731
        d1 = determinant([[Fb(i - j) + Fb(1 - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]) if k else vs.one()
        d2 = determinant([[Fb(i - j) - Fb(-i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]) if k else vs.one()
        prod = vs.one()
        for x in xs:
            prod = prod * sum((x ** a for a in range(K)), vs.zero())
        return d1, d2, prod
    if kind == "unsigned_F":
        K = 2 * k + 2
        F = lambda i: _F(i, K, n, e, False, vs)  # noqa: E731
        d1 = determinant([[F(i - j) - F(i + j) for j in range(1, k + 1)] for i in range(1, k + 1)]) if k else vs.one()
        prod = vs.one()
        for x in xs:
            prod = prod * sum((x ** (2 * a) for a in range(k + 1)), vs.zero())
        return d1, prod
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# the extra B_n(t, t) formula in ddot_e


def affine_jt_b_tt(k: int, n: int, vs: VarSet | None = None, method: str = "collapse") -> LaurentPoly:
    """(1/2) sum_y det((-1)^{y_i} t^{K y_i^2/2 - (j-1) y_i} (ddot_e_{n-i+j-Ky_i} + ddot_e_{n+i+j-Ky_i-1})), K = 2k.

    Conjectured to equal P^{B_n}_{(k^n)}(x; t, t); there is no dot_e companion.
    """
    vs = vs or bc_varset(n)
    if k == 0:
        return vs.one()
    spec = BCFamilySpec(2 * k, True, "none", 2, -1, 1, True)
    val = _bc_row_sum(spec, k, n, vs, lambda r: ddot_e(r, n, vs), 2 * n + 1).evaluate(method)
    return val.exact_div_int(2)


def affine_jt_b_tt_target(k: int, n: int, vs: VarSet | None = None) -> LaurentPoly:
    vs = vs or bc_varset(n)
    return hl_b([k] * n, n, tpow(vs), vs)


def cylindric_signed_sides(k: int, ell: int, n: int, vs: VarSet | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """t = 1: det(F_{i-j} - F_{i+j}) with N = 2(k+ell+1) against a signed cylindric tableau sum.

    The sum runs over lam in Par_{n,2k}^{2ell+2}: even lam count +1; lam with
    lam'_1 - lam'_{2k} = 2ell+2 whose short rows are odd and long rows even count -1.
    """
    vs = vs or sym_varset(n)
    e = _e_table(n, vs)
    N = 2 * (k + ell + 1)
    F = lambda i: _F(i, N, n, e, False, vs)  # noqa: E731
    lhs = determinant([[F(i - j) - F(i + j) for j in range(1, k + 1)] for i in range(1, k + 1)]) if k else vs.one()
    rhs = vs.zero()
    for lam in partitions_in_box(n, 2 * k):
        if not in_cylindric_range(lam, n, 2 * k, 2 * ell + 2):
            continue
        short = [p for p in lam if p < 2 * k]
        if lam.is_even():
            sign = 1
        elif len(short) == 2 * ell + 2 and all(p % 2 for p in short) and all(p % 2 == 0 for p in lam if p == 2 * k):
            sign = -1
        else:
            continue
        rhs = rhs + sign * cssyt_weight_sum(lam, n, 2 * k, 2 * ell + 2, vs)
    return lhs, rhs


# ---------------------------------------------------------------------------
# closed forms at small level


def cylindric_ell0_sides(k: int, r: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Cylindric tableaux of shape (k^r) at l = 0 against e_r(x_1^k, .., x_n^k)."""
    vs = sym_varset(n)
    lhs = cssyt_weight_sum([k] * r, n, k, 0, vs)
    images = {f"x{i}": vs.gen(f"x{i}") ** k for i in range(1, n + 1)}
    return lhs, elementary(r, n, vs).subs(images, vs)


def cylindric_ell1_sides(lam: Sequence[int], k: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """l = 1: the tableau sum is every monomial m_mu with mu inside (k^n) and |mu| = |lam|."""
    vs = sym_varset(n)
    lam = Partition(lam)
    rhs = vs.zero()
    for mu in enumerate_partitions(size=lam.size, max_part=k, max_length=n):
        rhs = rhs + monomial_symmetric(mu, n, vs)
    return cssyt_weight_sum(lam, n, k, 1, vs), rhs


def gl_t_one_sides(k: int, r: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The affine GL_n sum at t = 1 against m_{(k^r)} = e_r(x^k)."""
    vs = sym_varset(n)
    return at_t_one(affine_jt_gl(k, r, n, vs)), monomial_symmetric([k] * r, n, vs)
