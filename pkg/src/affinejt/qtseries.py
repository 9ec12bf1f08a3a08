"""Truncated (q,t)-series: principal specialisations, Rogers-Ramanujan sums and theta products.

Series grade by Q = q^{1/2}; a q-order D is Q-order 2D.  Bivariate series live
in ``VarSet(("T", "Q"))``; once t = q^m they become univariate in ``("Q",)``
with T -> Q^m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil, comb
from typing import Callable, Iterator, Sequence

from .exactalg import (
    LaurentPoly,
    determinant,
    TruncSeries,
    VarSet,
    pochhammer_trunc,
    qbinom,
    qpoch,
    theta_trunc,
    xnames,
)
from .partitions import Partition, horizontal_strips_below
from .symfun import hall_littlewood, hl_power_sum_expansion, psi, sym_varset

QT = VarSet(("T", "Q"))
QV = VarSet(("Q",))

THEOREMS = ("T15", "T16a", "T16b", "T17", "T18")
EXTRA_SUMS = ("A2km1_tt",)


# ---------------------------------------------------------------------------
# monomials in (q^{1/2}, t^{1/2}) that survive the t = q^m substitution


@dataclass(frozen=True)
class Mono:
    """sign * Q^q * T^t."""

    sign: int = 1
    q: int = 0
    t: int = 0

    def __mul__(self, other: "Mono") -> "Mono":
        return Mono(self.sign * other.sign, self.q + other.q, self.t + other.t)

    def __truediv__(self, other: "Mono") -> "Mono":
        return Mono(self.sign * other.sign, self.q - other.q, self.t - other.t)

    def __pow__(self, e: int) -> "Mono":
        return Mono(self.sign ** e, self.q * e, self.t * e)

    def __neg__(self) -> "Mono":
        return Mono(-self.sign, self.q, self.t)

    def poly(self, vs: VarSet, t_exp: int | None = None) -> LaurentPoly:
        if "T" in vs.index:
            return vs.monomial({"Q": self.q, "T": self.t}, self.sign)
        if self.t and t_exp is None:
            raise ValueError("univariate target needs t = q^m")
        return vs.monomial({"Q": self.q + (t_exp or 0) * self.t}, self.sign)


def qm(e2: int, sign: int = 1) -> Mono:
    """sign * q^{e2/2}."""
    return Mono(sign, e2, 0)


def nome(K: int, t_power: int = 1) -> Mono:
    """p = t^{t_power} q^K."""
    return Mono(1, 2 * K, 2 * t_power)


def half(p: Mono) -> Mono:
    if p.q % 2 or p.t % 2:
        raise ValueError("no exact square root")
    return Mono(p.sign, p.q // 2, p.t // 2)


# ---------------------------------------------------------------------------
# theta-product expressions


@dataclass(frozen=True)
class Atom:
    kind: str  # "poch" (a; base)_inf or "theta" theta(a; base)
    a: Mono
    base: Mono
    power: int = 1


def poch(a: Mono, base: Mono, power: int = 1) -> Atom:
    return Atom("poch", a, base, power)


def theta(a: Mono, base: Mono, power: int = 1) -> Atom:
    return Atom("theta", a, base, power)


@dataclass
class ThetaProduct:
    """prod(atoms) / (den * prod(den_atoms)) with den a power of two."""

    atoms: list[Atom] = field(default_factory=list)
    den_atoms: list[Atom] = field(default_factory=list)
    den: int = 1

    def __mul__(self, other: "ThetaProduct") -> "ThetaProduct":
        return ThetaProduct(self.atoms + other.atoms, self.den_atoms + other.den_atoms, self.den * other.den)

    def evaluate(self, order: int, vs: VarSet = QT, t_exp: int | None = None) -> TruncSeries:
        def atom(x: Atom) -> TruncSeries:
            a, b = x.a.poly(vs, t_exp), x.base.poly(vs, t_exp)
            s = pochhammer_trunc(a, b, None, order) if x.kind == "poch" else theta_trunc(a, b, order)
            return s ** x.power

        num = TruncSeries(vs.one(), order)
        for x in self.atoms:
            num = num * atom(x)
        den = TruncSeries(vs.one(), order)
        for x in self.den_atoms:
            den = den * atom(x)
        out = num / den
        return out.exact_div_int(self.den) if self.den != 1 else out


def _pairs(k: int) -> Iterator[tuple[int, int]]:
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            yield i, j


def _pair_thetas(k: int, p: Mono, shift: int) -> list[Atom]:
    """prod_{i<j} theta(q^{j-i}, q^{i+j+shift}; p)."""
    out = []
    for i, j in _pairs(k):
        out.append(theta(qm(2 * (j - i)), p))
        out.append(theta(qm(2 * (i + j + shift)), p))
    return out


def _qq(power: int) -> Atom:
    return poch(qm(2), qm(2), power)


# ---------------------------------------------------------------------------
# elementary symmetric functions at geometric progressions


def e_direct(values: Sequence[LaurentPoly], r: int) -> LaurentPoly:
    vs = values[0].vs if values else QV
    coeffs = [vs.one()]
    for v in values:
        nxt = coeffs + [vs.zero()]
        for i in range(len(coeffs)):
            nxt[i + 1] = nxt[i + 1] + coeffs[i] * v
        coeffs = nxt
    return coeffs[r] if 0 <= r < len(coeffs) else vs.zero()


def specialize_e(kind: str, n: int, r: int, vs: VarSet = QV) -> LaurentPoly:
    """Closed form for e_{n-r} at q^{n-1/2},..,q^{1/2-n} (half) or q^n,..,q^{-n} (integer)."""
    Q = vs.gen("Q")
    if kind == "half":
        return Q ** (r * r - n * n) * qbinom(2 * n, n - r, Q * Q)
    if kind == "integer":
        return Q ** ((r + 1) * r - (n + 1) * n) * qbinom(2 * n + 1, n - r, Q * Q)
    raise ValueError(f"unknown shift kind {kind!r}")


def specialize_e_direct(kind: str, n: int, r: int, vs: VarSet = QV) -> LaurentPoly:
    Q = vs.gen("Q")
    if kind == "half":
        values = [Q ** (2 * n - 1 - 2 * i) for i in range(2 * n)]
    elif kind == "integer":
        values = [Q ** (2 * n - 2 * i) for i in range(2 * n + 1)]
    else:
        raise ValueError(f"unknown shift kind {kind!r}")
    return e_direct(values, n - r)


# ---------------------------------------------------------------------------
# principal specialisation of Hall-Littlewood polynomials


def t_image(vs: VarSet, t_exp: int | None) -> LaurentPoly:
    """t as an element of vs: T^2, or Q^{2m} when t = q^m."""
    if t_exp is None:
        return vs.gen("T") ** 2
    return vs.gen("Q") ** (2 * t_exp)


def specialize_hl(lam: Sequence[int], D: int, vs: VarSet = QT, t_exp: int | None = None) -> TruncSeries:
    """P_lam(1, q, q^2, ...; t) through q-order D (Q-order 2D).

    Peeling off x_1 = 1 with the branching rule and using homogeneity on the
    remaining q, q^2, ... gives (1 - q^{|lam|}) f(lam) = sum_{mu < lam, mu != lam}
    psi_{lam/mu}(t) q^{|mu|} f(mu).
    """
    return _ps(Partition(lam), vs, t_exp, 2 * D)


@lru_cache(maxsize=None)
def _ps(lam: Partition, vs: VarSet, t_exp: int | None, order: int) -> TruncSeries:
    one = TruncSeries(vs.one(), order)
    if not lam:
        return one
    t = t_image(vs, t_exp)
    Q = vs.gen("Q")
    acc = TruncSeries(vs.zero(), order)
    for mu in horizontal_strips_below(lam):
        if mu == lam or 2 * mu.size > order:
            continue
        w = psi(lam, mu, t) * Q ** (2 * mu.size)
        acc = acc + _ps(mu, vs, t_exp, order) * TruncSeries(w, order)
    geo = vs.zero()
    step = 2 * lam.size
    for j in range(order // step + 1):
        geo = geo + Q ** (step * j)
    return acc * TruncSeries(geo, order)


def specialize_hl_finite(lam: Sequence[int], n: int, vs: VarSet = QT, t_exp: int | None = None) -> LaurentPoly:
    """P_lam(1, q, .., q^{n-1}; t) exactly (same recursion, finite alphabet)."""
    return _psf(Partition(lam), n, vs, t_exp)


@lru_cache(maxsize=None)
def _psf(lam: Partition, n: int, vs: VarSet, t_exp: int | None) -> LaurentPoly:
    if len(lam) > n:
        return vs.zero()
    if not lam:
        return vs.one()
    t = t_image(vs, t_exp)
    Q = vs.gen("Q")
    acc = vs.zero()
    for mu in horizontal_strips_below(lam):
        if len(mu) > n - 1:
            continue
        acc = acc + psi(lam, mu, t) * Q ** (2 * mu.size) * _psf(mu, n - 1, vs, t_exp)
    return acc


def specialize_hl_weyl(lam: Sequence[int], D: int, vs: VarSet = QT, t_exp: int | None = None) -> TruncSeries:
    """Oracle: hall_littlewood(lam, N) at x_i = q^{i-1}, N = D + 1.

    Every monomial involving x_{N+1} or later has q-degree at least N, so the
    finite alphabet already agrees through q-order N - 1.
    """
    lam = Partition(lam)
    order = 2 * D
    N = max(D + 1, len(lam))
    hvs = VarSet(xnames(N) + ("T",))
    P = hall_littlewood(lam, N, hvs)
    images = {f"x{i}": vs.gen("Q") ** (2 * (i - 1)) for i in range(1, N + 1)}
    if "T" not in vs.index:
        images["T"] = vs.gen("Q") ** (t_exp or 0)
    return TruncSeries(P.subs(images, vs), order)


def specialize_hl_at_t_q(lam: Sequence[int], D: int, vs: VarSet = QV) -> TruncSeries:
    """Oracle: P_lam(1,q,..;q) = prod_i q^{C(lam'_i,2)} / (q;q)_{lam'_i - lam'_{i+1}}."""
    order = 2 * D
    conj = list(Partition(lam).conjugate()) + [0]
    Q = vs.gen("Q")
    num = vs.one()
    den = TruncSeries(vs.one(), order)
    for a, b in zip(conj, conj[1:]):
        num = num * Q ** (2 * comb(a, 2))
        den = den * TruncSeries(qpoch(Q * Q, Q * Q, a - b), order)
    return TruncSeries(num, order) / den


def modified_hl_sides(lam: Sequence[int], n: int, D: int) -> tuple[TruncSeries, TruncSeries]:
    """P'_lam(1, q, .., q^{n-1}; q^n) from the power-sum expansion, against P_lam(1, q, ..; q^n).

    Each p_r(X_1(t), .., X_n(t)) becomes sum_{i<n} q^{ir} / (1 - q^{nr}).
    """
    lam = Partition(lam)
    order = 2 * D
    Q = QV.gen("Q")
    N, c = hl_power_sum_expansion(lam, sym_varset(max(lam.size, 1)))
    p_cache: dict[int, TruncSeries] = {}

    def p(r: int) -> TruncSeries:
        if r not in p_cache:
            num = sum((Q ** (2 * i * r) for i in range(n)), QV.zero())
            geo = sum((Q ** (2 * n * r * j) for j in range(order // (2 * n * r) + 1)), QV.zero())
            p_cache[r] = TruncSeries(num * geo, order)
        return p_cache[r]

    total = TruncSeries(QV.zero(), order)
    for mu, cm in c.items():
        term = TruncSeries(cm.subs({"T": Q ** n}, QV), order)
        for r in mu:
            term = term * p(r)
        total = total + term
    if not c:
        total = TruncSeries(QV.const(N), order)
    return total.exact_div_int(N), specialize_hl(lam, D, QV, n)


# ---------------------------------------------------------------------------
# Hall-Littlewood sums over bounded partitions


@dataclass(frozen=True)
class SumRecipe:
    """sum over lam with lam_1 <= max_part of weight(lam) P_lam(1,q,..;t).

    weight = Q^{box*|lam| + odd*l(lam^o)} T^{todd*l(lam^o)} * prod_{i=1}^{max_part-1} mult(m_i)
    """

    domain: str  # "all", "even" or "odd_even_mult"
    box: int
    odd_q: int = 0
    odd_t: int = 0
    mult: str | None = None  # "negT": (-T;T)_m ; "tt2": (t;t^2)_{ceil(m/2)}
    m0: bool = False  # include the i = 0 factor with m_0 = infinity


def bounded_partitions(max_part: int, order: int, box: int) -> Iterator[Partition]:
    """lam_1 <= max_part with sum_i (box + 2(i-1)) lam_i <= order (graded lex order)."""
    out = []

    def rec(prefix: list[int], i: int, cap: int, used: int) -> None:
        out.append(Partition(prefix))
        step = box + 2 * i
        for v in range(1, cap + 1):
            if used + step * v > order:
                break
            prefix.append(v)
            rec(prefix, i + 1, v, used + step * v)
            prefix.pop()

    rec([], 0, max_part, 0)
    out.sort(key=lambda lam: (lam.size, tuple(lam)))
    return iter(out)


def _in_domain(lam: Partition, domain: str) -> bool:
    if domain == "all":
        return True
    if domain == "even":
        return lam.is_even()
    if domain == "odd_even_mult":
        return all(m % 2 == 0 for p, m in lam.multiplicities().items() if p % 2)
    raise ValueError(f"unknown domain {domain!r}")


def recipe_weight(recipe: SumRecipe, lam: Partition, max_part: int, vs: VarSet, t_exp: int | None) -> LaurentPoly:
    Q = vs.gen("Q")
    lo = len(lam.odd_part())
    T = vs.gen("T") if "T" in vs.index else Q ** (t_exp or 0)
    w = Q ** (recipe.box * lam.size + recipe.odd_q * lo) * T ** (recipe.odd_t * lo)
    if recipe.mult:
        t = T * T
        for i in range(1, max_part):
            m = lam.multiplicity(i)
            if recipe.mult == "negT":
                w = w * qpoch(-T, T, m)
            elif recipe.mult == "tt2":
                w = w * qpoch(t, t * t, ceil(m / 2))
            else:
                raise ValueError(f"unknown multiplicity weight {recipe.mult!r}")
    return w


def recipe_m0_factor(recipe: SumRecipe, order: int, vs: VarSet, t_exp: int | None) -> TruncSeries:
    if not recipe.m0:
        return TruncSeries(vs.one(), order)
    T = Mono(1, 0, 1)
    if recipe.mult == "negT":
        return ThetaProduct([poch(-T, T)]).evaluate(order, vs, t_exp)
    return ThetaProduct([poch(T ** 2, T ** 4)]).evaluate(order, vs, t_exp)


def hl_sum(recipe: SumRecipe, max_part: int, order: int, vs: VarSet = QT, t_exp: int | None = None) -> TruncSeries:
    total = TruncSeries(vs.zero(), order)
    for lam in bounded_partitions(max_part, order, recipe.box):
        if not _in_domain(lam, recipe.domain):
            continue
        w = recipe_weight(recipe, lam, max_part, vs, t_exp)
        total = total + TruncSeries(w, order) * _ps(lam, vs, t_exp, order)
    return total * recipe_m0_factor(recipe, order, vs, t_exp)


def theorem_recipe(theorem: str, sigma: int) -> SumRecipe:
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    box = sigma + 1
    table = {
        "T15": SumRecipe("even", box),
        "T16a": SumRecipe("all", box),
        "T16b": SumRecipe("all", box, odd_t=1),
        "T17": SumRecipe("all", box, mult="negT"),
        "T18": SumRecipe("odd_even_mult", box, odd_t=1, mult="tt2"),
        # the extra A_{2k-1}^{(2)} identity has weight q^{|lam|} for both sigma
        "A2km1_tt": SumRecipe("all", 2, mult="tt2"),
    }
    if theorem not in table:
        raise ValueError(f"unknown theorem {theorem!r}")
    return table[theorem]


def rr_sum_side(theorem: str, k: int, sigma: int, D: int, t_exp: int | None = None) -> TruncSeries:
    """Left side of the q,t-Rogers-Ramanujan identity, through q-order D.

    ``t_exp`` None keeps t formal (bivariate); otherwise t = q^{t_exp}.
    """
    if k < 1:
        raise ValueError("k must be positive")
    vs = QT if t_exp is None else QV
    return hl_sum(theorem_recipe(theorem, sigma), 2 * k, 2 * D, vs, t_exp)


def theorem_product(theorem: str, k: int, sigma: int, variant: str = "default") -> ThetaProduct:
    s = sigma
    qq = _qq(k)
    if theorem == "T15":
        p = nome(2 * k + 2)
        atoms = [poch(p, p, k)] + [theta(qm(2 * (2 - s) * i), p) for i in range(1, k + 1)] + _pair_thetas(k, p, 0)
        return ThetaProduct(atoms, [qq])
    if theorem == "T16a":
        p = nome(2 * k + 1)
        if variant == "simplified":
            if s != 1:
                raise ValueError("the simplified form is for sigma = 1")
            return ThetaProduct([poch(p, p, k)] + _pair_thetas(k, p, -1), [qq])
        atoms = [poch(p, p, k)]
        for i in range(1, k + 1):
            atoms.append(theta(qm(2 * i - s - 1, -1), p))
            atoms.append(theta(p * qm(2 * (2 * i - s - 1)), p ** 2))
        return ThetaProduct(atoms + _pair_thetas(k, p, -s - 1), [qq], s + 1)
    if theorem == "T16b":
        p = nome(2 * k + 1)
        atoms = [poch(p, p, k)]
        for i in range(1, k + 1):
            atoms.append(theta(-(half_t(p) * qm(2 * i - s)), p))
            atoms.append(theta(qm(2 * (2 * i - s)), p ** 2))
        return ThetaProduct(atoms + _pair_thetas(k, p, -s), [qq])
    if theorem == "T17":
        p = nome(2 * k)
        ph = half_t(p)
        atoms = [poch(ph, ph), poch(p, p, k - 1)]
        atoms += [theta(qm(2 * i - s - 1, -1), ph) for i in range(1, k + 1)]
        return ThetaProduct(atoms + _pair_thetas(k, p, -s - 1), [qq], s + 1)
    if theorem == "T18":
        p = nome(2 * k)
        # printed: (p;p)^2 (p;p)^{k-1}; the Macdonald identity behind it gives (p^2;p^2)
        lead = [poch(p, p, 2)] if variant == "printed" else [poch(p ** 2, p ** 2)]
        atoms = lead + [poch(p, p, k - 1)]
        atoms += [theta(qm(2 * (2 * i - s)), p ** 2) for i in range(1, k + 1)]
        return ThetaProduct(atoms + _pair_thetas(k, p, -s), [qq])
    if theorem == "A2km1_tt":
        p = nome(2 * k)
        atoms = [poch(p ** 2, p ** 2), poch(p, p, k - 1)]
        atoms += [theta(p * qm(2 * (2 * i - 1)), p ** 2) for i in range(1, k + 1)]
        return ThetaProduct(atoms + _pair_thetas(k, p, -1), [qq])
    raise ValueError(f"unknown theorem {theorem!r}")


def half_t(p: Mono) -> Mono:
    """p^{1/2} for p = t q^K: T Q^K."""
    return half(p)


def rr_product_side(theorem: str, k: int, sigma: int, D: int, t_exp: int | None = None, variant: str = "default") -> TruncSeries:
    if k < 1:
        raise ValueError("k must be positive")
    vs = QT if t_exp is None else QV
    return theorem_product(theorem, k, sigma, variant).evaluate(2 * D, vs, t_exp)


# ---------------------------------------------------------------------------
# classical Rogers-Ramanujan oracle


def partition_count_series(residues: Sequence[int], modulus: int, q_order: int) -> list[int]:
    """Number of partitions of m into parts congruent to a residue mod modulus, m <= q_order."""
    parts = [p for p in range(1, q_order + 1) if p % modulus in residues]
    counts = [1] + [0] * q_order
    for p in parts:
        for m in range(p, q_order + 1):
            counts[m] += counts[m - p]
    return counts


def q_coefficients(s: TruncSeries) -> list[int]:
    """Integer coefficients of q^0..q^{order/2} of a univariate series with even Q-exponents."""
    c = s.int_coefficients()
    if any(c[i] for i in range(1, len(c), 2)):
        raise ValueError("series has half-integer q-powers")
    return c[0::2]


# ---------------------------------------------------------------------------
# Macdonald identities with symbolic x (nome p, graded by P = p^{1/2})

MACDONALD_SYSTEMS = ("C_k1", "A2k2_B", "A2k2_C", "D_kp1_2", "A2km1_2", "D_n1_variant")


def macdonald_varset(k: int) -> VarSet:
    return VarSet(xnames(k) + ("P",))


def _mac_rows(system: str, k: int) -> tuple[Callable[[int, int], list[tuple[int, int, int, int]]], bool]:
    """row(i, y) -> entries as (sign, x-exponent, P-exponent, column); flag: |y| even only."""
    if system == "C_k1":
        K = 2 * k + 2
        return (lambda i, y: [((1, K * y + i - j, K * y * y - 2 * j * y), (-1, K * y + i + j, K * y * y + 2 * j * y)) for j in range(1, k + 1)]), False
    if system == "A2k2_B":
        K = 2 * k + 1
        return (lambda i, y: [((1, K * y + i - j, K * y * y - (2 * j - 1) * y), (-1, K * y + i + j - 1, K * y * y + (2 * j - 1) * y)) for j in range(1, k + 1)]), False
    if system == "A2k2_C":
        K = 2 * k + 1
        return (lambda i, y: [((1, K * y + i - j, K * y * y - 2 * j * y), (-1, K * y + i + j, K * y * y + 2 * j * y)) for j in range(1, k + 1)]), False
    if system == "D_kp1_2":
        K = 2 * k
        return (lambda i, y: [((1, K * y + i - j, K * y * y - (2 * j - 1) * y), (-1, K * y + i + j - 1, K * y * y + (2 * j - 1) * y)) for j in range(1, k + 1)]), False
    if system == "A2km1_2":
        K = 2 * k
        return (lambda i, y: [((1, K * y + i - j, K * y * y - 2 * j * y), (-1, K * y + i + j, K * y * y + 2 * j * y)) for j in range(1, k + 1)]), True
    if system == "D_n1_variant":
        # prod_i x_i^{2(k-1)y_i - i + 1} p^{2(k-1)C(y_i,2)} det((x_i p^{y_i})^{j-1} + (x_i p^{y_i})^{2k-j-1})
        def row(i: int, y: int):
            base_x = 2 * (k - 1) * y - i + 1
            base_p = 2 * (k - 1) * y * (y - 1)
            return [((1, base_x + j - 1, base_p + 2 * y * (j - 1)), (1, base_x + 2 * k - j - 1, base_p + 2 * y * (2 * k - j - 1))) for j in range(1, k + 1)]

        return row, False
    raise ValueError(f"unknown Macdonald system {system!r}")


def macdonald_sum_side(system: str, k: int, p_order: int) -> TruncSeries:
    """The lattice determinant sum through p-order ``p_order`` (P-order 2 p_order)."""
    vs = macdonald_varset(k)
    order = 2 * p_order
    if k == 0:
        return TruncSeries(vs.one(), order)
    if system == "D_n1_variant" and k < 2:
        raise ValueError("the D_n^{(1)} variant needs k >= 2")
    row, even = _mac_rows(system, k)
    P = vs.gen("P")

    def ys_for(i: int) -> list[int]:
        # scan outward until the row's minimal P-exponent exceeds the order on both sides
        good = []
        for sign in (1, -1):
            y = 0 if sign == 1 else -1
            misses = 0
            while misses < 3:
                m = min(min(a[2], b[2]) for a, b in row(i, y))
                if m <= order:
                    good.append(y)
                    misses = 0
                else:
                    misses += 1
                y += sign
        return sorted(good)

    windows = [ys_for(i) for i in range(1, k + 1)]

    def entry(i: int, y: int, j: int) -> LaurentPoly:
        x = vs.gen(f"x{i}")
        out = vs.zero()
        for sgn, ex, pe in row(i, y)[j - 1]:
            out = out + sgn * x ** ex * P ** pe
        return out

    rows_per_parity = []
    for i in range(1, k + 1):
        by_par = {0: [vs.zero()] * k, 1: [vs.zero()] * k}
        for y in windows[i - 1]:
            for j in range(1, k + 1):
                by_par[y % 2][j - 1] = by_par[y % 2][j - 1] + entry(i, y, j)
        rows_per_parity.append(by_par)
    if not even:
        M = [[rp[0][j] + rp[1][j] for j in range(k)] for rp in rows_per_parity]
        total = determinant(M)
    else:
        # even part of the Z/2-graded determinant: (det(E+O) + det(E-O)) / 2
        M1 = [[rp[0][j] + rp[1][j] for j in range(k)] for rp in rows_per_parity]
        M2 = [[rp[0][j] - rp[1][j] for j in range(k)] for rp in rows_per_parity]
        total = (determinant(M1) + determinant(M2)).exact_div_int(2)
    return TruncSeries(total, order)


def macdonald_product_side(system: str, k: int, p_order: int) -> TruncSeries:
    vs = macdonald_varset(k)
    order = 2 * p_order
    one = TruncSeries(vs.one(), order)
    if k == 0:
        return one
    P = vs.gen("P")
    p = P ** 2
    xs = [vs.gen(f"x{i}") for i in range(1, k + 1)]

    def pp(a: LaurentPoly, b: LaurentPoly, power: int = 1) -> TruncSeries:
        return pochhammer_trunc(a, b, None, order) ** power

    def th(a: LaurentPoly, b: LaurentPoly) -> TruncSeries:
        return theta_trunc(a, b, order)

    def pairs(flip: bool = False) -> TruncSeries:
        # theta(x_j/x_i, x_i x_j; p), or theta(x_i/x_j, x_i x_j; p) when flipped
        out = one
        for i, j in _pairs(k):
            xi, xj = xs[i - 1], xs[j - 1]
            ratio = xi * xj ** -1 if flip else xj * xi ** -1
            out = out * th(ratio, p) * th(xi * xj, p)
        return out

    if system == "C_k1":
        out = pp(p, p, k) * pairs()
        for x in xs:
            out = out * th(x * x, p)
        return out
    if system == "A2k2_B":
        out = pp(p, p, k) * pairs()
        for x in xs:
            out = out * th(x, p) * th(p * x * x, p * p)
        return out
    if system == "A2k2_C":
        out = pp(p, p, k) * pairs()
        for x in xs:
            out = out * th(P * x, p) * th(x * x, p * p)
        return out
    if system == "D_kp1_2":
        out = pp(P, P) * pp(p, p, k - 1) * pairs()
        for x in xs:
            out = out * th(x, P)
        return out
    if system == "A2km1_2":
        out = pp(p * p, p * p) * pp(p, p, k - 1) * pairs()
        for x in xs:
            out = out * th(x * x, p * p)
        return out
    if system == "D_n1_variant":
        if k < 2:
            raise ValueError("the D_n^{(1)} variant needs k >= 2")
        return pp(p, p, k) * pairs(flip=True) * 4
    raise ValueError(f"unknown Macdonald system {system!r}")


# ---------------------------------------------------------------------------
# q-binomial identities from Slater's Bailey pairs

SLATER_IDS = ("A12_even", "A12_odd", "F1", "F2", "E1", "E4", "A34", "A5")


def _qb(n: int, r: int, vs: VarSet = QV) -> LaurentPoly:
    Q = vs.gen("Q")
    return qbinom(n, r, Q * Q)


def slater_sides(ident: str, s: int, vs: VarSet = QV) -> tuple[LaurentPoly, LaurentPoly]:
    """(lhs, rhs) as Laurent polynomials in Q.

    A12_even/A12_odd, F1/F2 and A34 take s (parity enforced for the A12 and F
    pairs); E1, E4 and A5 take n.
    """
    Q = vs.gen("Q")
    one = vs.one()
    ys = range(-s - 3, s + 4)
    lhs = vs.zero()
    if ident in ("A12_even", "A12_odd"):
        if s % 2 != (0 if ident == "A12_even" else 1):
            raise ValueError(f"{ident} needs s of the matching parity")
        for y in ys:
            lhs = lhs + (-1) ** (y % 2) * Q ** ((3 * y - 1) * y) * _qb(s, ceil((s - 3 * y) / 2), vs)
        return lhs, one
    if ident in ("F1", "F2"):
        if s % 2 != (0 if ident == "F1" else 1):
            raise ValueError(f"{ident} needs s of the matching parity")
        for y in ys:
            lhs = lhs + Q ** ((2 * y - 1) * y) * _qb(s, ceil((s - 2 * y) / 2), vs)
        return lhs, qpoch(-Q, Q, s)
    if ident == "E1":
        for y in ys:
            lhs = lhs + (-1) ** (y % 2) * Q ** (2 * y * y) * _qb(2 * s, s - y, vs)
        return lhs, qpoch(Q ** 2, Q ** 4, s)
    if ident == "E4":
        for y in ys:
            lhs = lhs + (-1) ** (y % 2) * Q ** (4 * (y * (y - 1) // 2)) * _qb(2 * s, s - y, vs)
        return lhs, Q ** (2 * s) * qpoch(Q ** 2, Q ** 4, s)
    if ident == "A34":
        for y in ys:
            if (y - s) % 2:
                continue
            lhs = lhs + (-1) ** (y % 2) * Q ** ((3 * y - 2) * y) * (_qb(s, (s - 3 * y) // 2, vs) - _qb(s, (s - 3 * y + 2) // 2, vs))
        return lhs, Q ** s
    if ident == "A5":
        for y in ys:
            lhs = lhs + Q ** (2 * (3 * y * y - y)) * (_qb(2 * s, s - 3 * y, vs) - _qb(2 * s, s - 3 * y + 1, vs))
        return lhs, Q ** (2 * s * s)
    if ident == "unit":
        for y in ys:
            lhs = lhs + (-1) ** (y % 2) * Q ** (2 * (y * (y - 1) // 2)) * _qb(2 * s, s - y, vs)
        return lhs, one if s == 0 else vs.zero()
    raise ValueError(f"unknown identity {ident!r}")


def a34_printed_lhs(s: int, vs: VarSet = QV) -> LaurentPoly:
    """The printed A(3)/A(4) display: no sign and q^{(3y-1)y/2}; fails at s = 1."""
    Q = vs.gen("Q")
    lhs = vs.zero()
    for y in range(-s - 3, s + 4):
        if (y - s) % 2 == 0:
            lhs = lhs + Q ** ((3 * y - 1) * y) * (_qb(s, (s - 3 * y) // 2, vs) - _qb(s, (s - 3 * y + 2) // 2, vs))
    return lhs


def a5_printed_rhs(n: int) -> LaurentPoly:
    """The printed right side t^{n^2} for the A(5) identity, with t kept formal."""
    vs = VarSet(("T", "Q"))
    return vs.gen("T") ** (2 * n * n)


# ---------------------------------------------------------------------------
# Bailey pairs


def bailey_beta(alpha: Sequence[TruncSeries], ell: int, n: int, order: int, vs: VarSet = QV) -> TruncSeries:
    """beta_n = (q^{ell+1};q)_{2n}^{-1} sum_{k<=n} alpha_k [2n+ell, n-k]_q."""
    Q = vs.gen("Q")
    acc = TruncSeries(vs.zero(), order)
    for j in range(n + 1):
        acc = acc + alpha[j] * TruncSeries(_qb(2 * n + ell, n - j, vs), order)
    return acc / TruncSeries(qpoch(Q ** (2 * ell + 2), Q * Q, 2 * n), order)


def bailey_pair_mismatch(alpha: Sequence[TruncSeries], beta: Sequence[TruncSeries], ell: int, N: int, order: int, vs: VarSet = QV):
    """None if (alpha, beta) is a Bailey pair relative to q^ell for n <= N, else (n, witness)."""
    Q = vs.gen("Q")
    for n in range(N + 1):
        lhs = beta[n] * TruncSeries(qpoch(Q ** (2 * ell + 2), Q * Q, 2 * n), order)
        rhs = TruncSeries(vs.zero(), order)
        for j in range(n + 1):
            rhs = rhs + alpha[j] * TruncSeries(_qb(2 * n + ell, n - j, vs), order)
        w = lhs.first_mismatch(rhs)
        if w is not None:
            return n, w
    return None


def unit_bailey_pair(N: int, order: int, vs: VarSet = QV) -> tuple[list[TruncSeries], list[TruncSeries]]:
    """alpha_0 = 1, alpha_k = (-1)^k (q^{C(k,2)} + q^{C(k+1,2)}); beta_n = delta_{n,0}."""
    Q = vs.gen("Q")
    alpha = [TruncSeries(vs.one(), order)]
    for j in range(1, N + 1):
        a = (-1) ** j * (Q ** (2 * comb(j, 2)) + Q ** (2 * comb(j + 1, 2)))
        alpha.append(TruncSeries(a, order))
    beta = [TruncSeries(vs.one() if n == 0 else vs.zero(), order) for n in range(N + 1)]
    return alpha, beta


# ---------------------------------------------------------------------------
# finite analogues


FINITE_VARIANTS = ("qt_deformation", "foda_quano", "bressoud")


def finite_rr_sides(sigma: int, n: int, variant: str) -> tuple[LaurentPoly, LaurentPoly]:
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    if variant == "qt_deformation":
        vs = QT
        Q, T = vs.gen("Q"), vs.gen("T")
        lhs = vs.zero()
        for r in range(n + 1):
            lhs = lhs + Q ** (2 * (sigma + 1) * r) * specialize_hl_finite([2] * r, n, vs)
        rhs = vs.zero()
        for i in range(-n - 1, n + 2):
            rhs = rhs + (-1) ** (i % 2) * T ** (i * (i - 1)) * Q ** (2 * i * (2 * i - sigma)) * _qb(2 * n + sigma, n + 2 * i, vs)
        return lhs, rhs
    vs = QV
    Q = vs.gen("Q")
    if variant == "foda_quano":
        lhs = vs.zero()
        for r in range(n + 1):
            lhs = lhs + Q ** (2 * r * (r + sigma)) * qbinom(n, r, Q ** 4)
        rhs = vs.zero()
        for i in range(-n - 1, n + 2):
            rhs = rhs + (-1) ** (i % 2) * Q ** (2 * i * (2 * i - sigma)) * _qb(2 * n + sigma, n + 2 * i, vs)
        return lhs, rhs
    if variant == "bressoud":
        lhs = vs.zero()
        for r in range(n + 1):
            lhs = lhs + Q ** (2 * r * (r + sigma)) * _qb(n, r, vs)
        rhs = vs.zero()
        for i in range(-n - 1, n + 2):
            rhs = rhs + (-1) ** (i % 2) * Q ** (i * (5 * i - 1) - 2 * i * sigma) * _qb(2 * n + sigma, n + 2 * i, vs)
        return lhs, rhs
    raise ValueError(f"unknown variant {variant!r}")


def foda_quano_product(sigma: int, n: int) -> LaurentPoly:
    """(-q^{sigma+1}; q^2)_n, the q-binomial theorem evaluation of the Foda-Quano sum."""
    Q = QV.gen("Q")
    return qpoch(-(Q ** (2 * sigma + 2)), Q ** 4, n)


def two_row_at_t_one(r: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(P_{(2^r)}(1,..,q^{n-1}; 1), q^{r(r-1)} [n r]_{q^2})."""
    Q = QV.gen("Q")
    return specialize_hl_finite([2] * r, n, QV, 0), Q ** (2 * r * (r - 1)) * qbinom(n, r, Q ** 4)


# ---------------------------------------------------------------------------
# the k = l = 1 chain and the Virasoro character


def klone_sum_side(sigma: int, D: int, t_exp: int | None = None) -> TruncSeries:
    """sum_{r,s} q^{(sigma+1)(r+s)} t^{s^2} P_{(2^r,1^{2s})}(1,q,..;t)."""
    order = 2 * D
    vs = QT if t_exp is None else QV
    Q = vs.gen("Q")
    T = vs.gen("T") if t_exp is None else Q ** t_exp
    total = TruncSeries(vs.zero(), order)
    r = 0
    while 2 * (sigma + 1) * r <= order:
        s = 0
        while 2 * (sigma + 1) * (r + s) <= order:
            lam = [2] * r + [1] * (2 * s)
            if Partition(lam).n() * 2 <= order:
                w = Q ** (2 * (sigma + 1) * (r + s)) * T ** (2 * s * s)
                total = total + TruncSeries(w, order) * _ps(Partition(lam), vs, t_exp, order)
            s += 1
        r += 1
    return total


def klone_product_side(sigma: int, D: int, t_exp: int | None = None) -> TruncSeries:
    """(p;p)/(q;q) theta(q^{2-sigma}; p) theta(p q^{4-2sigma}; p^2), p = t^2 q^12."""
    p = nome(12, 2)
    prod = ThetaProduct([poch(p, p), theta(qm(2 * (2 - sigma)), p), theta(p * qm(2 * (4 - 2 * sigma)), p ** 2)], [_qq(1)])
    vs = QT if t_exp is None else QV
    return prod.evaluate(2 * D, vs, t_exp)


def virasoro_sum(sigma: int, D: int) -> TruncSeries:
    """sum_{r,s} q^{(r+s)^2 + 2s^2 + sigma(r+s)} / ((q;q)_r (q;q)_{2s})."""
    order = 2 * D
    vs = QV
    Q = vs.gen("Q")
    total = TruncSeries(vs.zero(), order)
    for r in range(order + 1):
        for s in range(order + 1):
            e = 2 * ((r + s) ** 2 + 2 * s * s + sigma * (r + s))
            if e > order:
                if s == 0:
                    break
                continue
            den = TruncSeries(qpoch(Q * Q, Q * Q, r) * qpoch(Q * Q, Q * Q, 2 * s), order)
            total = total + TruncSeries(Q ** e, order) / den
    return total


def virasoro_product(sigma: int, D: int) -> TruncSeries:
    """(q^14;q^14)/(q;q) theta(q^{2-sigma}; q^14) theta(q^{10+2 sigma}; q^28)."""
    p = qm(28)
    prod = ThetaProduct([poch(p, p), theta(qm(2 * (2 - sigma)), p), theta(qm(2 * (10 + 2 * sigma)), qm(56))], [_qq(1)])
    return prod.evaluate(2 * D, QV)


def klone_finite_sides(sigma: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Finite form: HL side at x_i = q^{i-1} and the two-term q-binomial sum."""
    vs = QT
    Q, T = vs.gen("Q"), vs.gen("T")
    lhs = vs.zero()
    for r in range(n + 1):
        for s in range((n - r) // 2 + 1):
            lam = [2] * r + [1] * (2 * s)
            lhs = lhs + Q ** (2 * (sigma + 1) * (r + s)) * T ** (2 * s * s) * specialize_hl_finite(lam, n, vs)
    rhs = vs.zero()
    for y in range(-n - 1, n + 2):
        w = T ** (2 * (3 * y * y - y))
        a = Q ** (2 * 3 * y * (6 * y - sigma)) * _qb(2 * n + sigma, n - 6 * y + sigma, vs)
        b = Q ** (2 * (3 * y - 1) * (6 * y + sigma - 2)) * _qb(2 * n + sigma, n - 6 * y + 2, vs)
        rhs = rhs + w * (a - b)
    return lhs, rhs


# ---------------------------------------------------------------------------
# character identities at t = q^m


@dataclass(frozen=True)
class Corollary:
    name: str
    theorem: str
    sigma: int
    max_part: Callable[[int], int]
    t_exp: Callable[[int], int]
    nome_exp: Callable[[int, int], int]  # p = q^{nome_exp(k, n)}
    product: Callable[[int, int, Mono, Mono], ThetaProduct]
    min_n: int = 1
    m0: bool = False
    note: str = ""


def _q(e: int, sign: int = 1) -> Mono:
    """sign * q^e."""
    return Mono(sign, 2 * e, 0)


def _qh(e2: int, sign: int = 1) -> Mono:
    """sign * q^{e2/2}."""
    return Mono(sign, e2, 0)


def _den(*atoms: Atom, two: int = 1) -> tuple[list[Atom], int]:
    return list(atoms), two


def _cp(num: list[Atom], den: list[Atom], two: int = 1) -> ThetaProduct:
    return ThetaProduct(num, den, two)


def _thetas(n: int, a: Callable[[int], Mono], base: Mono) -> list[Atom]:
    return [theta(a(i), base) for i in range(1, n + 1)]


q1 = _q(1)


def _c51a(k, n, p, ph):
    return _cp([poch(p, p, n)] + _thetas(n, lambda i: _q(i + k), p) + _pair_thetas(n, p, -1), [_qq(n)])


def _c51b(k, n, p, ph):
    return _cp([poch(p, p, n)] + _thetas(n, lambda i: _q(i), p) + _pair_thetas(n, p, 0), [_qq(n)])


def _c52(k, n, p, ph):
    return _cp([poch(ph, ph), poch(p, p, n - 1)] + _thetas(n, lambda i: _q(i), ph) + _pair_thetas(n, p, 0),
               [poch(q1, _q(2)), _qq(n)])


def _c53(k, n, p, ph):
    return _cp([poch(p, p, n)] + _pair_thetas(n, p, -1), [poch(_q(2), _q(2)), _qq(n - 1)])


def _c54(k, n, p, ph):
    return _cp([poch(_qh(1, -1), q1), poch(p, p, n)] + _thetas(n, lambda i: ph * _qh(2 * i - 1), p) + _pair_thetas(n, p, -1),
               [_qq(n)])


def _c55(k, n, p, ph):
    return _cp([poch(p, p, n)] + _thetas(n, lambda i: _q(i), p) + _pair_thetas(n, p, 0), [poch(q1, _q(2)), _qq(n)])


def _c56(k, n, p, ph):
    return _cp([poch(ph, ph), poch(p, p, n - 1)] + _thetas(n, lambda i: _q(i), ph) + _pair_thetas(n, p, 0),
               [poch(_qh(1), _qh(1)), _qq(n - 1)])


def _c57(k, n, p, ph):
    return _cp([poch(p, p, n)] + _pair_thetas(n, p, -1), [_qq(n)])


def _c58(k, n, p, ph):
    return _cp([poch(p, p, n)] + _thetas(n, lambda i: ph * _q(i - 1), p) + _pair_thetas(n, p, -2), [poch(q1, _q(2)), _qq(n)])


def _c59(k, n, p, ph):
    return _cp([poch(_qh(1, -1), q1), poch(p, p, n)] + _thetas(n, lambda i: _qh(2 * i - 1), p) + _pair_thetas(n, p, -1),
               [_qq(n)])


def _c510(k, n, p, ph):
    return _cp([poch(ph, ph), poch(p, p, n - 1)] + _thetas(n, lambda i: _qh(2 * i - 1), ph) + _pair_thetas(n, p, -1),
               [poch(_qh(1), _qh(1)), _qq(n - 1)])


def _c511(k, n, p, ph):
    return _cp([poch(p, p, n)] + _pair_thetas(n, p, -2), [_qq(n)])


def _c512(sigma):
    def build(k, n, p, ph):
        a = _qh(2 * n - 1, -1)
        return _cp([poch(a, _qh(2 * n - 1)), poch(p, p, n)]
                   + _thetas(n, lambda i: _qh(2 * i + (1 - sigma) * k - 1), p) + _pair_thetas(n, p, sigma - 2),
                   [poch(_qh(1), _qh(1)), _qq(n - 1)])
    return build


def _c513(k, n, p, ph):
    return _cp([poch(_qh(1, -1), q1), poch(ph, ph), poch(p, p, n - 1)]
               + _thetas(n, lambda i: _qh(2 * i - 1), ph) + _pair_thetas(n, p, -1),
               [poch(_q(n), _q(2 * n)), poch(_qh(1), _qh(1)), _qq(n - 1)])


def _c514(k, n, p, ph):
    return _cp([poch(_q(1, -1), q1), poch(_q(n - 1, -1), _q(n - 1)), poch(p, p, n)] + _pair_thetas(n, p, -2), [_qq(n)])


def _c515(k, n, p, ph):
    atoms = [poch(_q(2 * n + 1), _q(4 * n + 2)), poch(p, p, n)]
    for i in range(1, n + 1):
        atoms += [theta(_q(k + i), p), theta(_q(2 * i - 1), p ** 2)]
    return _cp(atoms + _pair_thetas(n, p, -1), [poch(q1, _q(2)), _qq(n)])


def _c516(k, n, p, ph):
    return _cp([poch(_q(2 * n - 1), _q(4 * n - 2)), poch(p, p, n)] + _thetas(n, lambda i: _q(i - 1, -1), p)
               + _pair_thetas(n, p, -2), [poch(_q(2), _q(2)), _qq(n - 1)], 2)


def _c517(k, n, p, ph):
    atoms = [poch(_q(2 * n), _q(4 * n)), poch(-ph, p), poch(p, p, n)]
    for i in range(1, n + 1):
        atoms += [theta(_q(i - 1, -1), p), theta(ph * _q(i - 1), p)]
    return _cp(atoms + _pair_thetas(n, p, -2), [_qq(n)], 2)


def _c518(k, n, p, ph):
    return _cp([poch(_q(2 * n), _q(4 * n)), poch(p ** 2, p ** 2), poch(p, p, n - 1)]
               + _thetas(n, lambda i: _q(2 * i - 1), p ** 2) + _pair_thetas(n, p, -1), [_qq(n)])


def _two_k(k):
    return 2 * k


def _k(k):
    return k


COROLLARIES: dict[str, Corollary] = {c.name: c for c in [
    Corollary("5.1a", "T15", 0, _two_k, lambda n: 2 * n - 1, lambda k, n: 2 * k + 2 * n + 1, _c51a),
    Corollary("5.1b", "T15", 1, _two_k, lambda n: 2 * n - 1, lambda k, n: 2 * k + 2 * n + 1, _c51b),
    Corollary("5.2", "T15", 0, _two_k, lambda n: 2 * n, lambda k, n: 2 * k + 2 * n + 2, _c52),
    Corollary("5.3", "T15", 1, _two_k, lambda n: 2 * n - 2, lambda k, n: 2 * k + 2 * n, _c53),
    Corollary("5.4", "T16a", 0, _k, lambda n: 2 * n - 1, lambda k, n: k + 2 * n, _c54),
    Corollary("5.5", "T16a", 1, _k, lambda n: 2 * n - 1, lambda k, n: k + 2 * n, _c55),
    Corollary("5.6", "T16a", 0, _k, lambda n: 2 * n, lambda k, n: k + 2 * n + 1, _c56),
    Corollary("5.7", "T16a", 1, _k, lambda n: 2 * n - 2, lambda k, n: k + 2 * n - 1, _c57),
    Corollary("5.8", "T16b", 0, _two_k, lambda n: 2 * n - 1, lambda k, n: 2 * k + 2 * n, _c58),
    Corollary("5.9", "T16b", 1, _two_k, lambda n: 2 * n - 1, lambda k, n: 2 * k + 2 * n, _c59),
    Corollary("5.10", "T16b", 0, _two_k, lambda n: 2 * n, lambda k, n: 2 * k + 2 * n + 1, _c510),
    Corollary("5.11", "T16b", 1, _two_k, lambda n: 2 * n - 2, lambda k, n: 2 * k + 2 * n - 1, _c511),
    Corollary("5.12_0", "T17", 0, _k, lambda n: 2 * n - 1, lambda k, n: k + 2 * n - 1, _c512(0), m0=True),
    Corollary("5.12_1", "T17", 1, _k, lambda n: 2 * n - 1, lambda k, n: k + 2 * n - 1, _c512(1), m0=True),
    Corollary("5.13", "T17", 0, _k, lambda n: 2 * n, lambda k, n: k + 2 * n, _c513, m0=True),
    Corollary("5.14", "T17", 1, _k, lambda n: 2 * n - 2, lambda k, n: k + 2 * n - 2, _c514, min_n=2, m0=True,
              note="n = 1 gives t = 1 and the m_0 factor (-1;1)_inf diverges"),
    Corollary("5.15", "T18", 0, _two_k, lambda n: 2 * n + 1, lambda k, n: 2 * k + 2 * n + 1, _c515, min_n=0, m0=True),
    Corollary("5.16", "T18", 1, _two_k, lambda n: 2 * n - 1, lambda k, n: 2 * k + 2 * n - 1, _c516, m0=True),
    Corollary("5.17", "T18", 0, _two_k, lambda n: 2 * n, lambda k, n: 2 * k + 2 * n, _c517, m0=True),
    Corollary("5.18", "T18", 1, _two_k, lambda n: 2 * n, lambda k, n: 2 * k + 2 * n, _c518, m0=True),
]}


def _corollary(name: str) -> Corollary:
    try:
        return COROLLARIES[name]
    except KeyError:
        raise ValueError(f"unknown character identity {name!r}") from None


def _check_kn(c: Corollary, k: int, n: int) -> None:
    if k < 1:
        raise ValueError("k must be positive")
    if n < c.min_n:
        raise ValueError(f"{c.name} needs n >= {c.min_n}" + (f" ({c.note})" if c.note else ""))


def character_sum(name: str, k: int, n: int, D: int) -> TruncSeries:
    """Sum side of a character identity through q-order D."""
    c = _corollary(name)
    _check_kn(c, k, n)
    base = theorem_recipe(c.theorem, c.sigma)
    recipe = SumRecipe(base.domain, base.box, base.odd_q, base.odd_t, base.mult, c.m0)
    return hl_sum(recipe, c.max_part(k), 2 * D, QV, c.t_exp(n))


def character_product(name: str, k: int, n: int, D: int) -> TruncSeries:
    c = _corollary(name)
    _check_kn(c, k, n)
    e = c.nome_exp(k, n)
    p = _q(e)
    ph = _qh(e)
    return c.product(k, n, p, ph).evaluate(2 * D, QV)


# ---------------------------------------------------------------------------
# level-rank theta transformations (both sides pure q)


def _lr(k: int, p: Mono, shift: int, extra: list[Atom], den: list[Atom] | None = None, lead: list[Atom] | None = None) -> ThetaProduct:
    lead = [poch(p, p, k)] if lead is None else lead
    return ThetaProduct(lead + extra + _pair_thetas(k, p, shift), [_qq(k)] if den is None else den)


def _duality_sides(name: str, k: int, n: int) -> tuple[ThetaProduct, ThetaProduct]:
    if name == "theta_duality":
        p = _q(2 * k + 2 * n - 1)
        return _lr(k, p, -1, []), _lr(n, p, -1, [])
    if name in ("cor1_sigma0", "cor1_sigma1"):
        s = int(name[-1])
        p = _q(2 * k + 2 * n + 1)
        lhs = _lr(k, p, 0, [theta(_q((2 - s) * i), p) for i in range(1, k + 1)])
        rhs = _lr(n, p, s - 1, [theta(_q(i + (1 - s) * k), p) for i in range(1, n + 1)])
        return lhs, rhs
    if name == "theta2":
        p = _q(2 * k + 2 * n + 2)
        ph = _qh(2 * k + 2 * n + 2)
        lhs = _lr(k, p, 0, [theta(_q(2 * i), p) for i in range(1, k + 1)])
        rhs = _lr(n, p, 0, [theta(_q(i), ph) for i in range(1, n + 1)],
                  den=[poch(q1, _q(2)), _qq(n)], lead=[poch(ph, p), poch(p, p, n)])
        return lhs, rhs
    if name == "thetaGOW":
        p = _q(2 * k + 2 * n)
        lhs = _lr(k, p, 0, [theta(_q(i), p) for i in range(1, k + 1)])
        rhs = _lr(n, p, -1, [], den=[poch(_q(2), _q(2)), _qq(n - 1)])
        return lhs, rhs
    if name in ("theta_a1", "theta_aph"):
        p = _q(2 * k + 2 * n)
        ph = _qh(2 * k + 2 * n)
        a = Mono() if name == "theta_a1" else ph
        extra = []
        for i in range(1, k + 1):
            extra += [theta(-(ph * _qh(2 * i - 1) / a), p), theta(a ** 2 * _qh(2 * (2 * i - 1)), p ** 2)]
        lhs = _lr(k, p, -1, extra)
        rhs = _lr(n, p, -1, [poch(_qh(1, -1), q1)] + [theta(a * _qh(2 * i - 1), p) for i in range(1, n + 1)])
        return lhs, rhs
    raise ValueError(f"unknown theta transformation {name!r}")


THETA_DUALITIES = ("theta_duality", "cor1_sigma0", "cor1_sigma1", "theta2", "thetaGOW", "theta_a1", "theta_aph")


def theta_duality_sides(name: str, k: int, n: int, D: int) -> tuple[TruncSeries, TruncSeries]:
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    lhs, rhs = _duality_sides(name, k, n)
    return lhs.evaluate(2 * D, QV), rhs.evaluate(2 * D, QV)


def corollary_reduction(name: str, k: int, n: int, D: int) -> tuple[TruncSeries, TruncSeries]:
    """(theorem product at t = q^m times the m_0 factor, corollary product).

    Only defined when the corollary's part bound is even, so that it is a
    theorem instance.
    """
    c = _corollary(name)
    _check_kn(c, k, n)
    mp = c.max_part(k)
    if mp % 2:
        raise ValueError(f"{name} with odd part bound {mp} is not a theorem instance")
    m = c.t_exp(n)
    order = 2 * D
    base = theorem_recipe(c.theorem, c.sigma)
    lhs = theorem_product(c.theorem, mp // 2, c.sigma).evaluate(order, QV, m)
    lhs = lhs * recipe_m0_factor(SumRecipe(base.domain, base.box, base.odd_q, base.odd_t, base.mult, c.m0), order, QV, m)
    return lhs, character_product(name, k, n, D)


# ---------------------------------------------------------------------------
# a floor-indexed multisum (the n = 0 member of the A_{2n}^{(2)} family above)


def floor_multisum(k: int, sigma: int, D: int, variant: str = "default") -> TruncSeries:
    """sum over n_1 >= .. >= n_{2k} >= 0 with n_{2i-1} - n_{2i} even of
    q^{sum n_i^2/2 + (n_1 - n_2 + .. - n_{2k})/2 + sigma sum n_i / 2}
    / (prod_j (q^2;q^2)_{floor((n_j - n_{j+1})/2)} (q;q)_{n_{2k}}).

    ``variant="printed"`` uses sigma sum n_i in the exponent instead; that
    form disagrees with the product at sigma = 1.
    """
    lin = {"default": 1, "printed": 2}[variant]
    order = 2 * D
    vs = QV
    Q = vs.gen("Q")
    m = 2 * k
    total = TruncSeries(vs.zero(), order)

    def rec(prefix: list[int], cap: int) -> None:
        nonlocal total
        if len(prefix) == m:
            ns = prefix
            if any((ns[2 * i] - ns[2 * i + 1]) % 2 for i in range(k)):
                return
            e = sum(x * x for x in ns) + sum((-1) ** j * x for j, x in enumerate(ns)) + lin * sigma * sum(ns)
            if e > order:
                return
            den = qpoch(Q * Q, Q * Q, ns[-1])
            for a, b in zip(ns, ns[1:]):
                den = den * qpoch(Q ** 4, Q ** 4, (a - b) // 2)
            total = total + TruncSeries(Q ** e, order) / TruncSeries(den, order)
            return
        # each n_j contributes at least n_j (n_j - 1) to the Q-exponent
        base = sum(x * (x - 1) for x in prefix)
        for v in range(cap + 1):
            if base + v * (v - 1) > order:
                break
            rec(prefix + [v], v)

    top = 1
    while top * (top - 1) <= order:
        top += 1
    rec([], top)
    return total


def floor_multisum_product(k: int, sigma: int, D: int) -> TruncSeries:
    order = 2 * D
    if sigma == 0:
        return ThetaProduct([], [poch(q1, _q(2))]).evaluate(order, QV)
    a = _q(2 * k + 1)
    return ThetaProduct([poch(-a, a, 2), poch(a, a)], [poch(_q(2), _q(2))]).evaluate(order, QV)
