"""Exact sparse Laurent polynomials and truncated power series over Z.

Every polynomial lives in a :class:`VarSet`, an ordered tuple of generator
names.  Exponent vectors are packed into a single non-negative integer key
(``width`` bits per slot, biased by ``2**(width-1)``), so that

* multiplying monomials is integer addition of keys (minus the bias), and
* comparing keys is lexicographic comparison with the *last* generator most
  significant.

Truncated series grade by the last generator of their VarSet (``Q`` for the
q-series, ``P`` for nome expansions), which makes truncation a single key
comparison.

Half powers are never stored: ``Q`` stands for q^(1/2) and ``T`` for t^(1/2).
"""

from __future__ import annotations

import heapq
import json
import math
import os
import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

if os.environ.get("AFFINEJT_PURE") == "1":
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        from . import _kernel_py as _kernel

KERNEL = "python" if _kernel.__name__.endswith("_kernel_py") else "compiled"


class NotDivisible(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


class VarSetMismatch(ValueError):
    """Raised on arithmetic between polynomials of different VarSets."""


class VarSet:
    """Ordered generator names plus the exponent packing scheme."""

    _cache: dict[tuple[str, ...], "VarSet"] = {}

    def __new__(cls, names: Iterable[str]) -> "VarSet":
        names = tuple(names)
        hit = cls._cache.get(names)
        if hit is not None:
            return hit
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self = super().__new__(cls)
        n = len(names)
        self.names = names
        self.nvars = n
        self.width = max(8, 63 // max(1, n))
        self.half = 1 << (self.width - 1)
        self.mask = (1 << self.width) - 1
        self.index = {name: i for i, name in enumerate(names)}
        self.bias = sum(self.half << (self.width * i) for i in range(n))
        self._units = [1 << (self.width * i) for i in range(n)]
        cls._cache[names] = self
        return self

    def __repr__(self) -> str:
        return f"VarSet({list(self.names)})"

    def __reduce__(self):
        return (VarSet, (self.names,))

    # packing ---------------------------------------------------------------
    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        key = self.bias
        half = self.half
        for e, unit in zip(exps, self._units):
            if not -half <= e < half:
                raise OverflowError(f"exponent {e} exceeds packing width {self.width}")
            key += e * unit
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        w, mask, half = self.width, self.mask, self.half
        out = []
        for _ in range(self.nvars):
            out.append((key & mask) - half)
            key >>= w
        return tuple(out)

    def delta(self, exps: Sequence[int]) -> int:
        """Unbiased key offset of an exponent vector (may be negative)."""
        return sum(e * u for e, u in zip(exps, self._units))

    # constructors ----------------------------------------------------------
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return LaurentPoly(self, {self.bias: 1}, 0)

    def const(self, c: int) -> "LaurentPoly":
        c = int(c)
        return LaurentPoly(self, {self.bias: c} if c else {}, 0)

    def gen(self, name: str) -> "LaurentPoly":
        return LaurentPoly(self, {self.bias + self._units[self.index[name]]: 1}, 1)

    def gens(self, *names: str) -> tuple["LaurentPoly", ...]:
        return tuple(self.gen(n) for n in names)

    def monomial(self, exps: Mapping[str, int] | Sequence[int] = (), coeff: int = 1) -> "LaurentPoly":
        if isinstance(exps, Mapping):
            vec = [0] * self.nvars
            for name, e in exps.items():
                vec[self.index[name]] += e
        else:
            vec = list(exps) if exps else [0] * self.nvars
        if not coeff:
            return self.zero()
        return LaurentPoly(self, {self.pack(vec): int(coeff)}, max(map(abs, vec), default=0))

    def from_terms(self, terms: Iterable[tuple[Sequence[int], int]]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for exps, c in terms:
            k = self.pack(exps)
            out[k] = out.get(k, 0) + int(c)
        return LaurentPoly(self, {k: c for k, c in out.items() if c})

    def extend(self, *names: str) -> "VarSet":
        return VarSet(self.names + tuple(n for n in names if n not in self.index))

    def drop(self, *names: str) -> "VarSet":
        return VarSet(tuple(n for n in self.names if n not in names))


def xnames(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("vs", "_t", "_span")

    def __init__(self, vs: VarSet, terms: dict[int, int], span: int | None = None):
        self.vs = vs
        self._t = terms
        self._span = span

    # basic protocol -----------------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._t == ({self.vs.bias: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vs is other.vs and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.vs.names, frozenset(self._t.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return to_text(self)

    def __reduce__(self):
        return (LaurentPoly, (self.vs, self._t, self._span))

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(exponent tuple, coefficient) pairs in decreasing key order."""
        unpack = self.vs.unpack
        for k in sorted(self._t, reverse=True):
            yield unpack(k), self._t[k]

    def coeff(self, exps: Mapping[str, int] | Sequence[int]) -> int:
        m = self.vs.monomial(exps)
        (k,) = m._t
        return self._t.get(k, 0)

    def span(self) -> int:
        """Largest absolute exponent appearing in any slot."""
        if self._span is None:
            unpack = self.vs.unpack
            self._span = max((max(map(abs, unpack(k)), default=0) for k in self._t), default=0)
        return self._span

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and self.vs.bias in self._t)

    def constant_term(self) -> int:
        return self._t.get(self.vs.bias, 0)

    def _check(self, other: "LaurentPoly") -> None:
        if other.vs is not self.vs:
            raise VarSetMismatch(f"{self.vs} vs {other.vs}")

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return self.vs.const(other)
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return NotImplemented

    # ring operations ----------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if len(self._t) < len(other._t):
            a, b = other, self
        else:
            a, b = self, other
        out = dict(a._t)
        get = out.get
        for k, c in b._t.items():
            v = get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        span = None
        if a._span is not None and b._span is not None:
            span = max(a._span, b._span)
        return LaurentPoly(self.vs, out, span)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vs, {k: -c for k, c in self._t.items()}, self._span)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.vs.zero()
            return LaurentPoly(self.vs, {k: c * other for k, c in self._t.items()}, self._span)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "LaurentPoly", limit: int | None = None) -> "LaurentPoly":
        self._check(other)
        if not self._t or not other._t:
            return self.vs.zero()
        span = _product_span(self, other)
        vs = self.vs
        if len(other._t) == 1 and limit is None:
            ((kb, cb),) = other._t.items()
            off = kb - vs.bias
            return LaurentPoly(vs, {k + off: c * cb for k, c in self._t.items()}, span)
        if len(self._t) == 1 and limit is None:
            return other.mul(self)
        return LaurentPoly(vs, _kernel.mul(self._t, other._t, vs.bias, limit), span)

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            ((k, c),) = self._t.items()
            if c not in (1, -1):
                raise NotDivisible("negative power of a non-unit monomial")
            vs = self.vs
            return LaurentPoly(vs, {vs.bias - (k - vs.bias): c}, self._span) ** (-e)
        result = self.vs.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div_int(self, d: int) -> "LaurentPoly":
        """Divide every coefficient by ``d``; raise if any is not divisible."""
        out = {}
        for k, c in self._t.items():
            q, r = divmod(c, d)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {d}")
            out[k] = q
        return LaurentPoly(self.vs, out, self._span)

    # structure ---------------------------------------------------------------
    def degree(self, name: str) -> tuple[int, int]:
        """(min, max) exponent of ``name``; (0, 0) for the zero polynomial."""
        i = self.vs.index[name]
        es = [e[i] for e, _ in self.terms()]
        return (min(es), max(es)) if es else (0, 0)

    def by_power(self, name: str) -> dict[int, "LaurentPoly"]:
        """Split into ``{e: f_e}`` with ``f = sum f_e * name**e``; f_e free of ``name``."""
        i = self.vs.index[name]
        w, half, mask = self.vs.width, self.vs.half, self.vs.mask
        unit = 1 << (w * i)
        parts: dict[int, dict[int, int]] = {}
        for k, c in self._t.items():
            e = ((k >> (w * i)) & mask) - half
            parts.setdefault(e, {})[k - e * unit] = c
        return {e: LaurentPoly(self.vs, t) for e, t in parts.items()}

    def homogeneous_part(self, names: Sequence[str], degree: int) -> "LaurentPoly":
        idx = [self.vs.index[n] for n in names]
        unpack = self.vs.unpack
        out = {}
        for k, c in self._t.items():
            e = unpack(k)
            if sum(e[i] for i in idx) == degree:
                out[k] = c
        return LaurentPoly(self.vs, out)

    def total_degree(self, names: Sequence[str]) -> tuple[int, int]:
        idx = [self.vs.index[n] for n in names]
        ds = [sum(e[i] for i in idx) for e, _ in self.terms()]
        return (min(ds), max(ds)) if ds else (0, 0)

    def permute(self, perm: Mapping[str, str]) -> "LaurentPoly":
        """Rename generators by the bijection ``perm`` (names not listed stay)."""
        vs = self.vs
        src = [vs.index[perm.get(n, n)] for n in vs.names]
        out = {}
        unpack, units = vs.unpack, vs._units
        for k, c in self._t.items():
            e = unpack(k)
            out[vs.bias + sum(e[i] * units[j] for i, j in enumerate(src))] = c
        return LaurentPoly(vs, out, self._span)

    def subs(self, images: Mapping[str, "LaurentPoly | int"], target: VarSet | None = None) -> "LaurentPoly":
        """Substitute generators by polynomials of ``target`` (default: own VarSet).

        Generators without an image map to the equally named generator of
        ``target``.  Monomial (and zero) images take a fast linear path.
        """
        target = target or self.vs
        vs = self.vs
        imgs: list = []
        fast = True
        for name in vs.names:
            img = images.get(name)
            if img is None:
                if name not in target.index:
                    imgs.append(("const", None))
                else:
                    imgs.append(("mono", 1, target._units[target.index[name]]))
                continue
            if isinstance(img, int):
                img = target.const(img)
            if img.vs is not target:
                raise VarSetMismatch(f"image of {name} is not in {target}")
            if not img._t:
                imgs.append(("zero",))
            elif img.is_monomial():
                ((k, c),) = img._t.items()
                imgs.append(("mono", c, k - target.bias))
            else:
                imgs.append(("poly", img))
                fast = False
        unpack = vs.unpack
        if fast:
            out: dict[int, int] = {}
            for k, c in self._t.items():
                e = unpack(k)
                key = target.bias
                coef = c
                for ei, img in zip(e, imgs):
                    if not ei:
                        continue
                    kind = img[0]
                    if kind == "const":
                        raise ValueError(f"generator with nonzero exponent has no image in {target}")
                    if kind == "zero":
                        if ei < 0:
                            raise ZeroDivisionError("negative power of a generator mapped to 0")
                        coef = 0
                        break
                    _, ic, idelta = img
                    key += ei * idelta
                    if ic != 1:
                        if ei < 0 and ic not in (1, -1):
                            raise NotDivisible("negative power of a non-unit image")
                        coef *= ic ** abs(ei)
                if coef:
                    out[key] = out.get(key, 0) + coef
            result = LaurentPoly(target, {k: c for k, c in out.items() if c})
            _assert_in_range(result)
            return result
        # generic path with cached powers
        powcache: dict[tuple[int, int], LaurentPoly] = {}
        total = target.zero()
        for k, c in self._t.items():
            e = unpack(k)
            term = target.const(c)
            for i, (ei, img) in enumerate(zip(e, imgs)):
                if not ei:
                    continue
                kind = img[0]
                if kind == "const":
                    raise ValueError("generator with nonzero exponent has no image")
                if kind == "zero":
                    if ei < 0:
                        raise ZeroDivisionError("negative power of a generator mapped to 0")
                    term = target.zero()
                    break
                if kind == "mono":
                    _, ic, idelta = img
                    base = LaurentPoly(target, {target.bias + idelta: ic})
                else:
                    base = img[1]
                p = powcache.get((i, ei))
                if p is None:
                    p = powcache[(i, ei)] = base ** ei
                term = term * p
            total = total + term
        return total

    def embed(self, target: VarSet) -> "LaurentPoly":
        """Same polynomial viewed in a VarSet that contains every used generator."""
        return self.subs({}, target)

    def evaluate_int(self, values: Mapping[str, int]) -> "LaurentPoly":
        return self.subs({n: self.vs.const(v) if v else self.vs.zero() for n, v in values.items()})

    def max_key(self) -> int:
        return max(self._t)


def _product_span(a: LaurentPoly, b: LaurentPoly) -> int:
    half = a.vs.half
    sa = a._span if a._span is not None else None
    sb = b._span if b._span is not None else None
    if sa is not None and sb is not None and sa + sb < half:
        return sa + sb
    s = a.span() + b.span()
    if s >= half:
        raise OverflowError(f"product exponents may exceed packing width {a.vs.width}")
    return s


def _assert_in_range(p: LaurentPoly) -> None:
    p._span = None
    if p.span() >= p.vs.half - 1:
        raise OverflowError("exponent out of packing range")


# --------------------------------------------------------------------------
# exact division


class CheckedDivision:
    """Quotient of an exact division together with its certificate."""

    __slots__ = ("quotient", "dividend", "divisor")

    def __init__(self, quotient: LaurentPoly, dividend: LaurentPoly, divisor: LaurentPoly):
        self.quotient = quotient
        self.dividend = dividend
        self.divisor = divisor

    def certify(self) -> bool:
        return self.divisor * self.quotient == self.dividend


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> CheckedDivision:
    """Divide ``f`` by ``g`` in the Laurent ring; raise :class:`NotDivisible` otherwise."""
    f._check(g)
    if not g._t:
        raise ZeroDivisionError("division by the zero polynomial")
    vs = f.vs
    bias = vs.bias
    if not f._t:
        return CheckedDivision(vs.zero(), f, g)
    if len(g._t) == 1:
        ((gk, gc),) = g._t.items()
        out = {}
        for k, c in f._t.items():
            q, r = divmod(c, gc)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {gc}")
            out[k - gk + bias] = q
        result = LaurentPoly(vs, out)
        _assert_in_range(result)
        return CheckedDivision(result, f, g)
    gitems = sorted(g._t.items(), reverse=True)
    lead_k, lead_c = gitems[0]
    rest = gitems[1:]
    qmin = min(f._t) - min(g._t) + bias
    rem = dict(f._t)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, int] = {}
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        k = -pop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        qk = k - lead_k + bias
        qc, r = divmod(c, lead_c)
        if r or qk < qmin:
            raise NotDivisible("nonzero remainder")
        quot[qk] = qc
        for gk, gc in rest:
            kk = qk + gk - bias
            old = rem.get(kk)
            if old is None:
                rem[kk] = -qc * gc
                push(heap, -kk)
            else:
                v = old - qc * gc
                if v:
                    rem[kk] = v
                else:
                    del rem[kk]
    result = LaurentPoly(vs, quot)
    _assert_in_range(result)
    return CheckedDivision(result, f, g)


def divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return exact_divide(f, g).quotient


# --------------------------------------------------------------------------
# determinants

PERMUTATION_LIMIT = 5


def _is_zero(x) -> bool:
    return not x


def det_laplace(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Cofactor expansion along rows with memoised minors."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix has no VarSet; handle dimension 0 at the call site")
    vs = M[0][0].vs
    memo: dict[tuple[int, int], LaurentPoly] = {}
    full = (1 << n) - 1

    def minor(r: int, cols: int) -> LaurentPoly:
        if r == n:
            return vs.one()
        hit = memo.get((r, cols))
        if hit is not None:
            return hit
        acc = vs.zero()
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                entry = M[r][c]
                if entry:
                    sub = minor(r + 1, cols & ~(1 << c))
                    if sub:
                        term = entry * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
        memo[(r, cols)] = acc
        return acc

    return minor(0, full)


def det_bareiss(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Gaussian elimination with exact divisions."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix has no VarSet; handle dimension 0 at the call site")
    vs = M[0][0].vs
    A = [list(row) for row in M]
    sign = 1
    prev = vs.one()
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return vs.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = divide(num, prev) if not prev == 1 else num
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    if any(all(_is_zero(x) for x in row) for row in M):
        return M[0][0].vs.zero()
    if len(M) <= PERMUTATION_LIMIT:
        return det_laplace(M)
    return det_bareiss(M)


# --------------------------------------------------------------------------
# q-binomials and friends


@lru_cache(maxsize=None)
def qbinom_coeffs(n: int, r: int) -> tuple[int, ...]:
    """Dense coefficient list of the Gaussian binomial [n, r]_z."""
    if r < 0 or r > n or n < 0:
        return ()
    if r == 0 or r == n:
        return (1,)
    # [n, r] = [n-1, r-1] + z^r [n-1, r]
    a = qbinom_coeffs(n - 1, r - 1)
    b = qbinom_coeffs(n - 1, r)
    out = [0] * (r * (n - r) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + r] += c
    return tuple(out)


def poly_in(z: LaurentPoly, coeffs: Sequence[int]) -> LaurentPoly:
    """sum_i coeffs[i] * z**i for a monomial ``z``."""
    vs = z.vs
    if not z.is_monomial():
        acc = vs.zero()
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc
    ((k, zc),) = z._t.items()
    step = k - vs.bias
    out = {}
    key = vs.bias
    mult = 1
    for c in coeffs:
        if c:
            out[key] = c * mult
        key += step
        mult *= zc
    result = LaurentPoly(vs, out)
    _assert_in_range(result)
    return result


def qbinom(n: int, r: int, z: LaurentPoly) -> LaurentPoly:
    """Gaussian binomial [n, r] in the monomial ``z`` (e.g. ``T**2`` for t)."""
    return poly_in(z, qbinom_coeffs(n, r))


def qpoch(a: LaurentPoly, base: LaurentPoly, n: int) -> LaurentPoly:
    """Finite product prod_{i<n} (1 - a * base**i)."""
    vs = a.vs
    out = vs.one()
    term = a
    for _ in range(n):
        out = out * (1 - term)
        term = term * base
    return out


def qfactorial(n: int, z: LaurentPoly) -> LaurentPoly:
    """[n]_z! = prod_{j=1}^{n} (1 + z + ... + z^(j-1))."""
    out = z.vs.one()
    for j in range(1, n + 1):
        out = out * poly_in(z, [1] * j)
    return out


# --------------------------------------------------------------------------
# truncated series


class TruncSeries:
    """Power series in the last generator of its VarSet, exact through ``order``."""

    __slots__ = ("poly", "order")

    def __init__(self, poly: LaurentPoly, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        vs = poly.vs
        lo, hi = _grade_bounds(vs, order)
        t = poly._t
        if t and min(t) < lo:
            raise ValueError("series has negative grade")
        if t and max(t) >= hi:
            t = {k: c for k, c in t.items() if k < hi}
            poly = LaurentPoly(vs, t)
        self.poly = poly
        self.order = order

    @property
    def vs(self) -> VarSet:
        return self.poly.vs

    @property
    def grading(self) -> str:
        return self.poly.vs.names[-1]

    def __repr__(self) -> str:
        return f"TruncSeries({self.poly}, order={self.order})"

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self.poly._check(other.poly)
            return other
        if isinstance(other, (int, LaurentPoly)):
            return TruncSeries(self.poly._lift(other), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncSeries(self.poly + other.poly, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.poly, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncSeries(self.poly - other.poly, min(self.order, other.order))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(self.poly * other, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        hi = _grade_bounds(self.vs, order)[1]
        return TruncSeries(self.poly.mul(other.poly, hi), order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncSeries":
        if e < 0:
            return self.inverse() ** (-e)
        out = TruncSeries(self.vs.one(), self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None  # type: ignore[assignment]

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.poly, min(order, self.order))

    def exact_div_int(self, d: int) -> "TruncSeries":
        return TruncSeries(self.poly.exact_div_int(d), self.order)

    def coefficients(self) -> list[LaurentPoly]:
        """Coefficient of each grade 0..order, as polynomials without the grading generator."""
        vs = self.vs
        inner = vs.drop(self.grading)
        parts = self.poly.by_power(self.grading)
        out = []
        for g in range(self.order + 1):
            p = parts.get(g)
            out.append(inner.zero() if p is None else p.subs({}, inner))
        return out

    def int_coefficients(self) -> list[int]:
        """Coefficients as plain integers (grading generator must be the only one)."""
        if self.vs.nvars != 1:
            raise ValueError("int_coefficients needs a univariate series")
        out = [0] * (self.order + 1)
        half = self.vs.half
        for k, c in self.poly._t.items():
            out[k - half] = c
        return out

    def first_mismatch(self, other: "TruncSeries"):
        """``None`` if equal through the common order, else (exponents, lhs, rhs)."""
        order = min(self.order, other.order)
        hi = _grade_bounds(self.vs, order)[1]
        a, b = self.poly._t, other.poly._t
        keys = sorted(k for k in set(a) | set(b) if k < hi and a.get(k, 0) != b.get(k, 0))
        if not keys:
            return None
        k = keys[0]
        return self.vs.unpack(k), a.get(k, 0), b.get(k, 0)

    def inverse(self) -> "TruncSeries":
        vs = self.vs
        lo = _grade_bounds(vs, 0)[1]
        c0 = LaurentPoly(vs, {k: c for k, c in self.poly._t.items() if k < lo})
        if not c0.is_monomial() or next(iter(c0._t.values())) not in (1, -1):
            raise NotDivisible("constant term is not a unit")
        g = TruncSeries(c0 ** -1, self.order)
        prec = 1
        while True:
            g = g * (2 - self * g)
            if prec > self.order:
                break
            prec *= 2
        return g

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def subs(self, images: Mapping[str, LaurentPoly | int], target: VarSet, order: int | None = None) -> "TruncSeries":
        """Substitute generators; the result grades by ``target``'s last generator.

        ``order`` defaults to the current order, which is exact whenever the
        substitution never lowers the grade of a term.
        """
        return TruncSeries(self.poly.subs(images, target), self.order if order is None else order)

    def shift(self, mono: LaurentPoly) -> "TruncSeries":
        return TruncSeries(self.poly * mono, self.order)


def _grade_bounds(vs: VarSet, order: int) -> tuple[int, int]:
    shift = vs.width * (vs.nvars - 1)
    return vs.half << shift, (vs.half + order + 1) << shift


def grade(m: LaurentPoly) -> int:
    """Grade (last-slot exponent) of a monomial."""
    if not m.is_monomial():
        raise ValueError("grade() needs a monomial")
    (k,) = m._t
    return m.vs.unpack(k)[-1]


def series_one(vs: VarSet, order: int) -> TruncSeries:
    return TruncSeries(vs.one(), order)


def pochhammer_trunc(a: LaurentPoly, base: LaurentPoly, count: int | float | None, order: int) -> TruncSeries:
    """(a; base)_count as a truncated series; ``count`` None or inf means infinite."""
    vs = a.vs
    if count is None or count == math.inf:
        gb = grade(base)
        ga = grade(a)
        if gb <= 0 or ga < 0:
            raise ValueError("infinite Pochhammer needs positive base grade and nonnegative a grade")
        count = 0 if ga > order else (order - ga) // gb + 1
    out = TruncSeries(vs.one(), order)
    term = a
    for _ in range(int(count)):
        if grade(term) <= order:
            out = out * TruncSeries(1 - term, order)
        term = term * base
    return out


def theta_trunc(a: LaurentPoly | Sequence[LaurentPoly], nome: LaurentPoly, order: int) -> TruncSeries:
    """theta(a; p) = (a; p)_inf (p/a; p)_inf, or a product over several arguments."""
    if isinstance(a, LaurentPoly):
        args = [a]
    else:
        args = list(a)
    out = TruncSeries(nome.vs.one(), order)
    for x in args:
        out = out * pochhammer_trunc(x, nome, None, order)
        out = out * pochhammer_trunc(nome * x ** -1, nome, None, order)
    return out


# --------------------------------------------------------------------------
# text and JSON forms

_TERM = re.compile(r"^(?P<coef>\d+)?(?:\*?(?P<mons>.*))?$")


def to_text(p: LaurentPoly) -> str:
    """Canonical text form, e.g. ``3*x1^2*x2^-1*T^3*Q^2 - 1``."""
    if not p._t:
        return "0"
    names = p.vs.names
    parts = []
    for exps, c in p.terms():
        mon = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
        mag = abs(c)
        body = mon if mag == 1 and mon else (f"{mag}*{mon}" if mon else str(mag))
        parts.append(("-" if c < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_text(s: str, vs: VarSet) -> LaurentPoly:
    """Inverse of :func:`to_text` (whitespace-insensitive around + and -)."""
    s = s.strip()
    if s == "0":
        return vs.zero()
    tokens = re.split(r"\s+([+-])\s+", s)
    if tokens[0].startswith("-"):
        first_sign, tokens[0] = -1, tokens[0][1:]
    else:
        first_sign = 1
    signs = [first_sign] + [1 if t == "+" else -1 for t in tokens[1::2]]
    bodies = tokens[0::2]
    out: dict[int, int] = {}
    for sign, body in zip(signs, bodies):
        coef = 1
        vec = [0] * vs.nvars
        for factor in body.split("*"):
            if re.fullmatch(r"\d+", factor):
                coef *= int(factor)
                continue
            name, _, e = factor.partition("^")
            if name not in vs.index:
                raise ValueError(f"unknown generator {name!r}")
            vec[vs.index[name]] += int(e) if e else 1
        k = vs.pack(vec)
        out[k] = out.get(k, 0) + sign * coef
    return LaurentPoly(vs, {k: c for k, c in out.items() if c})


def to_json(p: LaurentPoly) -> dict:
    return {
        "vars": list(p.vs.names),
        "terms": [{"exponents": list(e), "coeff": str(c)} for e, c in p.terms()],
    }


def from_json(obj: dict | str) -> LaurentPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    vs = VarSet(obj["vars"])
    return vs.from_terms((t["exponents"], int(t["coeff"])) for t in obj["terms"])


def series_text(s: TruncSeries, var: str = "q") -> str:
    """``c0 + c1*q^(1/2) + ...`` with the grading generator read as var^(1/2)."""
    parts = []
    for g, c in enumerate(s.coefficients()):
        if not c:
            continue
        if g == 0:
            mon = ""
        elif g == 2:
            mon = var
        elif g % 2 == 0:
            mon = f"{var}^{g // 2}"
        else:
            mon = f"{var}^({g}/2)"
        cs = str(c)
        if not mon:
            parts.append(cs)
        elif cs == "1":
            parts.append(mon)
        elif cs == "-1":
            parts.append(f"-{mon}")
        elif c.is_monomial():
            parts.append(f"{cs}*{mon}")
        else:
            parts.append(f"({cs})*{mon}")
    parts.append(f"O({var}^({s.order + 1}/2))")
    return " + ".join(parts).replace("+ -", "- ")
