"""Partitions, compositions and (cylindric) semistandard tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``Partition()`` is empty."""

    def __new__(cls, parts: Sequence[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must weakly decrease: {parts}")
        if any(p < 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return serialize(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based index, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def multiplicity(self, i: int) -> int:
        return sum(1 for p in self if p == i)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def odd_part(self) -> "Partition":
        """lambda^o, the subpartition of odd parts."""
        return Partition(p for p in self if p % 2)

    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self)

    def contains(self, mu: Sequence[int]) -> bool:
        """mu is contained in self."""
        mu = Partition(mu)
        return len(mu) <= len(self) and all(m <= l for m, l in zip(mu, self))

    def interlaces(self, mu: Sequence[int]) -> bool:
        """mu < self in the interlacing sense (self/mu is a horizontal strip)."""
        mu = Partition(mu)
        if len(mu) > len(self) or len(self) > len(mu) + 1:
            return False
        return all(self.part(i) >= mu.part(i) >= self.part(i + 1) for i in range(1, len(self) + 1))

    def n(self) -> int:
        """sum (i-1) lambda_i."""
        return sum(i * p for i, p in enumerate(self))


class Composition(tuple):
    """Tuple of nonnegative integers; order matters."""

    def __new__(cls, parts: Sequence[int] = ()) -> "Composition":
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition entries must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)


def serialize(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam) if len(lam) else "-"


def parse(s: str) -> Partition:
    s = s.strip()
    if s in ("-", ""):
        return Partition()
    return Partition(int(p) for p in s.split(","))


def rectangle(k: int, r: int) -> Partition:
    return Partition([k] * r)


# ---------------------------------------------------------------------------
# enumeration


class UnboundedDomain(ValueError):
    """The requested filter describes infinitely many partitions."""


def _partitions_of(m: int, max_part: int, max_length: int | None) -> Iterator[tuple[int, ...]]:
    """Partitions of m with parts <= max_part, reverse-lexicographic."""
    if m == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(m, max_part), 0, -1):
        if max_length is not None and first * max_length < m:
            break
        rest_len = None if max_length is None else max_length - 1
        for rest in _partitions_of(m - first, first, rest_len):
            yield (first,) + rest


def enumerate_partitions(
    *,
    size: int | None = None,
    max_size: int | None = None,
    max_part: int | None = None,
    max_length: int | None = None,
    even_only: bool = False,
    odd_parts_even_mult: bool = False,
    parts_lt_bound_even_mult: int | None = None,
) -> Iterator[Partition]:
    """Stream partitions by increasing size, reverse-lexicographic within a size.

    ``parts_lt_bound_even_mult=B`` keeps partitions whose parts strictly below
    ``B`` all occur with even multiplicity.
    """
    if size is not None:
        sizes: Sequence[int] | range = [size]
    elif max_size is not None:
        sizes = range(max_size + 1)
    elif max_part is not None and max_length is not None:
        sizes = range(max_part * max_length + 1)
    else:
        raise UnboundedDomain("need size, max_size, or both max_part and max_length")
    for m in sizes:
        cap = m if max_part is None else max_part
        for parts in _partitions_of(m, cap, max_length):
            if even_only and any(p % 2 for p in parts):
                continue
            if odd_parts_even_mult or parts_lt_bound_even_mult is not None:
                mult: dict[int, int] = {}
                for p in parts:
                    mult[p] = mult.get(p, 0) + 1
                if odd_parts_even_mult and any(p % 2 and c % 2 for p, c in mult.items()):
                    continue
                if parts_lt_bound_even_mult is not None and any(
                    p < parts_lt_bound_even_mult and c % 2 for p, c in mult.items()
                ):
                    continue
            yield Partition(parts)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions contained in (cols^rows)."""
    return enumerate_partitions(max_part=cols, max_length=rows)


def horizontal_strips_below(lam: Partition) -> Iterator[Partition]:
    """All mu with mu < lam (lam/mu a horizontal strip)."""
    lam = Partition(lam)
    if not lam:
        yield lam
        return
    L = len(lam)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == L:
            yield ()
            return
        lo = lam[i + 1] if i + 1 < L else 0
        for v in range(lam[i], lo - 1, -1):
            for rest in rec(i + 1):
                yield (v,) + rest

    for parts in rec(0):
        yield Partition(parts)


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def weight(self, n: int) -> tuple[int, ...]:
        w = [0] * n
        for row in self.rows:
            for v in row:
                w[v - 1] += 1
        return tuple(w)

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, column j (0-based, absolute column)."""
        return self.rows[i][j - self.inner.part(i + 1)]


@dataclass(frozen=True)
class CylindricTableau:
    base: Tableau
    n: int
    k: int
    ell: int

    def weight(self) -> tuple[int, ...]:
        return self.base.weight(self.n)


def is_semistandard(shape: Sequence[int], inner: Sequence[int], rows: Sequence[Sequence[int]]) -> bool:
    shape, inner = Partition(shape), Partition(inner)
    cells = {}
    for i, row in enumerate(rows):
        off = inner.part(i + 1)
        if len(row) != shape.part(i + 1) - off:
            return False
        for j, v in enumerate(row):
            cells[(i, off + j)] = v
    for (i, j), v in cells.items():
        left = cells.get((i, j - 1))
        if left is not None and left > v:
            return False
        up = cells.get((i - 1, j))
        if up is not None and up >= v:
            return False
    return True


def enumerate_ssyt(shape: Sequence[int], inner: Sequence[int] = (), n: int = 0) -> Iterator[Tableau]:
    """All semistandard fillings of shape/inner with entries 1..n, row by row."""
    shape, inner = Partition(shape), Partition(inner)
    if not shape.contains(inner):
        raise ValueError(f"{inner} is not contained in {shape}")
    nrows = len(shape)
    cells = [(i, j) for i in range(nrows) for j in range(inner.part(i + 1), shape[i])]
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            rows = tuple(
                tuple(grid[(i, j)] for j in range(inner.part(i + 1), shape[i])) for i in range(nrows)
            )
            yield Tableau(shape, inner, rows)
            return
        i, j = cells[idx]
        lo = 1
        left = grid.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        up = grid.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        # leave room for the cells below in this column
        below = sum(1 for r in range(i + 1, nrows) if inner.part(r + 1) <= j < shape[r])
        for v in range(lo, n - below + 1):
            grid[(i, j)] = v
            yield from rec(idx + 1)
        grid.pop((i, j), None)

    yield from rec(0)


def in_cylindric_range(lam: Sequence[int], n: int, k: int, ell: int) -> bool:
    """lam in Par_{n,k}^ell: inside (k^n) with lam'_1 - lam'_k <= ell."""
    lam = Partition(lam)
    if len(lam) > n or (lam and lam[0] > k):
        return False
    if k == 0:
        return not lam
    conj = lam.conjugate()
    return conj.part(1) - conj.part(k) <= ell


def doubled_tableau(t: Tableau, k: int, ell: int) -> tuple[Partition, Partition, list[list[int]]]:
    """T together with its copy shifted k right and ell up, as a skew tableau nu/(k^ell)."""
    lam = t.shape
    n_rows = len(lam) + ell
    nu = []
    rows = []
    for r in range(1, n_rows + 1):
        lower = list(t.rows[r - ell - 1]) if r > ell else []
        upper = list(t.rows[r - 1]) if r <= len(lam) else []
        if r <= ell:
            nu.append(k + len(upper))
        else:
            nu.append(len(lower) + len(upper))
        rows.append(lower + upper)
    return Partition(nu), Partition([k] * ell), rows


def is_cylindric(t: Tableau, k: int, ell: int) -> bool:
    lam = t.shape
    nu, inner, rows = doubled_tableau(t, k, ell)
    # the copy must sit flush against the original: lower row full whenever the upper row is used
    for r in range(ell + 1, len(rows) + 1):
        if r <= len(lam) and lam.part(r - ell) != k:
            return False
    while rows and not rows[-1]:
        rows.pop()
    try:
        return is_semistandard(nu, inner, rows)
    except ValueError:
        return False


def enumerate_cssyt(lam: Sequence[int], n: int, k: int, ell: int) -> Iterator[CylindricTableau]:
    lam = Partition(lam)
    if not in_cylindric_range(lam, n, k, ell):
        raise ValueError(f"{lam} is not in Par_{{{n},{k}}}^{ell}")
    for t in enumerate_ssyt(lam, (), n):
        if is_cylindric(t, k, ell):
            yield CylindricTableau(t, n, k, ell)
