import itertools

import pytest
from hypothesis import given, strategies as st

from affinejt.partitions import (
    Partition,
    UnboundedDomain,
    enumerate_cssyt,
    enumerate_partitions,
    enumerate_ssyt,
    horizontal_strips_below,
    in_cylindric_range,
    is_semistandard,
    parse,
    partitions_in_box,
    serialize,
)
from conftest import partitions


def test_conjugate_examples():
    assert Partition((4, 3, 3, 3, 1, 1)).conjugate() == (6, 4, 4, 1)
    assert Partition().conjugate() == ()
    assert Partition((2, 2)).conjugate() == (2, 2)


@given(partitions(max_size=14))
def test_conjugate_is_involution(lam):
    lam = Partition(lam)
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_partition_rejects_increasing():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_serialization():
    assert serialize(Partition((2, 2, 1))) == "2,2,1"
    assert serialize(Partition()) == "-"
    assert parse("-") == ()
    assert parse("3,1") == (3, 1)


@given(partitions(max_size=12))
def test_serialize_round_trip(lam):
    assert parse(serialize(lam)) == lam


def test_enumerate_examples():
    assert list(enumerate_partitions(max_part=2, size=2)) == [(2,), (1, 1)]
    assert list(enumerate_partitions(max_part=2, size=4, even_only=True)) == [(2, 2)]
    assert list(enumerate_partitions(max_part=4, size=4, odd_parts_even_mult=True)) == [
        (4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)
    ]


def test_enumerate_unbounded():
    with pytest.raises(UnboundedDomain):
        list(enumerate_partitions(max_part=3))


def _brute(m):
    # compositions of m sorted and deduplicated
    out = set()
    for cuts in itertools.product((0, 1), repeat=max(m - 1, 0)):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        if m:
            parts.append(cur)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


@pytest.mark.parametrize("m", range(13))
def test_enumeration_is_exhaustive_and_duplicate_free(m):
    got = list(enumerate_partitions(size=m))
    assert len(got) == len(set(got))
    assert set(got) == _brute(m)


@given(
    st.integers(0, 12),
    st.integers(1, 6),
    st.booleans(),
    st.booleans(),
    st.none() | st.integers(1, 5),
)
def test_enumeration_filters_sound_and_complete(m, max_part, even_only, odd_even, bound):
    def ok(lam):
        mult = Partition(lam).multiplicities()
        return (
            all(p <= max_part for p in lam)
            and (not even_only or all(p % 2 == 0 for p in lam))
            and (not odd_even or all(c % 2 == 0 for p, c in mult.items() if p % 2))
            and (bound is None or all(c % 2 == 0 for p, c in mult.items() if p < bound))
        )

    got = list(enumerate_partitions(
        size=m, max_part=max_part, even_only=even_only,
        odd_parts_even_mult=odd_even, parts_lt_bound_even_mult=bound,
    ))
    assert got == [lam for lam in enumerate_partitions(size=m) if ok(lam)]


def test_enumeration_order_is_graded():
    sizes = [lam.size for lam in enumerate_partitions(max_size=7)]
    assert sizes == sorted(sizes)


def test_box_and_strips():
    assert len(list(partitions_in_box(2, 2))) == 6
    assert set(horizontal_strips_below(Partition((2, 1)))) == {(2, 1), (2,), (1, 1), (1,)}


@given(partitions(max_size=9))
def test_horizontal_strips_interlace(lam):
    lam = Partition(lam)
    for mu in horizontal_strips_below(lam):
        assert lam.interlaces(mu)


def test_ssyt_examples():
    assert len(list(enumerate_ssyt((1,), n=3))) == 3
    weights = sorted(t.weight(2) for t in enumerate_ssyt((2, 1), n=2))
    assert weights == [(1, 2), (2, 1)]
    assert list(enumerate_ssyt((1, 1, 1), n=2)) == []


def test_ssyt_containment_violation():
    with pytest.raises(ValueError):
        list(enumerate_ssyt((1,), inner=(2,), n=2))


@given(partitions(max_size=5, max_length=3), st.integers(1, 3))
def test_ssyt_fillings_are_semistandard(lam, n):
    tabs = list(enumerate_ssyt(lam, n=n))
    assert len(tabs) == len({t.rows for t in tabs})
    for t in tabs:
        assert is_semistandard(lam, (), t.rows)
        assert all(1 <= v <= n for row in t.rows for v in row)


def test_cssyt_examples():
    tabs = list(enumerate_cssyt((2,), 3, 2, 0))
    assert sorted(t.weight() for t in tabs) == [(0, 0, 2), (0, 2, 0), (2, 0, 0)]
    tabs = list(enumerate_cssyt((2, 1), 2, 2, 1))
    assert sorted(t.weight() for t in tabs) == [(1, 2), (2, 1)]
    assert len(list(enumerate_cssyt((1,), 1, 1, 1))) == 1


def test_cssyt_shape_violation():
    assert not in_cylindric_range((3,), 2, 2, 1)
    with pytest.raises(ValueError):
        list(enumerate_cssyt((3,), 2, 2, 1))


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (1, 1), (3,)])
def test_cssyt_large_level_is_plain_ssyt(lam):
    n, k = 3, 3
    ell = len(lam)
    plain = sorted(t.rows for t in enumerate_ssyt(lam, n=n))
    cyl = sorted(t.base.rows for t in enumerate_cssyt(lam, n, k, ell))
    assert cyl == plain
