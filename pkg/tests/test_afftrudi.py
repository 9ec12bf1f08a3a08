import pytest
from hypothesis import given, strategies as st

from affinejt import afftrudi as AT
from affinejt.bcsym import BC_FAMILIES, bc_varset, hl_bc
from affinejt.exactalg import VarSet, xnames
from affinejt.partitions import Partition, enumerate_partitions, in_cylindric_range
from affinejt.symfun import elementary, expand_in_hl, hall_littlewood, monomial_symmetric, schur, sym_varset, tpow


def _t0(f, n):
    return f.subs({"T": 0}, VarSet(xnames(n)))


def test_gl_examples():
    for r in range(4):
        assert AT.affine_jt_gl(1, r, 3) == elementary(r, 3)
    vs = sym_varset(2)
    x1, x2 = vs.gen("x1"), vs.gen("x2")
    t = tpow(vs)
    got = AT.affine_jt_gl(2, 1, 2, vs)
    assert got == x1 ** 2 + x2 ** 2 + (1 - t) * x1 * x2
    e1, e2 = elementary(1, 2, vs), elementary(2, 2, vs)
    assert got == e1 ** 2 - (1 + t) * e2
    assert _t0(AT.affine_jt_gl(2, 2, 3), 3) == _t0(schur((2, 2), 3), 3)


def test_gl_rejects_k0():
    with pytest.raises(ValueError):
        AT.affine_jt_gl(0, 1, 2)


@given(st.integers(1, 3), st.integers(0, 3), st.integers(1, 4))
def test_gl_theorem(k, r, n):
    assert AT.affine_jt_gl(k, r, n) == hall_littlewood([k] * r, n)


@given(st.integers(1, 3), st.integers(0, 3), st.integers(1, 3))
def test_lattice_routes_agree(k, r, n):
    assert AT.affine_jt_gl(k, r, n, method="collapse") == AT.affine_jt_gl(k, r, n, method="enumerate")


def test_window_check_catches_narrow_window():
    s = AT.affine_jt_gl_sum(2, 2, 3)
    s.windows = [(0, 0), (0, 0)]
    with pytest.raises(AT.WindowError):
        s.check_windows()


def test_window_needs_positive_step():
    with pytest.raises(ValueError):
        AT.e_window([1, 2], 0, 3)


def test_bc_examples():
    vs = bc_varset(1)
    x = vs.gen("x1")
    assert AT.affine_jt_bc("B0", 1, 1, vs) == 1 + x + x ** -1
    assert AT.affine_jt_bc("C0", 0, 2) == bc_varset(2).one()
    vs2 = bc_varset(2)
    expect = hl_bc((1, 1), 2, -vs2.gen("T"), 0, vs2)
    assert AT.affine_jt_bc("BC", 1, 2, vs2) == expect
    assert AT.affine_jt_bc_target("BC", 1, 2, vs2) == expect


@pytest.mark.parametrize("family", BC_FAMILIES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_bc_families_at_k1(family, n):
    assert AT.affine_jt_bc(family, 1, n) == AT.affine_jt_bc_target(family, 1, n)


@pytest.mark.parametrize("family", BC_FAMILIES)
def test_bc_routes_agree(family):
    assert AT.affine_jt_bc(family, 2, 2, method="collapse") == AT.affine_jt_bc(family, 2, 2, method="enumerate")


@pytest.mark.parametrize("family", ["B0", "BC"])
@pytest.mark.parametrize("k,n", [(1, 2), (2, 2), (2, 3)])
def test_bc_at_t_one(family, k, n):
    assert AT.at_t_one(AT.affine_jt_bc(family, k, n)) == AT.affine_jt_bc_t1_target(family, k, n)


def test_cylindric_examples():
    assert AT.cylindric_schur_det((2, 1), 3, 2, 2) == schur((2, 1), 3)
    vs = sym_varset(3)
    xs = [vs.gen(f"x{i}") for i in (1, 2, 3)]
    assert AT.cylindric_schur_det((2,), 3, 2, 0, vs) == sum(x ** 2 for x in xs[1:]) + xs[0] ** 2
    assert AT.cylindric_schur_det((2, 2, 1), 3, 2, 1) == AT.cssyt_weight_sum((2, 2, 1), 3, 2, 1)


def test_cylindric_shape_violation():
    with pytest.raises(ValueError):
        AT.cylindric_schur_det((3,), 2, 2, 1)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(1, 4))
@pytest.mark.parametrize("ell", range(0, 3))
def test_cylindric_det_equals_tableau_sum(n, k, ell):
    for lam in enumerate_partitions(max_part=k, max_length=n):
        if in_cylindric_range(lam, n, k, ell):
            assert AT.cylindric_schur_det(lam, n, k, ell) == AT.cssyt_weight_sum(lam, n, k, ell)


@pytest.mark.parametrize("k", range(1, 4))
@pytest.mark.parametrize("n", range(1, 5))
def test_cyclic_level_zero(k, n):
    vs = VarSet(xnames(n) + ("T",))
    for r in range(0, n + 1):
        ek = elementary(r, n, vs).subs({f"x{i}": vs.gen(f"x{i}") ** k for i in range(1, n + 1)}, vs)
        assert AT.cssyt_weight_sum([k] * r, n, k, 0, vs) == ek


def test_s_klt_examples():
    assert AT.s_klt(2, 2, 0, 3) == hall_littlewood((2, 2), 3)
    assert AT.s_klt(2, 1, 2, 3) == schur((2,), 3)
    xv = VarSet(xnames(3))
    at1 = AT.s_klt(2, 2, 1, 3).subs({"T": 1}, xv)
    expect = sum((monomial_symmetric(mu, 3, xv) for mu in enumerate_partitions(size=4, max_part=2)), xv.zero())
    assert at1 == expect


def test_kostka_examples():
    vs = VarSet(("T",))
    t = tpow(vs)
    for k, r in [(2, 2), (3, 1), (2, 3)]:
        got = AT.level_restricted_kostka(AT.KostkaParams(k, 1, r, Partition([k] * r)), vs)
        assert got == t ** (k * r * (r - 1) // 2)
    assert AT.level_restricted_kostka(AT.KostkaParams(2, 1, 0, Partition()), vs) == vs.one()
    with pytest.raises(ValueError):
        AT.level_restricted_kostka(AT.KostkaParams(2, 1, 2, Partition((3,))), vs)


@pytest.mark.parametrize("k,r,ell", [(2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 2), (2, 1, 2)])
def test_kostka_expansion(k, r, ell):
    n = k * r
    vs = sym_varset(n)
    exp = expand_in_hl(AT.s_klt(k, r, ell, n, vs), k * r, n)
    assert exp == AT.kostka_expansion_prediction(k, r, ell, vs)


def test_cartan_inverse():
    from fractions import Fraction

    for rank in range(1, 5):
        C, Ci = AT.cartan_A(rank), AT.cartan_A_inverse(rank)
        prod = [[sum(Fraction(C[i][m]) * Ci[m][j] for m in range(rank)) for j in range(rank)] for i in range(rank)]
        assert prod == [[int(i == j) for j in range(rank)] for i in range(rank)]


@pytest.mark.parametrize("k", range(1, 4))
def test_ak_summation(k):
    for n in range(1, 6):
        for r in range(0, n + 1):
            lhs, rhs = AT.ak_summation_sides(k, n, r)
            assert lhs == rhs


@pytest.mark.parametrize("kind", ["plus_form", "minus_form"])
def test_det_transform_k1(kind):
    for n in (1, 2):
        for K in (2, 3, 5):
            a, b = AT.det_transform_sides(kind, 1, n, K)
            assert a == b


def test_ss_delta_examples():
    vs = VarSet(("T",))
    t = tpow(vs)
    from affinejt.exactalg import qbinom

    unit = sum(((-1) ** (y % 2) * t ** (y * (y - 1) // 2) * qbinom(2, 1 - y, t) for y in range(-2, 3)), vs.zero())
    assert unit == vs.zero()
    assert AT.ss_delta_sum(2, (1, 1), 1) == 0
    assert AT.ss_delta_sum(3, (), 0) == 1
    assert AT.ss_delta_sum(3, (2, 2, 1, 1), 2) == 0


def test_cylindric_f_small_cases():
    sides = AT.cylindric_f_sides("signed_Fbar", 1, 1)
    x = sides[0].vs.gen("x1")
    assert all(s == 1 + x + x ** 2 for s in sides)
    sides = AT.cylindric_f_sides("unsigned_F", 1, 2)
    assert len(set(map(str, sides))) == 1
    for kind in ("signed_Fbar", "unsigned_F"):
        assert all(s == 1 for s in AT.cylindric_f_sides(kind, 1, 0))
