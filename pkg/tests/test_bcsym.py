import pytest

from affinejt.bcsym import (
    BC_FAMILIES,
    CHARACTER_FAMILIES,
    bc_varset,
    bounded_littlewood_lhs,
    bounded_littlewood_rhs,
    classical_character,
    classical_dual_jt,
    ddot_e,
    dot_e,
    ep_lemma_sides,
    family_target,
    hl_b,
    hl_bc,
    hl_bc_rect_t1,
    hl_c,
    is_bc_symmetric,
)
from affinejt.exactalg import VarSet, xnames
from affinejt.partitions import partitions_in_box
from affinejt.symfun import hall_littlewood

X1 = VarSet(("x1",))


def _at_t(f, t, n):
    return f.subs({"T": t}, VarSet(xnames(n)))


def test_character_examples():
    vs = bc_varset(1)
    x = vs.gen("x1")
    assert classical_character("sp", (1,), 1, vs) == x + x ** -1
    assert classical_character("so_odd", (1,), 1, vs) == x + 1 + x ** -1
    for n in range(0, 4):
        assert classical_character("sp", (), n) == bc_varset(n).one()


def test_character_length_error():
    with pytest.raises(ValueError):
        classical_character("sp", (1, 1), 1)


@pytest.mark.parametrize("family", CHARACTER_FAMILIES)
@pytest.mark.parametrize("n", range(1, 4))
def test_characters_bc_symmetric(family, n):
    for lam in partitions_in_box(n, 2):
        assert is_bc_symmetric(classical_character(family, lam, n), n)


@pytest.mark.parametrize("family", CHARACTER_FAMILIES)
@pytest.mark.parametrize("n", range(1, 4))
def test_dual_jacobi_trudi(family, n):
    for lam in partitions_in_box(n, 3):
        assert classical_dual_jt(family, lam, n, k=3) == classical_character(family, lam, n)


def test_hl_bc_examples():
    vs = bc_varset(1)
    x = vs.gen("x1")
    assert hl_b((1,), 1, 0, vs) == x ** -1 + 1 + x
    for n in range(0, 3):
        vsn = bc_varset(n, "S1", "S2", "T")
        assert hl_bc((), n, vsn.gen("S1"), vsn.gen("S2"), vsn) == vsn.one()
    assert _at_t(hl_c((1,), 1, 0, vs), 1, 1) == X1.gen("x1") + X1.gen("x1") ** -1


def test_rect_t1_examples():
    vs = bc_varset(1)
    x = vs.gen("x1")
    assert hl_bc_rect_t1(1, 1, 0, 0, vs) == x + x ** -1
    for n in range(0, 3):
        assert hl_bc_rect_t1(0, n, 0, 0) == bc_varset(n).one()


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", [1, 2])
def test_rect_t1_matches_weyl_sum(k, n):
    vs = bc_varset(n, "S1", "S2", "T")
    s1, s2 = vs.gen("S1"), vs.gen("S2")
    target = VarSet(xnames(n) + ("S1", "S2"))
    full = hl_bc([k] * n, n, s1, s2, vs).subs({"T": 1}, target)
    assert full == hl_bc_rect_t1(k, n, s1, s2, vs).subs({}, target)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_top_degree_is_gl_hall_littlewood(n):
    vs = bc_varset(n, "S1", "S2", "T")
    s1, s2 = vs.gen("S1"), vs.gen("S2")
    for lam in partitions_in_box(2, 2):
        if len(lam) > n:
            continue
        top = hl_bc(lam, n, s1, s2, vs).homogeneous_part(xnames(n), sum(lam))
        assert top == hall_littlewood(lam, n, vs)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_specialisations_give_characters(n):
    vs = bc_varset(n)
    for lam in partitions_in_box(2, 2):
        if len(lam) > n:
            continue
        assert _at_t(hl_b(lam, n, 0, vs), 0, n) == _at_t(classical_character("so_odd", lam, n, vs), 0, n)
        assert _at_t(hl_b(lam, n, 1, vs), 0, n) == _at_t(classical_character("o_even", lam, n, vs), 0, n)
        assert _at_t(hl_c(lam, n, 0, vs), 0, n) == _at_t(classical_character("sp", lam, n, vs), 0, n)


def test_bounded_littlewood_examples():
    vs = bc_varset(1)
    x = vs.gen("x1")
    assert bounded_littlewood_lhs("C0", 1, 1, vs) == 1 + x ** 2
    b0 = bounded_littlewood_lhs("B0", 1, 1, vs)
    assert b0 == 1 + x + x ** 2
    assert b0 == x * hl_b((1,), 1, 0, vs)
    for n in range(0, 3):
        assert bounded_littlewood_lhs("BC", 0, n) == bc_varset(n).one()


@pytest.mark.parametrize("family", BC_FAMILIES)
@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_bounded_littlewood(family, k, n):
    assert bounded_littlewood_lhs(family, k, n) == bounded_littlewood_rhs(family, k, n)


@pytest.mark.parametrize("family", BC_FAMILIES)
def test_family_targets_bc_symmetric(family):
    assert is_bc_symmetric(family_target(family, 1, 2), 2)


def test_unknown_family():
    with pytest.raises(ValueError):
        bounded_littlewood_lhs("Z9", 1, 1)


def test_dot_e():
    vs = bc_varset(1)
    x = vs.gen("x1")
    assert dot_e(1, 1, vs) == x + x ** -1
    assert ddot_e(1, 1, vs) == x + x ** -1 + 1
    assert dot_e(3, 1, vs) == vs.zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_ep_lemma(n):
    for k in range(-n, n + 1):
        lhs, rhs = ep_lemma_sides(n, k)
        assert lhs == rhs
