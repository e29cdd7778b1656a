"""Differential-operator construction and exact residual verification."""

from fractions import Fraction as F

import pytest

from djkm.diffops import (
    LinearDiffOp,
    build_case3_op,
    build_case4_op,
    build_elliptic1_op,
    build_elliptic2_op,
    build_gegenbauer_op,
    build_qform_op,
    build_wimp_op,
    eigencheck,
    fourth_order_sweep,
    second_order_sweep,
)
from djkm.exact import RationalPoly
from djkm.families import FamilyId, IndexView, gegenbauer, get_family

C = RationalPoly.variable()
ONE = RationalPoly.one()


# ---------------------------------------------------------------------------
# apply
# ---------------------------------------------------------------------------


def test_apply_derivative():
    d = LinearDiffOp((RationalPoly.zero(), ONE))
    assert d.apply(C * C) == 2 * C


def test_apply_identity():
    ident = LinearDiffOp((ONE,))
    p = RationalPoly([1, 2, 3])
    assert ident.apply(p) == p
    assert ident.apply(RationalPoly.zero()).is_zero()


def test_apply_gegenbauer_op_by_hand():
    # at n=1, lam=3/2 on Q_1 = 3c: (-4c)(3) + 4*3c = 0
    op = build_gegenbauer_op(F(3, 2), 1)
    assert op.apply(RationalPoly([0, 3])).is_zero()


def test_all_builders_respect_the_degree_profile():
    # deg f_i <= i holds for every operator with polynomial eigenfunctions,
    # Wimp's transcription included
    for n in (0, 2, 9):
        assert build_gegenbauer_op(F(3, 2), n).degree_profile_ok()
        assert build_elliptic1_op(n).degree_profile_ok()
        assert build_elliptic2_op(n).degree_profile_ok()
        assert build_qform_op(n).degree_profile_ok()
        assert build_wimp_op(n, -1, -1, F(3, 2)).degree_profile_ok()
    for n in (2, 9):
        assert build_case4_op(n).degree_profile_ok()
        # the case-3 operator lives on a weighted space; its c^4 D^2 term
        # legitimately breaks the classical profile
        assert not build_case3_op(n).degree_profile_ok()


def test_operator_addition_and_scaling():
    a = LinearDiffOp((ONE,))
    b = LinearDiffOp((RationalPoly.zero(), ONE))
    combined = a + b.scale(2)
    p = C * C
    assert combined.apply(p) == p + 4 * C
    assert combined.order == 1


# ---------------------------------------------------------------------------
# second-order operators
# ---------------------------------------------------------------------------


def test_gegenbauer_ode_annihilation():
    for n in range(101):
        assert build_gegenbauer_op(F(3, 2), n).apply(gegenbauer(F(3, 2), n)).is_zero()


def test_gegenbauer_ode_minus_half():
    # (1-c^2) D^2 + n(n-1) with no first-order term at lam = -1/2
    for n in range(101):
        op = build_gegenbauer_op(F(-1, 2), n)
        assert op.coeffs[1].is_zero()
        assert op.apply(gegenbauer(F(-1, 2), n)).is_zero()


def test_case3_base_case():
    # P_{-1,1} = c/2
    member = get_family(FamilyId.P1).original(1)
    assert member == RationalPoly([0, F(1, 2)])
    assert build_case3_op(2).apply(member).is_zero()


def test_case3_negative_controls():
    # the n=2 solution ray contains c itself, so probe with inputs outside it:
    # case3(2) on c^2 is 4c^4, case3(3) on c is -4c^3
    assert build_case3_op(2).apply(C * C) == RationalPoly([0, 0, 0, 0, 4])
    assert build_case3_op(3).apply(C) == RationalPoly([0, 0, 0, -4])


def test_case4_base_case_trivial_eigenvalue():
    # (n+1)(n-2) = 0 at n=2 and P_{-3,1} = 1/2 is constant
    member = get_family(FamilyId.P3).original(1)
    assert build_case4_op(2).apply(member).is_zero()


def test_second_order_sweeps():
    assert all(ok for _, ok in second_order_sweep(FamilyId.P1, 100))
    assert all(ok for _, ok in second_order_sweep(FamilyId.P3, 100))


def test_case3_derives_from_case4_via_cross_identity():
    # case3 annihilates c * P_{-3,2n-3} because P_{-1,2n-3} = c P_{-3,2n-3}
    p3 = get_family(FamilyId.P3)
    for n in range(2, 61):
        assert build_case3_op(n).apply(C * p3.original(2 * n - 3)).is_zero()


# ---------------------------------------------------------------------------
# fourth-order operators
# ---------------------------------------------------------------------------


def test_elliptic1_displayed_cases():
    member = get_family(FamilyId.P4).shifted(8)
    assert member == RationalPoly([F(-5, 35), 0, F(32, 35)])
    assert build_elliptic1_op(8).apply(member).is_zero()
    # n=0: eigen-coefficient (n-4)^2 n^2 vanishes on the constant member
    assert build_elliptic1_op(0).apply(ONE).is_zero()


def test_elliptic2_displayed_cases():
    assert build_elliptic2_op(2).apply(ONE).is_zero()  # (n-2)^2 = 0
    member = get_family(FamilyId.P2).shifted(8)
    assert member == RationalPoly([0, F(8, 35)])
    assert build_elliptic2_op(8).apply(member).is_zero()


def test_fourth_order_sweeps_to_120():
    for fid in (FamilyId.P4, FamilyId.P2):
        for n, member_zero, residual_zero in fourth_order_sweep(fid, 120):
            assert residual_zero, f"{fid} residual nonzero at shifted n={n}"


def test_fourth_order_negative_control():
    # a polynomial outside the family is not annihilated
    assert not build_elliptic1_op(8).apply(C * C * C).is_zero()


def test_derivation_excluded_indices_are_vacuous():
    # the derivation of the fourth-order equation excluded n in {7, 9, 11};
    # the family members there are zero, so the residuals vanish trivially
    fam = get_family(FamilyId.P4)
    for n in (7, 9, 11):
        assert fam.shifted(n).is_zero()
        assert build_elliptic1_op(n).apply(fam.shifted(n)).is_zero()


# ---------------------------------------------------------------------------
# q-form operator and Wimp's operator
# ---------------------------------------------------------------------------


def test_qform_reproduces_displayed_cancellation():
    # q_2 = (32x^2-5)/35: -(-7x^2-5) 64/35 - 3x*13*64x/35 + 4*16 (32x^2-5)/35 = 0
    q2 = get_family(FamilyId.P4).q(2)
    assert q2 == RationalPoly([F(-5, 35), 0, F(32, 35)])
    assert build_qform_op(2).apply(q2).is_zero()
    assert build_qform_op(0).apply(get_family(FamilyId.P4).q(0)).is_zero()


def test_qform_and_elliptic1_residuals_vanish_together():
    fam = get_family(FamilyId.P4)
    for n in range(101):
        q_n = fam.q(n)
        assert build_qform_op(n).apply(q_n).is_zero()
        assert build_elliptic1_op(2 * n + 4).apply(q_n).is_zero()


def test_wimp_a2_specialization():
    # at alpha = beta = -1, c = 3/2: A_2 = -(2n^2+4n-23) x^2 - 52 x + 2n^2+4n+3
    for n in (0, 1, 2, 5):
        op = build_wimp_op(n, -1, -1, F(3, 2))
        s = 2 * n * n + 4 * n
        assert op.coeffs[2] == RationalPoly([s + 3, -52, -(s - 23)])
        # A_3 = -3(2n^2+4n-3) x, A_4 = n^2 (n+2)^2
        assert op.coeffs[1] == RationalPoly([0, -3 * (s - 3)])
        assert op.coeffs[0] == RationalPoly([n * n * (n + 2) ** 2])


def test_wimp_a4_direct_substitution():
    # n=2, gamma=-1, c=3/2: n(n+2)(n+gamma+2c)(n+gamma+2c-2) = 2*4*4*2 = 64
    op = build_wimp_op(2, -1, -1, F(3, 2))
    assert op.coeffs[0] == RationalPoly([64])


def test_wimp_residual_is_pinned_nonzero():
    # regression pin: the verbatim operator misses q_2 by 64(14 - 52x)/35
    q2 = get_family(FamilyId.P4).q(2)
    residual = build_wimp_op(2, -1, -1, F(3, 2)).apply(q2)
    assert residual == RationalPoly([F(896, 35), F(-3328, 35)])


def test_wimp_differs_from_qform_by_an_x_linear_d2_term():
    # the two operators agree except in the D^2 coefficient, where the
    # transcribed A_2 carries an extra 14 - 52x
    for n in (0, 2, 7):
        wimp = build_wimp_op(n, -1, -1, F(3, 2))
        qform = build_qform_op(n)
        assert wimp.coeffs[2] - qform.coeffs[2] == RationalPoly([14, -52])
        assert wimp.coeffs[0] == qform.coeffs[0]
        assert wimp.coeffs[1] == qform.coeffs[1]
        assert wimp.coeffs[3] == qform.coeffs[3]
        assert wimp.coeffs[4] == qform.coeffs[4]


# ---------------------------------------------------------------------------
# eigencheck dispatch
# ---------------------------------------------------------------------------


def test_eigencheck_views():
    assert eigencheck(build_elliptic1_op(6), FamilyId.P4, IndexView.SHIFTED, 6).is_zero()
    assert eigencheck(build_case3_op(5), FamilyId.P1, IndexView.ORIGINAL, 7).is_zero()
    wimp = build_wimp_op(2, -1, -1, F(3, 2))
    assert not eigencheck(wimp, FamilyId.P4, IndexView.Q, 2).is_zero()


def test_sweep_family_validation():
    with pytest.raises(ValueError):
        fourth_order_sweep(FamilyId.P1, 10)
    with pytest.raises(ValueError):
        second_order_sweep(FamilyId.P4, 10)
