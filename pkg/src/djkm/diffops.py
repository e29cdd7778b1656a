"""Linear differential operators in c and exact residual verification.

An operator is a finite list of RationalPoly coefficients f_i representing
sum_i f_i (d/dc)^i.  Residuals are exact polynomials: "annihilates" always
means the residual is literally the zero polynomial, never a small norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .exact import Rational, RationalPoly
from .families import FamilyId, IndexView, get_family


@dataclass(frozen=True)
class LinearDiffOp:
    """sum_i coeffs[i] * (d/dc)^i with RationalPoly coefficients."""

    coeffs: Tuple[RationalPoly, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(_as_poly(p) for p in self.coeffs)
        )

    @property
    def order(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return -1

    def degree_profile_ok(self) -> bool:
        """deg f_i <= i, the profile every polynomial-eigenfunction operator
        has; diagnostic only, construction does not enforce it."""
        return all(p.degree <= i for i, p in enumerate(self.coeffs))

    def apply(self, p: RationalPoly) -> RationalPoly:
        out = RationalPoly.zero()
        deriv = p
        for i, f_i in enumerate(self.coeffs):
            if i:
                deriv = deriv.derivative()
            if not f_i.is_zero() and not deriv.is_zero():
                out = out + f_i * deriv
        return out

    def __add__(self, other: "LinearDiffOp") -> "LinearDiffOp":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, p in enumerate(b):
            merged[i] = merged[i] + p
        return LinearDiffOp(tuple(merged))

    def scale(self, factor) -> "LinearDiffOp":
        return LinearDiffOp(tuple(p * factor for p in self.coeffs))


def _as_poly(p) -> RationalPoly:
    return p if isinstance(p, RationalPoly) else RationalPoly((p,))


def build_gegenbauer_op(lam: Union[Rational, int], n: int) -> LinearDiffOp:
    """(1 - c^2) D^2 - (2 lam + 1) c D + n (n + 2 lam)."""
    lam = Fraction(lam)
    return LinearDiffOp(
        (
            RationalPoly.constant(n * (n + 2 * lam)),
            RationalPoly.monomial(-(2 * lam + 1), 1),
            RationalPoly((1, 0, -1)),
        )
    )


def build_case3_op(n: int) -> LinearDiffOp:
    """Second-order annihilator of P_{-1, 2n-3} (original indexing), n >= 2:

        (c^4 - c^2) D^2 + 2c (c^2 + 1) D + (-c^2 n(n-1) - 2).
    """
    return LinearDiffOp(
        (
            RationalPoly((-2, 0, -n * (n - 1))),
            RationalPoly((0, 2, 0, 2)),
            RationalPoly((0, 0, -1, 0, 1)),
        )
    )


def build_case4_op(n: int) -> LinearDiffOp:
    """Second-order annihilator of P_{-3, 2n-3} (original indexing), n >= 2:

        (c^2 - 1) D^2 + 4c D - (n+1)(n-2).
    """
    return LinearDiffOp(
        (
            RationalPoly.constant(-(n + 1) * (n - 2)),
            RationalPoly((0, 4)),
            RationalPoly((-1, 0, 1)),
        )
    )


def build_elliptic1_op(n: int) -> LinearDiffOp:
    """Fourth-order annihilator of P_{-4, n} (shifted indexing):

        16 (c^2-1)^2 D^4 + 160 c (c^2-1) D^3
        - 8 (c^2 (n^2-4n-46) - n^2+4n+22) D^2
        - 24 c (n^2-4n-6) D + (n-4)^2 n^2.
    """
    s = n * n - 4 * n
    return LinearDiffOp(
        (
            RationalPoly.constant((n - 4) ** 2 * n * n),
            RationalPoly.monomial(-24 * (s - 6), 1),
            RationalPoly((8 * s - 176, 0, -8 * (s - 46))),
            RationalPoly((0, -160, 0, 160)),
            RationalPoly((16, 0, -32, 0, 16)),
        )
    )


def build_elliptic2_op(n: int) -> LinearDiffOp:
    """Fourth-order annihilator of P_{-2, n} (shifted indexing):

        16 (c^2-1)^2 D^4 + 160 c (c^2-1) D^3
        - 8 (c^2 (n^2-4n-42) - n^2+4n+18) D^2
        - 24 c (n^2-4n-2) D + (n-6)(n-2)^2 (n+2).
    """
    s = n * n - 4 * n
    return LinearDiffOp(
        (
            RationalPoly.constant((n - 6) * (n - 2) ** 2 * (n + 2)),
            RationalPoly.monomial(-24 * (s - 2), 1),
            RationalPoly((8 * s - 144, 0, -8 * (s - 42))),
            RationalPoly((0, -160, 0, 160)),
            RationalPoly((16, 0, -32, 0, 16)),
        )
    )


def build_qform_op(n: int) -> LinearDiffOp:
    """The q_n-form rewrite of the P-4 fourth-order equation (q_n = P_{-4,2n+4}):

        (x^2-1)^2 D^4 + 10 x (x^2-1) D^3
        - (x^2 (2n^2+4n-23) - 2n^2-4n+11) D^2
        - 3 x (2n^2+4n-3) D + n^2 (n+2)^2.
    """
    s = 2 * n * n + 4 * n
    return LinearDiffOp(
        (
            RationalPoly.constant(n * n * (n + 2) ** 2),
            RationalPoly.monomial(-3 * (s - 3), 1),
            RationalPoly((s - 11, 0, -(s - 23))),
            RationalPoly((0, -10, 0, 10)),
            RationalPoly((1, 0, -2, 0, 1)),
        )
    )


def build_wimp_op(
    n: int,
    alpha: Union[Rational, int],
    beta: Union[Rational, int],
    assoc_c: Union[Rational, int],
) -> LinearDiffOp:
    """Wimp's fourth-order operator for associated Jacobi polynomials,
    transcribed verbatim (including the suspect x-linear term inside A_2):

        A_0 = (1 - x^2)^2
        A_1 = 10 x (x^2 - 1)
        A_2 = -(1-x)^2 (2K + 2C + g^2 - 25) + 2 (1-x)(2K + 2C + 2 a g)
              + 2 (a + 1) - 26
        A_3 = 3 (1-x)(2K + 2C + g^2 - 5) - 6 (K + C + a g + b - 2)
        A_4 = n (n+2) (n + g + 2c)(n + g + 2c - 2)

    with g = a + b + 1, K = (n + c)(n + g + c), C = (c - 1)(c + a + b).
    No corrected form is substituted; the point is to compare it against
    build_qform_op on actual family members.
    """
    a = Fraction(alpha)
    b = Fraction(beta)
    cc = Fraction(assoc_c)
    g = a + b + 1
    big_k = (n + cc) * (n + g + cc)
    big_c = (cc - 1) * (cc + a + b)
    one_minus_x = RationalPoly((1, -1))
    a2 = (
        one_minus_x * one_minus_x * (-(2 * big_k + 2 * big_c + g * g - 25))
        + one_minus_x * (2 * (2 * big_k + 2 * big_c + 2 * a * g))
        + RationalPoly.constant(2 * (a + 1) - 26)
    )
    a3 = one_minus_x * (3 * (2 * big_k + 2 * big_c + g * g - 5)) + RationalPoly.constant(
        -6 * (big_k + big_c + a * g + b - 2)
    )
    a4 = RationalPoly.constant(n * (n + 2) * (n + g + 2 * cc) * (n + g + 2 * cc - 2))
    return LinearDiffOp(
        (
            a4,
            a3,
            a2,
            RationalPoly((0, -10, 0, 10)),
            RationalPoly((1, 0, -2, 0, 1)),
        )
    )


def eigencheck(
    op: LinearDiffOp, family_id: FamilyId, view: IndexView, n: int
) -> RationalPoly:
    """Residual of op on the requested family member; zero means verified."""
    return op.apply(get_family(family_id).member(view, n))


def fourth_order_sweep(
    family_id: FamilyId, max_shifted: int
) -> List[Tuple[int, bool, bool]]:
    """Residual status of the fourth-order operator on every shifted index.

    Returns (n, member_is_zero, residual_is_zero) triples.  Odd indices carry
    zero members, so their residuals vanish vacuously; they are reported, not
    skipped, because the operator derivation excluded some odd n.
    """
    family_id = FamilyId(family_id)
    if family_id is FamilyId.P4:
        build = build_elliptic1_op
    elif family_id is FamilyId.P2:
        build = build_elliptic2_op
    else:
        raise ValueError("fourth-order sweep covers P-4 and P-2")
    fam = get_family(family_id)
    fam.shifted(max_shifted)  # one sequential generation pass
    out = []
    for n in range(max_shifted + 1):
        member = fam.shifted(n)
        residual = build(n).apply(member)
        out.append((n, member.is_zero(), residual.is_zero()))
    return out


def second_order_sweep(family_id: FamilyId, max_n: int) -> List[Tuple[int, bool]]:
    """Residual status of the second-order operators on P_{-1|-3, 2n-3}.

    For P-1 also checks the cross relation P_{-1,2n-3} = c P_{-3,2n-3} implied
    by the two closed forms; a relation failure is reported as a residual
    failure for that n.
    """
    family_id = FamilyId(family_id)
    if family_id is FamilyId.P1:
        build = build_case3_op
    elif family_id is FamilyId.P3:
        build = build_case4_op
    else:
        raise ValueError("second-order sweep covers P-1 and P-3")
    fam = get_family(family_id)
    out = []
    c_var = RationalPoly.variable()
    for n in range(2, max_n + 1):
        member = fam.original(2 * n - 3)
        ok = build(n).apply(member).is_zero()
        if family_id is FamilyId.P1:
            ok = ok and member == c_var * get_family(FamilyId.P3).original(2 * n - 3)
        out.append((n, ok))
    return out
