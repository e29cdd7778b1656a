"""Reduction of Kahler differentials mod dR and the central-extension cocycle.

The coordinate ring is R = C[t, t^-1, u | u^2 = p(t)] with p(t) = t^4 - 2ct^2 + 1.
Classes in Omega^1_R / dR are expanded over the five-dimensional center basis

    w0 = class(t^-1 dt),    w_k = class(t^k u dt)  for k = -1, -2, -3, -4,

with RationalPoly coordinates.  Monomials t^k u dt reduce into this basis by
the relation

    (6 + 2k) t^k u dt == -2(k-3) t^{k-4} u dt + 4kc t^{k-2} u dt   (mod dR),

applied downward for k >= 0 and solved for the lowest index when k <= -5.
The cocycle of two ring monomials is the class of f dg, computed with
d(t^b u) = b t^{b-1} u dt + t^b du and u du = p'(t) dt / 2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .exact import RationalPoly
from .families import FamilyId, get_family

_C = RationalPoly.variable()
_ZERO = RationalPoly.zero()
_ONE = RationalPoly.one()

#: u-basis indices in storage order.
_U_KEYS = (-1, -2, -3, -4)


@dataclass(frozen=True)
class OmegaVector:
    """Exact coordinates over the center basis {w0, w-1, w-2, w-3, w-4}."""

    w0: RationalPoly
    wu: Tuple[RationalPoly, RationalPoly, RationalPoly, RationalPoly]

    @classmethod
    def zero(cls) -> "OmegaVector":
        return _ZERO_VEC

    @classmethod
    def basis_w0(cls) -> "OmegaVector":
        return cls(_ONE, (_ZERO, _ZERO, _ZERO, _ZERO))

    @classmethod
    def basis_u(cls, k: int) -> "OmegaVector":
        """The basis vector w_k for k in {-1, -2, -3, -4}."""
        if k not in _U_KEYS:
            raise ValueError("u-basis index must be -1..-4")
        wu = tuple(_ONE if key == k else _ZERO for key in _U_KEYS)
        return cls(_ZERO, wu)

    def u_coeff(self, k: int) -> RationalPoly:
        return self.wu[_U_KEYS.index(k)]

    def is_zero(self) -> bool:
        return self.w0.is_zero() and all(p.is_zero() for p in self.wu)

    def __add__(self, other: "OmegaVector") -> "OmegaVector":
        return OmegaVector(
            self.w0 + other.w0,
            tuple(a + b for a, b in zip(self.wu, other.wu)),
        )

    def __sub__(self, other: "OmegaVector") -> "OmegaVector":
        return self + other.scale(-1)

    def __neg__(self) -> "OmegaVector":
        return self.scale(-1)

    def scale(self, factor) -> "OmegaVector":
        return OmegaVector(self.w0 * factor, tuple(p * factor for p in self.wu))

    def to_json(self) -> dict:
        out = {"w0": self.w0.to_json()}
        for k in _U_KEYS:
            out[f"w{k}"] = self.u_coeff(k).to_json()
        return out


_ZERO_VEC = OmegaVector(_ZERO, (_ZERO, _ZERO, _ZERO, _ZERO))


@dataclass(frozen=True)
class RMonomial:
    """t^exponent, or t^exponent * u when has_u is set."""

    exponent: int
    has_u: bool = False


def t_pow(exponent: int) -> RMonomial:
    return RMonomial(exponent, False)


def t_pow_u(exponent: int) -> RMonomial:
    return RMonomial(exponent, True)


# Reduction cache: a contiguous original-index window [_low, _high] of classes.
_U_CACHE: Dict[int, OmegaVector] = {k: OmegaVector.basis_u(k) for k in _U_KEYS}
_U_LOCK = threading.Lock()


def reduce_u_monomial(k: int) -> OmegaVector:
    """Class of t^k u dt over the center basis, for any integer k."""
    if k in _U_CACHE:
        return _U_CACHE[k]
    with _U_LOCK:
        hi = max(_U_CACHE)
        while hi < k:
            hi += 1
            # downward rule; denominator 6 + 2 hi >= 6 for hi >= 0
            vec = (
                _U_CACHE[hi - 4].scale(-2 * (hi - 3))
                + _U_CACHE[hi - 2].scale(_C * (4 * hi))
            ).scale(Fraction(1, 6 + 2 * hi))
            _U_CACHE[hi] = vec
        lo = min(_U_CACHE)
        while lo > k:
            lo -= 1
            # upward rule from the same relation; 2(lo + 1) <= -8 for lo <= -5
            vec = (
                _U_CACHE[lo + 2].scale(_C * (4 * (lo + 4)))
                - _U_CACHE[lo + 4].scale(14 + 2 * lo)
            ).scale(Fraction(1, 2 * (lo + 1)))
            _U_CACHE[lo] = vec
    return _U_CACHE[k]


def reduce_plain(a: int) -> OmegaVector:
    """Class of t^a dt: exact unless a = -1, where it is the basis vector w0."""
    return OmegaVector.basis_w0() if a == -1 else OmegaVector.zero()


def cocycle(f: RMonomial, g: RMonomial) -> OmegaVector:
    """Class of f dg for ring monomials f, g."""
    a, b = f.exponent, g.exponent
    if not f.has_u and not g.has_u:
        # t^a d(t^b) = b t^{a+b-1} dt
        return reduce_plain(a + b - 1).scale(b)
    if f.has_u and g.has_u:
        # t^a u d(t^b u) = [b t^{a+b-1} p(t) + t^{a+b} p'(t)/2] dt, all plain;
        # p = t^4 - 2ct^2 + 1, p'/2 = 2t^3 - 2ct.
        vec = OmegaVector.zero()
        for exp, coef in (
            (a + b + 3, RationalPoly.constant(b)),
            (a + b + 1, RationalPoly.monomial(-2 * b, 1)),
            (a + b - 1, RationalPoly.constant(b)),
            (a + b + 3, RationalPoly.constant(2)),
            (a + b + 1, RationalPoly.monomial(-2, 1)),
        ):
            vec = vec + reduce_plain(exp).scale(coef)
        return vec
    if f.has_u:
        # t^a u d(t^b) = b t^{a+b-1} u dt
        return reduce_u_monomial(a + b - 1).scale(b)
    # plain times d(u-monomial): f dg = d(fg) - g df == -g df mod dR
    return -cocycle(g, f)


def psi(i: int, j: int) -> OmegaVector:
    """The theorem's central coefficient table for [x t^{i-1} u, y t^j].

    Depends only on s = i + j; family indices are ORIGINAL ones.  For odd
    s <= -3 the family is evaluated at |s| - 2 with the weights c w-3 + w-1
    swapped relative to the positive side, which is what the reduction rule
    produces (the family recurrence does not extend below index -4).
    """
    s = i + j
    if s in (1, 0, -1, -2):
        return OmegaVector.basis_u(s - 2)
    if s % 2:
        p3 = get_family(FamilyId.P3).original(abs(s) - 2)
        if s >= 3:
            weights = (OmegaVector.basis_u(-3) + OmegaVector.basis_u(-1).scale(_C))
        else:
            weights = (OmegaVector.basis_u(-3).scale(_C) + OmegaVector.basis_u(-1))
        return weights.scale(p3)
    p4 = get_family(FamilyId.P4).original(abs(s) - 2)
    p2 = get_family(FamilyId.P2).original(abs(s) - 2)
    return OmegaVector.basis_u(-4).scale(p4) + OmegaVector.basis_u(-2).scale(p2)


@dataclass(frozen=True)
class PsiReport:
    bound: int
    cases: int
    failures: Tuple[Tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [list(f) for f in self.failures],
        }


def verify_psi_table(bound: int) -> PsiReport:
    """Check cocycle(t^{i-1} u, t^j) = j psi(i, j) for all |i|, |j| <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    failures: List[Tuple[int, int]] = []
    cases = 0
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            if j == 0:
                continue
            cases += 1
            got = cocycle(t_pow_u(i - 1), t_pow(j))
            if not (got - psi(i, j).scale(j)).is_zero():
                failures.append((i, j))
    return PsiReport(bound=bound, cases=cases, failures=tuple(failures))


def uu_central_term(i: int, j: int) -> OmegaVector:
    """Closed form of the u-u bracket's central term,

        ((j+1) d_{i+j,-2} - 2cj d_{i+j,0} + (j-1) d_{i+j,2}) w0.
    """
    s = i + j
    coef = _ZERO
    if s == -2:
        coef = coef + RationalPoly.constant(j + 1)
    if s == 0:
        coef = coef + RationalPoly.monomial(-2 * j, 1)
    if s == 2:
        coef = coef + RationalPoly.constant(j - 1)
    return OmegaVector.basis_w0().scale(coef)
