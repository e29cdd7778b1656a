"""The four DJKM polynomial families and their index conventions.

All four families satisfy the same master recurrence in the original index k,

    (6 + 2k) P_k = 4kc P_{k-2} - 2(k-3) P_{k-4},   k >= 0,

and differ only in which of the four initial entries P_{-4}..P_{-1} equals 1.
The canonical internal indexing is the original one (k >= -4); the shifted,
q and qbar conventions are pure reindexing layers on top of it:

    shifted(n) = original(n - 4)      n >= 0
    q(s)       = original(2s)         s >= -2
    qbar(n)    = q(n + 1)             n >= -1
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Union

from .exact import NonDivisibleError, Rational, RationalPoly

_C = RationalPoly.variable()


class FamilyId(str, Enum):
    """Which initial entry equals 1 (P-4 means the family with P_{-4} = 1)."""

    P4 = "P-4"
    P3 = "P-3"
    P2 = "P-2"
    P1 = "P-1"


class IndexView(str, Enum):
    ORIGINAL = "original"
    SHIFTED = "shifted"
    Q = "q"
    QBAR = "qbar"


#: Lowest index meaningful in each view.
VIEW_START = {
    IndexView.ORIGINAL: -4,
    IndexView.SHIFTED: 0,
    IndexView.Q: -2,
    IndexView.QBAR: -1,
}

_INITIAL_INDEX = {
    FamilyId.P4: -4,
    FamilyId.P3: -3,
    FamilyId.P2: -2,
    FamilyId.P1: -1,
}

# Families seeded at an even original index are supported on even indices,
# the others on odd indices; the complementary entries must come out zero.
_PARITY = {
    FamilyId.P4: 0,
    FamilyId.P2: 0,
    FamilyId.P3: 1,
    FamilyId.P1: 1,
}


class PolynomialFamily:
    """Lazily generated, cached sequence P_k(c) for one choice of initials.

    Entries at the wrong parity are still computed by the recurrence and then
    asserted to be zero, which re-checks the recurrence for free.  After
    generation the cached entries are immutable; extension is serialized by a
    lock so instances can be shared between threads.
    """

    def __init__(self, family_id: FamilyId):
        self.id = FamilyId(family_id)
        self._vals: List[RationalPoly] = [
            RationalPoly.one() if k == _INITIAL_INDEX[self.id] else RationalPoly.zero()
            for k in range(-4, 0)
        ]
        self._lock = threading.Lock()

    def _extend(self, k_max: int) -> None:
        with self._lock:
            k = len(self._vals) - 4
            while k <= k_max:
                # 6 + 2k >= 6 for k >= 0, so the division is always exact here.
                p = (
                    self._vals[k + 2].scale_shift(4 * k, 1)
                    - self._vals[k] * (2 * (k - 3))
                ) / Fraction(6 + 2 * k)
                if (k - _PARITY[self.id]) % 2:
                    assert p.is_zero(), f"{self.id.value}: parity entry k={k} not zero"
                self._vals.append(p)
                k += 1

    def original(self, k: int) -> RationalPoly:
        if k < -4:
            raise IndexError("original index must be >= -4")
        if k + 4 >= len(self._vals):
            self._extend(k)
        return self._vals[k + 4]

    def shifted(self, n: int) -> RationalPoly:
        if n < 0:
            raise IndexError("shifted index must be >= 0")
        return self.original(n - 4)

    def q(self, s: int) -> RationalPoly:
        if s < -2:
            raise IndexError("q index must be >= -2")
        return self.original(2 * s)

    def qbar(self, n: int) -> RationalPoly:
        if n < -1:
            raise IndexError("qbar index must be >= -1")
        return self.q(n + 1)

    def member(self, view: IndexView, n: int) -> RationalPoly:
        view = IndexView(view)
        if view is IndexView.ORIGINAL:
            return self.original(n)
        if view is IndexView.SHIFTED:
            return self.shifted(n)
        if view is IndexView.Q:
            return self.q(n)
        return self.qbar(n)


_REGISTRY: Dict[FamilyId, PolynomialFamily] = {}
_REGISTRY_LOCK = threading.Lock()


def get_family(family_id: FamilyId) -> PolynomialFamily:
    """Shared per-process instance (families are immutable once generated)."""
    family_id = FamilyId(family_id)
    with _REGISTRY_LOCK:
        if family_id not in _REGISTRY:
            _REGISTRY[family_id] = PolynomialFamily(family_id)
        return _REGISTRY[family_id]


def generate(family_id: FamilyId, view: IndexView, max_index: int) -> List[RationalPoly]:
    """All members from the view's lowest index through max_index inclusive."""
    view = IndexView(view)
    fam = get_family(family_id)
    start = VIEW_START[view]
    if max_index < start:
        raise ValueError(f"max_index below the {view.value} view start {start}")
    return [fam.member(view, n) for n in range(start, max_index + 1)]


def gegenbauer(lam: Union[Rational, int], n: int) -> RationalPoly:
    """Gegenbauer polynomial C_n^(lam) by the standard three-term recurrence

        n C_n = 2(n + lam - 1) c C_{n-1} - (n + 2 lam - 2) C_{n-2},

    with C_0 = 1 and C_1 = 2 lam c.  Exact for rational lam.
    """
    if n < 0:
        raise ValueError("Gegenbauer degree must be >= 0")
    lam = Fraction(lam)
    prev2 = RationalPoly.one()
    if n == 0:
        return prev2
    prev1 = RationalPoly.monomial(2 * lam, 1)
    for m in range(2, n + 1):
        cur = (
            prev1.scale_shift(2 * (m + lam - 1), 1) - prev2 * (m + 2 * lam - 2)
        ) / Fraction(m)
        prev2, prev1 = prev1, cur
    return prev1


def verify_gegenbauer_link(n: int) -> bool:
    """Check the closed forms of the odd families against Gegenbauer data.

    For n >= 2 this verifies, exactly,

        (c^2 - 1) P_{-3, 2n-3} = -C_n^(-1/2)   and   P_{-1, 2n-3} = c P_{-3, 2n-3},

    where the family members come from the recurrence.  Exact division must
    succeed; a nonzero remainder counts as a verification failure.
    """
    if n < 2:
        raise ValueError("link holds for n >= 2")
    q_n = gegenbauer(Fraction(-1, 2), n)
    denom = RationalPoly((-1, 0, 1))  # c^2 - 1
    try:
        expected_p3 = (-q_n).exact_divide(denom)
    except NonDivisibleError:
        return False
    p3 = get_family(FamilyId.P3).original(2 * n - 3)
    p1 = get_family(FamilyId.P1).original(2 * n - 3)
    return p3 == expected_p3 and p1 == _C * p3
