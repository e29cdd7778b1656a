"""Published reference values the verification battery checks against.

The shifted-index tables list every entry from 0 through 12; q-view boxes give
the leading members of the two orthogonal sequences.  The degree-4 entry of
the P-4 table is +(2048c^4 - 1248c^2 + 75)/1155; the recurrence, the elliptic
integral, and the Gegenbauer-sum expansion all pin the leading sign positive.
"""

from __future__ import annotations

from fractions import Fraction as F

from .exact import RationalPoly

ZERO = RationalPoly.zero()

#: P_{-4, n} for shifted n = 0..12.
P4_SHIFTED_TABLE = (
    RationalPoly((1,)),
    ZERO,
    ZERO,
    ZERO,
    RationalPoly((1,)),
    ZERO,
    RationalPoly((0, F(4, 5))),
    ZERO,
    RationalPoly((F(-1, 7), 0, F(32, 35))),
    ZERO,
    RationalPoly((0, F(-16, 35), 0, F(128, 105))),
    ZERO,
    RationalPoly((F(5, 77), 0, F(-416, 385), 0, F(2048, 1155))),
)

#: P_{-2, n} for shifted n = 0..12.
P2_SHIFTED_TABLE = (
    ZERO,
    ZERO,
    RationalPoly((1,)),
    ZERO,
    ZERO,
    ZERO,
    RationalPoly((F(1, 5),)),
    ZERO,
    RationalPoly((0, F(8, 35))),
    ZERO,
    RationalPoly((F(-1, 15), 0, F(32, 105))),
    ZERO,
    RationalPoly((0, F(-232, 1155), 0, F(512, 1155))),
)

#: q_s = P_{-4, 2s} for s = -2..3.
Q_BOX = (
    RationalPoly((1,)),
    ZERO,
    RationalPoly((1,)),
    RationalPoly((0, F(4, 5))),
    RationalPoly((F(-1, 7), 0, F(32, 35))),
    RationalPoly((0, F(-16, 35), 0, F(128, 105))),
)

#: qbar_n = P_{-2, 2n+2} for n = 0..4 (the degree-4 entry from the same source).
QBAR_BOX = (
    RationalPoly((F(1, 5),)),
    RationalPoly((0, F(8, 35))),
    RationalPoly((F(-1, 15), 0, F(32, 105))),
    RationalPoly((0, F(-232, 1155), 0, F(512, 1155))),
    RationalPoly((F(539, 15015), 0, F(-7104, 15015), 0, F(10240, 15015))),
)
