"""Exact arithmetic core: rationals, dense polynomials in c, Laurent series in z.

Every coefficient in this module is a :class:`fractions.Fraction`, so all
arithmetic is exact; nothing here touches floating point.  ``RationalPoly`` is
a dense univariate polynomial in the spectral variable ``c``.
``LaurentSeries`` is a truncated Laurent series in a second variable ``z``
whose coefficients are ``RationalPoly`` values; the truncation order is
tracked explicitly through every operation, so a result never claims
coefficients that were not actually computed.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class NonDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NotSquareError(ArithmeticError):
    """Series square root requested outside the supported unit-leading case."""


class ResidueError(ArithmeticError):
    """Termwise integration hit a nonzero z^-1 coefficient (logarithmic term)."""


def _as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalPoly:
    """Dense univariate polynomial over Fraction, trailing zeros stripped.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "RationalPoly":
        return _ONE

    @classmethod
    def variable(cls) -> "RationalPoly":
        """The polynomial c."""
        return _C

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, coefficient: Scalar, power: int) -> "RationalPoly":
        """coefficient * c**power."""
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * power + (coefficient,))

    # -- structure ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def parity_pure(self) -> bool:
        """True if the polynomial is purely even or purely odd in c."""
        if not self._coeffs:
            return True
        par = self.degree % 2
        return all(
            c == 0 for i, c in enumerate(self._coeffs) if i % 2 != par
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return RationalPoly(out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-x for x in self._coeffs])

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            f = _as_fraction(other)
            return RationalPoly([x * f for x in self._coeffs])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return _ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
        return RationalPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "RationalPoly":
        f = _as_fraction(scalar)
        if f == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self * (1 / f)

    def scale_shift(self, coefficient: Scalar, power: int) -> "RationalPoly":
        """Multiply by coefficient * c**power in one pass."""
        if not self._coeffs or coefficient == 0:
            return _ZERO
        f = _as_fraction(coefficient)
        return RationalPoly((0,) * power + tuple(x * f for x in self._coeffs))

    def derivative(self) -> "RationalPoly":
        return RationalPoly([i * x for i, x in enumerate(self._coeffs)][1:])

    def evaluate(self, point):
        """Horner evaluation; exact for Fraction points, numeric otherwise."""
        result = 0 * point  # matches the point's type
        for coef in reversed(self._coeffs):
            result = result * point + coef
        return result

    def exact_divide(self, divisor) -> "RationalPoly":
        """Exact division in Q[c]; raises NonDivisibleError on remainder."""
        if isinstance(divisor, (int, Fraction)):
            return self / divisor
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dcs = divisor._coeffs
        dd = len(dcs) - 1
        lead = dcs[-1]
        if len(rem) - 1 < dd:
            if any(rem):
                raise NonDivisibleError(
                    f"{self!r} is not divisible by {divisor!r}"
                )
            return _ZERO
        q = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            coef = rem[i]
            if not coef:
                continue
            factor = coef / lead
            q[i - dd] = factor
            for j, dj in enumerate(dcs):
                rem[i - dd + j] -= factor * dj
        if any(rem):
            raise NonDivisibleError(f"{self!r} is not divisible by {divisor!r}")
        return RationalPoly(q)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == RationalPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- formatting / serialization ------------------------------------------

    def to_str(self, var: str = "c") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            coef = self._coeffs[i]
            if not coef:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RationalPoly({self.to_str()})"

    def to_json(self) -> dict:
        """{"coeffs": [[num, den], ...]} with decimal-string big integers."""
        return {
            "coeffs": [[str(x.numerator), str(x.denominator)] for x in self._coeffs]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalPoly":
        return cls([Fraction(int(n), int(d)) for n, d in data["coeffs"]])


_ZERO = RationalPoly()
_ONE = RationalPoly((1,))
_C = RationalPoly((0, 1))


def _as_poly(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    return RationalPoly((x,))


class LaurentSeries:
    """Truncated Laurent series in z with RationalPoly coefficients.

    Coefficients are known exactly for every exponent ``lowest_order`` through
    ``truncation_order`` inclusive, and are zero below ``lowest_order``.
    Binary operations take the minimum truncation consistent with what both
    operands actually determine.
    """

    __slots__ = ("_low", "_coeffs", "_trunc")

    def __init__(self, lowest_order: int, coeffs: Iterable, truncation_order: int):
        cs = [_as_poly(x) for x in coeffs]
        if len(cs) != truncation_order - lowest_order + 1:
            raise ValueError(
                "coefficient count must equal truncation_order - lowest_order + 1"
            )
        while cs and cs[0].is_zero():
            cs.pop(0)
            lowest_order += 1
        if not cs:
            lowest_order = truncation_order + 1
        object.__setattr__(self, "_low", lowest_order)
        object.__setattr__(self, "_coeffs", tuple(cs))
        object.__setattr__(self, "_trunc", truncation_order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], truncation_order: int) -> "LaurentSeries":
        """Build from an {exponent: coefficient} mapping."""
        if not terms:
            return cls(truncation_order + 1, (), truncation_order)
        low = min(terms)
        if max(terms) > truncation_order:
            raise ValueError("term exponent exceeds truncation_order")
        coeffs = [_as_poly(terms.get(n, _ZERO)) for n in range(low, truncation_order + 1)]
        return cls(low, coeffs, truncation_order)

    @classmethod
    def zero(cls, truncation_order: int) -> "LaurentSeries":
        return cls(truncation_order + 1, (), truncation_order)

    # -- structure ----------------------------------------------------------

    @property
    def lowest_order(self) -> int:
        return self._low

    @property
    def truncation_order(self) -> int:
        return self._trunc

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coefficient(self, exponent: int) -> RationalPoly:
        """Coefficient of z**exponent; raises beyond the truncation order."""
        if exponent > self._trunc:
            raise ValueError(f"coefficient z^{exponent} beyond truncation {self._trunc}")
        if exponent < self._low:
            return _ZERO
        return self._coeffs[exponent - self._low]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self._low == other._low
            and self._trunc == other._trunc
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self._low, self._trunc, self._coeffs))

    def agrees_with(self, other: "LaurentSeries", upto: Optional[int] = None) -> bool:
        """Coefficientwise equality on the common known exponent range."""
        bound = min(self._trunc, other._trunc)
        if upto is not None:
            if upto > bound:
                raise ValueError("comparison extends beyond a truncation order")
            bound = upto
        lo = min(self._low, other._low)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(lo, bound + 1))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self._trunc, other._trunc)
        low = min(self._low, other._low)
        if low > trunc:
            return LaurentSeries.zero(trunc)
        coeffs = [
            self.coefficient(n) + other.coefficient(n) for n in range(low, trunc + 1)
        ]
        return LaurentSeries(low, coeffs, trunc)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self._low, [-p for p in self._coeffs], self._trunc)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalPoly)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # The result coefficient at n is fully determined only while every
        # contributing pair is inside both known ranges.
        trunc = min(self._trunc + other._low, other._trunc + self._low)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(trunc)
        low = self._low + other._low
        size = trunc - low + 1
        if size <= 0:
            return LaurentSeries.zero(trunc)
        out = [_ZERO] * size
        for i, p in enumerate(self._coeffs):
            if p.is_zero():
                continue
            ei = self._low + i
            for j, q in enumerate(other._coeffs):
                if q.is_zero():
                    continue
                e = ei + other._low + j
                if e > trunc:
                    break
                out[e - low] = out[e - low] + p * q
        return LaurentSeries(low, out, trunc)

    __rmul__ = __mul__

    def scale(self, factor) -> "LaurentSeries":
        f = _as_poly(factor)
        if f.is_zero():
            return LaurentSeries.zero(self._trunc)
        return LaurentSeries(self._low, [p * f for p in self._coeffs], self._trunc)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by z**k."""
        return LaurentSeries(self._low + k, self._coeffs, self._trunc + k)

    def truncate(self, new_trunc: int) -> "LaurentSeries":
        if new_trunc > self._trunc:
            raise ValueError("cannot extend a truncation")
        if new_trunc < self._low:
            return LaurentSeries.zero(new_trunc)
        return LaurentSeries(
            self._low, self._coeffs[: new_trunc - self._low + 1], new_trunc
        )

    def differentiate(self) -> "LaurentSeries":
        """d/dz, exact termwise; truncation drops by one."""
        terms = {}
        for i, p in enumerate(self._coeffs):
            n = self._low + i
            if n != 0 and not p.is_zero():
                terms[n - 1] = p * n
        return LaurentSeries.from_terms(terms, self._trunc - 1)

    def integrate(self) -> "LaurentSeries":
        """Termwise antiderivative with integration constant 0.

        The z^-1 coefficient must vanish; otherwise the antiderivative leaves
        the Laurent ring and ResidueError is raised.
        """
        terms = {}
        for i, p in enumerate(self._coeffs):
            n = self._low + i
            if p.is_zero():
                continue
            if n == -1:
                raise ResidueError("nonzero z^-1 coefficient: integral has a log term")
            terms[n + 1] = p * Fraction(1, n + 1)
        return LaurentSeries.from_terms(terms, self._trunc + 1)

    # -- fractional powers ----------------------------------------------------

    def _unit_power(self, alpha: Fraction) -> list:
        """Coefficients of (self normalized to constant term 1)**alpha.

        Uses the first-order relation u * f' = alpha * u' * f satisfied by
        f = u**alpha, which determines the coefficients by a single recurrence.
        """
        rel = self._trunc - self._low
        u = self._coeffs
        nz = [(i, p) for i, p in enumerate(u) if i > 0 and not p.is_zero()]
        f = [_ONE] + [_ZERO] * rel
        for n in range(rel):
            acc = _ZERO
            for i, ui in nz:
                if i - 1 <= n:
                    acc = acc + ui * (alpha * i) * f[n - i + 1]
                if 1 <= i <= n:
                    acc = acc - ui * (n - i + 1) * f[n - i + 1]
            f[n + 1] = acc * Fraction(1, n + 1)
        return f

    def sqrt(self) -> "LaurentSeries":
        """Square root with leading coefficient +1.

        Supported case: even lowest order and constant leading coefficient 1
        (the only case a quartic weight factor needs).
        """
        if self.is_zero():
            raise NotSquareError("square root of an identically unknown/zero series")
        if self._low % 2 != 0:
            raise NotSquareError("square root needs an even lowest order")
        if self._coeffs[0] != _ONE:
            raise NotSquareError("square root supported only for unit leading coefficient")
        f = self._unit_power(Fraction(1, 2))
        half = self._low // 2
        return LaurentSeries(half, f, self._trunc - self._low + half)

    def pow_neg_3_2(self) -> "LaurentSeries":
        """The power s**(-3/2) for a series with constant term 1 at order 0."""
        if self._low != 0 or self.is_zero() or self._coeffs[0] != _ONE:
            raise NotSquareError("(-3/2) power needs constant term 1 at order 0")
        return LaurentSeries(0, self._unit_power(Fraction(-3, 2)), self._trunc)

    # -- formatting / serialization ------------------------------------------

    def __repr__(self) -> str:
        shown = []
        for i, p in enumerate(self._coeffs):
            if p.is_zero():
                continue
            shown.append(f"({p.to_str()})*z^{self._low + i}")
            if len(shown) >= 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"LaurentSeries({body} + O(z^{self._trunc + 1}))"

    def to_json(self) -> dict:
        return {
            "lowest_order": self._low,
            "truncation_order": self._trunc,
            "coeffs": [p.to_json() for p in self._coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentSeries":
        return cls(
            int(data["lowest_order"]),
            [RationalPoly.from_json(p) for p in data["coeffs"]],
            int(data["truncation_order"]),
        )
