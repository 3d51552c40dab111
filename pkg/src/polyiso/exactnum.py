"""Exact arithmetic over numbers of the form p / 10**e.

Every quantity that enters an exact polynomial evaluation is a decimal-scaled
integer: diagonal increments are drawn from the grid {k/10**N}, matrix entries
are integers, and sums/products of such numbers stay on a decimal grid.
Restricting to this closed family (instead of general rationals) keeps the
scale exponent meaningful: after i increments of grid fineness N, a polynomial
value is an integer over 10**(i*N), and two unequal values therefore differ by
at least 10**(-i*N).  That gap is what makes exact equality checks and the
precision planning of the bounded solver work.

No division is provided; quotients of these numbers are generally not
decimal-scaled.  Comparisons of ratios are done by cross-multiplication.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


class ScaledExact:
    """An exact number p / 10**e with arbitrary-precision integer p, e >= 0.

    Canonical form: e == 0, or p is not divisible by 10.  Normalization runs
    after every operation, so equal values always have equal (p, e) pairs and
    the class is safe to hash and compare directly.
    """

    __slots__ = ("p", "e")

    def __init__(self, p: int, e: int = 0):
        if e < 0:
            raise ValueError("scale exponent must be non-negative")
        if p == 0:
            e = 0
        else:
            while e > 0 and p % 10 == 0:
                p //= 10
                e -= 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("ScaledExact is immutable")

    @classmethod
    def from_decimal(cls, text: str) -> "ScaledExact":
        """Parse a decimal literal such as "61.5", "-0.001" or "3"."""
        s = text.strip()
        sign = 1
        if s.startswith(("-", "+")):
            if s[0] == "-":
                sign = -1
            s = s[1:]
        if not s:
            raise ValueError(f"not a decimal literal: {text!r}")
        whole, _, frac = s.partition(".")
        if not (whole + frac).isdigit() or (whole == "" and frac == ""):
            raise ValueError(f"not a decimal literal: {text!r}")
        digits = (whole or "0") + frac
        return cls(sign * int(digits), len(frac))

    @classmethod
    def from_fraction(cls, value: Fraction) -> "ScaledExact":
        """Convert a rational whose denominator is of the form 2**a * 5**b."""
        den = value.denominator
        e2 = e5 = 0
        while den % 2 == 0:
            den //= 2
            e2 += 1
        while den % 5 == 0:
            den //= 5
            e5 += 1
        if den != 1:
            raise ValueError(f"{value} is not expressible as p/10**e")
        e = max(e2, e5)
        return cls(value.numerator * 2 ** (e - e2) * 5 ** (e - e5), e)

    def to_fraction(self) -> Fraction:
        return Fraction(self.p, 10**self.e)

    def is_zero(self) -> bool:
        return self.p == 0

    def sign(self) -> int:
        return (self.p > 0) - (self.p < 0)

    def _aligned(self, other: "ScaledExact") -> tuple[int, int, int]:
        e = max(self.e, other.e)
        return self.p * 10 ** (e - self.e), other.p * 10 ** (e - other.e), e

    def __add__(self, other):
        if isinstance(other, int):
            other = ScaledExact(other)
        if not isinstance(other, ScaledExact):
            return NotImplemented
        a, b, e = self._aligned(other)
        return ScaledExact(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = ScaledExact(other)
        if not isinstance(other, ScaledExact):
            return NotImplemented
        a, b, e = self._aligned(other)
        return ScaledExact(a - b, e)

    def __rsub__(self, other):
        if isinstance(other, int):
            return ScaledExact(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return ScaledExact(self.p * other, self.e)
        if not isinstance(other, ScaledExact):
            return NotImplemented
        return ScaledExact(self.p * other.p, self.e + other.e)

    __rmul__ = __mul__

    def __neg__(self):
        return ScaledExact(-self.p, self.e)

    def __abs__(self):
        return ScaledExact(abs(self.p), self.e)

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = ScaledExact(other)
        a, b, _ = self._aligned(other)
        return (a > b) - (a < b)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ScaledExact(other)
        if not isinstance(other, ScaledExact):
            return NotImplemented
        return self.p == other.p and self.e == other.e

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.p, self.e))

    def __bool__(self):
        return self.p != 0

    def __float__(self):
        return self.p / 10**self.e

    def __str__(self):
        if self.e == 0:
            return str(self.p)
        sign = "-" if self.p < 0 else ""
        digits = str(abs(self.p)).rjust(self.e + 1, "0")
        return f"{sign}{digits[:-self.e]}.{digits[-self.e:]}"

    def __repr__(self):
        return f"ScaledExact({self.p}, {self.e})"


ZERO = ScaledExact(0)
ONE = ScaledExact(1)


@dataclass(frozen=True)
class EpsilonSample:
    """A diagonal increment k/10**N drawn from the open unit interval.

    `precision` records the grid fineness N the value was drawn with; the
    denominator bookkeeping of every later equality check depends on it.
    """

    value: ScaledExact
    precision: int

    def __post_init__(self):
        if not (ZERO < self.value < ONE):
            raise ValueError("epsilon must lie strictly inside (0, 1)")
        if self.value.e > self.precision:
            raise ValueError("value finer than the declared grid")


def sample_epsilon(
    rng: random.Random, precision: int, floor: ScaledExact = ZERO
) -> EpsilonSample:
    """Draw k/10**precision uniformly with floor <= k/10**precision < 1.

    With floor = 0 the draw is uniform over the full grid {k/10**N : 0<k<10**N}.
    A configured floor keeps increments away from zero so that perturbations
    remain numerically visible in float mode.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if not (ZERO <= floor < ONE):
        raise ValueError("floor must lie in [0, 1)")
    ten_n = 10**precision
    if floor.is_zero():
        k_min = 1
    else:
        # ceil(floor * 10**N), exactly
        if floor.e <= precision:
            k_min = max(1, floor.p * 10 ** (precision - floor.e))
        else:
            q = 10 ** (floor.e - precision)
            k_min = max(1, -((-floor.p) // q))
    if k_min > ten_n - 1:
        raise ValueError("floor leaves no grid points to sample")
    k = rng.randrange(k_min, ten_n)
    return EpsilonSample(ScaledExact(k, precision), precision)
