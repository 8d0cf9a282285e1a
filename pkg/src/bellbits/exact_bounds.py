"""Exact values for the sphere correlation game.

Every bound handled by this toolkit -- the local optimum ``L(n)``, the
quantum value ``1/n``, the one-bit communication cap ``sqrt(2)*L(n)`` and
the quantum/local ratios -- lives in the number system

    (p/q) * pi**k * sqrt(2)**s,    p, q integers, s in {0, 1}.

:class:`ExactValue` closes that system under multiplication and division,
so table rows can be reproduced and compared field-wise instead of through
floating point.  The building block is the sine-power integral

    s_n = integral of sin(t)**n over [0, pi],

which obeys s_n = ((n-1)/n) * s_{n-2} with s_0 = pi and s_1 = 2.  The mean
absolute coordinate on the unit sphere S^(n-1) reduces to a latitude
integral and comes out as

    kappa(n) = mean of |a_1| over S^(n-1) = 2 / ((n-1) * s_{n-2}),

whose square is the best Bell value a local (no-communication) sign
strategy can reach.  One transmitted bit raises that ceiling by exactly
sqrt(2); the quantum value 1/n overtakes the raised ceiling first at n = 5.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ExactValue",
    "BoundsRow",
    "PI",
    "SQRT2",
    "wallis_integral",
    "kappa",
    "local_bound",
    "quantum_lower_bound",
    "one_bit_cap",
    "ratio",
    "threshold_dimension",
    "bounds_row",
]

_SQRT2_FLOAT = math.sqrt(2.0)

_EXACT_RE = re.compile(r"^(-?\d+)/(\d+)\*pi\^(-?\d+)\*sqrt2\^(-?\d+)$")


@dataclass(frozen=True)
class ExactValue:
    """A number of the form ``(numerator/denominator) * pi**pi_power * sqrt(2)**sqrt2_power``.

    Instances are canonical: the fraction is reduced with a positive
    denominator, even powers of sqrt(2) are folded into the fraction so
    that ``sqrt2_power`` is 0 or 1, and zero is stored as ``0/1 * pi^0 *
    sqrt2^0``.  Equality and hashing are field-wise on the canonical form.
    """

    numerator: int
    denominator: int = 1
    pi_power: int = 0
    sqrt2_power: int = 0

    def __post_init__(self):
        if self.denominator == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        rational = Fraction(self.numerator, self.denominator)
        # sqrt(2)**s = 2**(s//2) * sqrt(2)**(s % 2), also for negative s
        rational *= Fraction(2) ** (self.sqrt2_power // 2)
        sqrt2_power = self.sqrt2_power % 2
        pi_power = self.pi_power
        if rational == 0:
            pi_power = 0
            sqrt2_power = 0
        object.__setattr__(self, "numerator", rational.numerator)
        object.__setattr__(self, "denominator", rational.denominator)
        object.__setattr__(self, "pi_power", pi_power)
        object.__setattr__(self, "sqrt2_power", sqrt2_power)

    @classmethod
    def from_rational(cls, value, pi_power: int = 0, sqrt2_power: int = 0) -> "ExactValue":
        f = Fraction(value)
        return cls(f.numerator, f.denominator, pi_power, sqrt2_power)

    @classmethod
    def parse(cls, text: str) -> "ExactValue":
        """Inverse of ``str``: accepts the canonical ``p/q*pi^k*sqrt2^s`` form."""
        m = _EXACT_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a canonical exact-value string: {text!r}")
        num, den, k, s = (int(g) for g in m.groups())
        return cls(num, den, k, s)

    @property
    def rational(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __mul__(self, other):
        if isinstance(other, ExactValue):
            return ExactValue.from_rational(
                self.rational * other.rational,
                self.pi_power + other.pi_power,
                self.sqrt2_power + other.sqrt2_power,
            )
        if isinstance(other, (int, Fraction)):
            return ExactValue.from_rational(
                self.rational * other, self.pi_power, self.sqrt2_power
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactValue):
            if other.numerator == 0:
                raise ZeroDivisionError("division by exact zero")
            return ExactValue.from_rational(
                self.rational / other.rational,
                self.pi_power - other.pi_power,
                self.sqrt2_power - other.sqrt2_power,
            )
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ExactValue.from_rational(
                self.rational / other, self.pi_power, self.sqrt2_power
            )
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactValue.from_rational(other) / self
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0 and self.numerator == 0:
            raise ZeroDivisionError("negative power of exact zero")
        return ExactValue.from_rational(
            self.rational ** exponent,
            self.pi_power * exponent,
            self.sqrt2_power * exponent,
        )

    def __neg__(self):
        return ExactValue(-self.numerator, self.denominator, self.pi_power, self.sqrt2_power)

    def __float__(self) -> float:
        # Fraction -> float is correctly rounded even for huge terms; the
        # pi and sqrt(2) factors are applied in one final multiply each.
        return float(self.rational) * math.pi ** self.pi_power * _SQRT2_FLOAT ** self.sqrt2_power

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}*pi^{self.pi_power}*sqrt2^{self.sqrt2_power}"


PI = ExactValue(1, 1, 1, 0)
SQRT2 = ExactValue(1, 1, 0, 1)


def _require_dimension(n: int) -> None:
    if n < 2:
        raise ValueError(f"sphere dimension parameter must be >= 2, got {n}")


def wallis_integral(n: int) -> ExactValue:
    """Integral of sin(t)**n over [0, pi], exactly.

    Evaluated by the recurrence s_n = ((n-1)/n) * s_{n-2} from the bases
    s_0 = pi and s_1 = 2; equal to sqrt(pi)*Gamma((n+1)/2)/Gamma((n+2)/2).
    Even n carry one power of pi, odd n are rational.
    """
    if n < 0:
        raise ValueError(f"sine-power integral needs n >= 0, got {n}")
    value = PI if n % 2 == 0 else ExactValue(2)
    for m in range(2 + n % 2, n + 1, 2):
        value = value * Fraction(m - 1, m)
    return value


def kappa(n: int) -> ExactValue:
    """Mean of |a_1| over the unit sphere S^(n-1): 2 / ((n-1) * s_{n-2})."""
    _require_dimension(n)
    return ExactValue(2) / (wallis_integral(n - 2) * (n - 1))


def local_bound(n: int) -> ExactValue:
    """Best Bell value of a local sign strategy: kappa(n) squared."""
    return kappa(n) ** 2


def quantum_lower_bound(n: int) -> ExactValue:
    """Bell value of the identity quantum strategy A(a)=a, B(b)=b: exactly 1/n."""
    _require_dimension(n)
    return ExactValue(1, n)


def one_bit_cap(n: int) -> ExactValue:
    """Ceiling on any local strategy aided by one communicated bit: sqrt(2) * local_bound(n)."""
    return local_bound(n) * SQRT2


def ratio(n: int) -> ExactValue:
    """Quantum-to-local ratio quantum_lower_bound(n) / local_bound(n)."""
    return quantum_lower_bound(n) / local_bound(n)


def threshold_dimension() -> int:
    """Smallest n >= 2 whose quantum/local ratio exceeds sqrt(2).

    Above this dimension one bit of communication no longer suffices to
    reach the quantum value.  The ratio is strictly increasing in n, so a
    linear scan terminates; the answer is 5.
    """
    n = 2
    while float(ratio(n)) <= _SQRT2_FLOAT:
        n += 1
    return n


@dataclass(frozen=True)
class BoundsRow:
    """All bound values for one dimension n, exact, plus the sqrt(2) flag."""

    n: int
    q_tilde: ExactValue
    kappa: ExactValue
    local: ExactValue
    one_bit_cap: ExactValue
    ratio: ExactValue
    exceeds_sqrt2: bool


def bounds_row(n: int) -> BoundsRow:
    """Assemble the exact bounds table row for dimension n."""
    k = kappa(n)
    local = k ** 2
    q_tilde = quantum_lower_bound(n)
    r = q_tilde / local
    return BoundsRow(
        n=n,
        q_tilde=q_tilde,
        kappa=k,
        local=local,
        one_bit_cap=local * SQRT2,
        ratio=r,
        exceeds_sqrt2=float(r) > _SQRT2_FLOAT,
    )
