"""
Exact scalar arithmetic for summability matrices.

Rationals are Python's fractions.Fraction. This module adds the Gaussian
rationals Q(i) used for complex Karamata parameters, pi-graded rationals
q * pi^m used by the sin^2(pi z / 2) example, a binomial coefficient that is
total over the integers, and two independent Bernoulli number algorithms.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from summability.errors import DomainError, GradeMismatchError

# Exact rational scalar; canonical form and exactness come from Fraction.
Rational = Fraction

RationalLike = Union[Fraction, int]


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational in "p/q" (or integer) text form.

    Args:
        text: Text such as "-5/6", "3" or "1/2"

    Returns:
        Canonical Fraction

    Raises:
        DomainError: If the text is not a rational or has a zero denominator
    """
    cleaned = text.strip().replace("−", "-")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"Not a rational number: {text!r}") from e


def format_rational(value: RationalLike) -> str:
    """Return the "p/q" text form with the sign on p ("3" for 3/1)."""
    return str(Fraction(value))


@dataclass(frozen=True, eq=False)
class ComplexRational:
    """
    Exact complex number re + im*i with rational parts.

    Mixes freely with int and Fraction operands; the result is always a
    ComplexRational.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: Any) -> ComplexRational:
        """Lift an int, Fraction or ComplexRational into Q(i)."""
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value), Fraction(0))
        if isinstance(value, str):
            return parse_complex(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to ComplexRational")

    @classmethod
    def zero(cls) -> ComplexRational:
        return cls(Fraction(0), Fraction(0))

    @classmethod
    def one(cls) -> ComplexRational:
        return cls(Fraction(1), Fraction(0))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2, exact."""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> ComplexRational:
        return ComplexRational(self.re, -self.im)

    def inverse(self) -> ComplexRational:
        """
        Multiplicative inverse.

        Raises:
            ZeroDivisionError: If the value is zero
        """
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("ComplexRational division by zero")
        return ComplexRational(self.re / n, -self.im / n)

    def __add__(self, other: Any) -> ComplexRational:
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> ComplexRational:
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other: Any) -> ComplexRational:
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> ComplexRational:
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> ComplexRational:
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> ComplexRational:
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> ComplexRational:
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> ComplexRational:
        # 0**0 == 1, which the Karamata entry formula relies on.
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = ComplexRational.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"

    def __repr__(self) -> str:
        return f"ComplexRational({self})"


def _imaginary_split(body: str) -> int:
    """Index of the sign starting the imaginary part, or -1; exponent signs ("1e-3") are skipped."""
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            return i
    return -1


def parse_complex(text: str) -> ComplexRational:
    """
    Parse "re", "re+im i", "re-im i" or "im i" with rational parts.

    Examples: "1/2", "1/2+0i", "1/4-1/3i", "-i", "2/5i", "1/2+1e-3i".

    Raises:
        DomainError: If the text is malformed
    """
    s = text.strip().replace(" ", "").replace("−", "-")
    if not s:
        raise DomainError("Empty complex number")
    if not s.endswith("i"):
        return ComplexRational(parse_rational(s), Fraction(0))

    body = s[:-1]
    split = _imaginary_split(body)
    if split <= 0:
        re_text, im_text = "0", body
    else:
        re_text, im_text = body[:split], body[split:]

    if im_text in ("", "+"):
        im = Fraction(1)
    elif im_text == "-":
        im = Fraction(-1)
    else:
        im = parse_rational(im_text)
    return ComplexRational(parse_rational(re_text), im)


_PI_GRADED_TEXT = re.compile(r"^(?P<q>[^*]+?)(?:\*pi(?:\^(?P<grade>\d+))?)?$")


@dataclass(frozen=True)
class PiGradedValue:
    """
    Exact value q * pi^grade.

    Zero has no meaningful grade; it is stored with grade 0 and acts as the
    additive identity for every grade. Adding two nonzero values of different
    grade raises GradeMismatchError.
    """

    q: Fraction
    grade: int = 0

    def __post_init__(self) -> None:
        if self.grade < 0:
            raise GradeMismatchError(f"Negative pi grade: {self.grade}")
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 0:
            object.__setattr__(self, "grade", 0)

    @classmethod
    def coerce(cls, value: Any) -> PiGradedValue:
        """Lift an int or Fraction to grade 0."""
        if isinstance(value, PiGradedValue):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value), 0)
        if isinstance(value, str):
            return parse_pi_graded(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to PiGradedValue")

    def __add__(self, other: Any) -> PiGradedValue:
        try:
            o = PiGradedValue.coerce(other)
        except TypeError:
            return NotImplemented
        if o.q == 0:
            return self
        if self.q == 0:
            return o
        if self.grade != o.grade:
            raise GradeMismatchError(
                f"Cannot add pi^{self.grade} and pi^{o.grade} terms exactly"
            )
        return PiGradedValue(self.q + o.q, self.grade)

    __radd__ = __add__

    def __neg__(self) -> PiGradedValue:
        return PiGradedValue(-self.q, self.grade)

    def __sub__(self, other: Any) -> PiGradedValue:
        try:
            o = PiGradedValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> PiGradedValue:
        try:
            o = PiGradedValue.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> PiGradedValue:
        try:
            o = PiGradedValue.coerce(other)
        except TypeError:
            return NotImplemented
        return PiGradedValue(self.q * o.q, self.grade + o.grade)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> PiGradedValue:
        try:
            o = PiGradedValue.coerce(other)
        except TypeError:
            return NotImplemented
        if o.q == 0:
            raise ZeroDivisionError("PiGradedValue division by zero")
        if self.q == 0:
            return self
        return PiGradedValue(self.q / o.q, self.grade - o.grade)

    def __bool__(self) -> bool:
        return self.q != 0

    def __float__(self) -> float:
        return float(self.q) * math.pi**self.grade

    def __complex__(self) -> complex:
        return complex(float(self))

    def __str__(self) -> str:
        q = format_rational(self.q)
        if self.grade == 0:
            return q
        if self.grade == 1:
            return f"{q}*pi"
        return f"{q}*pi^{self.grade}"


def parse_pi_graded(text: str) -> PiGradedValue:
    """
    Parse the "q*pi^m" text form ("1/4*pi^2", "-1/48*pi^4", "1").

    Raises:
        DomainError: If the text is malformed
    """
    match = _PI_GRADED_TEXT.match(text.strip().replace(" ", ""))
    if not match:
        raise DomainError(f"Not a pi-graded value: {text!r}")
    q = parse_rational(match.group("q"))
    if match.group("grade") is not None:
        grade = int(match.group("grade"))
    elif "*pi" in text:
        grade = 1
    else:
        grade = 0
    return PiGradedValue(q, grade)


def binomial(m: int, j: int) -> Fraction:
    """
    Binomial coefficient C(m, j) for any integers m and j.

    Uses the falling factorial m(m-1)...(m-j+1)/j!, so C(-1, 0) = 1 and
    C(m, j) = 0 for j < 0 or 0 <= m < j. Negative m gives the generalized
    value, e.g. C(-1, 3) = -1.

    Args:
        m: Upper index (any integer)
        j: Lower index (any integer)

    Returns:
        C(m, j) as an integer-valued Fraction
    """
    if j < 0:
        return Fraction(0)
    if j == 0:
        return Fraction(1)
    # j consecutive integers are divisible by j!
    falling = math.prod(range(m, m - j, -1))
    return Fraction(falling // math.factorial(j))


def bernoulli(n: int) -> Fraction:
    """
    Bernoulli number B_n from the explicit double sum

        B_n = sum_{k=0}^{n} 1/(k+1) sum_{r=0}^{k} (-1)^r C(k, r) r^n

    with 0^0 = 1. This convention gives B_1 = -1/2.

    Args:
        n: Index, n >= 0

    Returns:
        B_n as an exact Fraction

    Raises:
        ValueError: If n is negative
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum((-1) ** r * math.comb(k, r) * r**n for r in range(k + 1))
        total += Fraction(inner, k + 1)
    return total


def bernoulli_recurrence(n: int) -> Fraction:
    """
    Bernoulli number B_n from B_0 = 1 and

        B_m = -1/(m+1) sum_{j=0}^{m-1} C(m+1, j) B_j.

    Independent of bernoulli(); both agree exactly (B_1 = -1/2).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    values = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((math.comb(m + 1, j) * values[j] for j in range(m)), Fraction(0))
        values.append(-s / (m + 1))
    return values[n]
