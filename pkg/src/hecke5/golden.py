"""Exact arithmetic in Z[L] where L = (1 + sqrt 5)/2, so L^2 = L + 1.

Elements are stored as integer pairs (a, b) meaning a + b*L.  All
comparisons against the real embedding are decided by exact integer sign
tests; floating point is only ever used as a first guess that is then
corrected exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NotAUnitError(ValueError):
    pass


class IterationCapError(RuntimeError):
    """Safeguard cap hit; indicates a bug, not a user error."""


@dataclass(frozen=True)
class GoldenInt:
    """a + b*L with exact integer coordinates."""

    a: int
    b: int

    def __add__(self, other: GoldenInt) -> GoldenInt:
        return GoldenInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: GoldenInt) -> GoldenInt:
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other: GoldenInt | int) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        # (a1 + b1 L)(a2 + b2 L), rewriting L^2 = L + 1
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return GoldenInt(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conjugate(self) -> GoldenInt:
        """Galois conjugate, L -> 1 - L."""
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """Absolute norm |a^2 + a*b - b^2|."""
        return abs(self.a * self.a + self.a * self.b - self.b * self.b)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def sign(self) -> int:
        """Exact sign of the real value a + b*(1+sqrt5)/2.

        Doubling gives (2a+b) + b*sqrt5; when the two parts disagree in
        sign the answer comes from comparing (2a+b)^2 with 5 b^2.
        """
        u = 2 * self.a + self.b
        v = self.b
        if v == 0:
            return (u > 0) - (u < 0)
        if u == 0:
            return 1 if v > 0 else -1
        if (u > 0) == (v > 0):
            return 1 if u > 0 else -1
        # mixed signs; u^2 = 5 v^2 would force u = v = 0
        big = u * u > 5 * v * v
        return (1 if big else -1) * (1 if u > 0 else -1)

    def abs_real(self) -> GoldenInt:
        return self if self.sign() >= 0 else -self

    def divides(self, other: GoldenInt) -> bool:
        """Exact divisibility test in Z[L]."""
        if not self:
            return not other
        q = exact_div(other, self)
        return q is not None

    def __str__(self) -> str:
        return format_element(self)


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
LAMBDA = GoldenInt(0, 1)
LAMBDA_INV = GoldenInt(-1, 1)  # L^-1 = L - 1


@dataclass(frozen=True)
class UnitDecomposition:
    """sign * L**exponent, the unique decomposition of a unit."""

    sign: int
    exponent: int


def compare_real(x: GoldenInt, y: GoldenInt) -> int:
    """-1, 0 or 1 as x <, = or > y under the real embedding."""
    return (x - y).sign()


def exact_div(x: GoldenInt, y: GoldenInt) -> GoldenInt | None:
    """x / y if it lies in Z[L], else None."""
    if not y:
        raise ZeroDivisionError("division by zero in Z[L]")
    n = y.a * y.a + y.a * y.b - y.b * y.b  # signed norm
    z = x * y.conjugate()
    if z.a % n or z.b % n:
        return None
    return GoldenInt(z.a // n, z.b // n)


def _real_fraction(x: GoldenInt, prec: int) -> Fraction:
    # (2a+b)*2^p + b*floor(sqrt(5*4^p)), halved: a rational sandwich of the
    # real value, good to ~prec bits
    s5 = math.isqrt(5 << (2 * prec))
    return Fraction((2 * x.a + x.b) * (1 << prec) + x.b * s5, 1 << (prec + 1))


def _floor_quotient(w: GoldenInt, n: int) -> int:
    """Exact floor of the real value of w / n for a positive integer n.

    A truncated sqrt(5) proposes the floor; the exact sign test then walks
    it into place (at most a step or two given the precision margin).
    """
    prec = abs(w.b).bit_length() + 16
    s5 = math.isqrt(5 << (2 * prec))
    f = ((2 * w.a + w.b) * (1 << prec) + w.b * s5) // (2 * n << prec)
    n_elt = GoldenInt(n, 0)
    while (w - n_elt * f).sign() < 0:
        f -= 1
    while (w - n_elt * (f + 1)).sign() >= 0:
        f += 1
    return f


def divmod_pseudo(a: GoldenInt, b: GoldenInt) -> tuple[int, GoldenInt]:
    """Pseudo-Euclidean division a = (q*L)*b + r.

    r is pinned to the half-open interval (-|b*L|/2, |b*L|/2] of the real
    line.  The quotient a / (b*L) is first cleared to an integer
    denominator, so the floor is computed exactly even when b*L has a tiny
    real value with huge coordinates; the exact interval test on a small
    window around the floor is the only arbiter.
    """
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    c = LAMBDA * b
    n = c.a * c.a + c.a * c.b - c.b * c.b  # signed norm, = c * conj(c)
    w = a * c.conjugate()
    if n < 0:
        n, w = -n, -w
    f = _floor_quotient(w, n)
    abs_c = c.abs_real()
    for q in (f, f + 1, f - 1, f + 2):
        r = a - c * q
        r2 = r + r
        if (r2 + abs_c).sign() > 0 and (r2 - abs_c).sign() <= 0:
            return q, r
    raise AssertionError(f"no pseudo-quotient near {f} for {a} / {b}")


def gcd_pseudo(a: GoldenInt, b: GoldenInt) -> tuple[GoldenInt, list[int]]:
    """Last nonzero remainder of iterated pseudo-division, plus quotients.

    The cap converts a (theoretically impossible) non-terminating run into
    a diagnosable error.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    bits = max(abs(x).bit_length() for x in (a.a, a.b, b.a, b.b))
    cap = 64 + 4 * bits
    quotients: list[int] = []
    while b:
        if len(quotients) > cap:
            raise IterationCapError(f"gcd exceeded {cap} pseudo-divisions")
        q, r = divmod_pseudo(a, b)
        quotients.append(q)
        a, b = b, r
    return a, quotients


def unit_log(x: GoldenInt) -> UnitDecomposition:
    """Write a unit as sign * L**k; errors if norm(x) != 1."""
    if x.norm() != 1:
        raise NotAUnitError(f"{x} has norm {x.norm()}, not a unit")
    sign = x.sign()
    y = x if sign > 0 else -x
    k = 0
    cap = 16 + 2 * max(abs(v).bit_length() for v in (x.a, x.b))
    while y != ONE:
        if abs(k) > cap:
            raise IterationCapError("unit_log failed to reach 1")
        if compare_real(y, ONE) > 0:
            y = y * LAMBDA_INV
            k += 1
        else:
            y = y * LAMBDA
            k -= 1
    return UnitDecomposition(sign, k)


def lambda_power(k: int) -> GoldenInt:
    """L**k for any integer k."""
    base = LAMBDA if k >= 0 else LAMBDA_INV
    out = ONE
    for _ in range(abs(k)):
        out = out * base
    return out


def parse_element(text: str) -> GoldenInt:
    """Parse the literal grammar: integer coefficients, `L` for lambda.

    Examples: `3+2L`, `-4L-2`, `0`, `L`.  Whitespace is insignificant.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty element literal")
    a = b = 0
    i = 0
    seen_term = False
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        digits = s[i:j]
        i = j
        if i < len(s) and s[i] in "Ll":
            b += sign * (int(digits) if digits else 1)
            i += 1
        elif digits:
            a += sign * int(digits)
        else:
            raise ValueError(f"bad element literal at position {i}: {text!r}")
        seen_term = True
    if not seen_term:
        raise ValueError(f"bad element literal: {text!r}")
    return GoldenInt(a, b)


def format_element(x: GoldenInt) -> str:
    """Canonical form `a+bL`, both coefficients always printed."""
    return f"{x.a}{x.b:+d}L"
