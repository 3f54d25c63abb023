"""2x2 matrices over Z[L], the generators S and T, and the reduced-form
machinery: word evaluation, the pseudo-Euclidean reduction of a fraction,
the membership test, column completion and parabolic conjugates."""

from __future__ import annotations

from dataclasses import dataclass, field

from .golden import (
    GoldenInt,
    LAMBDA,
    ONE,
    UnitDecomposition,
    ZERO,
    divmod_pseudo,
    parse_element,
    unit_log,
)


class NotCoprimeError(ValueError):
    pass


class NotReducedError(ValueError):
    pass


@dataclass(frozen=True)
class Mat2:
    a11: GoldenInt
    a12: GoldenInt
    a21: GoldenInt
    a22: GoldenInt

    @classmethod
    def from_ints(cls, rows: list[list[tuple[int, int]]]) -> Mat2:
        (p, q), (r, s) = rows
        return cls(GoldenInt(*p), GoldenInt(*q), GoldenInt(*r), GoldenInt(*s))

    def __mul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def det(self) -> GoldenInt:
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> Mat2:
        d = self.det()
        adj = Mat2(self.a22, -self.a12, -self.a21, self.a11)
        if d == ONE:
            return adj
        if d == -ONE:
            return -adj
        raise ValueError(f"only det +-1 matrices are invertible here, det = {d}")

    def __pow__(self, n: int) -> Mat2:
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out * base
        return out

    def entries(self) -> tuple[GoldenInt, GoldenInt, GoldenInt, GoldenInt]:
        return self.a11, self.a12, self.a21, self.a22

    def __str__(self) -> str:
        return f"[[{self.a11},{self.a12}],[{self.a21},{self.a22}]]"


IDENTITY = Mat2(ONE, ZERO, ZERO, ONE)
S = Mat2(ZERO, ONE, -ONE, ZERO)
T = Mat2(ONE, LAMBDA, ZERO, ONE)
S_INV = Mat2(ZERO, -ONE, ONE, ZERO)
T_INV = Mat2(ONE, -LAMBDA, ZERO, ONE)
MINUS_IDENTITY = -IDENTITY

_LETTERS = {"S": S, "s": S_INV, "T": T, "t": T_INV}


def eval_word(word: str) -> Mat2:
    """Left-to-right product over the alphabet S, s (=S^-1), T, t (=T^-1)."""
    out = IDENTITY
    for letter in word:
        try:
            out = out * _LETTERS[letter]
        except KeyError:
            raise ValueError(f"bad word letter {letter!r}") from None
    return out


def translation(q: int) -> Mat2:
    """[[1, q*L], [0, 1]] = T**q without the repeated multiplication."""
    return Mat2(ONE, GoldenInt(0, q), ZERO, ONE)


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of the pseudo-Euclidean reduction of a fraction a/b.

    completion is a det-1 matrix of the group with
    completion * (unit.sign, 0)^T = (a*L^e, b*L^e)^T.
    """

    e: int
    completion: Mat2
    unit: UnitDecomposition
    quotients: list[int] = field(default_factory=list)


def reduce_fraction(a: GoldenInt, b: GoldenInt) -> ReductionResult:
    """Run the pseudo-Euclidean recursion on (a, b) and accumulate the
    elementary matrices into a completion matrix.

    Requires gcd(a, b) to be a unit.  The reduced factor e is minus the
    L-exponent of the final remainder, so a*L^e / b*L^e is the reduced
    form of a/b.
    """
    if not a and not b:
        raise ValueError("reduce_fraction(0, 0) is undefined")
    completion = IDENTITY
    quotients: list[int] = []
    while b:
        q, r = divmod_pseudo(a, b)
        quotients.append(q)
        # (a, b)^T = T^q * S^-1 * (b, -r)^T
        completion = completion * translation(q) * S_INV
        a, b = b, -r
    if not a.is_unit():
        raise NotCoprimeError(f"gcd is {a}, not a unit")
    unit = unit_log(a)
    return ReductionResult(-unit.exponent, completion, unit, quotients)


def is_reduced(a: GoldenInt, b: GoldenInt) -> bool:
    """True iff (a, b)^T already occurs as a column of a group element."""
    return reduce_fraction(a, b).e == 0


def is_member(m: Mat2) -> bool:
    """Membership in the Hecke group: det 1 and both columns reduced."""
    if m.det() != ONE:
        return False
    try:
        return is_reduced(m.a11, m.a21) and is_reduced(m.a12, m.a22)
    except NotCoprimeError:
        return False


def complete_column(a: GoldenInt, c: GoldenInt) -> Mat2:
    """A group element with first column (a, c)^T, for reduced coprime (a, c)."""
    rr = reduce_fraction(a, c)
    if rr.e != 0:
        raise NotReducedError(f"({a}, {c}) has reduced factor {rr.e} != 0")
    x = rr.completion if rr.unit.sign == 1 else rr.completion * MINUS_IDENTITY
    assert x.a11 == a and x.a21 == c
    return x


def parabolic_conjugate(a: GoldenInt, c: GoldenInt, m: int) -> Mat2:
    """X * T^m * X^-1 for X completing the column (a, c).

    Equals [[1 - a*c*m*L, a^2*m*L], [-c^2*m*L, 1 + a*c*m*L]]; every
    off-identity entry is divisible by m.
    """
    x = complete_column(a, c)
    out = x * Mat2(ONE, GoldenInt(0, m), ZERO, ONE) * x.inverse()
    ml = GoldenInt(0, m)
    expected = Mat2(
        ONE - a * c * ml, a * a * ml, -(c * c) * ml, ONE + a * c * ml
    )
    assert out == expected
    return out


def parse_matrix(text: str) -> Mat2:
    """Parse the literal `[[a,b],[c,d]]` with element-grammar entries."""
    s = "".join(text.split())
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ValueError(f"bad matrix literal: {text!r}")
    rows = s[2:-2].split("],[")
    if len(rows) != 2:
        raise ValueError(f"bad matrix literal: {text!r}")
    entries = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad matrix row: {row!r}")
        entries.extend(parse_element(p) for p in parts)
    return Mat2(*entries)
