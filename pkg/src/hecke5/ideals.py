"""Ideals of Z[L] as canonical Hermite-normal-form sublattices of Z^2.

An ideal is stored as the row lattice spanned by (d1, k) and (0, d2) in
coordinates (coefficient of 1, coefficient of L), with d1, d2 > 0 and
0 <= k < d2.  The triple is canonical, so ideals are hashable and compare
structurally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .golden import GoldenInt, gcd_pseudo


@dataclass(frozen=True)
class IdealHNF:
    d1: int
    k: int
    d2: int

    def __post_init__(self) -> None:
        if self.d1 <= 0 or self.d2 <= 0 or not 0 <= self.k < max(self.d2, 1):
            raise ValueError(f"not a valid HNF triple: {(self.d1, self.k, self.d2)}")

    @property
    def norm(self) -> int:
        return self.d1 * self.d2

    def basis(self) -> tuple[GoldenInt, GoldenInt]:
        return GoldenInt(self.d1, self.k), GoldenInt(0, self.d2)

    def contains(self, x: GoldenInt) -> bool:
        if x.a % self.d1:
            return False
        return (x.b - (x.a // self.d1) * self.k) % self.d2 == 0

    def is_unit_ideal(self) -> bool:
        return self.norm == 1

    def __str__(self) -> str:
        return f"[{self.d1},{self.k},{self.d2}]"


def _hnf_rows(rows: list[tuple[int, int]]) -> IdealHNF:
    """HNF of a full-rank row lattice in Z^2."""
    r1 = (0, 0)
    for row in rows:
        if row == (0, 0):
            continue
        g, u, v = _xgcd(r1[0], row[0])
        if g == 0:
            # both first coordinates vanish; fold into the y pool later
            continue
        r1 = (g, u * r1[1] + v * row[1])
    d1 = r1[0]
    if d1 == 0:
        raise ValueError("lattice is not of full rank")
    ys = [row[1] - (row[0] // d1) * r1[1] for row in rows]
    d2 = 0
    for y in ys:
        d2 = math.gcd(d2, y)
    if d2 == 0:
        raise ValueError("lattice is not of full rank")
    return IdealHNF(d1, r1[1] % d2, d2)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def ideal_from_generator(g: GoldenInt | int) -> IdealHNF:
    """HNF of the principal ideal (g), spanned over Z by g and L*g."""
    if isinstance(g, int):
        g = GoldenInt(g, 0)
    if not g:
        raise ValueError("zero element does not generate a lattice of full rank")
    ideal = _hnf_rows([(g.a, g.b), (g.b, g.a + g.b)])
    assert ideal.norm == g.norm()
    return ideal


def ideal_mul(x: IdealHNF, y: IdealHNF) -> IdealHNF:
    rows = []
    for e in x.basis():
        for f in y.basis():
            p = e * f
            rows.append((p.a, p.b))
    out = _hnf_rows(rows)
    assert out.norm == x.norm * y.norm
    return out


def ideal_pow(x: IdealHNF, n: int) -> IdealHNF:
    out = IdealHNF(1, 0, 1)
    for _ in range(n):
        out = ideal_mul(out, x)
    return out


def ideal_divides(x: IdealHNF, y: IdealHNF) -> bool:
    """True iff y is contained in x as a lattice (i.e. x | y)."""
    return all(x.contains(e) for e in y.basis())


@dataclass(frozen=True)
class PrimeFactor:
    prime: IdealHNF
    generator: GoldenInt
    exponent: int
    residue_degree: int
    ramified: bool

    @property
    def rational_prime(self) -> int:
        root = math.isqrt(self.prime.norm)
        return root if root * root == self.prime.norm else self.prime.norm


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


TAU = GoldenInt(2, 1)  # the ramified prime above 5


@lru_cache(maxsize=None)
def split_rational_prime(p: int) -> tuple[PrimeFactor, ...]:
    """Factor the ideal (p) for a rational prime p.

    p = 5 ramifies as (2+L)^2; p = +-1 mod 5 splits into two degree-1
    primes found as gcd(p, L - t) for the roots t of t^2 = t + 1 mod p;
    everything else (p = +-2 mod 5) is inert.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p == 5:
        return (PrimeFactor(ideal_from_generator(TAU), TAU, 2, 1, True),)
    if p % 5 in (1, 4):
        factors = []
        for t in range(p):
            if (t * t - t - 1) % p == 0:
                g, _ = gcd_pseudo(GoldenInt(p, 0), GoldenInt(-t, 1))
                prime = ideal_from_generator(g)
                assert prime.norm == p
                factors.append(PrimeFactor(prime, g, 1, 1, False))
        assert len(factors) == 2 and factors[0].prime != factors[1].prime
        factors.sort(key=lambda f: (f.prime.d1, f.prime.k, f.prime.d2))
        return tuple(factors)
    gp = GoldenInt(p, 0)
    return (PrimeFactor(ideal_from_generator(gp), gp, 1, 2, False),)


def factor_ideal(ideal: IdealHNF) -> list[PrimeFactor]:
    """Complete prime factorization; the product reconstructs the ideal."""
    if ideal.is_unit_ideal():
        return []
    out = []
    check = IdealHNF(1, 0, 1)
    for p in sorted(_factor_int(ideal.norm)):
        for pf in split_rational_prime(p):
            e = 0
            power = pf.prime
            while ideal_divides(power, ideal):
                e += 1
                power = ideal_mul(power, pf.prime)
            if e:
                out.append(PrimeFactor(pf.prime, pf.generator, e, pf.residue_degree, pf.ramified))
                check = ideal_mul(check, ideal_pow(pf.prime, e))
    assert check == ideal, f"factorization of {ideal} does not reconstruct"
    return out


@dataclass(frozen=True)
class ResidueRing:
    """The finite ring Z[L]/A with canonical representatives.

    Representatives are exactly {x + y*L : 0 <= x < d1, 0 <= y < d2}.
    """

    modulus: IdealHNF

    @property
    def size(self) -> int:
        return self.modulus.norm

    def reduce_pair(self, a: int, b: int) -> tuple[int, int]:
        m = self.modulus
        q = a // m.d1
        return a - q * m.d1, (b - q * m.k) % m.d2

    def reduce(self, x: GoldenInt) -> ResElt:
        a, b = self.reduce_pair(x.a, x.b)
        return ResElt(a, b, self)

    def zero(self) -> ResElt:
        return self.reduce(GoldenInt(0, 0))

    def one(self) -> ResElt:
        return self.reduce(GoldenInt(1, 0))

    def elements(self):
        for x in range(self.modulus.d1):
            for y in range(self.modulus.d2):
                yield ResElt(x, y, self)


@dataclass(frozen=True)
class ResElt:
    x: int
    y: int
    ring: ResidueRing

    def lift(self) -> GoldenInt:
        return GoldenInt(self.x, self.y)

    def __add__(self, other: ResElt) -> ResElt:
        a, b = self.ring.reduce_pair(self.x + other.x, self.y + other.y)
        return ResElt(a, b, self.ring)

    def __sub__(self, other: ResElt) -> ResElt:
        a, b = self.ring.reduce_pair(self.x - other.x, self.y - other.y)
        return ResElt(a, b, self.ring)

    def __neg__(self) -> ResElt:
        a, b = self.ring.reduce_pair(-self.x, -self.y)
        return ResElt(a, b, self.ring)

    def __mul__(self, other: ResElt) -> ResElt:
        a1, b1, a2, b2 = self.x, self.y, other.x, other.y
        a, b = self.ring.reduce_pair(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)
        return ResElt(a, b, self.ring)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}L"
