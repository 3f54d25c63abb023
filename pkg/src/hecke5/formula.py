"""Closed-form index of a principal congruence level.

The total index is I_a * J_b * N(pi)^3 * prod over primes P dividing pi
of (1 - N(P)^-2), where a and b are the exponents of the inert primes (2)
and (3) and pi is the part of the level with norm coprime to 6.  The
constants: I_0 = 1, I_1 = 10, I_a = 5 * 2^(6(a-1)) for a >= 2, J_0 = 1,
J_b = 120 * 3^(6(b-1)) for b >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import IdealHNF, PrimeFactor, factor_ideal


@dataclass(frozen=True)
class StepBound:
    exact: int
    bound: int


@dataclass(frozen=True)
class IndexReport:
    level: IdealHNF
    factors: tuple[tuple[PrimeFactor, int], ...]
    i_a: int
    j_b: int
    coprime_part_norm: int
    total: int


def _i_constant(a: int) -> int:
    if a == 0:
        return 1
    if a == 1:
        return 10
    return 5 * 2 ** (6 * (a - 1))


def _j_constant(b: int) -> int:
    if b == 0:
        return 1
    return 120 * 3 ** (6 * (b - 1))


def _coprime_partial(pf: PrimeFactor) -> int:
    # N(P)^(3e) * (1 - N(P)^-2), always integral since 3e - 2 >= 1
    n = pf.prime.norm
    return n ** (3 * pf.exponent - 2) * (n * n - 1)


def index_formula(level: IdealHNF) -> IndexReport:
    """Pure integer arithmetic; never enumerates."""
    if level.norm < 2:
        raise ValueError("level must be a proper ideal (norm >= 2)")
    a = b = 0
    coprime_norm = 1
    factors = []
    total = 1
    for pf in factor_ideal(level):
        p = pf.rational_prime
        if p == 2:
            a = pf.exponent
            partial = _i_constant(a)
        elif p == 3:
            b = pf.exponent
            partial = _j_constant(b)
        else:
            partial = _coprime_partial(pf)
            coprime_norm *= pf.prime.norm**pf.exponent
        factors.append((pf, partial))
        total *= partial
    return IndexReport(level, tuple(factors), _i_constant(a), _j_constant(b), coprime_norm, total)


def index_prime_power(p: int, n: int, tau_exponent: int = 0) -> int:
    """Index at a prime-power-norm level.

    For inert p or p = 5 the level is p^n (read as tau^n when p = 5).
    For split p = +-1 mod 5 the level is p^n * tau^tau_exponent with tau
    one of the two primes above p; tau_exponent must be 0 otherwise.
    """
    if n < 0 or tau_exponent < 0 or (n == 0 and tau_exponent == 0):
        raise ValueError("need a positive prime-power level")
    if p == 2:
        if tau_exponent:
            raise ValueError("2 is inert; no split part")
        return _i_constant(n)
    if p == 3:
        if tau_exponent:
            raise ValueError("3 is inert; no split part")
        return _j_constant(n)
    if p == 5:
        if tau_exponent:
            raise ValueError("pass the tau-power as n for p = 5")
        return 24 * 5 ** (3 * n - 2)
    if p % 5 in (2, 3):
        if tau_exponent:
            raise ValueError(f"{p} is inert; no split part")
        q = p * p
        return q ** (3 * n - 2) * (q * q - 1)
    # split prime: level p^n tau^s = tau^(n+s) sigma^n
    total = p ** (3 * (n + tau_exponent) - 2) * (p * p - 1)
    if n:
        total *= p ** (3 * n - 2) * (p * p - 1)
    return total


def index_bound_step(pi: IdealHNF, n: int) -> StepBound:
    """Exact index step from level pi^n to pi^(n+1) for a prime ideal,
    together with the generic N(pi)^3 upper bound."""
    if n < 1:
        raise ValueError("tower step needs n >= 1")
    factors = factor_ideal(pi)
    if len(factors) != 1 or factors[0].exponent != 1:
        raise ValueError(f"{pi} is not a prime ideal")
    pf = factors[0]
    p = pf.rational_prime
    bound = pi.norm**3
    if pf.ramified:
        return StepBound(125, bound)
    if p == 2:
        return StepBound(32 if n == 1 else 64, bound)
    if pf.residue_degree == 2:
        return StepBound(p**6, bound)
    return StepBound(p**3, bound)
