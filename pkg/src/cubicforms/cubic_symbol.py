"""The cubic Jacobi symbol (alpha/beta)_3 over Z[w].

``cubic_jacobi`` never factors its denominator.  It runs a Euclid-style loop:
reduce the numerator, peel off units and powers of 1 - w with the closed-form
supplementary laws, then swap numerator and denominator by Eisenstein's
reciprocity law for primary elements.  ``residue_character_oracle`` is the
slow textbook definition (Euler's criterion in Z[w]/(pi)) used to check it.
"""

from __future__ import annotations

from enum import Enum

from .arith import is_prime
from .eisenstein import (
    OMEGA,
    OMEGA2,
    ONE,
    EisensteinInt,
    IntLike,
    divides,
    divrem,
    norm,
    primary_decompose,
)


class SymbolValue(Enum):
    """Values of a cubic residue symbol: 0 or a cube root of unity w**k."""

    ZERO = None
    ONE = 0
    OMEGA = 1
    OMEGA_SQ = 2

    @classmethod
    def from_exponent(cls, k: int) -> "SymbolValue":
        return cls(k % 3)

    @property
    def exponent(self) -> int:
        if self is SymbolValue.ZERO:
            raise ValueError("ZERO has no exponent")
        return self.value

    def __mul__(self, other: "SymbolValue") -> "SymbolValue":
        if self is SymbolValue.ZERO or other is SymbolValue.ZERO:
            return SymbolValue.ZERO
        return SymbolValue.from_exponent(self.value + other.value)

    def __pow__(self, n: int) -> "SymbolValue":
        if self is SymbolValue.ZERO:
            return SymbolValue.ONE if n == 0 else SymbolValue.ZERO
        return SymbolValue.from_exponent(self.value * n)

    def inverse(self) -> "SymbolValue":
        return self ** 2

    def to_eisenstein(self) -> EisensteinInt:
        if self is SymbolValue.ZERO:
            return EisensteinInt(0, 0)
        return (ONE, OMEGA, OMEGA2)[self.value]

    def __str__(self) -> str:
        return {None: "0", 0: "1", 1: "w", 2: "w^2"}[self.value]


def _omega_exponent(beta: EisensteinInt) -> int:
    # (w / a+bw) = w^((a+b+1)/3) for primary a+bw
    num = beta.a + beta.b + 1
    assert num % 3 == 0, beta
    return num // 3


def _lambda_exponent(beta: EisensteinInt) -> int:
    # ((1-w) / a+bw) = w^(2(a+1)/3) for primary a+bw
    num = 2 * (beta.a + 1)
    assert num % 3 == 0, beta
    return num // 3


def normalize_denominator(beta: IntLike) -> EisensteinInt:
    """Return the primary element among +-beta.

    Accepted denominators are a + bw with 3 | b and 3 does not divide a.  This
    covers every rational integer prime to 3.
    """
    beta = EisensteinInt.coerce(beta)
    if not beta:
        raise ValueError("cubic symbol with zero denominator")
    if norm(beta) % 3 == 0:
        raise ValueError(f"symbol undefined: {beta} is divisible by 1 - w")
    if beta.b % 3:
        raise ValueError(f"denominator {beta} is not congruent to +-2 mod 3")
    return beta if beta.is_primary() else -beta


def cubic_jacobi(alpha: IntLike, beta: IntLike) -> SymbolValue:
    """Cubic Jacobi symbol (alpha / beta)_3.

    ``beta`` must be congruent to +-2 mod 3 (in particular any rational integer
    not divisible by 3).  By convention (alpha / +-1)_3 = 1.
    """
    alpha = EisensteinInt.coerce(alpha)
    beta = normalize_denominator(beta)
    k = 0
    while norm(beta) > 1:
        r = divrem(alpha, beta)[1]
        if not r:
            return SymbolValue.ZERO
        d = primary_decompose(r)
        # the sign of r is a cube and drops out
        k += d.i * _omega_exponent(beta) + d.j * _lambda_exponent(beta)
        alpha, beta = beta, d.primary
    return SymbolValue.from_exponent(k)


def _admissible_prime_norm(pi: EisensteinInt) -> int:
    n = norm(pi)
    if n % 3 == 1 and is_prime(n):
        return n
    if pi.b == 0 and pi.a % 3 == 2 and is_prime(pi.a):
        return n
    raise ValueError(f"{pi} is not a primary prime of Z[w]")


def residue_character_oracle(alpha: IntLike, pi: IntLike) -> SymbolValue:
    """(alpha / pi)_3 from the definition alpha^((N(pi)-1)/3) = w^i mod pi."""
    alpha = EisensteinInt.coerce(alpha)
    pi = EisensteinInt.coerce(pi)
    if not pi.is_primary():
        raise ValueError(f"{pi} is not primary")
    n = _admissible_prime_norm(pi)
    e = (n - 1) // 3
    base = divrem(alpha, pi)[1]
    if not base:
        return SymbolValue.ZERO
    acc = ONE
    while e:
        if e & 1:
            acc = divrem(acc * base, pi)[1]
        base = divrem(base * base, pi)[1]
        e >>= 1
    for k, unit in enumerate((ONE, OMEGA, OMEGA2)):
        if divides(pi, acc - unit):
            return SymbolValue.from_exponent(k)
    raise ArithmeticError(f"{alpha}^((N-1)/3) mod {pi} is not a cube root of unity")
