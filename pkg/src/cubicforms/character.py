"""The cubic character on H(4D) and its kernel G(P, D).

For P, D with 3 not dividing P (or 27 | P) and Q = P^2 + 27D = 2^q1 q0^3, the
map [a, 2b, c] -> ((P - 3b(1 + 2w)) / a)_3, evaluated on a representative with
gcd(a, 3DQ) = 1, is a homomorphism from H(4D) onto a subgroup of {1, w, w^2}.
Its kernel is the set of classes representing the primes at which the
attached cubic splits completely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .arith import icbrt, primes_between
from .cubic_symbol import SymbolValue, cubic_jacobi
from .eisenstein import EisensteinInt
from .quadform import ClassGroup, FormClass, QuadForm, coprime_representative, enumerate_class_group


class DegenerateCubic(ValueError):
    pass


class HypothesisError(ValueError):
    """(P, D) fails the 3-adic condition or Q is not of the form 2^q1 * cube."""


def split_q(Q: int) -> tuple[int, int]:
    """Write Q = 2^q1 * q0^3 with q1 in {0, 1, 2}; returns (q1, q0)."""
    if Q == 0:
        raise HypothesisError("Q = 0")
    v = (Q & -Q).bit_length() - 1
    q1 = v % 3
    odd = Q >> v
    try:
        root = icbrt(odd)
    except ValueError:
        raise HypothesisError(f"Q = {Q} is not 2^q1 times a cube") from None
    return q1, root << ((v - q1) // 3)


@dataclass(frozen=True)
class CubicData:
    a1: int
    a2: int
    a3: int
    P0: int
    Q0: int
    D0: int
    P1: int
    Q1: int
    D1: int
    q0: int
    q1: int

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def cubic_data(a1: int, a2: int, a3: int) -> CubicData:
    P0 = -2 * a1**3 + 9 * a1 * a2 - 27 * a3
    Q0 = (a1 * a1 - 3 * a2) ** 3
    num = -(P0 * P0 - 4 * Q0)
    assert num % 27 == 0
    D0 = num // 27
    if D0 == 0 or Q0 == 0:
        raise DegenerateCubic(f"degenerate cubic: D0={D0}, Q0={Q0}")
    if P0 % 2 == 0:
        P1, Q1, D1 = P0 // 2, Q0, D0 // 4
        assert D0 % 4 == 0
    else:
        P1, Q1, D1 = P0, 4 * Q0, D0
    assert P1 * P1 + 27 * D1 == Q1
    assert P1 % 3 or P1 % 27 == 0
    q1, q0 = split_q(Q1)
    return CubicData(a1, a2, a3, P0, Q0, D0, P1, Q1, D1, q0, q1)


def check_hypotheses(P: int, D: int) -> int:
    """Validate (P, D) for the character; returns Q = P^2 + 27D."""
    if P % 3 == 0 and P % 27:
        raise HypothesisError(f"P = {P} must satisfy 3 !| P or 27 | P")
    Q = P * P + 27 * D
    if D == 0 or Q == 0:
        raise HypothesisError(f"need DQ != 0 (D={D}, Q={Q})")
    split_q(Q)
    return Q


@lru_cache(maxsize=4096)
def _representative(K: FormClass, M: int) -> QuadForm:
    return coprime_representative(K, M)


def chi(P: int, D: int, K: FormClass, extra_modulus: int = 1) -> SymbolValue:
    """chi([a,2b,c]) = ((P - 3b(1+2w)) / a)_3 with gcd(a, 3DQ) = 1.

    ``extra_modulus`` forces a different representative (its first
    coefficient is also prime to it); the value must not change.
    """
    Q = check_hypotheses(P, D)
    if K.D != D:
        raise ValueError(f"{K} does not have determinant {D}")
    f = _representative(K, abs(3 * D * Q * extra_modulus))
    b = f.b
    value = cubic_jacobi(EisensteinInt(P - 3 * b, -6 * b), f.a)
    assert value is not SymbolValue.ZERO, (P, D, f)
    return value


@dataclass(frozen=True)
class Subgroup:
    ambient: ClassGroup
    members: tuple[FormClass, ...]
    P: int
    D: int
    chi_table: dict = field(compare=False)

    @property
    def index(self) -> int:
        return len(self.ambient) // len(self.members)

    def __contains__(self, K: FormClass) -> bool:
        return K in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _kernel(G: ClassGroup, P: int, D: int, table: dict) -> Subgroup:
    members = tuple(K for K in G if table[K] is SymbolValue.ONE)
    return Subgroup(G, members, P, D, table)


def subgroup_G(P: int, D: int) -> Subgroup:
    check_hypotheses(P, D)
    G = enumerate_class_group(D)
    return _kernel(G, P, D, {K: chi(P, D, K) for K in G})


def subgroup_for_cubic(a1: int, a2: int, a3: int) -> Subgroup:
    data = cubic_data(a1, a2, a3)
    if data.D1 >= 0:
        raise ValueError(f"indefinite discriminant out of scope (D1 = {data.D1})")
    return subgroup_G(data.P1, data.D1)


def subgroup_depressed(a2: int, a3: int) -> Subgroup:
    """The subgroup attached to x^3 + a2 x + a3 through the character
    [a, 2b, c] -> ((b - 3 a3'(1 + 2w)) / a)_3, a3' = 2 a3 / (3 + (-1)^a3)."""
    E = 4 * a2**3 + 27 * a3**2
    if a2 * a3 * E == 0:
        raise DegenerateCubic(f"need a2 a3 (4a2^3 + 27a3^2) != 0, got a2={a2}, a3={a3}")
    if E < 0:
        raise ValueError("indefinite discriminant out of scope")
    if a3 % 2 == 0:
        D, a3p = -E // 4, a3 // 2
    else:
        D, a3p = -E, a3
    G = enumerate_class_group(D)
    # prime to 3 a2 E and also to 2, so that gcd(a, 3 D1 Q1) = 1 as well
    M = 6 * a2 * E
    table = {}
    for K in G:
        f = _representative(K, abs(M))
        table[K] = cubic_jacobi(EisensteinInt(f.b - 3 * a3p, -6 * a3p), f.a)
    return _kernel(G, -27 * a3p, D, table)


def witness_index3(P: int, D: int, bound: int) -> Optional[int]:
    """First odd prime p0 <= bound, p0 !| 3DPQ, with D x^3 - Q x - 2Q = 0
    insolvable mod p0.  Its existence certifies that chi is onto."""
    Q = check_hypotheses(P, D)
    N = 3 * D * P * Q
    for p0 in primes_between(5, bound):
        if N % p0 == 0:
            continue
        if all((D * x**3 - Q * x - 2 * Q) % p0 for x in range(p0)):
            return p0
    return None
