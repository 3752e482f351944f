"""When does x^3 + a1 x^2 + a2 x + a3 = 0 (mod p) have three solutions?

``evaluate_statements`` computes, independently of one another, every
criterion known to be equivalent to "three roots mod p": brute-force root
count, representation by the kernel subgroup G(a1,a2,a3), the u_n / s_n
recurrences, Lucas sequences in (P0, Q0), and a binomial sum.  Each statement
is gated by its own hypotheses; gated-out statements are recorded as skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import is_prime, legendre, legendre3, sqrt_mod_p
from .character import CubicData, Subgroup, check_hypotheses, cubic_data, subgroup_for_cubic, subgroup_G
from .quadform import class_of_prime
from .sequences import binomial_sum, lucas_mod, s_mod, u_mod

LABELS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "vii'", "viii", "ix")


def _require_prime(p: int) -> None:
    if p <= 3 or not is_prime(p):
        raise ValueError(f"p = {p} must be a prime > 3")


def cubic_value(a1: int, a2: int, a3: int, x: int, p: int) -> int:
    return (((x + a1) * x + a2) * x + a3) % p


def predicted_root_counts(a1: int, a2: int, a3: int, p: int) -> frozenset[int]:
    """Possible root counts given the Legendre symbol of the discriminant."""
    D0 = cubic_data_raw(a1, a2, a3)[2]
    return {1: frozenset({0, 3}), 0: frozenset({3}), -1: frozenset({1})}[legendre(D0, p)]


def cubic_data_raw(a1: int, a2: int, a3: int) -> tuple[int, int, int]:
    """(P0, Q0, D0) without the non-degeneracy check."""
    P0 = -2 * a1**3 + 9 * a1 * a2 - 27 * a3
    Q0 = (a1 * a1 - 3 * a2) ** 3
    return P0, Q0, -(P0 * P0 - 4 * Q0) // 27


def count_roots(a1: int, a2: int, a3: int, p: int) -> int:
    """Number of distinct x in [0, p) with x^3 + a1 x^2 + a2 x + a3 = 0 mod p.

    When p does not divide the discriminant the count is checked against
    the Legendre-symbol trichotomy.
    """
    if p <= 3:
        raise ValueError("p must exceed 3")
    n = sum(1 for x in range(p) if cubic_value(a1, a2, a3, x, p) == 0)
    D0 = cubic_data_raw(a1, a2, a3)[2]
    if D0 % p:
        assert n in predicted_root_counts(a1, a2, a3, p), (a1, a2, a3, p, n)
    return n


@lru_cache(maxsize=1024)
def _cubic_subgroup(a1: int, a2: int, a3: int) -> Subgroup:
    return subgroup_for_cubic(a1, a2, a3)


@lru_cache(maxsize=1024)
def _subgroup_G(P: int, D: int) -> Subgroup:
    return subgroup_G(P, D)


@dataclass
class CriterionReport:
    p: int
    cubic: tuple[int, int, int]
    legendre_D0: int
    verdicts: dict[str, bool] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)

    @property
    def applicable(self) -> tuple[str, ...]:
        return tuple(k for k in LABELS if k in self.verdicts)

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    @property
    def three_roots(self) -> bool:
        return self.verdicts["i"]

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "cubic": list(self.cubic),
            "legendre_D0": self.legendre_D0,
            "verdicts": {k: self.verdicts[k] for k in self.applicable},
            "skipped": dict(self.skipped),
            "consistent": self.consistent,
        }


def statement_ii(data: CubicData, p: int) -> bool:
    """p is represented by some class of G(a1, a2, a3)."""
    if legendre(data.D0, p) != 1:
        return False
    G = _cubic_subgroup(data.a1, data.a2, data.a3)
    return class_of_prime(p, data.D1) in G


def evaluate_statements(a1: int, a2: int, a3: int, p: int) -> CriterionReport:
    """Evaluate statements (i)-(ix) at the prime p.

    Raises ValueError unless p > 3 is prime and p does not divide D0 Q0.
    """
    _require_prime(p)
    data = cubic_data(a1, a2, a3)
    P0, Q0, D0 = data.P0, data.Q0, data.D0
    if (D0 * Q0) % p == 0:
        raise ValueError(f"p = {p} divides D0 Q0 = {D0 * Q0}")
    rep = CriterionReport(p, (a1, a2, a3), legendre(D0, p))
    v, s = rep.verdicts, rep.skipped
    e = a1 * a1 - 3 * a2
    chi_p = legendre3(p)
    m = (p - chi_p) // 3
    third = p // 3
    p_divides_P0 = P0 % p == 0
    p_divides_P0c = (P0 * (P0 * P0 - 3 * Q0)) % p == 0

    v["i"] = count_roots(a1, a2, a3, p) == 3

    if data.D1 < 0:
        v["ii"] = statement_ii(data, p)
    else:
        s["ii"] = "indefinite discriminant out of scope"

    if p_divides_P0:
        s["iii"] = s["iv"] = s["vi"] = "p | P0"
    else:
        v["iii"] = u_mod(a1, a2, a3, p - 2, p) == 0
        v["iv"] = u_mod(0, -3 * e, 2 * a1**3 - 9 * a1 * a2 + 27 * a3, p, p) == 0
        v["vi"] = lucas_mod(P0, Q0, m, p)[0] == 0

    v["v"] = s_mod(a1, a2, a3, p + 1, p) == (a1 * a1 - 2 * a2) % p
    v["vii"] = lucas_mod(P0, Q0, m, p)[1] == 2 * pow(e, (1 - chi_p) // 2, p) % p

    if p_divides_P0c:
        s["vii'"] = s["viii"] = "p | P0 (P0^2 - 3 Q0)"
    else:
        v["vii'"] = lucas_mod(P0, Q0, 2 * third + 1, p)[0] == pow(-Q0, third, p)
        v["viii"] = binomial_sum(P0, Q0, p) == 0

    if a1 != 0:
        s["ix"] = "a1 != 0"
    elif p_divides_P0:
        s["ix"] = "p | a3"
    else:
        v["ix"] = u_mod(0, a2, a3, p, p) == 0
    return rep


def cubic_residue_test(p: int, value: int) -> bool:
    """True iff value is a cubic residue mod p, for p = 1 (mod 3)."""
    if p % 3 != 1:
        raise ValueError(f"p = {p} is not 1 mod 3")
    if value % p == 0:
        raise ValueError(f"p = {p} divides {value}")
    return pow(value, (p - 1) // 3, p) == 1


def _surd_hypotheses(P: int, D: int, p: int) -> int:
    _require_prime(p)
    if p % 3 != 1:
        raise ValueError(f"p = {p} is not 1 mod 3")
    Q = P * P + 27 * D
    if Q % p == 0:
        raise ValueError(f"p = {p} divides Q = {Q}")
    if legendre(P * P - Q, p) != 1:
        raise ValueError(f"P^2 - Q = {P * P - Q} is not a nonzero square mod {p}")
    return Q


def surd_cubic_residue(P: int, D: int, p: int) -> bool:
    """Is Q (P + sqrt(P^2 - Q)) a cubic residue mod p?  Q = P^2 + 27D.

    Both square roots are tried and must agree.
    """
    Q = _surd_hypotheses(P, D, p)
    r = sqrt_mod_p(P * P - Q, p)
    first = cubic_residue_test(p, Q * (P + r))
    second = cubic_residue_test(p, Q * (P - r))
    assert first == second, (P, D, p)
    return first


def surd_sides(P: int, D: int, p: int) -> tuple[bool, bool]:
    """(cubic residue verdict, class of p lies in G(P, D))."""
    _surd_hypotheses(P, D, p)
    if D >= 0:
        raise ValueError("indefinite discriminant out of scope")
    check_hypotheses(P, D)
    lhs = surd_cubic_residue(P, D, p)
    rhs = class_of_prime(p, D) in _subgroup_G(P, D)
    return lhs, rhs


def surd_criterion_check(P: int, D: int, p: int) -> bool:
    lhs, rhs = surd_sides(P, D, p)
    return lhs == rhs
