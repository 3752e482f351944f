"""Third-order recurrences u_n, s_n and Lucas sequences U_n, V_n.

Terms modulo m are computed by binary powering of the companion matrix, so
index p or p+1 costs O(log p) 3x3 products.  The ``*_exact`` variants iterate
over the integers and serve as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

Matrix = list[list[int]]


def _matmul(A: Matrix, B: Matrix, m: int) -> Matrix:
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % m for j in range(n)] for i in range(n)]


def _matpow(A: Matrix, e: int, m: int) -> Matrix:
    n = len(A)
    R = [[int(i == j) % m for j in range(n)] for i in range(n)]
    A = [[x % m for x in row] for row in A]
    while e:
        if e & 1:
            R = _matmul(R, A, m)
        A = _matmul(A, A, m)
        e >>= 1
    return R


def _companion(a1: int, a2: int, a3: int) -> Matrix:
    # (x_{n+1}, x_n, x_{n-1}) = C (x_n, x_{n-1}, x_{n-2})
    return [[-a1, -a2, -a3], [1, 0, 0], [0, 1, 0]]


def u_mod(a1: int, a2: int, a3: int, n: int, p: int) -> int:
    """u_n(a1,a2,a3) mod p, u_{-2} = u_{-1} = 0, u_0 = 1."""
    if n < 0:
        raise ValueError("negative index")
    return _matpow(_companion(a1, a2, a3), n, p)[0][0]


def s_mod(a1: int, a2: int, a3: int, n: int, p: int) -> int:
    """s_n(a1,a2,a3) mod p: the n-th power sum of the roots."""
    if n < 0:
        raise ValueError("negative index")
    init = (3, -a1, a1 * a1 - 2 * a2)
    if n < 3:
        return init[n] % p
    C = _matpow(_companion(a1, a2, a3), n - 2, p)
    s2, s1, s0 = init[2], init[1], init[0]
    return (C[0][0] * s2 + C[0][1] * s1 + C[0][2] * s0) % p


def lucas_mod(b: int, c: int, n: int, p: int) -> tuple[int, int]:
    """(U_n(b, c) mod p, V_n(b, c) mod p)."""
    if n < 0:
        raise ValueError("negative index")
    M = _matpow([[b, -c], [1, 0]], n, p)
    U_next, U = M[0][0], M[1][0]
    return U, (2 * U_next - b * U) % p


def u_exact(a1: int, a2: int, a3: int, n: int) -> int:
    x = [0, 0, 1]  # u_{-2}, u_{-1}, u_0
    for _ in range(n):
        x.append(-a1 * x[-1] - a2 * x[-2] - a3 * x[-3])
    return x[-1]


def s_exact(a1: int, a2: int, a3: int, n: int) -> int:
    x = [3, -a1, a1 * a1 - 2 * a2]
    while len(x) <= n:
        x.append(-a1 * x[-1] - a2 * x[-2] - a3 * x[-3])
    return x[n]


def lucas_exact(b: int, c: int, n: int) -> tuple[int, int]:
    U0, U1, V0, V1 = 0, 1, 2, b
    for _ in range(n):
        U0, U1 = U1, b * U1 - c * U0
        V0, V1 = V1, b * V1 - c * V0
    return U0, V0


@dataclass(frozen=True)
class RecurrenceSpec:
    kind: Literal["u", "s", "LucasU", "LucasV"]
    coefficients: tuple[int, ...]
    modulus: int

    def term(self, n: int) -> int:
        if self.kind == "u":
            return u_mod(*self.coefficients, n, self.modulus)
        if self.kind == "s":
            return s_mod(*self.coefficients, n, self.modulus)
        U, V = lucas_mod(*self.coefficients, n, self.modulus)
        return U if self.kind == "LucasU" else V

    def exact(self, n: int) -> int:
        if self.kind == "u":
            return u_exact(*self.coefficients, n)
        if self.kind == "s":
            return s_exact(*self.coefficients, n)
        U, V = lucas_exact(*self.coefficients, n)
        return U if self.kind == "LucasU" else V


def binomial_sum(P0: int, Q0: int, p: int) -> int:
    """sum_{k=1}^{[p/3]} C(3k, k) r^k mod p with r = P0^2 / (27 Q0)."""
    if (27 * Q0) % p == 0:
        raise ValueError(f"p = {p} divides 27 Q0")
    r = P0 * P0 * pow(27 * Q0, -1, p) % p
    total, binom, rk = 0, 1, 1
    for k in range(p // 3):
        # C(3k+3, k+1) = C(3k, k) (3k+1)(3k+2)(3k+3) / ((k+1)(2k+1)(2k+2))
        num = (3 * k + 1) * (3 * k + 2) * (3 * k + 3)
        den = (k + 1) * (2 * k + 1) * (2 * k + 2)
        binom = binom * num % p * pow(den, -1, p) % p
        rk = rk * r % p
        total = (total + binom * rk) % p
    return total
