"""Exact arithmetic in the Eisenstein integers Z[w], w = (-1 + sqrt(-3)) / 2.

Elements are stored as a pair of Python ints (a, b) meaning a + b*w, with
w**2 = -1 - w.  Everything here is immutable and arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

IntLike = Union[int, "EisensteinInt"]


def _round_div(x: int, n: int) -> int:
    """Nearest integer to x/n for n > 0; exact halves round toward zero."""
    q, r = divmod(x, n)
    if 2 * r > n or (2 * r == n and q < 0):
        q += 1
    return q


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x: IntLike) -> "EisensteinInt":
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to EisensteinInt")

    def __add__(self, other: IntLike) -> "EisensteinInt":
        o = EisensteinInt.coerce(other)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other: IntLike) -> "EisensteinInt":
        o = EisensteinInt.coerce(other)
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: IntLike) -> "EisensteinInt":
        return EisensteinInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> "EisensteinInt":
        o = other if type(other) is EisensteinInt else EisensteinInt.coerce(other)
        bd = self.b * o.b
        return EisensteinInt(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EisensteinInt":
        if n < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def conj(self) -> "EisensteinInt":
        """Complex conjugate a + b*w**2."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return norm(self)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_primary(self) -> bool:
        return (self.a - 2) % 3 == 0 and self.b % 3 == 0

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        coef = "" if abs(self.b) == 1 else str(abs(self.b))
        if self.a == 0:
            return f"{'-' if self.b < 0 else ''}{coef}w"
        return f"{self.a}{sign}{coef}w"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
LAMBDA = EisensteinInt(1, -1)  # 1 - w, the prime above 3
SQRT_M3 = EisensteinInt(1, 2)  # 1 + 2w = sqrt(-3)
UNITS = (ONE, OMEGA, OMEGA2, -ONE, -OMEGA, -OMEGA2)


def norm(x: EisensteinInt) -> int:
    """N(a + bw) = a^2 - ab + b^2."""
    return x.a * x.a - x.a * x.b + x.b * x.b


def divrem(num: IntLike, den: IntLike) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division: num = q*den + r with norm(r) <= 3/4 norm(den).

    The quotient rounds each coordinate of the exact quotient to the nearest
    integer, halves toward zero.
    """
    if type(num) is not EisensteinInt:
        num = EisensteinInt.coerce(num)
    if type(den) is not EisensteinInt:
        den = EisensteinInt.coerce(den)
    if not den:
        raise ZeroDivisionError("division by zero in Z[w]")
    n = norm(den)
    # num * conj(den), conj(c + dw) = (c - d) - dw
    a, b, c, d = num.a, num.b, den.a - den.b, -den.b
    bd = b * d
    qa = _round_div(a * c - bd, n)
    qb = _round_div(a * d + b * c - bd, n)
    qbd = qb * den.b
    return EisensteinInt(qa, qb), EisensteinInt(
        num.a - (qa * den.a - qbd), num.b - (qa * den.b + qb * den.a - qbd)
    )


def divides(d: IntLike, x: IntLike) -> bool:
    d = EisensteinInt.coerce(d)
    if not d:
        return not EisensteinInt.coerce(x)
    return not divrem(x, d)[1]


def exact_div(x: IntLike, d: IntLike) -> EisensteinInt:
    q, r = divrem(x, d)
    if r:
        raise ArithmeticError(f"{d} does not divide {x}")
    return q


def _lambda_free(x: EisensteinInt) -> tuple[int, EisensteinInt]:
    """Strip factors of 1 - w; x / (1 - w) = x * (2 + w) / 3."""
    j = 0
    while (x.a + x.b) % 3 == 0:
        t = x * EisensteinInt(2, 1)
        x = EisensteinInt(t.a // 3, t.b // 3)
        j += 1
    return j, x


@dataclass(frozen=True)
class PrimaryDecomposition:
    """x = sign * w**i * (1 - w)**j * primary, primary = 2 (mod 3)."""

    sign: int
    i: int
    j: int
    primary: EisensteinInt

    def unit(self) -> EisensteinInt:
        return self.sign * OMEGA ** self.i

    def value(self) -> EisensteinInt:
        return self.unit() * LAMBDA ** self.j * self.primary


def primary_decompose(x: IntLike) -> PrimaryDecomposition:
    x = EisensteinInt.coerce(x)
    if not x:
        raise ValueError("cannot decompose 0")
    j, y = _lambda_free(x)
    # y = sign * w**i * primary  <=>  primary = sign * w**(-i) * y
    for i, inv in enumerate((ONE, OMEGA2, OMEGA)):
        cand = inv * y
        if cand.b % 3 == 0:
            sign = 1 if cand.a % 3 == 2 else -1
            return PrimaryDecomposition(sign, i, j, sign * cand)
    raise AssertionError(f"no primary associate for {y}")  # pragma: no cover


def primary_associate(x: IntLike) -> EisensteinInt:
    """The unique primary associate of x; x must be coprime to 1 - w."""
    d = primary_decompose(x)
    if d.j:
        raise ValueError(f"{x} is divisible by 1 - w")
    return d.primary


def gcd(x: IntLike, y: IntLike) -> EisensteinInt:
    """A gcd in Z[w], normalized for determinism.

    Coprime to 1 - w: the primary associate.  Otherwise (1 - w)**j times the
    primary part, i.e. the unit factor is dropped.
    """
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, divrem(x, y)[1]
    d = primary_decompose(x)
    return LAMBDA ** d.j * d.primary
