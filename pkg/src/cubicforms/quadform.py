"""Positive definite binary quadratic forms a x^2 + 2b xy + c y^2.

Forms carry the full (even) middle coefficient ``bmid`` so that the tuple
(a, bmid, c) reads exactly like the bracket notation [a, 2b, c].  The
"determinant" D = b^2 - ac is negative throughout; the discriminant is 4D.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from pathlib import Path
from typing import Iterator, Optional

from .arith import is_prime, legendre, sqrt_mod_p, xgcd

__all__ = [
    "QuadForm",
    "FormClass",
    "ClassGroup",
    "reduce",
    "enumerate_class_group",
    "compose",
    "compose_forms",
    "inverse",
    "coprime_representative",
    "sqrt_mod_p",
    "class_of_prime",
    "represents",
]


@dataclass(frozen=True)
class QuadForm:
    a: int
    bmid: int
    c: int

    def __post_init__(self):
        if self.bmid % 2:
            raise ValueError(f"middle coefficient of {self} must be even")
        if self.D >= 0:
            raise ValueError(f"{self} is not definite (D = {self.D}); indefinite forms are unsupported")
        if self.a <= 0:
            raise ValueError(f"{self} is negative definite")
        if gcd(self.a, self.bmid, self.c) != 1:
            raise ValueError(f"{self} is not primitive")

    @property
    def b(self) -> int:
        return self.bmid // 2

    @property
    def D(self) -> int:
        return self.b * self.b - self.a * self.c

    @property
    def discriminant(self) -> int:
        return 4 * self.D

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.bmid * x * y + self.c * y * y

    def is_reduced(self) -> bool:
        a, bm, c = self.a, self.bmid, self.c
        if not (abs(bm) <= a <= c):
            return False
        if (abs(bm) == a or a == c) and bm < 0:
            return False
        return True

    def transform(self, alpha: int, beta: int, gamma: int, delta: int) -> "QuadForm":
        """f(alpha X + beta Y, gamma X + delta Y); the matrix must be in SL2(Z)."""
        if alpha * delta - beta * gamma != 1:
            raise ValueError("transformation is not unimodular")
        a, b, c = self.a, self.b, self.c
        b2 = a * alpha * beta + b * (alpha * delta + beta * gamma) + c * gamma * delta
        return QuadForm(self(alpha, gamma), 2 * b2, self(beta, delta))

    def as_list(self) -> list[int]:
        return [self.a, self.bmid, self.c]

    def __str__(self) -> str:
        return f"[{self.a},{self.bmid},{self.c}]"


@dataclass(frozen=True, order=True)
class FormClass:
    """An equivalence class, identified by its reduced representative."""

    sort_key: tuple = field(init=False, repr=False, compare=True)
    form: QuadForm = field(compare=False)

    def __post_init__(self):
        if not self.form.is_reduced():
            raise ValueError(f"{self.form} is not reduced; use reduce()")
        f = self.form
        object.__setattr__(self, "sort_key", (f.a, abs(f.bmid), f.bmid < 0, f.c))

    @property
    def D(self) -> int:
        return self.form.D

    def __hash__(self):
        return hash(self.sort_key)

    def __eq__(self, other):
        if not isinstance(other, FormClass):
            return NotImplemented
        return self.form == other.form

    def __str__(self) -> str:
        return str(self.form)

    def __repr__(self) -> str:
        return f"FormClass{self.form}"


def reduce(f: QuadForm) -> FormClass:
    """Reduce with the moves (a,b,c)~(c,-b,a) and (a,b,c)~(a,2ak+b,ak^2+bk+c)."""
    a, bm, c = f.a, f.bmid, f.c
    D = f.D
    while True:
        # translate bm into (-a, a]
        k = (a - bm) // (2 * a)
        bm, c = bm + 2 * a * k, a * k * k + bm * k + c
        if a > c:
            a, bm, c = c, -bm, a
            continue
        if a == c and bm < 0:
            bm = -bm
        break
    g = QuadForm(a, bm, c)
    assert g.D == D
    return FormClass(g)


@dataclass(frozen=True)
class ClassGroup:
    D: int
    classes: tuple[FormClass, ...]

    @property
    def discriminant(self) -> int:
        return 4 * self.D

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[FormClass]:
        return iter(self.classes)

    def __contains__(self, K) -> bool:
        return K in self.classes

    def identity(self) -> FormClass:
        return FormClass(QuadForm(1, 0, -self.D))

    def compose(self, K1: FormClass, K2: FormClass) -> FormClass:
        return compose(K1, K2)

    def inverse(self, K: FormClass) -> FormClass:
        return inverse(K)

    def power(self, K: FormClass, n: int) -> FormClass:
        result = self.identity()
        for _ in range(n % len(self)):
            result = compose(result, K)
        return result

    def order_of(self, K: FormClass) -> int:
        n, cur = 1, K
        ident = self.identity()
        while cur != ident:
            cur = compose(cur, K)
            n += 1
        return n


_cache_dir: Optional[Path] = None


def set_cache_dir(path) -> None:
    """Persist class-group enumerations as JSON files under ``path``."""
    global _cache_dir
    _cache_dir = None if path is None else Path(path)
    if _cache_dir is not None:
        _cache_dir.mkdir(parents=True, exist_ok=True)
    enumerate_class_group.cache_clear()


def _cache_file(D: int) -> Optional[Path]:
    return None if _cache_dir is None else _cache_dir / f"H{4 * D}.json"


@lru_cache(maxsize=None)
def enumerate_class_group(D: int) -> ClassGroup:
    """All reduced primitive forms of discriminant 4D (D < 0)."""
    if D >= 0:
        raise ValueError(f"D must be negative, got {D}")
    path = _cache_file(D)
    if path is not None and path.exists():
        doc = json.loads(path.read_text())
        if doc.get("discriminant") == 4 * D:
            classes = tuple(FormClass(QuadForm(*f)) for f in doc["forms"])
            return ClassGroup(D, classes)
    group = _enumerate(D)
    if path is not None:
        doc = {"discriminant": 4 * D, "forms": [K.form.as_list() for K in group]}
        path.write_text(json.dumps(doc))
    return group


def _enumerate(D: int) -> ClassGroup:
    out = []
    a = 1
    while 3 * a * a <= -4 * D:
        for bm in range(-a + (a % 2), a + 1, 2):
            b = bm // 2
            if (b * b - D) % a:
                continue
            c = (b * b - D) // a
            if c < a or gcd(a, bm, c) != 1:
                continue
            if (abs(bm) == a or a == c) and bm < 0:
                continue
            out.append(FormClass(QuadForm(a, bm, c)))
        a += 1
    return ClassGroup(D, tuple(sorted(out)))


def _bezout3(A1: int, A2: int, S: int) -> tuple[int, int, int, int]:
    """t = gcd(A1, A2, S) = A1 u + A2 v + S w via two chained extended gcds."""
    g, u1, v1 = xgcd(A1, A2)
    t, s, w = xgcd(g, S)
    return t, u1 * s, v1 * s, w


def compose_forms(f1: QuadForm, f2: QuadForm, triple: Optional[tuple[int, int, int]] = None) -> QuadForm:
    """Dirichlet composition of two forms of the same discriminant (unreduced).

    ``triple`` optionally overrides the Bezout coefficients (u, v, w).
    """
    if f1.D != f2.D:
        raise ValueError(f"discriminant mismatch: {f1} vs {f2}")
    D = f1.D
    A1, B1 = f1.a, f1.b
    A2, B2, C2 = f2.a, f2.b, f2.c
    t, u, v, w = _bezout3(A1, A2, B1 + B2)
    if triple is not None:
        u, v, w = triple
        if A1 * u + A2 * v + (B1 + B2) * w != t:
            raise ValueError(f"{triple} is not a Bezout triple for t = {t}")
    A3 = A1 * A2 // (t * t)
    B3 = B2 + (A2 // t) * ((B1 - B2) * v - C2 * w)
    num = B3 * B3 - D
    assert num % A3 == 0, (f1, f2, A3, B3)
    return QuadForm(A3, 2 * B3, num // A3)


def compose(K1: FormClass, K2: FormClass) -> FormClass:
    return reduce(compose_forms(K1.form, K2.form))


def inverse(K: FormClass) -> FormClass:
    f = K.form
    return reduce(QuadForm(f.a, -f.bmid, f.c))


def _coprime_pairs(radius: int) -> Iterator[tuple[int, int]]:
    """Primitive vectors (x, y) with max(|x|,|y|) == radius, one of each +-pair."""
    if radius == 0:
        return
    if radius == 1:
        yield from ((1, 0), (0, 1), (1, 1), (-1, 1))
        return
    r = radius
    for x in range(-r, r + 1):
        if gcd(x, r) == 1:
            yield x, r
    for y in range(1, r):
        if gcd(y, r) == 1:
            yield r, y
            yield -r, y


def coprime_representative(K: FormClass, M: int) -> QuadForm:
    """A form in K whose first coefficient is prime to M.

    Scans primitive vectors (x, y) by increasing box radius until f(x, y) is
    prime to M, then completes (x, y) to an SL2(Z) matrix.
    """
    f = K.form
    M = abs(M)
    if gcd(f.a, M) == 1:
        return f
    cap = 10 * max(M, 1)
    for r in range(1, cap + 1):
        for x, y in _coprime_pairs(r):
            n = f(x, y)
            if gcd(n, M) == 1:
                _, s, t = xgcd(x, y)  # x s + y t = 1
                g = f.transform(x, -t, y, s)
                assert g.D == f.D and g.a == n
                return g
    raise RuntimeError(f"no representative of {K} prime to {M} within radius {cap}")


def class_of_prime(p: int, D: int) -> FormClass:
    """The class of (p, 2b, (b^2-D)/p), b^2 = D mod p: it represents p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if legendre(D, p) != 1:
        raise ValueError(f"p={p} not represented by discriminant {4 * D}")
    b = sqrt_mod_p(D, p)
    return reduce(QuadForm(p, 2 * b, (b * b - D) // p))


def represents(f: QuadForm, n: int) -> Optional[tuple[int, int]]:
    """Some (x, y) with f(x, y) = n, or None.  Exhaustive over |y| <= sqrt(an/|D|)."""
    a, b, D = f.a, f.b, f.D
    ymax = isqrt(a * n // -D) + 1
    for y in range(0, ymax + 1):
        # a f = (ax + by)^2 - D y^2
        s2 = a * n + D * y * y
        if s2 < 0:
            break
        s = isqrt(s2)
        if s * s != s2:
            continue
        for z in (s, -s):
            if (z - b * y) % a == 0:
                x = (z - b * y) // a
                if f(x, y) == n:
                    return x, y
    return None
