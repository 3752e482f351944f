import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from corpora import identity_tuples, primary_primes
from cubicforms.cubic_symbol import SymbolValue, cubic_jacobi, residue_character_oracle
from cubicforms.eisenstein import LAMBDA, OMEGA, EisensteinInt, norm

E = EisensteinInt
ONE_, W, W2, ZERO_ = SymbolValue.ONE, SymbolValue.OMEGA, SymbolValue.OMEGA_SQ, SymbolValue.ZERO

coord = st.integers(-10**9, 10**9)
elements = st.builds(E, coord, coord)


def primaries(max_coord=3000):
    return st.builds(
        lambda m, n: E(3 * m + 2, 3 * n),
        st.integers(-max_coord, max_coord),
        st.integers(-max_coord, max_coord),
    )


def test_symbol_value_group():
    assert W * W == W2
    assert W * W2 == ONE_
    assert W ** 3 == ONE_
    assert W.inverse() == W2
    assert ZERO_ * W == ZERO_


@pytest.mark.parametrize(
    "alpha, beta, expected",
    [
        (E(-42, -30), 17, W),  # P = -27, b = 5
        (E(-9, 36), 31, ONE_),  # P = -27, b = -6
        (E(-33, -12), 5, W),  # P = -27, b = 2
        (E(-27, 0), 1, ONE_),
        (E(1, 2), E(2, 3), W),
        (E(123, -45), 1, ONE_),
        (E(123, -45), -1, ONE_),
    ],
)
def test_cubic_jacobi_examples(alpha, beta, expected):
    assert cubic_jacobi(alpha, beta) is expected


def test_symbols_on_diagonal_class_representatives():
    # ((-79 - 3b(1+2w)) / a) for the representatives [89,12,3], [61,28,7], [197,88,11]
    for a, b in ((89, 6), (61, 14), (197, 44)):
        assert cubic_jacobi(E(-79 - 3 * b, -6 * b), a) is ONE_


def test_cubic_jacobi_errors():
    with pytest.raises(ValueError):
        cubic_jacobi(2, 0)
    with pytest.raises(ValueError):
        cubic_jacobi(2, 3)
    with pytest.raises(ValueError):
        cubic_jacobi(2, LAMBDA)
    with pytest.raises(ValueError):
        cubic_jacobi(2, E(3, 1))  # not +-2 mod 3


def test_oracle_examples():
    # Z[w]/(2+3w) = F_7 with w -> 4; 2^2 = 4
    assert residue_character_oracle(2, E(2, 3)) is W
    assert residue_character_oracle(E(2, 3) * E(5, -7), E(2, 3)) is ZERO_
    assert residue_character_oracle(1, E(-1, 3)) is ONE_
    with pytest.raises(ValueError):
        residue_character_oracle(2, E(-1, 0))
    with pytest.raises(ValueError):
        residue_character_oracle(2, 35)


def test_oracle_field_isomorphism():
    """Independent check on F_7: w = -a/b mod 7 for pi = 2 + 3w."""
    w = (-2 * pow(3, -1, 7)) % 7
    assert w == 4
    for c in range(-10, 11):
        for d in range(-10, 11):
            v = (c + d * w) % 7
            if v == 0:
                continue
            r = pow(v, 2, 7)
            expected = {1: ONE_, w: W, w * w % 7: W2}[r]
            assert residue_character_oracle(E(c, d), E(2, 3)) is expected


def test_agreement_small_primes():
    rng = random.Random(1)
    for pi in primary_primes(500):
        for _ in range(10):
            alpha = E(rng.randrange(-10**6, 10**6), rng.randrange(-10**6, 10**6))
            assert cubic_jacobi(alpha, pi) is residue_character_oracle(alpha, pi)


@given(elements, elements, primaries())
def test_multiplicative_numerator(x, y, beta):
    vx, vy = cubic_jacobi(x, beta), cubic_jacobi(y, beta)
    assume(vx is not ZERO_ and vy is not ZERO_)
    assert cubic_jacobi(x * y, beta) is vx * vy


@given(elements, primaries(300), primaries(300))
def test_multiplicative_denominator(alpha, b1, b2):
    assert cubic_jacobi(alpha, b1 * b2) is cubic_jacobi(alpha, b1) * cubic_jacobi(alpha, b2)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_rational_symbols_trivial(n, m):
    from math import gcd

    assume(m % 3 and gcd(m, n) == 1)
    assert cubic_jacobi(n, m) is ONE_


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(-10**5, 10**5))
def test_conjugate_inverts(c, d, a):
    from math import gcd

    assume(a % 3 and gcd(a, norm(E(c, d))) == 1)
    s1 = cubic_jacobi(E(c, d), a)
    s2 = cubic_jacobi(E(c, d).conj(), a)
    assert s1 * s2 is ONE_


@given(primaries())
def test_supplementary_laws(beta):
    assume(norm(beta) > 1)
    a, b = beta.a, beta.b
    assert cubic_jacobi(OMEGA, beta) is SymbolValue.from_exponent((a + b + 1) // 3)
    assert cubic_jacobi(LAMBDA, beta) is SymbolValue.from_exponent(2 * (a + 1) // 3)
    assert cubic_jacobi(E(1, 2), beta) is SymbolValue.from_exponent(b // 3)


@settings(max_examples=50)
@given(primaries(40), primaries(40))
def test_reciprocity(x, y):
    assert cubic_jacobi(x, y) is cubic_jacobi(y, x)


def test_symbol_identity_sample():
    for P, D, a, b, c, x, y in identity_tuples(100, seed=7):
        f = a * x * x + 2 * b * x * y + c * y * y
        lhs = cubic_jacobi(E(P * y + 3 * (a * x + b * y), 6 * (a * x + b * y)), f)
        rhs = cubic_jacobi(E(P - 3 * b, -6 * b), a)
        assert lhs is rhs, (P, D, a, b, c, x, y)
