import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from germain.arith import (
    ArithmeticRangeError,
    FactorizationTooHard,
    ModulusMismatch,
    PrimeModulus,
    Residue,
    factorize,
    inv_mod,
    is_prime,
    mul_mod,
    pow_mod,
    primitive_root,
)

from oracles import primes_upto, trial_division_is_prime


def R(v, m):
    return Residue(v, PrimeModulus(m))


@pytest.mark.parametrize("n,expected", [(7, True), (1, False), (31, True), (0, False), (2, True), (9, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_sieve_below_one_million():
    sieve = np.zeros(10**6, dtype=bool)
    sieve[primes_upto(10**6 - 1)] = True
    ours = np.fromiter((is_prime(n) for n in range(10**6)), dtype=bool, count=10**6)
    assert np.array_equal(ours, sieve)


def test_is_prime_matches_trial_division():
    for n in list(range(2000)) + list(range(10**9, 10**9 + 2000)):
        assert is_prime(n) == trial_division_is_prime(n), n


def test_is_prime_strong_pseudoprimes_and_large():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383, 341550071728321,
              3825123056546413051):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * 1000000007)


def test_is_prime_rejects_out_of_range():
    with pytest.raises(ArithmeticRangeError):
        is_prime(2**62)
    with pytest.raises(ArithmeticRangeError):
        is_prime(-1)


def test_prime_modulus_validation():
    assert PrimeModulus(7).value == 7
    for bad in (1, 2, 4, 9, 2**62 + 135):
        with pytest.raises(ValueError):
            PrimeModulus(bad)
    with pytest.raises(TypeError):
        PrimeModulus(7.0)


def test_residue_range():
    with pytest.raises(ValueError):
        R(7, 7)
    assert PrimeModulus(7).residue(-1) == R(6, 7)


def test_mul_mod_examples():
    assert mul_mod(R(2, 5), R(3, 5)) == R(1, 5)
    assert mul_mod(R(4, 13), R(1, 13)) == R(4, 13)
    m = (1 << 61) - 1
    assert mul_mod(R(m - 1, m), R(m - 1, m)) == R(1, m)


def test_mul_mod_mismatch():
    with pytest.raises(ModulusMismatch):
        mul_mod(R(1, 5), R(1, 7))


def test_pow_mod_examples():
    assert pow_mod(R(3, 7), 3) == R(6, 7)
    assert pow_mod(R(5, 11), 1) == R(5, 11)
    assert pow_mod(R(0, 11), 0) == R(1, 11)
    assert pow_mod(R(0, 11), 5) == R(0, 11)
    for a in range(1, 101):
        assert pow_mod(R(a, 101), 100) == R(1, 101)
    with pytest.raises(ValueError):
        pow_mod(R(2, 7), -1)


def test_inv_mod_examples():
    assert inv_mod(R(2, 5)) == R(3, 5)
    assert inv_mod(R(1, 97)) == R(1, 97)
    assert inv_mod(R(5, 7)) == R(next(b for b in range(1, 7) if 5 * b % 7 == 1), 7)
    assert inv_mod(R(5, 7)) == R(3, 7)
    with pytest.raises(ZeroDivisionError):
        inv_mod(R(0, 7))


def test_inverse_exhaustive_below_1000():
    for m in primes_upto(1000)[1:]:
        mod = PrimeModulus(m)
        for a in range(1, m):
            assert a * inv_mod(Residue(a, mod)).value % m == 1


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1000, max_value=2**62 - 1), st.data())
def test_inverse_randomized(n, data):
    m = n
    while not is_prime(m):
        m = m - 1 if m > 1000 else 1009
    a = data.draw(st.integers(min_value=1, max_value=m - 1))
    assert a * inv_mod(R(a, m)).value % m == 1


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(primes_upto(5000)[1:]), st.integers(min_value=0), st.integers(min_value=0, max_value=64))
def test_pow_agrees_with_repeated_multiplication(m, a, e):
    r = PrimeModulus(m).residue(a)
    acc = R(1, m)
    for _ in range(e):
        acc = mul_mod(acc, r)
    assert pow_mod(r, e) == acc
    assert r**e == acc


@pytest.mark.parametrize("n,expected", [(6, [(2, 1), (3, 1)]), (12, [(2, 2), (3, 1)]), (97, [(97, 1)]),
                                        (2, [(2, 1)]), (2**61 - 1, [(2**61 - 1, 1)]),
                                        (2 * 3 * 3 * 1000003, [(2, 1), (3, 2), (1000003, 1)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=2, max_value=10**9))
def test_factorize_multiplies_back(n):
    fac = factorize(n)
    prod = 1
    for q, k in fac:
        assert is_prime(q) and k >= 1
        prod *= q**k
    assert prod == n
    assert [q for q, _ in fac] == sorted(q for q, _ in fac)


def test_factorize_effort_cap():
    semiprime = 1000003 * 1000033
    with pytest.raises(FactorizationTooHard):
        factorize(semiprime, trial_cap=1000)
    assert factorize(semiprime) == [(1000003, 1), (1000033, 1)]
    with pytest.raises(ArithmeticRangeError):
        factorize(1)


def _order(g, m):
    k, x = 1, g % m
    while x != 1:
        x = x * g % m
        k += 1
    return k


@pytest.mark.parametrize("m,g", [(7, 3), (5, 2), (3, 2), (13, 2), (23, 5), (41, 6)])
def test_primitive_root_examples(m, g):
    root = primitive_root(m)
    assert root.g.value == g
    # smallest: every smaller candidate has lower order
    assert all(_order(c, m) < m - 1 for c in range(2, g))
    assert root.is_valid()


def test_primitive_root_generates_everything_below_2000():
    for m in primes_upto(2000)[1:]:
        root = primitive_root(m)
        g = root.g.value
        seen = set()
        x = 1
        for _ in range(m - 1):
            seen.add(x)
            x = x * g % m
        assert len(seen) == m - 1, m
        assert root.order_factorization == tuple(factorize(m - 1))


def test_primitive_root_large_modulus():
    m = (1 << 61) - 1
    assert primitive_root(m).is_valid()
    rng = random.Random(5)
    for _ in range(20):
        m = rng.randrange(10**12, 10**13)
        while not is_prime(m):
            m += 1
        assert primitive_root(m).is_valid()
