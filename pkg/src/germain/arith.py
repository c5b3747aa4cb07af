"""Exact modular arithmetic for prime moduli.

Residues live on a "clock" of ``theta`` values.  Everything here works on
plain Python integers internally; :class:`Residue` is a thin typed wrapper
for callers that want the modulus carried along with the value.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "MAX_MODULUS",
    "ArithmeticRangeError",
    "ModulusMismatch",
    "FactorizationTooHard",
    "PrimeModulus",
    "Residue",
    "PrimitiveRoot",
    "is_prime",
    "mul_mod",
    "pow_mod",
    "inv_mod",
    "factorize",
    "primitive_root",
    "primitive_root_of",
]

MAX_MODULUS = 1 << 62

# Deterministic for every n < 3.3 * 10**24 (Sorenson & Webster), far above 2**62.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_DEFAULT_TRIAL_CAP = 10**7


class ArithmeticRangeError(ValueError):
    """An input lies outside the supported machine-word range."""


class ModulusMismatch(ValueError):
    pass


class FactorizationTooHard(ArithmeticError):
    """Trial division hit its effort cap before finishing."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for ``0 <= n < 2**62``."""
    if n < 0 or n >= MAX_MODULUS:
        raise ArithmeticRangeError(f"is_prime supports 0 <= n < 2**62, got {n}")
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class PrimeModulus:
    """A certified odd prime used as the residue-clock modulus."""

    value: int

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"modulus must be an int, got {type(v).__name__}")
        if v < 3 or v >= MAX_MODULUS:
            raise ArithmeticRangeError(f"modulus must satisfy 3 <= theta < 2**62, got {v}")
        if not is_prime(v):
            raise ValueError(f"theta must be prime, got {v}")

    def __int__(self) -> int:
        return self.value

    def residue(self, a: int) -> Residue:
        return Residue(a % self.value, self)


@dataclass(frozen=True, slots=True)
class Residue:
    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.value:
            raise ValueError(
                f"residue {self.value} out of range [0, {self.modulus.value})"
            )

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: Residue) -> Residue:
        return mul_mod(self, other)

    def __pow__(self, e: int) -> Residue:
        return pow_mod(self, e)


def _as_modulus(theta: PrimeModulus | int) -> PrimeModulus:
    return theta if isinstance(theta, PrimeModulus) else PrimeModulus(theta)


def mul_mod(a: Residue, b: Residue) -> Residue:
    """Product of two residues on the same clock."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(
            f"cannot multiply residues mod {a.modulus.value} and mod {b.modulus.value}"
        )
    # Python ints are unbounded, so the intermediate product never wraps.
    return Residue(a.value * b.value % a.modulus.value, a.modulus)


def pow_mod(a: Residue, e: int) -> Residue:
    """``a**e`` by square-and-multiply.

    ``0**0`` is taken to be 1 so the operation is total.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative; use inv_mod for division")
    m = a.modulus.value
    result = 1 % m
    base = a.value
    while e:
        if e & 1:
            result = result * base % m
        base = base * base % m
        e >>= 1
    return Residue(result, a.modulus)


def inv_mod(a: Residue) -> Residue:
    """Multiplicative inverse; raises ``ZeroDivisionError`` for zero."""
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {a.modulus.value}")
    m = a.modulus.value
    # extended Euclid
    r0, r1 = m, a.value
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return Residue(t0 % m, a.modulus)


def factorize(n: int, trial_cap: int = _DEFAULT_TRIAL_CAP) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs.

    Trial division, stopping early once the remaining cofactor is prime.
    Raises :class:`FactorizationTooHard` if more than ``trial_cap`` trial
    divisors would be needed; partial output is never returned.
    """
    if n < 2 or n >= MAX_MODULUS:
        raise ArithmeticRangeError(f"factorize supports 2 <= n < 2**62, got {n}")
    factors: list[tuple[int, int]] = []

    def strip(q: int) -> None:
        nonlocal n
        k = 0
        while n % q == 0:
            n //= q
            k += 1
        if k:
            factors.append((q, k))

    strip(2)
    composite = n > 1 and not is_prime(n)
    q = 3
    trials = 0
    while composite and q * q <= n:
        if n % q == 0:
            strip(q)
            composite = n > 1 and not is_prime(n)
        q += 2
        trials += 1
        if composite and trials >= trial_cap:
            raise FactorizationTooHard(
                f"trial division exceeded {trial_cap} divisors (cofactor {n})"
            )
    if n > 1:
        factors.append((n, 1))
    return factors


@dataclass(frozen=True, slots=True)
class PrimitiveRoot:
    g: Residue
    modulus: PrimeModulus
    order_factorization: tuple[tuple[int, int], ...]

    def is_valid(self) -> bool:
        m = self.modulus.value
        g = self.g.value
        if pow(g, m - 1, m) != 1:
            return False
        return all(pow(g, (m - 1) // q, m) != 1 for q, _ in self.order_factorization)


def primitive_root(theta: PrimeModulus | int) -> PrimitiveRoot:
    """Smallest ``g >= 2`` generating the nonzero residues mod ``theta``."""
    mod = _as_modulus(theta)
    m = mod.value
    fac = tuple(factorize(m - 1))
    exps = [(m - 1) // q for q, _ in fac]
    g = 2
    while True:
        if all(pow(g, e, m) != 1 for e in exps):
            return PrimitiveRoot(Residue(g, mod), mod, fac)
        g += 1


def primitive_root_of(theta: int) -> int:
    """Integer shortcut for :func:`primitive_root`."""
    return primitive_root(theta).g.value
