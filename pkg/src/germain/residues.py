"""p-th power residues modulo a prime and the two hypotheses of Sophie
Germain's Theorem.

Two independent constructions of the residue set are provided:

* :func:`residues_bruteforce` raises every nonzero ``x`` to the ``p``-th power;
* :func:`residues_subgroup` walks the cyclic subgroup generated by
  ``g**gcd(p, theta - 1)`` for the smallest primitive root ``g``.

They must agree; the test suite checks this exhaustively on a grid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .arith import PrimeModulus, Residue, inv_mod, is_prime, primitive_root_of

__all__ = [
    "ResidueSet",
    "SgtCertificate",
    "SolutionReduction",
    "residues_bruteforce",
    "residues_subgroup",
    "check_nc",
    "check_p_not_residue",
    "certify_sgt",
    "consecutive_pair_from_solution",
    "is_pth_power",
    "nc_holds",
]

# Above this, x*x no longer fits in int64 and the vectorised path is unsafe.
_NUMPY_MODULUS_LIMIT = 1 << 31


def _validate(p: int, theta: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"exponent p must be an odd prime, got {p}")
    PrimeModulus(theta)
    if theta == p:
        raise ValueError(f"auxiliary theta must differ from p (got theta = p = {p})")


@dataclass(frozen=True)
class ResidueSet:
    """Nonzero ``p``-th power residues modulo ``theta``.

    ``members`` is ascending; ``bitmap[r]`` is True iff ``r`` is a member.
    Equality compares ``(exponent, modulus, members)`` only.
    """

    exponent: int
    modulus: int
    members: tuple[int, ...]
    bitmap: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        if self.bitmap is None:
            bm = np.zeros(self.modulus, dtype=bool)
            bm[list(self.members)] = True
            object.__setattr__(self, "bitmap", bm)
        self.bitmap.setflags(write=False)

    def __contains__(self, r: int) -> bool:
        return 0 <= r < self.modulus and bool(self.bitmap[r])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def expected_size(self) -> int:
        return (self.modulus - 1) // gcd(self.exponent, self.modulus - 1)

    def paired(self) -> list[int]:
        """Representatives ``r <= theta/2`` of the ``+-r`` pairs."""
        return [r for r in self.members if 2 * r < self.modulus]


def _from_members(p: int, theta: int, members) -> ResidueSet:
    members = sorted(set(members))
    return ResidueSet(p, theta, tuple(members))


def _vector_pow(x: np.ndarray, e: int, m: int) -> np.ndarray:
    result = np.ones_like(x)
    base = x % m
    while e:
        if e & 1:
            result = result * base % m
        base = base * base % m
        e >>= 1
    return result


def residues_bruteforce(p: int, theta: int) -> ResidueSet:
    """``{x**p mod theta : 1 <= x < theta}`` by direct enumeration."""
    _validate(p, theta)
    if theta < _NUMPY_MODULUS_LIMIT:
        powers = _vector_pow(np.arange(1, theta, dtype=np.int64), p, theta)
        bm = np.zeros(theta, dtype=bool)
        bm[powers] = True
        members = tuple(int(r) for r in np.flatnonzero(bm))
        return ResidueSet(p, theta, members, bm)
    return _from_members(p, theta, (pow(x, p, theta) for x in range(1, theta)))


def residues_subgroup(p: int, theta: int) -> ResidueSet:
    """Same set as :func:`residues_bruteforce`, as powers of ``g**gcd(p, theta-1)``."""
    _validate(p, theta)
    d = gcd(p, theta - 1)
    step = pow(primitive_root_of(theta), d, theta)
    size = (theta - 1) // d
    bm = np.zeros(theta, dtype=bool)
    r = 1
    for _ in range(size):
        bm[r] = True
        r = r * step % theta
    members = tuple(int(v) for v in np.flatnonzero(bm))
    return ResidueSet(p, theta, members, bm)


def check_nc(rs: ResidueSet) -> tuple[bool, tuple[int, int] | None]:
    """Condition NC: no ``a`` with ``a`` and ``a + 1`` both nonzero members.

    Returns ``(True, None)`` or ``(False, (a, a + 1))`` for the smallest such ``a``.
    The wrap-around pair ``(theta - 1, 0)`` never counts.
    """
    bm = rs.bitmap
    both = bm[1:-1] & bm[2:]
    hits = np.flatnonzero(both)
    if hits.size == 0:
        return True, None
    a = int(hits[0]) + 1
    return False, (a, a + 1)


def check_p_not_residue(rs: ResidueSet) -> tuple[bool, int | None]:
    """True iff ``p mod theta`` is not a ``p``-th power residue; else the witness."""
    r = rs.exponent % rs.modulus
    if r in rs:
        return False, r
    return True, None


def is_pth_power(r: int, p: int, theta: int) -> bool:
    """Euler-criterion membership test for nonzero ``r``."""
    return pow(r, (theta - 1) // gcd(p, theta - 1), theta) == 1


def nc_holds(p: int, theta: int) -> bool:
    """Condition NC, usually without materialising the residue set.

    Small subgroups (at most a few times ``gcd(p, theta - 1)`` members) are
    walked as powers of ``g**d`` and checked against a Python set.  Larger
    ones almost always contain a consecutive pair among the first few
    ``x**p``, so those are probed by Euler's criterion on both neighbours;
    negation closure means ``r - 1`` covers pairs whose lower member is
    ``-r``.  If the probe comes up empty the full set decides.
    """
    d = gcd(p, theta - 1)
    size = (theta - 1) // d
    budget = 8 * d + 64
    if size > 4 * budget:
        for x in range(1, budget + 1):
            r = pow(x, p, theta)
            if r + 1 < theta and pow(r + 1, size, theta) == 1:
                return False
            if r > 1 and pow(r - 1, size, theta) == 1:
                return False
    step = pow(primitive_root_of(theta), d, theta)
    members = set()
    r = 1
    for _ in range(size):
        members.add(r)
        r = r * step % theta
    return not any(r + 1 in members for r in members if r + 1 < theta)


@dataclass(frozen=True)
class SgtCertificate:
    """Outcome of testing both hypotheses for ``(p, theta)``.

    Failed hypotheses carry re-checkable witnesses: ``nc_witness`` is a
    consecutive pair of members, ``p_witness`` is ``p mod theta`` found
    among the members.
    """

    exponent: int
    modulus: int
    nc_holds: bool
    p_not_residue_holds: bool
    nc_witness: tuple[int, int] | None = None
    p_witness: int | None = None

    @property
    def holds(self) -> bool:
        return self.nc_holds and self.p_not_residue_holds

    @property
    def consequence(self) -> str | None:
        if not self.holds:
            return None
        p = self.exponent
        return f"one of x, y, z is divisible by {p * p} = {p}^2"

    def recheck(self) -> bool:
        """Re-verify every flag and witness by Euler's criterion alone."""
        p, theta = self.exponent, self.modulus
        if self.nc_witness is not None:
            a, b = self.nc_witness
            if self.nc_holds or b != a + 1 or not 1 <= a < b < theta:
                return False
            if not (is_pth_power(a, p, theta) and is_pth_power(b, p, theta)):
                return False
        elif self.nc_holds != nc_holds(p, theta) or not self.nc_holds:
            return False
        p_is_power = is_pth_power(p % theta, p, theta)
        if self.p_witness is not None:
            return not self.p_not_residue_holds and self.p_witness == p % theta and p_is_power
        return self.p_not_residue_holds and not p_is_power


def certify_sgt(p: int, theta: int) -> SgtCertificate:
    rs = residues_subgroup(p, theta)
    nc, pair = check_nc(rs)
    pnr, pw = check_p_not_residue(rs)
    return SgtCertificate(p, theta, nc, pnr, pair, pw)


@dataclass(frozen=True)
class SolutionReduction:
    """Result of dividing a mod-``theta`` solution through by ``x``.

    Either ``divisible`` names the variables that ``theta`` divides, or
    ``pair`` holds the consecutive residues ``((y/x)**p, (z/x)**p)``.
    """

    divisible: tuple[str, ...] = ()
    pair: tuple[int, int] | None = None

    @property
    def theta_divides_xyz(self) -> bool:
        return bool(self.divisible)


def consecutive_pair_from_solution(p: int, theta: int, x: int, y: int, z: int) -> SolutionReduction:
    """Turn a solution of ``z**p = x**p + y**p (mod theta)`` into consecutive residues.

    If ``theta`` divides none of ``x, y, z`` then ``a = (y/x)**p`` and
    ``a + 1 = (z/x)**p`` are both nonzero ``p``-th power residues, which
    Condition NC forbids.
    """
    _validate(p, theta)
    if (pow(z, p, theta) - pow(x, p, theta) - pow(y, p, theta)) % theta:
        raise ValueError(f"({x}, {y}, {z}) does not satisfy z^{p} = x^{p} + y^{p} mod {theta}")
    divisible = tuple(name for name, v in zip("xyz", (x, y, z)) if v % theta == 0)
    if divisible:
        return SolutionReduction(divisible=divisible)
    mod = PrimeModulus(theta)
    x_inv = inv_mod(Residue(x % theta, mod)).value
    a = pow(y * x_inv % theta, p, theta)
    b = pow(z * x_inv % theta, p, theta)
    assert b == (a + 1) % theta and b != 0 and a != 0
    return SolutionReduction(pair=(a, b))
