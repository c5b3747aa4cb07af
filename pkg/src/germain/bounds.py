"""Lower bounds on the size of a hypothetical Fermat solution.

Each auxiliary prime satisfying Condition NC must divide one of x, y, z.
Distinct primes dividing xyz multiply, so ``xyz >= prod(theta)`` and
``max(x, y, z) >= ceil(prod(theta) ** (1/3))``.  All arithmetic is exact.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import prod

from .residues import check_nc, residues_subgroup
from .search import ScanReport

__all__ = ["SizeBound", "BoundIntegrityError", "icbrt_ceil", "digits", "bound_from_auxiliaries", "size_lower_bound"]


class BoundIntegrityError(ValueError):
    """An input auxiliary did not re-certify, so no bound may be issued."""


def icbrt_ceil(n: int) -> int:
    """Smallest integer ``c >= 0`` with ``c**3 >= n``, by binary search."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lo, hi = 0, 1
    while hi**3 < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def digits(n: int) -> int:
    """Number of decimal digits of ``n >= 1``."""
    if n < 1:
        raise ValueError(f"digits() needs n >= 1, got {n}")
    # str() refuses ints beyond 4300 digits; estimate from the bit length and correct
    k = (n.bit_length() - 1) * 30103 // 100000
    while 10**k > n:
        k -= 1
    while 10 ** (k + 1) <= n:
        k += 1
    return k + 1


@dataclass(frozen=True)
class SizeBound:
    p: int
    auxiliaries: tuple[int, ...]
    product: int
    min_max_solution: int
    decimal_digits: int


def bound_from_auxiliaries(p: int, auxiliaries: Iterable[int]) -> SizeBound:
    """Size bound from distinct NC-certified auxiliaries.

    Raises :class:`BoundIntegrityError` on duplicates or on any ``theta``
    whose residue set fails Condition NC.
    """
    aux = tuple(sorted(auxiliaries))
    if len(set(aux)) != len(aux):
        raise BoundIntegrityError(f"auxiliaries must be distinct: {aux}")
    for theta in aux:
        try:
            rs = residues_subgroup(p, theta)
        except ValueError as exc:
            raise BoundIntegrityError(f"theta={theta}: {exc}") from exc
        if not check_nc(rs)[0]:
            raise BoundIntegrityError(f"theta={theta} does not satisfy Condition NC for p={p}")
    product = prod(aux)
    root = max(1, icbrt_ceil(product))
    return SizeBound(p, aux, product, root, digits(root))


def size_lower_bound(p: int, scan: ScanReport) -> SizeBound:
    if scan.p != p:
        raise BoundIntegrityError(f"scan is for p={scan.p}, not p={p}")
    if not scan.exhaustive:
        raise BoundIntegrityError("size bounds need an exhaustive scan")
    return bound_from_auxiliaries(p, scan.qualifying)
