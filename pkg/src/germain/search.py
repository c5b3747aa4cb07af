"""Searching for auxiliary primes ``theta = 2Np + 1``.

Only ``theta = 1 (mod 2p)`` is worth testing: for any other prime
``theta > 3`` the map ``x -> x**p`` permutes the nonzero residues, so 1 and
2 are both ``p``-th powers and Condition NC fails.  ``theta = 3`` is the
single exception and is checked explicitly.
"""
from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple

import numpy as np

from .arith import is_prime
from .residues import (
    ResidueSet,
    SgtCertificate,
    certify_sgt,
    check_nc,
    check_p_not_residue,
    is_pth_power,
    nc_holds,
    residues_bruteforce,
    residues_subgroup,
)

__all__ = [
    "MAX_SCAN_BOUND",
    "DEFAULT_N_MAX",
    "CONDITION_NC",
    "CONDITION_NC_P",
    "LegendreRow",
    "ScanReport",
    "Frontier",
    "NoAuxiliaryFound",
    "candidates",
    "smallest_auxiliary",
    "legendre_table",
    "verify_row",
    "scan_nc",
    "scan_range",
    "partition",
    "merge_qualifying",
    "nc_frontier",
]

MAX_SCAN_BOUND = 10**9
DEFAULT_N_MAX = 1000
MAX_TABLE_P = 1000

CONDITION_NC = "nc"
CONDITION_NC_P = "nc+p_not_residue"

_SIEVE_BLOCK = 1 << 18


class NoAuxiliaryFound(LookupError):
    def __init__(self, missing: Sequence[int], n_max: int):
        self.missing = tuple(missing)
        self.n_max = n_max
        super().__init__(
            f"no auxiliary prime with N <= {n_max} for p in {list(self.missing)}"
        )


def _small_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return np.flatnonzero(sieve).astype(np.int64)


def candidates(p: int, n_max: int, n_min: int = 1) -> Iterator[tuple[int, int]]:
    """Yield ``(N, theta)`` with ``theta = 2Np + 1`` prime, ascending in N.

    A segmented sieve over the progression: for each small prime ``q`` the
    multiples of ``q`` in the sequence sit at ``N = -(2p)^-1 (mod q)``.
    """
    if n_max < n_min:
        return
    step = 2 * p
    theta_max = step * n_max + 1
    sievers = [int(q) for q in _small_primes(isqrt(theta_max)) if q != 2 and q != p]
    starts = [(-pow(step, -1, q)) % q for q in sievers]
    lo = n_min
    while lo <= n_max:
        hi = min(lo + _SIEVE_BLOCK, n_max + 1)
        alive = np.ones(hi - lo, dtype=bool)
        for q, r in zip(sievers, starts):
            first = lo + (r - lo) % q
            if step * first + 1 == q:
                # theta is the sieving prime itself
                first += q
            alive[first - lo :: q] = False
        for off in np.flatnonzero(alive):
            n = lo + int(off)
            yield n, step * n + 1
        lo = hi


@dataclass(frozen=True)
class LegendreRow:
    p: int
    N: int
    theta: int
    residues: ResidueSet
    certificate: SgtCertificate

    def __post_init__(self) -> None:
        if self.theta != 2 * self.N * self.p + 1:
            raise ValueError(f"theta={self.theta} is not 2*{self.N}*{self.p}+1")


def smallest_auxiliary(p: int, n_max: int = DEFAULT_N_MAX) -> LegendreRow | None:
    """Row with the least N for which ``2Np + 1`` passes both hypotheses.

    Returns ``None`` when no ``N <= n_max`` works.
    """
    if p >= 1 << 20:
        raise ValueError(f"p must be < 2**20, got {p}")
    for n, theta in candidates(p, n_max):
        cert = certify_sgt(p, theta)
        if cert.holds:
            return LegendreRow(p, n, theta, residues_subgroup(p, theta), cert)
    return None


def _odd_primes_upto(limit: int) -> list[int]:
    return [int(q) for q in _small_primes(limit) if q > 2]


def legendre_table(p_max: int, n_max: int = DEFAULT_N_MAX) -> list[LegendreRow]:
    """One certified row per odd prime ``p <= p_max``.

    Raises :class:`NoAuxiliaryFound` listing every ``p`` left uncovered.
    """
    if p_max > MAX_TABLE_P:
        raise ValueError(f"p_max must be <= {MAX_TABLE_P}, got {p_max}")
    rows, missing = [], []
    for p in _odd_primes_upto(p_max):
        row = smallest_auxiliary(p, n_max)
        if row is None:
            missing.append(p)
        else:
            rows.append(row)
    if missing:
        raise NoAuxiliaryFound(missing, n_max)
    return rows


def verify_row(row: LegendreRow) -> bool:
    """Recompute a row from scratch, including minimality of N.

    Uses the brute-force residue sets and plain primality tests, so it shares
    no code path with :func:`smallest_auxiliary` beyond the certificate checks.
    """
    p, n, theta = row.p, row.N, row.theta
    if theta != 2 * n * p + 1 or not is_prime(theta):
        return False
    rs = residues_bruteforce(p, theta)
    if rs != row.residues:
        return False
    nc, _ = check_nc(rs)
    pnr, _ = check_p_not_residue(rs)
    if not (nc and pnr and row.certificate.holds and row.certificate.recheck()):
        return False
    for smaller in range(1, n):
        t = 2 * smaller * p + 1
        if not is_prime(t):
            continue
        rs = residues_bruteforce(p, t)
        if check_nc(rs)[0] and check_p_not_residue(rs)[0]:
            return False
    return True


@dataclass(frozen=True)
class ScanReport:
    """All qualifying auxiliaries ``theta <= bound`` for exponent ``p``."""

    p: int
    bound: int
    qualifying: tuple[int, ...]
    exhaustive: bool
    condition: str = CONDITION_NC
    candidates_tested: int = 0

    @property
    def include_p_condition(self) -> bool:
        return self.condition == CONDITION_NC_P


def _qualifies(p: int, theta: int, include_p: bool) -> bool:
    if not nc_holds(p, theta):
        return False
    return not (include_p and is_pth_power(p % theta, p, theta))


def scan_range(p: int, n_lo: int, n_hi: int, include_p: bool) -> tuple[list[int], int]:
    """Qualifying ``theta = 2Np + 1`` for ``n_lo <= N <= n_hi`` and the number tested."""
    found, tested = [], 0
    for _, theta in candidates(p, n_hi, n_lo):
        tested += 1
        if _qualifies(p, theta, include_p):
            found.append(theta)
    return found, tested


def partition(n_max: int, parts: int) -> list[tuple[int, int]]:
    """Split ``1..n_max`` into at most ``parts`` contiguous inclusive ranges."""
    if n_max < 1:
        return []
    parts = max(1, min(parts, n_max))
    size, extra = divmod(n_max, parts)
    out, lo = [], 1
    for i in range(parts):
        hi = lo + size - 1 + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def merge_qualifying(chunks: Iterable[Iterable[int]]) -> tuple[int, ...]:
    return tuple(sorted({t for chunk in chunks for t in chunk}))


def _scan_job(args):
    return scan_range(*args)


def scan_nc(
    p: int,
    bound: int,
    include_p_condition: bool = False,
    threads: int = 1,
    cap: int = MAX_SCAN_BOUND,
) -> ScanReport:
    """Exhaustively test every prime ``theta <= bound`` that could satisfy NC.

    ``threads > 1`` farms contiguous N-ranges out to worker processes
    (``0`` means one per CPU); the merged result is identical to the
    sequential one.  Every qualifying ``theta`` is re-certified through
    the full residue set before the report is returned.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if bound > cap:
        raise ValueError(f"bound {bound} exceeds the scan cap {cap}")
    if threads < 0:
        raise ValueError("threads must be >= 0")
    if threads == 0:
        threads = os.cpu_count() or 1

    found: list[int] = []
    tested = 0
    if p != 3 and bound >= 3:
        tested += 1
        if _qualifies(p, 3, include_p_condition):
            found.append(3)

    n_max = max(0, (bound - 1) // (2 * p))
    jobs = [(p, lo, hi, include_p_condition) for lo, hi in partition(n_max, threads)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_job, jobs))
    else:
        results = [scan_range(*job) for job in jobs]
    tested += sum(n for _, n in results)
    qualifying = merge_qualifying([found] + [f for f, _ in results])

    for theta in qualifying:
        rs = residues_subgroup(p, theta)
        ok = check_nc(rs)[0] and (not include_p_condition or check_p_not_residue(rs)[0])
        if not ok:
            raise RuntimeError(f"theta={theta} failed re-certification for p={p}")

    return ScanReport(
        p=p,
        bound=bound,
        qualifying=qualifying,
        exhaustive=True,
        condition=CONDITION_NC_P if include_p_condition else CONDITION_NC,
        candidates_tested=tested,
    )


class Frontier(NamedTuple):
    largest: int | None
    count: int


def nc_frontier(p: int, bound: int, threads: int = 1) -> Frontier:
    """Largest NC-qualifying auxiliary up to ``bound`` and how many there are."""
    q = scan_nc(p, bound, threads=threads).qualifying
    return Frontier(q[-1] if q else None, len(q))
