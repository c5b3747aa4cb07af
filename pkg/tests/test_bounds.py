import pytest
from hypothesis import given, settings, strategies as st

from germain.bounds import BoundIntegrityError, bound_from_auxiliaries, digits, icbrt_ceil, size_lower_bound
from germain.search import ScanReport, scan_nc

POOLS = {p: scan_nc(p, 6000).qualifying for p in (5, 7, 11, 13)}


def test_p3_bound():
    sb = size_lower_bound(3, scan_nc(3, 10**6))
    assert sb.auxiliaries == (7, 13)
    assert (sb.product, sb.min_max_solution, sb.decimal_digits) == (91, 5, 1)
    assert 4**3 < 91 <= 5**3


def test_vacuous_bound():
    sb = size_lower_bound(3, scan_nc(3, 5))
    assert (sb.auxiliaries, sb.product, sb.min_max_solution, sb.decimal_digits) == ((), 1, 1, 1)


def test_p5_regression_golden():
    # scan auxiliaries frozen in test_search; 147**3 = 3176523 < 3234121 <= 3241792 = 148**3
    sb = size_lower_bound(5, scan_nc(5, 10**4))
    assert sb.product == 11 * 41 * 71 * 101 == 3234121
    assert (sb.min_max_solution, sb.decimal_digits) == (148, 3)


@pytest.mark.parametrize("n,expected", [(0, 0), (1, 1), (2, 2), (8, 2), (9, 3), (27, 3), (28, 4), (91, 5)])
def test_icbrt_ceil_small(n, expected):
    assert icbrt_ceil(n) == expected


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=1, max_value=10**200))
def test_icbrt_ceil_brackets(n):
    c = icbrt_ceil(n)
    assert c**3 >= n > (c - 1) ** 3


def test_icbrt_ceil_perfect_cubes():
    for k in (1, 2, 10**20, 3**111):
        assert icbrt_ceil(k**3) == k
        assert icbrt_ceil(k**3 + 1) == k + 1
    with pytest.raises(ValueError):
        icbrt_ceil(-1)


@pytest.mark.parametrize("n,expected", [(1, 1), (9, 1), (10, 2), (10**38, 39), (10**38 - 1, 38)])
def test_digits(n, expected):
    assert digits(n) == expected


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=1, max_value=10**4000))
def test_digits_matches_str(n):
    assert digits(n) == len(str(n))


def test_digits_huge_and_invalid():
    assert digits(10**10000) == 10001
    with pytest.raises(ValueError):
        digits(0)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(sorted(POOLS)), st.data())
def test_bound_monotone_in_auxiliaries(p, data):
    pool = POOLS[p]
    subset = data.draw(st.sets(st.sampled_from(pool)))
    extra = data.draw(st.sampled_from(pool))
    small = bound_from_auxiliaries(p, subset)
    big = bound_from_auxiliaries(p, subset | {extra})
    assert big.min_max_solution >= small.min_max_solution
    assert big.decimal_digits >= small.decimal_digits
    assert big.product % small.product == 0


def test_soundness_gate():
    with pytest.raises(BoundIntegrityError):
        bound_from_auxiliaries(3, [7, 31])
    with pytest.raises(BoundIntegrityError):
        bound_from_auxiliaries(3, [7, 7])
    with pytest.raises(BoundIntegrityError):
        bound_from_auxiliaries(3, [3])
    forged = ScanReport(p=3, bound=100, qualifying=(7, 13, 19), exhaustive=True)
    with pytest.raises(BoundIntegrityError):
        size_lower_bound(3, forged)
    partial = ScanReport(p=3, bound=100, qualifying=(7, 13), exhaustive=False)
    with pytest.raises(BoundIntegrityError):
        size_lower_bound(3, partial)
    with pytest.raises(BoundIntegrityError):
        size_lower_bound(5, scan_nc(3, 100))
