"""Lower bounds on the size of a Fermat solution from NC auxiliaries.

Every auxiliary with Condition NC divides one of x, y, z; distinct primes
multiply, so max(x, y, z) is at least the cube root of their product.  This
is a sound reconstruction; it does not reproduce the historical 39-digit
figure for p = 5.
"""
from germain import scan_nc, size_lower_bound

for p, bound in [(3, 10**6), (5, 10**6), (7, 10**6), (23, 10**6), (97, 10**6)]:
    sb = size_lower_bound(p, scan_nc(p, bound))
    print(f"p = {p:>2}: {len(sb.auxiliaries):>3} auxiliaries, "
          f"max(x, y, z) >= {sb.min_max_solution} ({sb.decimal_digits} digits)")
