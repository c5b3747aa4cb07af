"""Cubic residues modulo 7 and what they say about x^3 + y^3 = z^3.

Run with ``python demos/01_worked_example.py``.
"""
from germain import certify_sgt, consecutive_pair_from_solution, residues_bruteforce, residues_subgroup
from germain.arith import PrimeModulus, inv_mod

# Division on the mod-5 clock: 2 * 3 = 6 = 1, so 1/2 = 3.
five = PrimeModulus(5)
print("1/2 mod 5 =", inv_mod(five.residue(2)).value)

# Cubes of 1..6 modulo 7 take only the values 1 and 6 (= -1).
print("cubes mod 7:", sorted({x**3 % 7 for x in range(1, 7)}))
rs = residues_subgroup(3, 7)
assert rs == residues_bruteforce(3, 7)
print("residue set:", rs.members, " paired form:", ["±%d" % r for r in rs.paired()])

# 1 and 6 are not consecutive, and 3 is not among them: both hypotheses hold.
cert = certify_sgt(3, 7)
print("NC holds:", cert.nc_holds, " 3 is not a cube:", cert.p_not_residue_holds)
print("=>", cert.consequence)

# Any solution of z^3 = x^3 + y^3 mod 7 has 7 dividing one of x, y, z.
solutions = [
    (x, y, z)
    for x in range(7) for y in range(7) for z in range(7)
    if (z**3 - x**3 - y**3) % 7 == 0
]
assert all(consecutive_pair_from_solution(3, 7, *s).theta_divides_xyz for s in solutions)
print(f"{len(solutions)} solutions mod 7, every one has a coordinate divisible by 7")

# Modulo 31 the same step produces a pair of consecutive cubes instead.
c = next(v for v in range(31) if pow(v, 3, 31) == 2)
print(f"mod 31: 1^3 + 1^3 = {c}^3, giving consecutive cubes",
      consecutive_pair_from_solution(3, 31, 1, 1, c).pair)
