"""Exact q-series: the two Laurent series that drive everything else.

All coefficients are exact rationals; nothing here ever touches a float.
"""

from extremal2.exactq import delta, eisenstein, j_and_script_e

e4 = eisenstein(4, 6)
e6 = eisenstein(6, 6)
print("E4 =", e4)
print("E6 =", e6)

d = delta(8)
print("Delta = (E4^3 - E6^2)/1728 =", d)
assert all(c.denominator == 1 for c in d.coeffs), "Delta has integer coefficients"

j, script_e = j_and_script_e(6)
print("J =", j)
print("E =", script_e)

# the anchors every later computation leans on
assert (j.coeff(-1), j.coeff(0), j.coeff(1)) == (1, 0, 196884)
assert (script_e.coeff(-1), script_e.coeff(0), script_e.coeff(1)) == (1, -240, -141444)

inv = script_e.invert()
print("1/E =", inv)
print("E * (1/E) =", script_e * inv)
