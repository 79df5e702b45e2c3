# Exact arithmetic in Q(zeta_n), the field that holds the roots of y^n - 1.
# Elements are residues modulo the cyclotomic polynomial, so every nonzero
# element can be inverted and determinants need no floating point.

from fractions import Fraction

from scottdet import cyclotomic_field, cyclotomic_polynomial, root_of_unity_power

for n in (1, 4, 6, 12):
    print(f"Phi_{n} coefficients (low to high):", [str(c) for c in cyclotomic_polynomial(n)])

F = cyclotomic_field(5)
zeta = F.zeta
print("\nin Q(zeta_5):")
print("zeta^5 =", zeta ** 5)
a = 1 - zeta + Fraction(1, 3) * zeta ** 3
print("a =", a)
print("1/a =", a.inverse())
print("a * (1/a) =", a * a.inverse())

# the n roots of y^n - 1 are the powers of zeta
roots = [root_of_unity_power(F, k) for k in range(5)]
total = sum(roots[1:], roots[0])
print("sum of all fifth roots of unity:", total)

# the complex embedding is only used for display and for the float backend
print("zeta as a complex number:", complex(zeta))
