# Two classical special cases: Scott's product at x = (1, 1) and Borchardt's
# factorization det[(y-z)^-2] = det[(y-z)^-1] per[(y-z)^-1].

from fractions import Fraction

from scottdet import MultiPoly, borchardt_check, ryser_permanent, scott_han_product
from scottdet.worked_examples import run_all

for n in range(1, 6):
    print(f"n={n}:", scott_han_product(n))

y = [Fraction(0), Fraction(1), Fraction(3)]
z = [Fraction(2), Fraction(5), Fraction(-1, 2)]
cauchy = [[1 / (a - b) for b in z] for a in y]
print("\npermanent of the 3x3 Cauchy matrix:", ryser_permanent(cauchy))
print("Borchardt factorization holds:", borchardt_check(y, z))

print("\nworked examples:")
for check in run_all():
    print(("  ok   " if check.ok else "  FAIL ") + check.name + ": " + check.produced)
