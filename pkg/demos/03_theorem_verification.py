# Verify the determinant identity on a few instances: the left side is
# det[prod_k (x_k y_i - z_j)^-1] / (Delta(y) Delta(z)), the right side is a
# signed product of diagonal factors over prod_k (x_k^n - xi^n)^n.

import random
from fractions import Fraction

from scottdet import TheoremInstance, verify_theorem
from scottdet.identity import theorem_sign
from scottdet.selftest import random_instance

inst = TheoremInstance(2, 1, (2,), 1)
report = verify_theorem(inst, strict_printed_form=True)
print("n=2 r=1 x=2 xi=1")
print("  lhs =", report.lhs, " rhs =", report.rhs, " equal:", report.equal)
print("  det * Delta(y) Delta(z) would give", report.printed_form["lhs"])

# the all-ones point reproduces n (n-1 + xi^n) ... (1 + (n-1) xi^n)
xi = Fraction(1, 2)
report = verify_theorem(TheoremInstance(3, 2, (1, 1), xi))
closed = -3 * (2 + xi ** 3) * (1 + 2 * xi ** 3) / (1 - xi ** 3) ** 6
print("\nn=3 r=2 x=(1,1) xi=1/2: lhs =", report.lhs, " closed form =", closed)

print("\nrandom rational instances:")
rng = random.Random(1)
for n, r in [(3, 3), (4, 2), (5, 3), (6, 2)]:
    inst = random_instance(rng, n, r)
    exact = verify_theorem(inst)
    approx = verify_theorem(TheoremInstance(n, r, inst.x_values, inst.xi, "float"))
    print(f"  n={n} r={r} x={[str(v) for v in inst.x_values]} xi={inst.xi}: "
          f"equal={exact.equal} sign={exact.observed_sign:+d} "
          f"(formula {theorem_sign(n, r):+d}) float equal={approx.equal} "
          f"{exact.elapsed_ms:.1f} ms")

# with x and xi left symbolic the identity holds as rational functions
report = verify_theorem(TheoremInstance(3, 2))
print("\nsymbolic n=3 r=2:", "equal" if report.equal else "NOT equal")
print("\nJSON report:", verify_theorem(TheoremInstance(3, 1, (3,), 2)).to_json())
