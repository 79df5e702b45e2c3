# Complete functions of a difference alphabet, Jacobi-Trudi determinants and
# the specialization z = roots of z^n - xi^n.  With that specialization the
# Schur function indexed by ((n-1)^(r-1), p) becomes a short sum of monomial
# functions, as the n = 4, r = 2 worked examples show.

from scottdet import (
    DiffAlphabet,
    MultiPoly,
    complete_diff,
    complete_spec,
    phi,
    pi_omega,
    schur_box_spec,
    schur_jacobi_trudi,
)
from scottdet.symfunc import render_monomial_basis

x1, x2 = MultiPoly.variables(2)
print("S_2(x1 + x2 - z1):", complete_diff(2, DiffAlphabet((x1, x2), (MultiPoly.xi(2),))))

n, r = 4, 2
print(f"\nn={n}, r={r}: S_j(x - z) = S_j(x) - xi^n S_(j-n)(x)")
for j in range(0, 7):
    print(f"  S_{j}:", complete_spec(j, n, r))

print("\nSchur functions S_(3,p)(x - z), two ways:")
for p in range(n):
    jt = schur_jacobi_trudi((n - 1, p), lambda k: complete_spec(k, n, r))
    closed = schur_box_spec(p, n, r)
    print(f"  S_3{p} = {render_monomial_basis(closed)}    (Jacobi-Trudi agrees: {jt == closed})")

# the maximal symmetrizer sends x^lambda to the Schur polynomial
print("\npi_omega(x1^2) =", pi_omega((2, 0)))
print("pi_omega(x1^-1 x2^1) =", pi_omega((-1, 1)))

# phi_k sums; their values at x = 1^r are symmetric in k
r = 5
print(f"\nphi_k(1^{r}) for n=3:", [str(phi(k, 3, r).eval([1] * r)) for k in range(2 * r + 1)])
