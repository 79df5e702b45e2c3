# The Gaudin-type matrix [S_((n-1)^(r-1), j)(y_i x - z)] factors as a
# permuted Vandermonde matrix [y_i^((N+j) mod n)] times a diagonal matrix.
# Here for n = r = 3 with x and xi kept symbolic.

from scottdet import TheoremInstance, gaudin_matrix
from scottdet.identity import diagonal_factor_poly, gaudin_G_direct, power_matrix
from scottdet.linalg import field_det
from scottdet.worked_examples import phi_terms, render_phi_sum

n, r = 3, 3
inst = TheoremInstance(n, r)
gm = gaudin_matrix(inst)
pm = power_matrix(inst)
print("power matrix exponents:", [(inst.N + j) % n for j in range(n)])
for i in range(n):
    print(f"  F_{i} =", render_phi_sum(phi_terms(diagonal_factor_poly(i, n, r), n)))

diag = [inst.lift(diagonal_factor_poly(i, n, r)) for i in range(n)]
ok = all(gm[i, j] == pm[i, j] * diag[j] for i in range(n) for j in range(n))
print("Gaudin matrix = power matrix * diag:", ok)

# at a rational point the determinant also matches the direct formula for G
point = TheoremInstance(n, r, (2, -1, "1/3"), 3)
print("det(Gaudin) == G at x=(2,-1,1/3), xi=3:",
      field_det(gaudin_matrix(point)) == gaudin_G_direct(point))
