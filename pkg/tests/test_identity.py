import random
from fractions import Fraction

import mpmath
import pytest

from scottdet.errors import DegenerateInstanceError, UsageError
from scottdet.identity import (
    TheoremInstance,
    VerificationReport,
    borchardt_check,
    build_D_matrix,
    diagonal_factor,
    diagonal_factor_poly,
    gaudin_G_direct,
    gaudin_matrix,
    gaudin_matrix_spec,
    normalization,
    power_matrix,
    scott_han_product,
    theorem_lhs,
    theorem_lhs_printed,
    theorem_rhs,
    theorem_sign,
    triple_product,
    vandermonde,
    verify_theorem,
)
from scottdet.linalg import ScalarMatrix, field_det
from scottdet.poly import MultiPoly, RationalFunction
from scottdet.selftest import random_instance
from scottdet.symfunc import phi

F = Fraction


def test_vandermonde():
    assert vandermonde([1, 2, 3]) == -2
    assert vandermonde([5, 1, 5]) == 0
    assert vandermonde([7]) == 1


def test_instance_validation():
    with pytest.raises(UsageError):
        TheoremInstance(0, 1, (1,), 1)
    with pytest.raises(UsageError):
        TheoremInstance(2, 2, (1,), 2)
    with pytest.raises(DegenerateInstanceError):
        TheoremInstance(2, 1, (1,), 0)
    with pytest.raises(UsageError):
        TheoremInstance(2, 1, None, 1, backend="float")


def test_degenerate_names_index():
    with pytest.raises(DegenerateInstanceError) as info:
        TheoremInstance(2, 2, (3, -1), 1)
    k, i, j = info.value.index
    assert k == 2
    inst_roots = TheoremInstance(2, 1, (2,), 1).roots()
    ys, zs = inst_roots
    # -1 * y_i == z_j for xi = 1
    assert -1 * ys[i - 1] == zs[j - 1]


def test_D_matrix_n1():
    m = build_D_matrix(TheoremInstance(1, 1, (5,), 2))
    assert m.tolist() == [[F(1, 3)]]


def test_D_matrix_n2_r1():
    # y = (-1, 1), z = (-xi, xi)
    a, b = F(2), F(3)
    m = build_D_matrix(TheoremInstance(2, 1, (a,), b))
    expected = [[1 / (-a + b), 1 / (-a - b)], [1 / (a + b), 1 / (a - b)]]
    assert m.tolist() == expected


def test_gaudin_G_n2_r1():
    x1 = MultiPoly.x(1, 1)
    inst = TheoremInstance(2, 1)
    assert gaudin_G_direct(inst) == RationalFunction(2 * x1)
    # the reversed y-list gives the opposite sign
    assert gaudin_G_direct(inst, y_order=[1, 0]) == RationalFunction(-2 * x1)
    for xi in (F(1), F(-3, 2), F(7)):
        assert gaudin_G_direct(TheoremInstance(2, 1, (F(5, 3),), xi), [1, 0]) == F(-10, 3)


def test_gaudin_G_n1():
    assert gaudin_G_direct(TheoremInstance(1, 3, (2, 3, 5), F(1, 2))) == 1


def test_gaudin_matrix_r1_n2():
    inst = TheoremInstance(2, 1, (F(3),), F(2))
    ys, _ = inst.roots()
    assert gaudin_matrix(inst).tolist() == [[1, y * 3] for y in ys]
    assert gaudin_matrix_spec(inst) == gaudin_matrix(inst)


def test_gaudin_matrix_n3_r3_entries():
    rng = random.Random(3)
    inst = random_instance(rng, 3, 3)
    xs, xi = list(inst.x_values), inst.xi
    ys, _ = inst.roots()
    g = gaudin_matrix(inst)
    ph = {k: phi(k, 3, 3).eval(xs) for k in range(7)}
    for i, y in enumerate(ys):
        assert g[i, 0] == y ** 4 * ph[4] + y * ph[1] * xi ** 3
        assert g[i, 1] == y ** 5 * ph[5] + y ** 2 * ph[2] * xi ** 3
        assert g[i, 2] == ph[6] + ph[3] * xi ** 3 + xi ** 6


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 2), (4, 2), (3, 3)])
def test_gaudin_det_equals_G(n, r):
    inst = random_instance(random.Random(n * 10 + r), n, r)
    assert field_det(gaudin_matrix(inst)) == gaudin_G_direct(inst)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("r", range(1, 4))
def test_factorization_and_vandermonde(n, r):
    inst = random_instance(random.Random(n * 7 + r), n, r)
    gm = gaudin_matrix(inst)
    assert gm == gaudin_matrix_spec(inst)
    pm = power_matrix(inst)
    diag = [diagonal_factor(i, inst) for i in range(n)]
    assert gm == ScalarMatrix.from_function(n, lambda i, j: pm[i, j] * diag[j])
    prod = inst.one()
    for d in diag:
        prod = prod * d
    assert field_det(gm) == field_det(pm) * prod
    ys, _ = inst.roots()
    assert field_det(pm) in (vandermonde(ys), -vandermonde(ys))


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("r", range(1, 5))
def test_normalization(n, r):
    inst = random_instance(random.Random(n + 100 * r), n, r)
    assert triple_product(inst) == normalization(inst)


def test_diagonal_factor_examples():
    xi3 = MultiPoly.xi(3) ** 3
    assert diagonal_factor_poly(0, 3, 3) == phi(4, 3, 3) + phi(1, 3, 3) * xi3
    xi3 = MultiPoly.xi(5) ** 3
    assert diagonal_factor_poly(1, 3, 5) == (phi(9, 3, 5) + phi(6, 3, 5) * xi3
                                             + phi(3, 3, 5) * xi3 ** 2 + xi3 ** 3)
    for n in range(1, 6):
        for i in range(n):
            assert diagonal_factor_poly(i, n, 1) == MultiPoly.x(1, 1) ** i


def test_sign_formula():
    assert theorem_sign(2, 1) == -1
    assert theorem_sign(3, 5) == -1
    assert theorem_sign(4, 2) == -1
    assert theorem_sign(3, 2) == -1
    assert theorem_sign(5, 3) == 1


def test_rhs_n2_r1_symbolic():
    x1, xi = MultiPoly.x(1, 1), MultiPoly.xi(1)
    inst = TheoremInstance(2, 1)
    assert theorem_rhs(inst) == RationalFunction(-x1, (x1 ** 2 - xi ** 2) ** 2)


def test_lhs_hand_example():
    inst = TheoremInstance(2, 1, (2,), 1)
    assert field_det(build_D_matrix(inst)) == F(-8, 9)
    assert theorem_lhs(inst) == F(-2, 9)
    assert theorem_rhs(inst) == F(-2, 9)


def test_lhs_n1():
    inst = TheoremInstance(1, 3, (2, 3, 5), F(1, 2))
    assert theorem_lhs(inst) == 1 / (F(3, 2) * F(5, 2) * F(9, 2))


def test_lhs_ordering_invariance():
    rng = random.Random(5)
    inst = random_instance(rng, 4, 2)
    base = theorem_lhs(inst)
    for _ in range(5):
        yo, zo = rng.sample(range(4), 4), rng.sample(range(4), 4)
        assert theorem_lhs(inst, yo, zo) == base


def test_scott_products():
    assert scott_han_product(1) == 1
    xi = MultiPoly.xi(2)
    assert scott_han_product(2) == 2 * (1 + xi ** 2)
    assert scott_han_product(4) == 4 * (3 + xi ** 4) * (2 + 2 * xi ** 4) * (1 + 3 * xi ** 4)
    for n in range(1, 9):
        ones = [F(1), F(1)]
        prod = MultiPoly.const(2, F(1))
        for i in range(n):
            prod = prod * diagonal_factor_poly(i, n, 2).eval(ones, xi)
        assert prod == scott_han_product(n)


def test_borchardt():
    assert borchardt_check([3], [1])
    assert borchardt_check([0, 1], [2, 5])
    with pytest.raises(UsageError):
        borchardt_check([0, 0], [2, 5])
    with pytest.raises(UsageError):
        borchardt_check([0, 2], [2, 5])


def test_verify_examples():
    report = verify_theorem(TheoremInstance(2, 1, (2,), 1))
    assert report.equal and report.lhs == report.rhs == F(-2, 9)
    assert report.sign_matches


def test_verify_n3_r2_ones():
    xi = F(1, 2)
    inst = TheoremInstance(3, 2, (1, 1), xi)
    report = verify_theorem(inst)
    expected = 3 * (2 + xi ** 3) * (1 + 2 * xi ** 3) / (1 - xi ** 3) ** 6
    assert report.equal
    assert report.rhs == theorem_sign(3, 2) * expected


def test_printed_form_disagrees():
    report = verify_theorem(TheoremInstance(2, 1, (2,), 1), strict_printed_form=True)
    assert report.printed_form["lhs"] == F(-8, 9) * 4
    assert report.printed_form["equal"] is False
    assert theorem_lhs_printed(TheoremInstance(2, 1, (2,), 1)) == F(-32, 9)


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_symbolic_identity(n, r):
    assert verify_theorem(TheoremInstance(n, r)).equal


def test_symbolic_3_3():
    report = verify_theorem(TheoremInstance(3, 3))
    assert report.equal and report.sign_matches


def test_symbolic_cap():
    with pytest.raises(UsageError):
        theorem_lhs(TheoremInstance(4, 2))


def test_xi_symbolic_beyond_cap():
    assert verify_theorem(TheoremInstance(3, 5, (1,) * 5)).equal


# independent high-precision oracle for the division reading of the left side

def _mp_lhs(n, r, x, xi):
    mpmath.mp.dps = 50
    zeta = mpmath.exp(2j * mpmath.pi / n)
    ys = [zeta ** i for i in range(1, n + 1)]
    zs = [xi * zeta ** j for j in range(1, n + 1)]
    m = mpmath.matrix(n, n)
    for i in range(n):
        for j in range(n):
            d = mpmath.mpc(1)
            for xk in x:
                d *= xk * ys[i] - zs[j]
            m[i, j] = 1 / d

    def vdm(v):
        out = mpmath.mpc(1)
        for a in range(n):
            for b in range(a + 1, n):
                out *= v[a] - v[b]
        return out

    return mpmath.det(m), vdm(ys) * vdm(zs)


def _mp_rhs(n, r, x, xi):
    # phi_k(x) as the coefficient of t^k in prod_k (1 + x t + ... + (x t)^(n-1))
    poly = [mpmath.mpf(1)]
    for xk in x:
        block = [mpmath.mpf(xk) ** e for e in range(n)]
        out = [mpmath.mpf(0)] * (len(poly) + n - 1)
        for a, pa in enumerate(poly):
            for b, pb in enumerate(block):
                out[a + b] += pa * pb
        poly = out
    N = (n - 1) * (r - 1)
    num = mpmath.mpf(1)
    for i in range(n):
        f, j = mpmath.mpf(0), 0
        while N + i - n * j >= 0:
            k = N + i - n * j
            f += (poly[k] if k < len(poly) else 0) * mpmath.mpf(xi) ** (n * j)
            j += 1
        num *= f
    den = mpmath.mpf(1)
    for xk in x:
        den *= (mpmath.mpf(xk) ** n - mpmath.mpf(xi) ** n) ** n
    sign = (-1) ** ((n - 1) * n // 2 + (n - 1) * (r - 1))
    return sign * num / den


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)])
def test_division_reading_against_mpmath(n, r):
    rng = random.Random(n * 31 + r)
    for _ in range(3):
        inst = random_instance(rng, n, r, bound=7)
        x = [mpmath.mpf(v.numerator) / v.denominator for v in inst.x_values]
        xi = mpmath.mpf(inst.xi.numerator) / inst.xi.denominator
        det, vv = _mp_lhs(n, r, x, xi)
        rhs = _mp_rhs(n, r, x, xi)
        ours = complex(theorem_lhs(inst))
        scale = max(1, abs(rhs))
        assert abs(det / vv - rhs) < mpmath.mpf(10) ** -30 * scale
        assert abs(ours - complex(rhs)) < 1e-12 * scale
        if n > 1:
            # the product reading differs from the right side
            assert abs(det * vv - rhs) > 1e-6 * scale


def test_float_backend_agrees():
    rng = random.Random(9)
    for n in range(2, 6):
        for r in range(1, 5):
            inst = random_instance(rng, n, r)
            finst = TheoremInstance(n, r, inst.x_values, inst.xi, "float")
            exact = complex(theorem_lhs(inst))
            approx = theorem_lhs(finst)
            assert abs(approx - exact) <= 1e-9 * max(1.0, abs(exact))
            assert verify_theorem(finst).equal


def test_report_json_roundtrip():
    for inst in (TheoremInstance(3, 2, (F(1, 2), 3), 2),
                 TheoremInstance(5, 1, (F(2, 3),), F(-1, 4)),
                 TheoremInstance(4, 2, (1, 2), 3, "float")):
        text = verify_theorem(inst, strict_printed_form=True).to_json()
        again = VerificationReport.from_json(text)
        assert again.to_json() == text
        assert again.lhs == verify_theorem(inst).lhs


def test_report_json_keys():
    data = verify_theorem(TheoremInstance(2, 1, (2,), 1)).to_dict()
    assert list(data) == ["n", "r", "x", "xi", "backend", "lhs", "rhs", "equal",
                          "observed_sign", "elapsed_ms"]
    assert data["x"] == ["2/1"] and data["lhs"] == "-2/9"
