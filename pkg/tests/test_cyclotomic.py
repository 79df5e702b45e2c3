import pickle
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scottdet.cyclotomic import (
    ExactScalar,
    as_rational,
    cyclotomic_field,
    cyclotomic_polynomial,
    root_of_unity_power,
    upoly_mul,
)


def test_phi_1():
    assert cyclotomic_polynomial(1) == [-1, 1]


def test_phi_4():
    assert cyclotomic_polynomial(4) == [1, 0, 1]


def test_phi_6():
    assert cyclotomic_polynomial(6) == [1, -1, 1]


@pytest.mark.parametrize("n", range(1, 13))
def test_divisor_product_is_t_n_minus_1(n):
    prod = [Fraction(1)]
    for d in range(1, n + 1):
        if n % d == 0:
            prod = upoly_mul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (n - 1) + [1]


def test_zeta_squared_n4():
    z = cyclotomic_field(4).zeta
    assert z * z == -1


def test_inverse_zeta_n4():
    z = cyclotomic_field(4).zeta
    assert z.inverse() == -z


def test_zeta_plus_zeta2_n3():
    z = cyclotomic_field(3).zeta
    assert z + z * z == -1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyclotomic_field(5).zero.inverse()


def test_mixed_conductors_rejected():
    with pytest.raises(ValueError):
        cyclotomic_field(3).zeta + cyclotomic_field(4).zeta


@pytest.mark.parametrize("n", range(2, 9))
def test_inverse_property(n):
    F = cyclotomic_field(n)
    rng = random.Random(n)
    count = 0
    while count < 200:
        a = F.element([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(F.degree)])
        if a == 0:
            continue
        assert a * a.inverse() == 1
        count += 1


def test_root_of_unity_power_examples():
    assert root_of_unity_power(cyclotomic_field(2), 1) == -1
    assert root_of_unity_power(cyclotomic_field(4), 2) == -1
    for n in range(1, 10):
        assert root_of_unity_power(cyclotomic_field(n), n) == 1
        assert root_of_unity_power(cyclotomic_field(n), -1) * cyclotomic_field(n).zeta == 1


@pytest.mark.parametrize("n", range(1, 10))
def test_orbit_is_all_roots(n):
    F = cyclotomic_field(n)
    orbit = [root_of_unity_power(F, k) for k in range(n)]
    assert len(set(orbit)) == n
    for w in orbit:
        assert w ** n == 1


def test_complex_embedding():
    z = cyclotomic_field(6).zeta
    assert abs(complex(z) - complex(0.5, 3 ** 0.5 / 2)) < 1e-12


def test_rational_scalars_match_fractions():
    F = cyclotomic_field(5)
    a = F(Fraction(3, 7))
    assert a == Fraction(3, 7)
    assert hash(a) == hash(Fraction(3, 7))
    assert a.is_rational() and a.to_rational() == Fraction(3, 7)
    assert not F.zeta.is_rational()


def test_negative_power():
    F = cyclotomic_field(7)
    a = F.zeta + 2
    assert a ** -3 * a ** 3 == 1


def test_immutable_and_picklable():
    a = cyclotomic_field(5).zeta + Fraction(1, 2)
    with pytest.raises(AttributeError):
        a.coeffs = ()
    assert pickle.loads(pickle.dumps(a)) == a


def test_as_rational():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(2) == Fraction(2)


def test_str():
    z = cyclotomic_field(4).zeta
    assert str(1 - z) == "1 - zeta"


_rat = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.lists(_rat, min_size=8, max_size=8),
       st.lists(_rat, min_size=8, max_size=8), st.lists(_rat, min_size=8, max_size=8))
def test_field_axioms(n, a, b, c):
    F = cyclotomic_field(n)
    a, b, c = (F.element(v[:F.degree]) for v in (a, b, c))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    if b != 0:
        assert (a / b) * b == a


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.lists(_rat, min_size=8, max_size=8))
def test_complex_embedding_is_homomorphism(n, a):
    F = cyclotomic_field(n)
    a = F.element(a[:F.degree])
    b = a * F.zeta + 3
    assert abs(complex(a * b) - complex(a) * complex(b)) <= 1e-9 * max(1, abs(complex(a * b)))
