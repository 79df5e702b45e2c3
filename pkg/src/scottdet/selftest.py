"""Seeded randomized property suites over the identity's ranges.

Each suite returns a ``SuiteResult``; results are deterministic for a given
seed and never include timings, so repeated runs print identical text.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import DegenerateInstanceError
from .identity import (
    TheoremInstance,
    borchardt_check,
    diagonal_factor,
    gaudin_G_direct,
    gaudin_matrix,
    power_matrix,
    theorem_lhs,
    vandermonde,
    verify_theorem,
    FLOAT_RTOL,
)
from .linalg import ScalarMatrix, field_det, ryser_permanent
from .symfunc import complete, complete_spec, partitions, pi_omega, schur_box_spec, schur_jacobi_trudi

__all__ = [
    "SuiteResult",
    "random_rational",
    "random_instance",
    "theorem_sweep",
    "proposition_oracle",
    "gaudin_crosscheck",
    "permanent_suite",
    "pi_omega_suite",
    "ordering_suite",
    "run_selftest",
    "SWEEP_N",
    "SWEEP_R",
    "GAUDIN_CASES",
]

SWEEP_N = range(2, 7)
SWEEP_R = range(1, 5)
GAUDIN_CASES = ((2, 1), (2, 2), (3, 2), (4, 2), (3, 3))


@dataclass
class SuiteResult:
    name: str
    passed: int
    total: int
    first_failure: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.passed}/{self.total}"
        if self.first_failure:
            text += f" (first failure: {self.first_failure})"
        return text


class _Tally:
    def __init__(self, name):
        self.result = SuiteResult(name, 0, 0)

    def record(self, ok, label):
        self.result.total += 1
        if ok:
            self.result.passed += 1
        elif not self.result.first_failure:
            self.result.first_failure = label


def random_rational(rng: random.Random, bound: int = 20, nonzero: bool = True) -> Fraction:
    """Random p/q with |p|, q <= bound."""
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value or not nonzero:
            return value


def random_instance(rng: random.Random, n: int, r: int, backend: str = "exact",
                    bound: int = 20) -> TheoremInstance:
    """A random generic instance whose right side does not vanish.

    Draws are repeated while x_k**n == xi**n or some diagonal factor is
    zero (the sign of a vanishing value is not observable).
    """
    while True:
        xs = tuple(random_rational(rng, bound) for _ in range(r))
        xi = random_rational(rng, bound)
        try:
            inst = TheoremInstance(n, r, xs, xi, backend)
        except DegenerateInstanceError:
            continue
        exact = inst if backend == "exact" else TheoremInstance(n, r, xs, xi)
        if all(diagonal_factor(i, exact) != 0 for i in range(n)):
            return inst


def theorem_sweep(seed: int, backend: str = "exact", per_case: int = 3,
                  ns=SWEEP_N, rs=SWEEP_R) -> list[SuiteResult]:
    """Theorem equality and sign audit; for ``float`` also agreement with exact."""
    rng = random.Random(seed)
    equal = _Tally(f"theorem sweep ({backend})")
    sign = _Tally(f"sign audit ({backend})")
    agree = _Tally("float/exact agreement")
    for n in ns:
        for r in rs:
            for _ in range(per_case):
                inst = random_instance(rng, n, r)
                report = verify_theorem(inst)
                label = f"n={n} r={r} x={list(map(str, inst.x_values))} xi={inst.xi}"
                if backend == "float":
                    finst = TheoremInstance(n, r, inst.x_values, inst.xi, "float")
                    freport = verify_theorem(finst)
                    equal.record(freport.equal, label)
                    sign.record(freport.sign_matches, label)
                    gap = abs(complex(freport.lhs) - complex(report.lhs))
                    agree.record(gap <= FLOAT_RTOL * max(1.0, abs(complex(report.lhs))), label)
                else:
                    equal.record(report.equal, label)
                    sign.record(report.sign_matches, label)
    results = [equal.result, sign.result]
    if backend == "float":
        results.append(agree.result)
    return results


def proposition_oracle(ns=range(2, 6), rs=range(1, 4)) -> SuiteResult:
    """Monomial-sum expansion against Jacobi-Trudi with specialized entries."""
    tally = _Tally("proposition vs Jacobi-Trudi")
    for n in ns:
        for r in rs:
            for p in range(n):
                lam = (n - 1,) * (r - 1) + (p,)
                jt = schur_jacobi_trudi(lam, lambda k, n=n, r=r: complete_spec(k, n, r))
                tally.record(jt == schur_box_spec(p, n, r), f"n={n} r={r} p={p}")
    return tally.result


def gaudin_crosscheck(seed: int, cases=GAUDIN_CASES) -> list[SuiteResult]:
    """det(Gaudin matrix) = G, the power-times-diagonal factorization, and
    det(power matrix) = +-Delta(y)."""
    rng = random.Random(seed)
    g = _Tally("Gaudin determinant = G")
    fac = _Tally("Gaudin factorization")
    vdm = _Tally("power matrix = +-Vandermonde")
    for n, r in cases:
        inst = random_instance(rng, n, r)
        label = f"n={n} r={r} x={list(map(str, inst.x_values))} xi={inst.xi}"
        gm = gaudin_matrix(inst)
        g.record(field_det(gm) == gaudin_G_direct(inst), label)
        pm = power_matrix(inst)
        diag = [diagonal_factor(i, inst) for i in range(n)]
        fac.record(gm == ScalarMatrix.from_function(n, lambda i, j: pm[i, j] * diag[j]), label)
        ys, _ = inst.roots()
        d, v = field_det(pm), vandermonde(ys)
        vdm.record(d == v or d == -v, label)
    return [g.result, fac.result, vdm.result]


def _naive_permanent(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


def permanent_suite(seed: int, per_n: int = 50) -> list[SuiteResult]:
    rng = random.Random(seed)
    borch = _Tally("Borchardt det*per factorization")
    ryser = _Tally("Ryser = naive permanent")
    for n in range(1, 7):
        for _ in range(per_n):
            while True:
                values = [random_rational(rng, 20, nonzero=False) for _ in range(2 * n)]
                if len(set(values)) == 2 * n:
                    break
            borch.record(borchardt_check(values[:n], values[n:]), f"n={n} values={values}")
    for n in range(1, 6):
        for _ in range(10):
            rows = [[random_rational(rng, 10, nonzero=False) for _ in range(n)] for _ in range(n)]
            ryser.record(ryser_permanent(rows) == _naive_permanent(rows), f"n={n}")
    return [borch.result, ryser.result]


def pi_omega_suite(max_part: int = 4, max_r: int = 3) -> list[SuiteResult]:
    """Both symmetrizers agree and equal the Jacobi-Trudi Schur function."""
    dual = _Tally("pi_omega bialternant = symmetrization")
    schur = _Tally("x^lambda pi_omega = S_lambda")
    for r in range(1, max_r + 1):
        for weight in range(0, max_part * r + 1):
            for lam in partitions(weight, max_part, r):
                lam = lam + (0,) * (r - len(lam))
                a = pi_omega(lam)
                dual.record(a == pi_omega(lam, method="symmetrize"), f"lambda={lam}")
                jt = schur_jacobi_trudi(lam, lambda k, r=r: complete(k, r))
                schur.record(a == jt, f"lambda={lam}")
    return [dual.result, schur.result]


def ordering_suite(seed: int, cases=((2, 1), (3, 2), (4, 2), (5, 1))) -> SuiteResult:
    rng = random.Random(seed)
    tally = _Tally("left side invariant under root reordering")
    for n, r in cases:
        inst = random_instance(rng, n, r)
        base = theorem_lhs(inst)
        for _ in range(3):
            yo = rng.sample(range(n), n)
            zo = rng.sample(range(n), n)
            tally.record(theorem_lhs(inst, yo, zo) == base, f"n={n} r={r} y={yo} z={zo}")
    return tally.result


def run_selftest(seed: int = 0, backend: str = "exact") -> list[SuiteResult]:
    """All suites, in a fixed order."""
    from .worked_examples import run_all

    examples = _Tally("worked examples")
    for check in run_all():
        examples.record(check.ok, check.name)
    results = [examples.result]
    results += theorem_sweep(seed, backend)
    results.append(proposition_oracle())
    results += gaudin_crosscheck(seed)
    results += permanent_suite(seed)
    results += pi_omega_suite()
    results.append(ordering_suite(seed))
    return results
