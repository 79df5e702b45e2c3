"""Both sides of the generalized Scott identity and the objects between them.

For an alphabet x of size r, y the n-th roots of unity and z the roots of
z**n - xi**n, the determinant det[prod_k (x_k y_i - z_j)**-1] divided by
Delta(y) Delta(z) equals

    (-1)**((n-1)n/2 + (n-1)(r-1)) * prod_i F_i / prod_k (x_k**n - xi**n)**n

with F_i = sum_j phi_{N+i-nj}(x) xi**(nj) and N = (n-1)(r-1).

Three realizations share one code path: ``exact`` (values in Q(zeta_n)),
``float`` (complex doubles, zeta = exp(2 pi i / n)) and symbolic (x and/or
xi left as indeterminates; entries become polynomials or rational
functions with cyclotomic coefficients).
"""

from __future__ import annotations

import cmath
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import ExactScalar, as_rational, cyclotomic_field, root_of_unity_power
from .errors import DegenerateInstanceError, UsageError
from .linalg import ScalarMatrix, bareiss_det, field_det, ryser_permanent
from .poly import MultiPoly, RationalFunction, format_coeff
from .symfunc import complete_spec, phi, schur_jacobi_trudi

__all__ = [
    "TheoremInstance",
    "VerificationReport",
    "FLOAT_RTOL",
    "SYMBOLIC_CAP",
    "vandermonde",
    "build_D_matrix",
    "d_determinant",
    "triple_product",
    "normalization",
    "gaudin_G_direct",
    "gaudin_matrix",
    "gaudin_matrix_spec",
    "power_matrix",
    "diagonal_factor_poly",
    "diagonal_factor",
    "theorem_sign",
    "theorem_rhs",
    "theorem_rhs_unsigned",
    "theorem_lhs",
    "theorem_lhs_printed",
    "verify_theorem",
    "scott_han_product",
    "borchardt_check",
]

FLOAT_RTOL = 1e-9
SIGN_RATIO_TOL = 1e-3
# largest (n, r) for which a symbolic-x left side is attempted
SYMBOLIC_CAP = (3, 3)
BACKENDS = ("exact", "float")


@dataclass(frozen=True)
class TheoremInstance:
    """Parameters of one theorem check.

    ``x_values=None`` keeps x symbolic and ``xi=None`` keeps xi symbolic;
    the float backend needs both specialized.
    """

    n: int
    r: int
    x_values: tuple | None = None
    xi: Fraction | None = None
    backend: str = "exact"

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise UsageError(f"n and r must be positive, got n={self.n}, r={self.r}")
        if self.backend not in BACKENDS:
            raise UsageError(f"unknown backend {self.backend!r}")
        if self.x_values is not None:
            xs = tuple(as_rational(v) for v in self.x_values)
            if len(xs) != self.r:
                raise UsageError(f"expected {self.r} x-values, got {len(xs)}")
            object.__setattr__(self, "x_values", xs)
        if self.xi is not None:
            object.__setattr__(self, "xi", as_rational(self.xi))
            if self.xi == 0:
                raise DegenerateInstanceError("xi must be nonzero")
        if self.backend == "float" and self.symbolic:
            raise UsageError("the float backend needs numeric x and xi")
        self._check_generic()

    def _check_generic(self):
        if self.x_values is None or self.xi is None:
            return
        n = self.n
        for k, xk in enumerate(self.x_values, start=1):
            if xk ** n == self.xi ** n:
                ys, zs = _exact_roots(self, None, None)
                i, j = next((i, j) for i in range(n) for j in range(n)
                            if xk * ys[i] == zs[j])
                raise DegenerateInstanceError(
                    f"x_{k}**{n} == xi**{n}: entry (k={k}, i={i + 1}, j={j + 1}) "
                    "has a zero denominator", index=(k, i + 1, j + 1))

    @property
    def symbolic(self) -> bool:
        return self.x_values is None or self.xi is None

    @property
    def N(self) -> int:
        return (self.n - 1) * (self.r - 1)

    @property
    def field(self):
        return cyclotomic_field(self.n)

    def xs(self):
        """x as backend values: Fractions, complex numbers or variables."""
        if self.x_values is None:
            return MultiPoly.variables(self.r)
        if self.backend == "float":
            return [complex(float(v)) for v in self.x_values]
        if self.xi is None:
            return [MultiPoly.const(self.r, v) for v in self.x_values]
        return list(self.x_values)

    def xi_value(self):
        if self.xi is None:
            return MultiPoly.xi(self.r)
        if self.backend == "float":
            return complex(float(self.xi))
        if self.x_values is None:
            return MultiPoly.const(self.r, self.xi)
        return self.xi

    def roots(self, y_order=None, z_order=None):
        """``(y, z)`` with y_i = zeta**i, z_j = xi * zeta**j for i, j = 1..n.

        ``y_order``/``z_order`` permute the lists (0-based positions).
        """
        if self.backend == "float":
            zeta = cmath.exp(2j * cmath.pi / self.n)
            ys = [zeta ** i for i in range(1, self.n + 1)]
            zs = [self.xi_value() * zeta ** j for j in range(1, self.n + 1)]
            return _reorder(ys, y_order), _reorder(zs, z_order)
        if self.symbolic:
            F = self.field
            ys = [root_of_unity_power(F, i) for i in range(1, self.n + 1)]
            xi = self.xi_value()
            zs = [xi * root_of_unity_power(F, j) for j in range(1, self.n + 1)]
            return _reorder(ys, y_order), _reorder(zs, z_order)
        return _exact_roots(self, y_order, z_order)

    def one(self):
        if self.symbolic:
            return MultiPoly.const(self.r, Fraction(1))
        if self.backend == "float":
            return 1 + 0j
        return self.field.one

    def lift(self, value):
        """Coerce a backend value (or a stray int 0) into the backend's type."""
        return self.one() * value

    def to_json_fields(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "x": None if self.x_values is None else [format_coeff(v) for v in self.x_values],
            "xi": None if self.xi is None else format_coeff(self.xi),
            "backend": self.backend,
        }


def _reorder(values, order):
    return list(values) if order is None else [values[k] for k in order]


def _exact_roots(inst, y_order, z_order):
    F = inst.field
    ys = [root_of_unity_power(F, i) for i in range(1, inst.n + 1)]
    zs = [root_of_unity_power(F, j) * inst.xi for j in range(1, inst.n + 1)]
    return _reorder(ys, y_order), _reorder(zs, z_order)


def vandermonde(values):
    """prod_{i<j} (v_i - v_j) in list order; 1 for fewer than two values."""
    values = list(values)
    out = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out = (values[i] - values[j]) * out
    return out


def build_D_matrix(inst: TheoremInstance, y_order=None, z_order=None) -> ScalarMatrix:
    """Matrix with (i, j) entry prod_k (x_k y_i - z_j)**-1.

    Symbolic instances give ``RationalFunction`` entries.
    """
    ys, zs = inst.roots(y_order, z_order)
    xs = inst.xs()

    def entry(i, j):
        den = inst.one()
        for x in xs:
            den = den * (x * ys[i] - zs[j])
        if inst.symbolic:
            return RationalFunction(MultiPoly.const(inst.r, Fraction(1)), inst.lift(den))
        return 1 / den

    return ScalarMatrix.from_function(inst.n, entry)


def _symbolic_D_det(inst, y_order=None, z_order=None) -> RationalFunction:
    # scale row i by R_i = prod_{j,k} (x_k y_i - z_j); the scaled entries are
    # polynomials and det(D) = det(scaled) / prod_i R_i
    x_symbolic = inst.x_values is None
    if x_symbolic and (inst.n > SYMBOLIC_CAP[0] or inst.r > SYMBOLIC_CAP[1]):
        raise UsageError(
            f"symbolic-x determinant capped at n <= {SYMBOLIC_CAP[0]}, r <= {SYMBOLIC_CAP[1]}")
    ys, zs = inst.roots(y_order, z_order)
    xs = inst.xs()
    n = inst.n
    factors = [[inst.lift(_prod(x * ys[i] - zs[j] for x in xs)) for j in range(n)]
               for i in range(n)]
    scaled = [[_prod(factors[i][jj] for jj in range(n) if jj != j) for j in range(n)]
              for i in range(n)]
    scale = _prod(_prod(row) for row in factors)
    return RationalFunction(inst.lift(bareiss_det(scaled)), inst.lift(scale))


def _prod(values):
    out = None
    for v in values:
        out = v if out is None else out * v
    return Fraction(1) if out is None else out


def d_determinant(inst: TheoremInstance, y_order=None, z_order=None):
    """det D(x, y, z) in the instance's realization."""
    if inst.symbolic:
        return _symbolic_D_det(inst, y_order, z_order)
    return inst.lift(field_det(build_D_matrix(inst, y_order, z_order)))


def triple_product(inst: TheoremInstance):
    """prod over x, y, z of (x y - z), multiplied out literally."""
    ys, zs = inst.roots()
    out = inst.one()
    for x in inst.xs():
        for y in ys:
            for z in zs:
                out = out * (x * y - z)
    return out


def normalization(inst: TheoremInstance):
    """prod_k (x_k**n - xi**n)**n."""
    xi_n = inst.xi_value() ** inst.n
    out = inst.one()
    for x in inst.xs():
        out = out * (x ** inst.n - xi_n) ** inst.n
    return out


def _divide(a, b, inst):
    if inst.symbolic:
        if not isinstance(a, RationalFunction):
            a = RationalFunction(inst.lift(a))
        return a / RationalFunction(inst.lift(b))
    return a / b


def gaudin_G_direct(inst: TheoremInstance, y_order=None):
    """G = det(D) * prod(x y - z) / Delta(z)."""
    _, zs = inst.roots(y_order)
    det = d_determinant(inst, y_order)
    return _divide(det * triple_product(inst), vandermonde(zs), inst)


def _box(n, r, j):
    return (n - 1,) * (r - 1) + (j,)


def gaudin_matrix(inst: TheoremInstance, y_order=None) -> ScalarMatrix:
    """Rows i = 1..n, columns j = 0..n-1: S_{(n-1)^(r-1), j}(y_i x - z).

    Each entry is a Jacobi-Trudi determinant whose entries S_k(y_i x - z)
    come from the specialized complete functions with x_m -> y_i x_m.
    """
    n, r = inst.n, inst.r
    ys, _ = inst.roots(y_order)
    xs = inst.xs()
    xi = inst.xi_value()
    rows = []
    for y in ys:
        point = [y * x for x in xs]
        cache = {}

        def entry(k, point=point, cache=cache):
            if k not in cache:
                cache[k] = inst.lift(complete_spec(k, n, r).eval(point, xi))
            return cache[k]

        rows.append([inst.lift(schur_jacobi_trudi(_box(n, r, j), entry)) for j in range(n)])
    return ScalarMatrix(rows)


@lru_cache(maxsize=None)
def diagonal_factor_poly(i: int, n: int, r: int) -> MultiPoly:
    """sum_{j >= 0} phi_{N+i-nj}(x) xi**(nj) as a polynomial."""
    if not 0 <= i <= n - 1:
        raise UsageError(f"diagonal index {i} outside 0..{n - 1}")
    N = (n - 1) * (r - 1)
    xi_n = MultiPoly.xi(r) ** n
    out = MultiPoly.zero(r)
    j = 0
    while N + i - n * j >= 0:
        out = out + phi(N + i - n * j, n, r) * xi_n ** j
        j += 1
    return out


def diagonal_factor(i: int, inst: TheoremInstance):
    """The i-th diagonal entry of the factorization, evaluated on the instance."""
    return inst.lift(diagonal_factor_poly(i, inst.n, inst.r).eval(inst.xs(), inst.xi_value()))


def gaudin_matrix_spec(inst: TheoremInstance, y_order=None) -> ScalarMatrix:
    """Entries sum_t xi**(tn) y_i**(N+j-tn) phi_{N+j-tn}(x), negative indices dropped."""
    n, r, N = inst.n, inst.r, inst.N
    ys, _ = inst.roots(y_order)
    xs = inst.xs()
    xi = inst.xi_value()
    phis = {k: inst.lift(phi(k, n, r).eval(xs, xi)) for k in range(0, N + n)}

    def entry(i, j):
        total = inst.lift(0)
        t = 0
        while N + j - t * n >= 0:
            k = N + j - t * n
            total = total + xi ** (t * n) * ys[i] ** k * phis[k]
            t += 1
        return total

    return ScalarMatrix.from_function(n, entry)


def power_matrix(inst: TheoremInstance, y_order=None) -> ScalarMatrix:
    """[y_i ** ((N + j) mod n)] for j = 0..n-1."""
    ys, _ = inst.roots(y_order)
    n, N = inst.n, inst.N
    return ScalarMatrix.from_function(
        n, lambda i, j: inst.lift(ys[i] ** ((N + j) % n)))


def theorem_sign(n: int, r: int) -> int:
    """(-1)**((n-1)n/2 + (n-1)(r-1)), with an integer exponent."""
    return -1 if ((n - 1) * n // 2 + (n - 1) * (r - 1)) % 2 else 1


def _diag_product(inst):
    out = inst.one()
    for i in range(inst.n):
        out = out * diagonal_factor(i, inst)
    return out


def theorem_rhs_unsigned(inst: TheoremInstance):
    """prod_i F_i / prod_k (x_k**n - xi**n)**n."""
    return _divide(_diag_product(inst), normalization(inst), inst)


def theorem_rhs(inst: TheoremInstance):
    """The factorized right-hand side, sign included."""
    return theorem_rhs_unsigned(inst) * theorem_sign(inst.n, inst.r)


def theorem_lhs(inst: TheoremInstance, y_order=None, z_order=None):
    """det D / (Delta(y) Delta(z)); independent of the root orderings."""
    ys, zs = inst.roots(y_order, z_order)
    det = d_determinant(inst, y_order, z_order)
    return _divide(det, vandermonde(ys) * vandermonde(zs), inst)


def theorem_lhs_printed(inst: TheoremInstance, y_order=None, z_order=None):
    """det D * Delta(y) Delta(z), the product reading of the left side."""
    ys, zs = inst.roots(y_order, z_order)
    return d_determinant(inst, y_order, z_order) * (vandermonde(ys) * vandermonde(zs))


def _close(a, b):
    return abs(complex(a) - complex(b)) <= FLOAT_RTOL * max(1.0, abs(complex(b)))


def _same(a, b, inst):
    if inst.backend == "float":
        return _close(a, b)
    return a == b


def _observed_sign(lhs, unsigned, inst):
    if inst.backend == "float":
        # nearest sign of the ratio; float error at n = 6 can reach ~1e-6
        if unsigned == 0:
            return 0
        ratio = complex(lhs) / complex(unsigned)
        for s in (1, -1):
            if abs(ratio - s) <= SIGN_RATIO_TOL:
                return s
        return 0
    if _same(lhs, unsigned, inst):
        return 1
    if _same(lhs, -unsigned, inst):
        return -1
    return 0


def _scalar_json(value, inst):
    if isinstance(value, RationalFunction):
        return f"({value.num.render()}) / ({value.den.render()})"
    if isinstance(value, MultiPoly):
        return value.render()
    if isinstance(value, ExactScalar):
        if value.is_rational():
            return format_coeff(value.to_rational())
        return [format_coeff(c) for c in value.residue()]
    if isinstance(value, (int, Fraction)):
        return format_coeff(value)
    return repr(complex(value))


def _scalar_from_json(data, n, backend):
    if isinstance(data, list):
        return cyclotomic_field(n).element([Fraction(c) for c in data])
    if backend == "float":
        return complex(data)
    try:
        return Fraction(data)
    except ValueError:
        return data


@dataclass
class VerificationReport:
    """Outcome of one theorem check."""

    instance: TheoremInstance
    lhs: object
    rhs: object
    equal: bool
    observed_sign: int
    expected_sign: int
    elapsed_ms: float
    diagnostics: dict = field(default_factory=dict)
    printed_form: dict | None = None

    @property
    def sign_matches(self) -> bool:
        return self.observed_sign == self.expected_sign

    def to_dict(self) -> dict:
        inst = self.instance
        out = inst.to_json_fields()
        out.update({
            "lhs": _scalar_json(self.lhs, inst),
            "rhs": _scalar_json(self.rhs, inst),
            "equal": self.equal,
            "observed_sign": self.observed_sign,
            "elapsed_ms": self.elapsed_ms,
        })
        if self.printed_form is not None:
            out["printed_form"] = {
                "lhs": _scalar_json(self.printed_form["lhs"], inst),
                "equal": self.printed_form["equal"],
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        n, r, backend = data["n"], data["r"], data["backend"]
        inst = TheoremInstance(
            n, r,
            None if data["x"] is None else tuple(Fraction(v) for v in data["x"]),
            None if data["xi"] is None else Fraction(data["xi"]),
            backend,
        )
        printed = data.get("printed_form")
        if printed is not None:
            printed = {"lhs": _scalar_from_json(printed["lhs"], n, backend),
                       "equal": printed["equal"]}
        return cls(
            instance=inst,
            lhs=_scalar_from_json(data["lhs"], n, backend),
            rhs=_scalar_from_json(data["rhs"], n, backend),
            equal=data["equal"],
            observed_sign=data["observed_sign"],
            expected_sign=theorem_sign(n, r),
            elapsed_ms=data["elapsed_ms"],
            printed_form=printed,
        )

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


def verify_theorem(inst: TheoremInstance, strict_printed_form: bool = False) -> VerificationReport:
    """Compute both sides independently and compare them.

    Exact and symbolic instances need identical values; the float backend
    allows a relative gap of ``FLOAT_RTOL``.
    """
    start = time.perf_counter()
    lhs = theorem_lhs(inst)
    unsigned = theorem_rhs_unsigned(inst)
    expected = theorem_sign(inst.n, inst.r)
    rhs = unsigned * expected
    equal = _same(lhs, rhs, inst)
    observed = _observed_sign(lhs, unsigned, inst)
    ys, zs = inst.roots()
    diagnostics = {
        "diagonal": [diagonal_factor(i, inst) for i in range(inst.n)],
        "delta_y": vandermonde(ys),
        "delta_z": vandermonde(zs),
    }
    printed = None
    if strict_printed_form:
        value = theorem_lhs_printed(inst)
        printed = {"lhs": value, "equal": _same(value, rhs, inst)}
    elapsed = round((time.perf_counter() - start) * 1000.0, 3)
    return VerificationReport(inst, lhs, rhs, equal, observed, expected, elapsed,
                              diagnostics, printed)


def scott_han_product(n: int, r: int = 2) -> MultiPoly:
    """prod_{i=0}^{n-1} (n - i + i xi**n) as a polynomial in xi (arity r)."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    xi_n = MultiPoly.xi(r) ** n
    out = MultiPoly.const(r, Fraction(1))
    for i in range(n):
        out = out * (xi_n * i + (n - i))
    return out


def borchardt_check(y, z) -> bool:
    """det[(y_i - z_j)**-2] == det[(y_i - z_j)**-1] * per[(y_i - z_j)**-1], exactly."""
    y = [as_rational(v) for v in y]
    z = [as_rational(v) for v in z]
    if len(y) != len(z):
        raise UsageError("y and z must have equal length")
    if len(set(y)) != len(y) or len(set(z)) != len(z):
        raise UsageError("values must be pairwise distinct within y and within z")
    if set(y) & set(z):
        raise UsageError("some y_i equals some z_j")
    n = len(y)
    cauchy = ScalarMatrix.from_function(n, lambda i, j: 1 / (y[i] - z[j]))
    squared = cauchy.map(lambda a: a * a)
    return field_det(squared) == field_det(cauchy) * ryser_permanent(cauchy)
