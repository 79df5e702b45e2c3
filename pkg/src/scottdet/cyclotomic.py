"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are residues of rational polynomials modulo the n-th cyclotomic
polynomial, so every nonzero element is invertible.  Univariate polynomials
are dense lists of ``Fraction`` coefficients, lowest degree first.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "cyclotomic_polynomial",
    "CycloField",
    "ExactScalar",
    "cyclotomic_field",
    "root_of_unity_power",
    "as_rational",
]


# -- dense univariate helpers -------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def upoly_sub(a, b):
    m = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (m - len(a))
    b = list(b) + [Fraction(0)] * (m - len(b))
    return _trim(x - y for x, y in zip(a, b))


def upoly_divmod(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in _trim(a)]
    if len(rem) < len(b):
        return [], rem
    lead = Fraction(b[-1])
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        quot[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] -= c * bj
    return _trim(quot), _trim(rem[: len(b) - 1])


def upoly_xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = upoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, upoly_sub(s0, upoly_mul(q, s1))
        t0, t1 = t1, upoly_sub(t0, upoly_mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple:
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    # t^n - 1
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            p, rem = upoly_divmod(p, list(_cyclotomic(d)))
            assert not rem
    return tuple(p)


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """The n-th cyclotomic polynomial as coefficients, lowest degree first.

    Obtained by dividing ``t**n - 1`` by every ``Phi_d`` with ``d`` a proper
    divisor of ``n``.

    >>> cyclotomic_polynomial(6)
    [Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1)]
    """
    return list(_cyclotomic(n))


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"not a rational value: {value!r}")


# -- the field ----------------------------------------------------------------

class CycloField:
    """The field Q[t]/(Phi_n), realizing Q(zeta_n) with zeta = t."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        # t^k mod Phi_n for degree <= k <= 2*degree - 2, used by multiplication
        self._reductions = {}
        power = [Fraction(0)] * self.degree + [Fraction(1)]
        for k in range(self.degree, 2 * self.degree - 1):
            _, red = upoly_divmod(power, self.modulus)
            self._reductions[k] = red + [Fraction(0)] * (self.degree - len(red))
            power = [Fraction(0)] + power

    def __repr__(self):
        return f"CycloField({self.n})"

    def __reduce__(self):
        return (cyclotomic_field, (self.n,))

    def element(self, coeffs) -> ExactScalar:
        coeffs = [as_rational(c) for c in coeffs]
        if len(coeffs) > self.degree:
            _, coeffs = upoly_divmod(coeffs, self.modulus)
        return ExactScalar(self, coeffs)

    def __call__(self, value) -> ExactScalar:
        if isinstance(value, ExactScalar):
            if value.field is not self:
                raise ValueError(f"element of {value.field!r} used in {self!r}")
            return value
        return ExactScalar(self, [as_rational(value)])

    @property
    def zero(self) -> ExactScalar:
        return ExactScalar(self, [])

    @property
    def one(self) -> ExactScalar:
        return ExactScalar(self, [Fraction(1)])

    @property
    def zeta(self) -> ExactScalar:
        return root_of_unity_power(self, 1)

    def _reduce_product(self, prod):
        deg = self.degree
        out = list(prod[:deg]) + [Fraction(0)] * max(0, deg - len(prod))
        for k in range(deg, len(prod)):
            c = prod[k]
            if c:
                for i, rc in enumerate(self._reductions[k]):
                    if rc:
                        out[i] += c * rc
        return out


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CycloField:
    """Shared ``CycloField`` instance for conductor ``n``."""
    return CycloField(n)


def root_of_unity_power(field: CycloField, k: int) -> ExactScalar:
    """``zeta**k`` for the primitive root ``zeta = t``; ``k`` is taken mod n."""
    k %= field.n
    return field.element([0] * k + [1])


class ExactScalar:
    """An element of Q(zeta_n), stored as its residue modulo Phi_n.

    Instances are immutable.  Arithmetic accepts ints and Fractions on either
    side; mixing two different conductors raises ``ValueError``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) > field.degree:
            raise ValueError("residue degree exceeds field degree")
        # trailing zeros stripped so equality is structural
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs[:end])

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    def __reduce__(self):
        return (ExactScalar, (self.field, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.field.n != self.field.n:
                raise ValueError(
                    f"mixed conductors {self.field.n} and {other.field.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.field, [other] if other else [])
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactScalar(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.field, [-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.field, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.field.zero
        if len(a) == 1:
            return ExactScalar(self.field, [a[0] * c for c in b])
        if len(b) == 1:
            return ExactScalar(self.field, [b[0] * c for c in a])
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return ExactScalar(self.field, self.field._reduce_product(prod))

    __rmul__ = __mul__

    def inverse(self) -> ExactScalar:
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if len(self.coeffs) == 1:
            return ExactScalar(self.field, [1 / self.coeffs[0]])
        g, s, _ = upoly_xgcd(list(self.coeffs), self.field.modulus)
        # Phi_n is irreducible, so the gcd is 1 for any nonzero residue
        assert g == [1], g
        return self.field.element(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison and conversion

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self.field.n == other.field.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.field.n, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.field.n)
        return sum((float(c) * z ** i for i, c in enumerate(self.coeffs)), 0j)

    def residue(self) -> list[Fraction]:
        """Dense coefficient list of length ``field.degree``."""
        return list(self.coeffs) + [Fraction(0)] * (self.field.degree - len(self.coeffs))

    def __repr__(self):
        return f"ExactScalar(n={self.field.n}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("zeta" if i == 1 else f"zeta^{i}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}" if mono else f"{abs(c)}"
            parts.append(("-" if c < 0 else "+", term))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text
