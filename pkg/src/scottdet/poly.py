"""Sparse multivariate polynomials in x_1..x_r and xi, and their quotients.

A ``MultiPoly`` maps exponent vectors of length ``r + 1`` (the last slot is
xi) to nonzero coefficients.  Coefficients may be ``Fraction``,
``ExactScalar`` or ``complex``; zero terms are pruned after every operation
so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import ExactScalar
from .errors import UsageError

__all__ = ["MultiPoly", "RationalFunction", "format_coeff"]

_SCALAR_TYPES = (int, Fraction, ExactScalar, complex, float)


def _add_exps(a, b):
    return tuple(i + j for i, j in zip(a, b))


def format_coeff(c) -> str:
    """Canonical coefficient text: ``p/q`` for rationals, residue list otherwise."""
    if isinstance(c, int):
        c = Fraction(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    if isinstance(c, ExactScalar):
        return "[" + ", ".join(format_coeff(a) for a in c.residue()) + "]"
    return repr(c)


class MultiPoly:
    """Polynomial in ``r`` x-variables plus the xi slot.

    Parameters
    ----------
    r : int
        Number of x-variables.
    terms : dict, optional
        Exponent tuple (length ``r + 1``) to coefficient.
    """

    __slots__ = ("r", "terms", "_hash")

    def __init__(self, r: int, terms=None):
        self.r = r
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if len(exps) != r + 1:
                        raise UsageError(
                            f"exponent vector {exps} does not match arity {r}+1")
                    clean[tuple(exps)] = c
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, r: int) -> MultiPoly:
        return cls(r)

    @classmethod
    def const(cls, r: int, c) -> MultiPoly:
        return cls(r, {(0,) * (r + 1): c})

    @classmethod
    def monomial(cls, exps, c=Fraction(1)) -> MultiPoly:
        exps = tuple(exps)
        return cls(len(exps) - 1, {exps: c})

    @classmethod
    def x(cls, r: int, i: int) -> MultiPoly:
        """The variable x_i, 1-based."""
        if not 1 <= i <= r:
            raise UsageError(f"x_{i} out of range for r={r}")
        exps = [0] * (r + 1)
        exps[i - 1] = 1
        return cls(r, {tuple(exps): Fraction(1)})

    @classmethod
    def xi(cls, r: int) -> MultiPoly:
        return cls(r, {(0,) * r + (1,): Fraction(1)})

    @classmethod
    def variables(cls, r: int):
        """``[x_1, ..., x_r]``."""
        return [cls.x(r, i) for i in range(1, r + 1)]

    # basic queries

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or list(self.terms) == [(0,) * (self.r + 1)]

    def constant_term(self):
        return self.terms.get((0,) * (self.r + 1), 0)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def x_degree(self) -> int:
        """Largest total degree in the x-variables alone."""
        if not self.terms:
            return -1
        return max(sum(e[:-1]) for e in self.terms)

    def degree_in(self, var: int) -> int:
        """Degree in slot ``var`` (0-based; ``r`` is xi)."""
        return max((e[var] for e in self.terms), default=-1)

    def leading_term(self):
        exps = max(self.terms)
        return exps, self.terms[exps]

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.r != self.r:
                raise UsageError(f"arity mismatch: r={self.r} vs r={other.r}")
            return other
        if isinstance(other, _SCALAR_TYPES):
            return MultiPoly.const(self.r, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in out:
                s = out[exps] + c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
            else:
                out[exps] = c
        return MultiPoly(self.r, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.r, {e: -c for e, c in self.terms.items()})

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
        if isinstance(other, _SCALAR_TYPES):
            if not other:
                return MultiPoly(self.r)
            return MultiPoly(self.r, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MultiPoly(self.r, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative power of a polynomial")
        result = MultiPoly.const(self.r, Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            inv = (Fraction(1) / other) if isinstance(other, int) else 1 / other
            return self * inv
        return NotImplemented

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise.

        Lex-leading-term division: for an exact divisor the remainder
        always reaches zero.
        """
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.leading_term()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift) < 0:
                raise ArithmeticError("polynomial division is not exact")
            c = rem[e] / lead_c
            quot[shift] = c
            for oe, oc in other.terms.items():
                te = _add_exps(oe, shift)
                v = rem.get(te, 0) - c * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return MultiPoly(self.r, quot)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.r == other.r and self.terms == other.terms
        if isinstance(other, _SCALAR_TYPES):
            if not other:
                return not self.terms
            return self.terms == {(0,) * (self.r + 1): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self.terms.items())))
        return self._hash

    # evaluation

    def map_coeffs(self, f) -> MultiPoly:
        return MultiPoly(self.r, {e: f(c) for e, c in self.terms.items()})

    def eval(self, xs, xi=None):
        """Value at x = ``xs`` and xi = ``xi``; scalars of any supported kind."""
        xs = list(xs)
        if len(xs) != self.r:
            raise UsageError(f"expected {self.r} x-values, got {len(xs)}")
        if xi is None:
            if self.degree_in(self.r) > 0:
                raise UsageError("xi value required")
            xi = 0
        point = xs + [xi]
        powers = [_power_table(v, self.degree_in(k)) for k, v in enumerate(point)]
        total = 0
        for exps, c in self.terms.items():
            term = c
            for k, e in enumerate(exps):
                if e:
                    term = term * powers[k][e]
            total = total + term
        poly_point = next((v for v in point if isinstance(v, MultiPoly)), None)
        if poly_point is not None and not isinstance(total, MultiPoly):
            total = MultiPoly.const(poly_point.r, total)
        return total

    def substitute(self, mapping) -> MultiPoly:
        """Replace slots by scalars or same-arity polynomials.

        ``mapping`` sends a 0-based slot index (``r`` is xi) to its value.
        Slots absent from the mapping stay symbolic.
        """
        for k in mapping:
            if not 0 <= k <= self.r:
                raise UsageError(f"slot {k} out of range for r={self.r}")
        powers = {k: _power_table(v, self.degree_in(k), self.r)
                  for k, v in mapping.items()}
        out = MultiPoly(self.r)
        for exps, c in self.terms.items():
            kept = list(exps)
            factor = MultiPoly.const(self.r, c)
            for k in mapping:
                e = exps[k]
                kept[k] = 0
                if e:
                    factor = factor * powers[k][e]
            out = out + factor * MultiPoly.monomial(kept)
        return out

    # display

    def render(self) -> str:
        """Canonical text: terms by decreasing exponent vector, ``p/q`` coefficients."""
        if not self.terms:
            return "0"
        names = [f"x{i}" for i in range(1, self.r + 1)] + ["xi"]
        parts = []
        for exps in sorted(self.terms, reverse=True):
            mono = "".join(f"*{names[k]}^{e}" for k, e in enumerate(exps) if e)
            parts.append(format_coeff(self.terms[exps]) + mono)
        return " + ".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"x{i}" for i in range(1, self.r + 1)] + ["xi"]
        chunks = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(names[k] + (f"^{e}" if e > 1 else "")
                            for k, e in enumerate(exps) if e)
            neg = isinstance(c, (int, Fraction)) and c < 0
            mag = -c if neg else c
            if isinstance(mag, ExactScalar) and not mag.is_rational():
                cs = f"({mag})"
            else:
                cs = str(mag)
            if mono:
                text = mono if cs == "1" else f"{cs}*{mono}"
            else:
                text = cs
            chunks.append(("-" if neg else "+", text))
        out = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"MultiPoly(r={self.r}, {self})"


def _power_table(v, top, r=None):
    table = [Fraction(1) if r is None else MultiPoly.const(r, Fraction(1))]
    for _ in range(max(top, 0)):
        table.append(table[-1] * v)
    return table


class RationalFunction:
    """Quotient of two ``MultiPoly`` of equal arity, denominator nonzero.

    Normalized after each operation by cancelling the common monomial
    content and making the denominator's leading coefficient 1.  No
    polynomial gcd is taken; equality uses cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.r, Fraction(1))
        if den.r != num.r:
            raise UsageError("numerator and denominator arities differ")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)

    @property
    def r(self):
        return self.num.r

    @classmethod
    def from_laurent(cls, exps, c=Fraction(1)) -> RationalFunction:
        """The Laurent monomial ``c * x**exps`` (negative exponents allowed)."""
        r = len(exps) - 1
        pos = tuple(max(e, 0) for e in exps)
        neg = tuple(max(-e, 0) for e in exps)
        return cls(MultiPoly(r, {pos: c}), MultiPoly(r, {neg: Fraction(1)}))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, _SCALAR_TYPES):
            return RationalFunction(MultiPoly.const(self.r, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if self.den == -other.den:
            return RationalFunction(self.num - other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

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
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        try:
            self.to_poly()
        except ArithmeticError:
            return False
        return True

    def to_poly(self) -> MultiPoly:
        """The polynomial this function equals; ``ArithmeticError`` if none."""
        return self.num.exact_div(self.den)

    def eval(self, xs, xi=None):
        return self.num.eval(xs, xi) / self.den.eval(xs, xi)

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


def _normalize(num: MultiPoly, den: MultiPoly):
    if num.is_zero():
        return num, MultiPoly.const(num.r, Fraction(1))
    # cancel the monomial content shared by numerator and denominator
    width = num.r + 1
    content = [min(min(e[k] for e in num.terms), min(e[k] for e in den.terms))
               for k in range(width)]
    if any(content):
        shift = tuple(content)
        num = MultiPoly(num.r, {tuple(a - b for a, b in zip(e, shift)): c
                                for e, c in num.terms.items()})
        den = MultiPoly(den.r, {tuple(a - b for a, b in zip(e, shift)): c
                                for e, c in den.terms.items()})
    _, lead = den.leading_term()
    if lead != 1:
        inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
        num = num * inv
        den = den * inv
    return num, den
