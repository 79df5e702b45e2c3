"""Symmetric functions of difference alphabets.

Complete functions S_j(x - z), Jacobi-Trudi determinants, monomial
symmetric functions, the maximal symmetrizer pi_omega, the sums phi_k and
the specialization z = roots of z**n - xi**n.  All polynomials live in the
ring of ``MultiPoly`` with r x-variables and a xi slot.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import UsageError
from .linalg import bareiss_det, ring_det
from .poly import MultiPoly, RationalFunction

__all__ = [
    "partitions",
    "is_partition",
    "monomial_sym",
    "DiffAlphabet",
    "complete_diff",
    "complete",
    "complete_spec",
    "schur_jacobi_trudi",
    "pi_omega",
    "phi",
    "schur_box_spec",
    "monomial_expansion",
    "render_monomial_basis",
]

ONE = Fraction(1)


def is_partition(mu) -> bool:
    return all(a >= b for a, b in zip(mu, mu[1:])) and all(a >= 0 for a in mu)


def partitions(k: int, max_part: int, max_len: int):
    """Partitions of ``k`` with parts <= ``max_part`` and at most ``max_len`` parts.

    Yielded as tuples without zero parts, in decreasing lexicographic order.
    """
    if k < 0 or max_part < 0 or max_len < 0:
        return
    if k == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(k, max_part), 0, -1):
        if first * max_len < k:
            break
        for rest in partitions(k - first, first, max_len - 1):
            yield (first,) + rest


def _distinct_permutations(items):
    counts = Counter(items)
    keys = sorted(counts, reverse=True)
    size = len(items)

    def rec(prefix):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                prefix.append(key)
                yield from rec(prefix)
                prefix.pop()
                counts[key] += 1

    yield from rec([])


def monomial_sym(mu, r: int, variables=None) -> MultiPoly:
    """The monomial symmetric function m_mu in r variables.

    ``variables`` restricts the alphabet to the given 1-based indices
    (e.g. ``range(2, r + 1)`` for x - x_1); the result keeps arity r.
    """
    mu = tuple(a for a in mu if a)
    if not is_partition(mu):
        raise UsageError(f"{mu} is not a partition")
    slots = list(range(1, r + 1)) if variables is None else list(variables)
    if len(mu) > len(slots):
        raise UsageError(f"partition {mu} has more than {len(slots)} parts")
    padded = mu + (0,) * (len(slots) - len(mu))
    terms = {}
    for arrangement in _distinct_permutations(padded):
        exps = [0] * (r + 1)
        for slot, e in zip(slots, arrangement):
            exps[slot - 1] = e
        terms[tuple(exps)] = ONE
    return MultiPoly(r, terms)


@dataclass(frozen=True)
class DiffAlphabet:
    """The formal difference ``plus - minus`` of two finite alphabets."""

    plus: tuple = ()
    minus: tuple = ()


def _one_like(values):
    for v in values:
        if isinstance(v, MultiPoly):
            return MultiPoly.const(v.r, ONE)
    return ONE


def complete_diff(j: int, alphabet: DiffAlphabet, one=None):
    """S_j(plus - minus), the coefficient of g**j in prod(1 - g*z) / prod(1 - g*x).

    The series is truncated at order ``j``.  Letters may be polynomials or
    scalars.
    """
    letters = tuple(alphabet.plus) + tuple(alphabet.minus)
    if one is None:
        one = _one_like(letters)
    if j < 0:
        return one * 0
    series = [one] + [one * 0] * j
    for a in alphabet.plus:
        # divide by (1 - g*a)
        for k in range(1, j + 1):
            series[k] = series[k] + a * series[k - 1]
    for b in alphabet.minus:
        # multiply by (1 - g*b)
        for k in range(j, 0, -1):
            series[k] = series[k] - b * series[k - 1]
    return series[j]


@lru_cache(maxsize=None)
def complete(j: int, r: int) -> MultiPoly:
    """S_j(x_1..x_r), the complete homogeneous function (zero for j < 0)."""
    if j < 0:
        return MultiPoly.zero(r)
    if r == 0:
        return MultiPoly.const(0, ONE) if j == 0 else MultiPoly.zero(0)
    return complete_diff(j, DiffAlphabet(tuple(MultiPoly.variables(r))),
                         one=MultiPoly.const(r, ONE))


@lru_cache(maxsize=None)
def complete_spec(j: int, n: int, r: int) -> MultiPoly:
    """S_j(x - z) with z the roots of z**n - xi**n: S_j(x) - xi**n S_{j-n}(x)."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    xi_n = MultiPoly.xi(r) ** n
    return complete(j, r) - xi_n * complete(j - n, r)


def schur_jacobi_trudi(lam, entry):
    """det(entry(lam_i + j - i)) for an integer vector ``lam``.

    ``entry(k)`` supplies S_k of the chosen alphabet (polynomials or
    scalars); negative k must give zero.
    """
    lam = tuple(lam)
    size = len(lam)
    if size == 0:
        return ONE
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = entry(k)
        return cache[k]

    matrix = [[get(lam[i] + j - i) for j in range(size)] for i in range(size)]
    return ring_det(matrix)


def _check_pi_omega_domain(v):
    r = len(v)
    for i, vi in enumerate(v, start=1):
        if vi < i - r:
            raise UsageError(
                f"exponent vector {tuple(v)} is below (1-r, ..., -1, 0) at position {i}")


def _vandermonde_poly(r):
    xs = MultiPoly.variables(r)
    out = MultiPoly.const(r, ONE)
    for i in range(r):
        for j in range(i + 1, r):
            out = out * (xs[i] - xs[j])
    return out


def _pi_omega_bialternant(v) -> MultiPoly:
    r = len(v)
    matrix = []
    for i in range(r):
        row = []
        for j in range(r):
            exps = [0] * (r + 1)
            exps[i] = v[j] + r - 1 - j
            row.append(MultiPoly.monomial(exps))
        matrix.append(row)
    return bareiss_det(matrix).exact_div(_vandermonde_poly(r))


def _pi_omega_symmetrize(v) -> MultiPoly:
    r = len(v)
    total = RationalFunction(MultiPoly.zero(r))
    for sigma in permutations(range(r)):
        exps = [0] * (r + 1)
        for i, e in enumerate(v):
            exps[sigma[i]] = e
        term = RationalFunction.from_laurent(exps)
        for i in range(r):
            for j in range(i + 1, r):
                xa = MultiPoly.x(r, sigma[i] + 1)
                xb = MultiPoly.x(r, sigma[j] + 1)
                # (1 - x_b/x_a)**-1 = x_a / (x_a - x_b)
                term = term * RationalFunction(xa, xa - xb)
        total = total + term
    return total.to_poly()


def pi_omega(v, method: str = "bialternant") -> MultiPoly:
    """Image of the Laurent monomial x**v under the maximal symmetrizer.

    ``v`` must satisfy v >= (1-r, ..., -1, 0) componentwise; the image is
    then the polynomial S_v(x).  ``method="symmetrize"`` sums the r! rational
    terms literally instead of using the bialternant quotient.
    """
    v = tuple(v)
    if not v:
        raise UsageError("empty exponent vector")
    _check_pi_omega_domain(v)
    if method == "bialternant":
        return _pi_omega_bialternant(v)
    if method == "symmetrize":
        return _pi_omega_symmetrize(v)
    raise UsageError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def phi(k: int, n: int, r: int) -> MultiPoly:
    """Sum of all m_mu(x) with |mu| = k and mu_1 <= n - 1 (zero outside 0..(n-1)r)."""
    out = MultiPoly.zero(r)
    for mu in partitions(k, n - 1, r):
        out = out + monomial_sym(mu, r)
    return out


@lru_cache(maxsize=None)
def schur_box_spec(p: int, n: int, r: int) -> MultiPoly:
    """S_{(n-1)^(r-1), p}(x - z) for z the roots of z**n - xi**n, 0 <= p <= n-1.

    Sum of m_mu(x) * xi**(N + p - |mu|), N = (n-1)(r-1), over partitions
    with mu_1 <= n-1, at most r parts and |mu| congruent to N + p mod n.
    """
    if n < 1 or r < 1:
        raise UsageError(f"need n, r >= 1, got n={n}, r={r}")
    if not 0 <= p <= n - 1:
        raise UsageError(f"p={p} outside 0..{n - 1}")
    top = (n - 1) * (r - 1) + p
    xi = MultiPoly.xi(r)
    out = MultiPoly.zero(r)
    for weight in range(top % n, top + 1, n):
        for mu in partitions(weight, n - 1, r):
            out = out + monomial_sym(mu, r) * xi ** (top - weight)
    return out


def monomial_expansion(poly: MultiPoly) -> dict:
    """Coefficients of a symmetric polynomial in the monomial basis.

    Returns ``{(xi_power, mu): coeff}``; raises ``UsageError`` when ``poly``
    is not symmetric in the x-variables.
    """
    r = poly.r
    coeffs = {}
    for exps, c in poly.terms.items():
        xs = exps[:r]
        if all(a >= b for a, b in zip(xs, xs[1:])):
            coeffs[(exps[r], tuple(a for a in xs if a))] = c
    rebuilt = MultiPoly.zero(r)
    xi = MultiPoly.xi(r)
    for (e, mu), c in coeffs.items():
        rebuilt = rebuilt + monomial_sym(mu, r) * xi ** e * c
    if rebuilt != poly:
        raise UsageError("polynomial is not symmetric in x")
    return coeffs


def _mu_name(mu):
    return "m[" + ",".join(str(a) for a in mu) + "]"


def render_monomial_basis(poly: MultiPoly) -> str:
    """Human rendering in the monomial basis, e.g. ``m[3,2] + ξ^4·m[1]``."""
    coeffs = monomial_expansion(poly)
    if not coeffs:
        return "0"
    groups = {}
    for (e, mu), c in coeffs.items():
        groups.setdefault(e, []).append((mu, c))
    pieces = []
    for e in sorted(groups):
        items = sorted(groups[e], key=lambda t: t[0], reverse=True)
        inner = []
        for mu, c in items:
            if not mu:
                inner.append(str(c))
            elif c == 1:
                inner.append(_mu_name(mu))
            else:
                inner.append(f"{c}·{_mu_name(mu)}")
        body = " + ".join(inner)
        if e == 0:
            pieces.append(body)
        else:
            power = "ξ" if e == 1 else f"ξ^{e}"
            if items == [((), 1)]:
                pieces.append(power)
            elif len(items) == 1 and items[0][1] == 1:
                pieces.append(f"{power}·{body}")
            else:
                pieces.append(f"{power}·({body})")
    return " + ".join(pieces).replace("+ -", "- ")
