"""Truncated multivariate power series over the Gaussian rationals.

Coefficients are sympy ``QQ_I`` elements, so every operation is exact. A
series of total-degree truncation ``D`` makes no claim about terms beyond D.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

from sympy.polys.domains import QQ_I

from ._perm import signed_permutations

GaussianRational = type(QQ_I(0, 0))
ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I = QQ_I(0, 1)


def gq(value, imag=0) -> GaussianRational:
    """Coerce a rational-like value (int, Fraction, '3/4') or a Gaussian rational."""
    if isinstance(value, GaussianRational):
        if imag:
            return value + gq(0, imag)
        return value
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact; pass Fractions")
    return QQ_I(Fraction(value), Fraction(imag))


def as_fraction_pair(x: GaussianRational) -> tuple[Fraction, Fraction]:
    return Fraction(int(x.x.numerator), int(x.x.denominator)), Fraction(int(x.y.numerator), int(x.y.denominator))


def format_gq(x: GaussianRational) -> str:
    re, im = as_fraction_pair(x)
    if not im:
        return str(re)
    if not re:
        return f"{im}*i"
    return f"{re}{'+' if im > 0 else '-'}{abs(im)}*i"


class MultiSeries:
    """Map from exponent tuples to nonzero coefficients, truncated at degree D."""

    __slots__ = ("k", "D", "terms")

    def __init__(self, k: int, D: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.k = k
        self.D = D
        self.terms: dict[tuple[int, ...], GaussianRational] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != k:
                raise ValueError(f"exponent {e} has wrong length for {k} variables")
            if sum(e) <= D:
                c = gq(c)
                if c != ZERO:
                    self.terms[e] = self.terms.get(e, ZERO) + c
                    if self.terms[e] == ZERO:
                        del self.terms[e]

    @classmethod
    def constant(cls, k, D, c=1):
        return cls(k, D, {(0,) * k: c})

    @classmethod
    def variable(cls, k, D, j, c=1):
        e = [0] * k
        e[j] = 1
        return cls(k, D, {tuple(e): c})

    @classmethod
    def univariate(cls, k, D, j, coeffs: Iterable):
        """sum_n coeffs[n] * z_j**n."""
        terms = {}
        for n, c in enumerate(coeffs):
            if n > D:
                break
            e = [0] * k
            e[j] = n
            terms[tuple(e)] = c
        return cls(k, D, terms)

    def _check(self, other):
        if not isinstance(other, MultiSeries):
            return MultiSeries.constant(self.k, self.D, other)
        if other.k != self.k:
            raise ValueError("series in different numbers of variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = MultiSeries(self.k, min(self.D, other.D), self.terms)
        for e, c in other.terms.items():
            if sum(e) <= out.D:
                s = out.terms.get(e, ZERO) + c
                if s == ZERO:
                    out.terms.pop(e, None)
                else:
                    out.terms[e] = s
        return out

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries(self.k, self.D, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            c = gq(other)
            return MultiSeries(self.k, self.D, {e: x * c for e, x in self.terms.items()})
        other = self._check(other)
        D = min(self.D, other.D)
        acc: dict[tuple[int, ...], GaussianRational] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > D:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, ZERO) + c1 * c2
        return MultiSeries(self.k, D, acc)

    __rmul__ = __mul__

    def truncate(self, D: int) -> "MultiSeries":
        return MultiSeries(self.k, min(D, self.D), self.terms)

    def coeff(self, e) -> GaussianRational:
        return self.terms.get(tuple(e), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.k == other.k and self.D == other.D and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"({format_gq(c)})*z^{e}" for e, c in sorted(self.terms.items()))
        return f"MultiSeries(k={self.k}, D={self.D}: {body or '0'})"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def evaluate(self, point) -> GaussianRational:
        point = [gq(x) for x in point]
        total = ZERO
        for e, c in self.terms.items():
            m = c
            for x, p in zip(point, e):
                m = m * x**p
            total += m
        return total


def series_det(matrix: list[list[MultiSeries]]) -> MultiSeries:
    """Leibniz determinant of a square matrix of series."""
    k = len(matrix)
    first = matrix[0][0]
    total = MultiSeries(first.k, first.D)
    for perm, sign in signed_permutations(k):
        term = MultiSeries.constant(first.k, first.D, sign)
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
            if term.is_zero():
                break
        total = total + term
    return total


def scalar_det(matrix) -> GaussianRational:
    k = len(matrix)
    total = ZERO
    for perm, sign in signed_permutations(k):
        term = gq(sign)
        for row, col in enumerate(perm):
            term = term * gq(matrix[row][col])
        total += term
    return total


def monomials(k: int, degree: int):
    """All exponent vectors of length k with the given total degree."""
    for combo in itertools.combinations_with_replacement(range(k), degree):
        e = [0] * k
        for j in combo:
            e[j] += 1
        yield tuple(e)
