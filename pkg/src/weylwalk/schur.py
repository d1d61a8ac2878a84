"""Schur polynomials and the Schur expansion of det(f(z_j u_m)).

For f(w) = sum a_n w^n the determinant F(z) = det(f(z_j u_m)) factors as

    det(z_j^(m-1)) det(u_j^(m-1)) sum_mu (prod_j a_(mu_j+k-j)) s_mu(u) s_mu(z),

with mu running over partitions with at most k parts. ``det_direct`` expands
the left side entry by entry, ``det_schur_series`` builds the right side; both
are exact, and agreement is checked coefficient by coefficient.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from ._perm import signed_permutations
from .lattice import DomainError
from .series import ONE, ZERO, GaussianRational, I, MultiSeries, gq, monomials, scalar_det, series_det


class SchurConsistencyError(ArithmeticError):
    """The alternant quotient left a remainder; indicates a bug, never expected."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, k: int) -> tuple[int, ...]:
        if self.length > k:
            raise ValueError(f"{self} has more than {k} parts")
        return self.parts + (0,) * (k - self.length)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(max_weight: int, max_parts: int) -> Iterator[Partition]:
    """Partitions of weight 0..max_weight with at most max_parts parts.

    Ordered by weight, then lexicographically decreasing within each weight.
    """

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for w in range(max_weight + 1):
        for parts in rec(w, w, max_parts):
            yield Partition(parts)


@functools.lru_cache(maxsize=None)
def _ring(k: int):
    R, *gens = ring([f"x{j}" for j in range(k)], QQ)
    return R, gens


def _poly_det(rows):
    k = len(rows)
    R, _ = _ring(k)
    total = R.zero
    for perm, sign in signed_permutations(k):
        term = R.one * sign
        for r, c in enumerate(perm):
            term = term * rows[r][c]
        total += term
    return total


def _to_series(poly, k: int) -> MultiSeries:
    terms = {}
    for monom, c in poly.terms():
        terms[monom] = Fraction(int(c.numerator), int(c.denominator))
    D = max((sum(m) for m in terms), default=0)
    return MultiSeries(k, D, terms)


@functools.lru_cache(maxsize=None)
def schur_bialternant(mu: Partition, k: int) -> MultiSeries:
    """s_mu(x_1..x_k) as the exact quotient of two alternants."""
    lam = mu.padded(k)
    _, x = _ring(k)
    num = _poly_det([[x[j] ** (lam[m] + k - 1 - m) for m in range(k)] for j in range(k)])
    den = _poly_det([[x[j] ** (k - 1 - m) for m in range(k)] for j in range(k)])
    q, r = num.div(den)
    if r:
        raise SchurConsistencyError(f"alternant division for {mu}, k={k} left remainder {r}")
    out = _to_series(q, k)
    return MultiSeries(k, mu.weight, out.terms)


@functools.lru_cache(maxsize=None)
def _complete_homogeneous(r: int, k: int):
    R, x = _ring(k)
    if r < 0:
        return R.zero
    total = R.zero
    for e in monomials(k, r):
        term = R.one
        for xj, p in zip(x, e):
            term = term * xj**p
        total += term
    return total


@functools.lru_cache(maxsize=None)
def schur_jacobi_trudi(mu: Partition, k: int) -> MultiSeries:
    """s_mu(x_1..x_k) = det(h_(mu_i - i + j)) over the parts of mu."""
    R, _ = _ring(k)
    if mu.length > k:
        return MultiSeries(k, mu.weight)
    ell = mu.length
    if ell == 0:
        return MultiSeries.constant(k, 0)
    rows = [[_complete_homogeneous(mu.parts[i] - i + j, k) for j in range(ell)] for i in range(ell)]
    total = R.zero
    for perm, sign in signed_permutations(ell):
        term = R.one * sign
        for r, c in enumerate(perm):
            term = term * rows[r][c]
        total += term
    return MultiSeries(k, mu.weight, _to_series(total, k).terms)


def schur(mu, k: int, x: Sequence | None = None):
    """Schur polynomial s_mu in k variables, or its value at the exact point x."""
    if not isinstance(mu, Partition):
        mu = Partition(tuple(mu))
    if mu.length > k:
        poly = MultiSeries(k, mu.weight)
    else:
        poly = schur_bialternant(mu, k)
    if x is None:
        return poly
    if len(x) != k:
        raise ValueError(f"expected {k} values, got {len(x)}")
    return poly.evaluate(x)


def vandermonde_series(k: int, D: int) -> MultiSeries:
    """det(z_j^(m-1)) as a series in k variables."""
    rows = [[MultiSeries(k, D, {tuple(m if i == j else 0 for i in range(k)): 1}) for m in range(k)]
            for j in range(k)]
    return series_det(rows)


def vandermonde_value(u: Sequence) -> GaussianRational:
    k = len(u)
    return scalar_det([[gq(u[j]) ** m for m in range(k)] for j in range(k)])


def _coeffs(coeffs, D):
    a = [gq(c) for c in coeffs]
    if len(a) < D + 1:
        raise ValueError(f"need at least {D + 1} Taylor coefficients, got {len(a)}")
    return a


def det_direct(coeffs: Sequence, u: Sequence, D: int) -> MultiSeries:
    """det(f(z_j u_m)) expanded entrywise and truncated at total degree D."""
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    a = _coeffs(coeffs, D)
    u = [gq(x) for x in u]
    k = len(u)
    rows = [[MultiSeries.univariate(k, D, j, [a[n] * u[m] ** n for n in range(D + 1)]) for m in range(k)]
            for j in range(k)]
    return series_det(rows)


def det_schur_series(coeffs: Sequence, u: Sequence, D: int) -> MultiSeries:
    """Schur-function side of the determinant expansion, truncated at degree D."""
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    a = _coeffs(coeffs, D)
    u = [gq(x) for x in u]
    k = len(u)
    base = comb(k, 2)
    if D < base:
        return MultiSeries(k, D)
    inner = MultiSeries(k, D - base)
    for mu in partitions(D - base, k):
        lam = [p + k - 1 - j for j, p in enumerate(mu.padded(k))]
        weight = ONE
        for idx in lam:
            weight = weight * a[idx]
        if weight == ZERO:
            continue
        s_u = schur(mu, k, u)
        if s_u == ZERO:
            continue
        inner = inner + MultiSeries(k, D - base, schur(mu, k).terms) * (weight * s_u)
    out = vandermonde_series(k, D) * MultiSeries(k, D, inner.terms) * vandermonde_value(u)
    return out


def cauchy_lhs(x: Sequence, D: int) -> MultiSeries:
    """prod_{j,m} 1/(1 - x_j y_m) as a truncated series in y."""
    x = [gq(v) for v in x]
    k = len(x)
    out = MultiSeries.constant(k, D)
    for m in range(k):
        for xj in x:
            out = out * MultiSeries.univariate(k, D, m, [xj**t for t in range(D + 1)])
    return out


def cauchy_rhs(x: Sequence, D: int) -> MultiSeries:
    x = [gq(v) for v in x]
    k = len(x)
    out = MultiSeries(k, D)
    for mu in partitions(D, k):
        out = out + MultiSeries(k, D, schur(mu, k).terms) * schur(mu, k, x)
    return MultiSeries(k, D, out.terms)


def cauchy_check(k: int, D: int, x: Sequence) -> bool:
    if len(x) != k:
        raise ValueError(f"expected {k} values, got {len(x)}")
    return cauchy_lhs(x, D) == cauchy_rhs(x, D)


def exp_i_coeffs(D: int) -> list[GaussianRational]:
    """Taylor coefficients i^n / n! of exp(i w)."""
    return [I**n * gq(Fraction(1, factorial(n))) for n in range(D + 1)]


def geometric_coeffs(D: int) -> list[GaussianRational]:
    return [ONE] * (D + 1)


@dataclass(frozen=True)
class DetSecondOrder:
    """Second-order data of det(exp(i u_m z_j)) around z = 0.

    The determinant equals ``leading * V(u) * V(z) * (1 + c1*s_(1)(z)
    + c11*s_(1,1)(z) + c2*s_(2)(z) + O(|z|^3))`` where V is the Vandermonde
    determinant det(x_j^(m-1)).
    """

    k: int
    leading: GaussianRational
    vandermonde_u: GaussianRational
    c1: GaussianRational
    c11: GaussianRational
    c2: GaussianRational
    prefactors: dict

    @property
    def constant(self) -> GaussianRational:
        return ONE

    def balanced_quadratic(self) -> GaussianRational:
        """Coefficient of sum_r phi_r^2 when z = (phi_1, -phi_1, ..., phi_l, -phi_l[, 0])."""
        # there s_(1)(z) = 0, s_(2)(z) = sum phi^2 and s_(1,1)(z) = -sum phi^2
        return self.c2 - self.c11


def second_order_det_expansion(u: Sequence) -> DetSecondOrder:
    u = [gq(x) for x in u]
    k = len(u)
    if len(set(u)) != k:
        raise DomainError("entries of u must be pairwise distinct")
    a = exp_i_coeffs(k + 2)

    def mu_weight(mu):
        out = ONE
        for j, p in enumerate(Partition(mu).padded(k) if len(mu) <= k else ()):
            out = out * a[p + k - 1 - j]
        return out

    leading = mu_weight(())
    prefactors = {}
    coeff = {}
    for mu in ((1,), (1, 1), (2,)):
        if len(mu) > k:
            prefactors[mu] = ZERO
            coeff[mu] = ZERO
            continue
        ratio = mu_weight(mu) * leading**-1
        prefactors[mu] = ratio
        coeff[mu] = ratio * schur(mu, k, u)
    return DetSecondOrder(k, leading, vandermonde_value(u), coeff[(1,)], coeff[(1, 1)], coeff[(2,)], prefactors)
