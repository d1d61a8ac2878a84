"""Selberg-type integrals against squared Vandermonde times Hermite or Laguerre weights.

Hermite: weight exp(-x^2/2) per variable. Laguerre(alpha): x^(alpha-1) exp(-x)
on (0, inf). ``<f>`` denotes the integral of f * prod_{j<m} (x_m - x_j)^2 times
the weight over all k variables.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from .symbolic import SymbolicReal, gamma_half


class WeightKind(enum.Enum):
    HERMITE = "hermite"
    LAGUERRE = "laguerre"


@dataclass(frozen=True)
class Weight:
    kind: WeightKind
    k: int
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.kind is WeightKind.LAGUERRE:
            if self.alpha is None or Fraction(self.alpha) <= 0:
                raise ValueError("Laguerre weight needs alpha > 0")
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        elif self.alpha is not None:
            raise ValueError("Hermite weight takes no alpha")

    @classmethod
    def hermite(cls, k: int) -> "Weight":
        return cls(WeightKind.HERMITE, k)

    @classmethod
    def laguerre(cls, k: int, alpha) -> "Weight":
        return cls(WeightKind.LAGUERRE, k, Fraction(alpha))


def selberg_one(w: Weight) -> SymbolicReal:
    """Closed form of <1>."""
    k = w.k
    if w.kind is WeightKind.HERMITE:
        return SymbolicReal(Fraction(math.prod(math.factorial(j) for j in range(1, k + 1))), k, k)
    out = SymbolicReal(Fraction(1))
    for j in range(k):
        out = out * math.factorial(j + 1) * gamma_half(j + w.alpha)
    return out


HERMITE_MOMENTS = ("sum_sq", "sq_of_sum", "sum_4th", "sq_of_sum_sq", "schur_11", "schur_2")
LAGUERRE_MOMENTS = ("sum", "sum_sq", "sq_of_sum")


def hermite_moment(k: int, which: str) -> Fraction:
    """<poly>_H / <1>_H as an exact rational."""
    if k < 1:
        raise ValueError("k must be at least 1")
    k = Fraction(k)
    table = {
        "sum_sq": k * k,
        "sq_of_sum": k,
        "sum_4th": k * (2 * k * k + 1),
        "sq_of_sum_sq": k * k * (k * k + 2),
        "schur_11": -k * (k - 1) / 2,
        "schur_2": k * (k + 1) / 2,
    }
    try:
        return table[which]
    except KeyError:
        raise ValueError(f"unknown Hermite moment {which!r}; choose from {HERMITE_MOMENTS}") from None


def laguerre_moment(k: int, alpha, which: str) -> Fraction:
    """<poly>_{L;alpha} / <1>_{L;alpha} as an exact rational."""
    if k < 1:
        raise ValueError("k must be at least 1")
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    k = Fraction(k)
    first = k * (k - 1 + alpha)
    if which == "sum":
        return first
    if which == "sum_sq":
        return first * (2 * k + alpha - 1)
    if which == "sq_of_sum":
        return first * (1 + k * (k + alpha - 1))
    raise ValueError(f"unknown Laguerre moment {which!r}; choose from {LAGUERRE_MOMENTS}")


def moment(w: Weight, which: str) -> Fraction:
    if which == "one":
        return Fraction(1)
    if w.kind is WeightKind.HERMITE:
        return hermite_moment(w.k, which)
    return laguerre_moment(w.k, w.alpha, which)


@dataclass(frozen=True)
class MomentPoly:
    """Symmetric polynomial integrand with its maximal degree in any one variable."""

    name: str
    func: Callable
    degree: int


MOMENT_POLYS = {
    "one": MomentPoly("one", lambda x: 1, 0),
    "sum": MomentPoly("sum", lambda x: sum(x), 1),
    "sum_sq": MomentPoly("sum_sq", lambda x: sum(t * t for t in x), 2),
    "sq_of_sum": MomentPoly("sq_of_sum", lambda x: sum(x) ** 2, 2),
    "sum_4th": MomentPoly("sum_4th", lambda x: sum(t**4 for t in x), 4),
    "sq_of_sum_sq": MomentPoly("sq_of_sum_sq", lambda x: sum(t * t for t in x) ** 2, 4),
    "schur_11": MomentPoly("schur_11", lambda x: (sum(x) ** 2 - sum(t * t for t in x)) / 2, 2),
    "schur_2": MomentPoly("schur_2", lambda x: (sum(x) ** 2 + sum(t * t for t in x)) / 2, 2),
}


def gauss_nodes(w: Weight, count: int, dps: int = 40):
    """Gauss nodes and weights for one variable from the eigenpairs of the Jacobi matrix.

    Returns lists of mpf at ``dps`` decimal digits.
    """
    if count < 1:
        raise ValueError("need at least one node")
    with mpmath.workdps(dps + 10):
        J = mpmath.zeros(count, count)
        if w.kind is WeightKind.HERMITE:
            # monic probabilists' Hermite: x p_i = p_{i+1} + i p_{i-1}
            mu0 = mpmath.sqrt(2 * mpmath.pi)
            for i in range(1, count):
                J[i, i - 1] = J[i - 1, i] = mpmath.sqrt(i)
        else:
            # generalized Laguerre with parameter a = alpha - 1
            a = mpmath.mpf(w.alpha.numerator) / w.alpha.denominator - 1
            mu0 = mpmath.gamma(a + 1)
            for i in range(count):
                J[i, i] = 2 * i + a + 1
            for i in range(1, count):
                J[i, i - 1] = J[i - 1, i] = mpmath.sqrt(i * (i + a))
        E, Q = mpmath.eigsy(J)
        nodes = [E[i] for i in range(count)]
        weights = [mu0 * Q[0, i] ** 2 for i in range(count)]
    return nodes, weights


def required_nodes(w: Weight, poly_degree: int) -> int:
    """Minimal Gauss node count exact for the integrand in each variable."""
    per_var = 2 * (w.k - 1) + poly_degree
    return per_var // 2 + 1


class InsufficientNodesError(ValueError):
    """Gauss rule too small to integrate the polynomial exactly."""


def quadrature_oracle(w: Weight, poly="one", nodes: int | None = None, dps: int = 40):
    """Tensor Gauss quadrature of poly * Vandermonde^2 * weight.

    ``poly`` is a name from MOMENT_POLYS or a MomentPoly. Exact up to rounding
    when ``nodes`` is at least ``required_nodes``; the default adds a margin of 2.
    """
    if isinstance(poly, str):
        try:
            poly = MOMENT_POLYS[poly]
        except KeyError:
            raise ValueError(f"unknown polynomial {poly!r}") from None
    need = required_nodes(w, poly.degree)
    if nodes is None:
        nodes = need + 2
    if nodes < need:
        raise InsufficientNodesError(f"{nodes} nodes cannot integrate degree {2 * (w.k - 1) + poly.degree} exactly; need {need}")
    xs, ws = gauss_nodes(w, nodes, dps)
    with mpmath.workdps(dps + 10):
        total = mpmath.mpf(0)
        for idx in itertools.combinations_with_replacement(range(nodes), w.k):
            if len(set(idx)) < w.k:
                continue  # Vandermonde vanishes
            pts = [xs[i] for i in idx]
            vdm = mpmath.mpf(1)
            for a in range(w.k):
                for b in range(a + 1, w.k):
                    vdm *= pts[b] - pts[a]
            wt = math.prod((ws[i] for i in idx), start=mpmath.mpf(1))
            # symmetric integrand: each distinct unordered tuple stands for k! ordered ones
            total += wt * vdm * vdm * poly.func(pts)
        total *= math.factorial(w.k)
    return total


def schur_moment_identities(k: int) -> dict[str, bool]:
    """Schur moments as half sums and differences of the power-sum moments."""
    sq_sum = hermite_moment(k, "sq_of_sum")
    sum_sq = hermite_moment(k, "sum_sq")
    return {
        "schur_11": hermite_moment(k, "schur_11") == (sq_sum - sum_sq) / 2,
        "schur_2": hermite_moment(k, "schur_2") == (sq_sum + sum_sq) / 2,
    }
