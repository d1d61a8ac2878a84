"""Saddle-point asymptotics for confined walk counts, with convergence diagnostics.

Every estimate exists in two variants:

``corrected`` (default)
    Derived from the saddle-point expansion. Fixed endpoints keep the constant
    term built from Omega and Psi and count every dominant saddle on the torus
    (2^k for lock step, 2 for random turns). Free endpoints use the negative
    sign on the pairwise-difference term and the full odd-k normalisation; the
    boundary saddle adds a 1/n term, parity dependent for random turns at k = 2.
    Relative errors decay like n^-2 in the tested ranges.

``uncorrected``
    The closed forms without those corrections, kept for comparison. Their
    second-order brackets disagree with exact counts at order 1/n.

Values are returned in log space at ``prec`` bits.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .counting import count_confined_reflection, count_free_endpoint
from .lattice import DomainError, Model, check_chamber, reachable
from .symbolic import SymbolicReal, gamma_half

DEFAULT_PREC = 128
VARIANTS = ("corrected", "uncorrected")


class Order(enum.IntEnum):
    FIRST = 1
    SECOND = 2


@dataclass(frozen=True)
class ModelConstants:
    """Coefficients of log|S(e^{i phi})| - log S(1) = -(L/2)|phi|^2 + (O/8)|phi|^4 + (P/24) sum phi^4 + ..."""

    Lambda: Fraction
    Omega: Fraction
    Psi: Fraction


def model_constants(model: Model) -> ModelConstants:
    if model.is_lock_step:
        return ModelConstants(Fraction(1), Fraction(0), Fraction(-2))
    k = model.k
    return ModelConstants(Fraction(1, k), Fraction(-1, k * k), Fraction(1, k))


@dataclass(frozen=True)
class FreeEndpointShape:
    ell: int
    alpha: Fraction

    @classmethod
    def for_k(cls, k: int) -> "FreeEndpointShape":
        ell = k // 2
        return cls(ell, Fraction(1, 2) + k - 2 * ell)

    @property
    def weight(self) -> Fraction:
        """ell * (ell + alpha - 1), the first Laguerre moment ratio for ell variables."""
        return self.ell * (self.ell + self.alpha - 1)


@dataclass(frozen=True)
class EndpointStats:
    """The only features of an endpoint the second-order brackets read."""

    total: int
    sum_sq: int
    pair_sq: int
    vandermonde: int

    @classmethod
    def of(cls, u: Sequence[int]) -> "EndpointStats":
        k = len(u)
        pairs = [(u[m] - u[j]) for j in range(k) for m in range(j + 1, k)]
        return cls(sum(u), sum(x * x for x in u), sum(d * d for d in pairs), math.prod(pairs))


@dataclass(frozen=True)
class AsymptoticValue:
    log_value: mpmath.mpf
    order: Order
    variant: str
    bracket: mpmath.mpf = field(default=None, compare=False)

    def relative_error(self, exact: int):
        """|exact / estimate - 1| at the working precision."""
        if exact <= 0:
            raise ValueError("relative error needs a positive exact count")
        return abs(mpmath.expm1(mpmath.log(exact) - self.log_value))


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")


def _q(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _prod_factorials(k: int, shift: int) -> int:
    return math.prod(math.factorial(j + shift) for j in range(k))


def fixed_endpoint_constant(model: Model) -> Fraction:
    """n times the u,v-independent second-order term, (k/8L^2)(k(k^2+2)O + (2k^2+1)P/3)."""
    c = model_constants(model)
    k = model.k
    return Fraction(k, 8) / c.Lambda**2 * (k * (k * k + 2) * c.Omega + (2 * k * k + 1) * c.Psi / 3)


def fixed_endpoint_bracket(model: Model, su: EndpointStats, sv: EndpointStats, variant: str = "corrected") -> tuple[Fraction, Fraction]:
    """Second-order bracket as (1, b) meaning 1 + b/n."""
    _check_variant(variant)
    k = model.k
    lam = model_constants(model).Lambda
    b = Fraction(su.total * sv.total) / (k * lam) - Fraction(su.sum_sq + sv.sum_sq) / (2 * lam)
    if variant == "corrected":
        b += fixed_endpoint_constant(model)
    return Fraction(1), b


def fixed_endpoint_prefactor(model: Model, variant: str = "corrected") -> SymbolicReal:
    """Constant in front of S(1)^n (n Lambda)^(-k^2/2) Delta(u) Delta(v)."""
    _check_variant(variant)
    k = model.k
    saddles = 2**k if model.is_lock_step else 2
    if variant == "uncorrected" and not model.is_lock_step:
        saddles = 1
    return SymbolicReal(Fraction(saddles, _prod_factorials(k, 0))) / SymbolicReal.two_pi_power(k)


def fixed_endpoint_asymptotic(model: Model, u: Sequence[int], v: Sequence[int], n: int,
                              order: int = 2, variant: str = "corrected",
                              prec: int = DEFAULT_PREC) -> AsymptoticValue:
    """Estimate of the number of confined n-step walks from u to v."""
    order = Order(order)
    u = check_chamber(u, "start")
    v = check_chamber(v, "end")
    if len(u) != model.k or len(v) != model.k:
        raise ValueError("endpoint lengths must equal the model dimension")
    if n < 1:
        raise DomainError("n must be at least 1")
    if not reachable(model, u, v, n):
        raise DomainError(f"{v} is not reachable from {u} in {n} steps; the estimate applies only where counts are positive")
    k = model.k
    su, sv = EndpointStats.of(u), EndpointStats.of(v)
    lam = model_constants(model).Lambda
    with mpmath.workprec(prec):
        log_val = (n * mpmath.log(model.num_steps)
                   - mpmath.mpf(k * k) / 2 * (mpmath.log(n) + mpmath.log(_q(lam)))
                   + fixed_endpoint_prefactor(model, variant).log()
                   + mpmath.log(su.vandermonde * sv.vandermonde))
        bracket = mpmath.mpf(1)
        if order is Order.SECOND:
            _, b = fixed_endpoint_bracket(model, su, sv, variant)
            bracket = 1 + _q(b) / n
            if bracket <= 0:
                raise DomainError(f"second-order bracket is non-positive at n={n}")
            log_val += mpmath.log(bracket)
    return AsymptoticValue(log_val, order, variant, bracket)


def free_endpoint_prefactor(model: Model, variant: str = "corrected") -> SymbolicReal:
    """Exact constant C with estimate C * S(1)^n * (n Lambda)^(-C(k,2)/2) * Delta(u) * (leading power factors)."""
    _check_variant(variant)
    k = model.k
    shape = FreeEndpointShape.for_k(k)
    prod = SymbolicReal(Fraction(1))
    for j in range(shape.ell + 1):
        prod = prod * math.factorial(j) * gamma_half(j + shape.alpha) / SymbolicReal.sqrt_pi()
    out = prod * Fraction(4**shape.ell, _prod_factorials(k, 1)) / SymbolicReal(Fraction(1), 0, shape.ell)
    if variant == "corrected" and k % 2:
        out = out * 2
    return out


def free_endpoint_bracket(model: Model, su: EndpointStats, n: int | None = None,
                          u: Sequence[int] | None = None, variant: str = "corrected") -> Fraction:
    """Coefficient b of 1/n in the free-endpoint bracket 1 + b/n.

    The corrected random-turns bracket at k = 2 depends on the parity of
    n + u_2 - u_1, so ``n`` and ``u`` are required there.
    """
    _check_variant(variant)
    k = model.k
    shape = FreeEndpointShape.for_k(k)
    ell, alpha, w = shape.ell, shape.alpha, shape.weight
    if k == 1:
        return Fraction(0)
    pair_term = Fraction(su.pair_sq, (k - 1) * k * (k + 1))
    if variant == "uncorrected":
        if model.is_lock_step:
            return w * (pair_term - (2 * ell + alpha - 3) / 6)
        return w / k * (pair_term + Fraction(2 * k - 3, 24) - (1 + ell * (k - ell - Fraction(1, 2))) / (2 * k))
    c = model_constants(model)
    xi = (Fraction(-1, 12) + c.Omega * (1 + w) / (2 * c.Lambda)
          + c.Psi * (2 * ell + alpha - 1) / (12 * c.Lambda) - pair_term)
    b = w / c.Lambda * xi
    if model.is_lock_step:
        # boundary saddle of the endpoint sum
        b -= w / (4 * c.Lambda)
    elif k == 2:
        # saddle at phi = (pi, pi) enters with the parity of n + u_2 - u_1
        if n is None or u is None:
            raise ValueError("random turns with k = 2 needs n and u for the parity term")
        sign = -1 if (n + u[1] - u[0]) % 2 else 1
        b -= sign * w / (4 * c.Lambda)
    return b


def free_endpoint_asymptotic(model: Model, u: Sequence[int], n: int, order: int = 2,
                             variant: str = "corrected", prec: int = DEFAULT_PREC) -> AsymptoticValue:
    """Estimate of the number of confined n-step walks starting at u."""
    order = Order(order)
    u = check_chamber(u, "start")
    if len(u) != model.k:
        raise ValueError("start length must equal the model dimension")
    if n < 1:
        raise DomainError("n must be at least 1")
    k = model.k
    su = EndpointStats.of(u)
    lam = model_constants(model).Lambda
    with mpmath.workprec(prec):
        log_val = (n * mpmath.log(model.num_steps)
                   - mpmath.mpf(k * (k - 1)) / 4 * (mpmath.log(n) + mpmath.log(_q(lam)))
                   + free_endpoint_prefactor(model, variant).log()
                   + mpmath.log(su.vandermonde))
        bracket = mpmath.mpf(1)
        if order is Order.SECOND:
            b = free_endpoint_bracket(model, su, n, u, variant)
            bracket = 1 + _q(b) / n
            if bracket <= 0:
                raise DomainError(f"second-order bracket is non-positive at n={n}")
            log_val += mpmath.log(bracket)
    return AsymptoticValue(log_val, order, variant, bracket)


@dataclass(frozen=True)
class BracketComparison:
    """Printed versus corrected 1/n coefficients for one configuration."""

    uncorrected: Fraction
    corrected: Fraction

    @property
    def difference(self) -> Fraction:
        return self.corrected - self.uncorrected


def compare_brackets(model: Model, u: Sequence[int], v: Sequence[int] | None = None,
                     n: int | None = None) -> BracketComparison:
    """Diagnostic: uncorrected versus corrected 1/n coefficients."""
    su = EndpointStats.of(check_chamber(u, "start"))
    if v is None:
        return BracketComparison(free_endpoint_bracket(model, su, n, u, "uncorrected"),
                                 free_endpoint_bracket(model, su, n, u, "corrected"))
    sv = EndpointStats.of(check_chamber(v, "end"))
    return BracketComparison(fixed_endpoint_bracket(model, su, sv, "uncorrected")[1],
                             fixed_endpoint_bracket(model, su, sv, "corrected")[1])


# finite-difference recovery of the model constants

def _log_abs_step_gen(model: Model, phi):
    if model.is_lock_step:
        return sum(mpmath.log(abs(2 * mpmath.cos(p))) for p in phi)
    return mpmath.log(abs(sum(2 * mpmath.cos(p) for p in phi)))


@dataclass(frozen=True)
class ConstantsFit:
    Lambda: mpmath.mpf
    Omega: mpmath.mpf | None
    Psi: mpmath.mpf | None
    quartic_axis: mpmath.mpf
    deviation: float


def _even_taylor(g, h):
    # fit g(t) = c2 t^2 + c4 t^4 + c6 t^6 + O(t^8) from t = h, 2h, 3h
    A = mpmath.matrix([[(j * h) ** 2, (j * h) ** 4, (j * h) ** 6] for j in (1, 2, 3)])
    rhs = mpmath.matrix([g(j * h) for j in (1, 2, 3)])
    c = mpmath.lu_solve(A, rhs)
    return c[0], c[1]


def fit_constants_fd(model: Model, h: float = 1e-3, dps: int = 50) -> ConstantsFit:
    """Recover Lambda, Omega, Psi from log|S(e^{i phi})| sampled near phi = 0.

    At k = 1 only Lambda and the axis quartic coefficient Omega/8 + Psi/24 are
    identifiable, so Omega and Psi are reported as None.
    """
    if not 0 < h <= 1e-2:
        raise ValueError("h must lie in (0, 1e-2]")
    k = model.k
    exact = model_constants(model)
    with mpmath.workdps(dps):
        h = mpmath.mpf(h)
        base = mpmath.log(model.num_steps)

        def along(d):
            return lambda t: _log_abs_step_gen(model, [t * x for x in d]) - base

        e1 = [1] + [0] * (k - 1)
        c2, a = _even_taylor(along(e1), h)
        lam = -2 * c2
        dev = [abs(lam - _q(exact.Lambda)), abs(a - _q(exact.Omega / 8 + exact.Psi / 24))]
        omega = psi = None
        if k >= 2:
            _, b = _even_taylor(along([1, 1] + [0] * (k - 2)), h)
            psi = 12 * (4 * a - b)
            omega = 8 * (a - psi / 24)
            dev += [abs(omega - _q(exact.Omega)), abs(psi - _q(exact.Psi))]
        return ConstantsFit(lam, omega, psi, a, float(max(dev)))


def verify_constants_fd(model: Model, h: float = 1e-3) -> float:
    """Worst absolute deviation of the finite-difference constants from the closed forms."""
    return fit_constants_fd(model, h).deviation


# convergence studies

@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    exact: int
    log_estimate: mpmath.mpf
    rel_error: mpmath.mpf


@dataclass(frozen=True)
class ConvergenceReport:
    rows: list[ConvergenceRow]
    slope: float | None
    fit_points: int

    def errors(self) -> list[float]:
        return [float(r.rel_error) for r in self.rows]

    def monotone_decreasing(self) -> bool:
        e = self.errors()
        return all(b < a for a, b in zip(e, e[1:]))

    def to_csv(self) -> str:
        lines = ["n,exact,log_estimate,rel_error"]
        for r in self.rows:
            lines.append(f"{r.n},{r.exact},{mpmath.nstr(r.log_estimate, 30)},{mpmath.nstr(r.rel_error, 12)}")
        if self.slope is not None:
            lines.append(f"# slope={self.slope:.6f} fit=ols-loglog top_half_points={self.fit_points}")
        else:
            lines.append("# slope=none (fewer than two points or exact agreement)")
        return "\n".join(lines) + "\n"


def loglog_slope(ns: Sequence[int], errors: Sequence) -> tuple[float | None, int]:
    """OLS slope of log(error) against log(n) on the upper half of the ladder."""
    if len(ns) < 2 or any(e == 0 for e in errors):
        return None, 0
    start = min(len(ns) // 2, len(ns) - 2)
    xs = [math.log(n) for n in ns[start:]]
    ys = [float(mpmath.log(e)) for e in errors[start:]]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx, len(xs)


def convergence_report(model: Model, u: Sequence[int], v: Sequence[int] | None, n_list: Sequence[int],
                       order: int = 2, variant: str = "corrected", prec: int = DEFAULT_PREC,
                       backend: str | None = None) -> ConvergenceReport:
    """Compare estimates with exact counts along a ladder of n.

    ``v=None`` selects the free endpoint, counted by the chamber DP; fixed
    endpoints use the reflection sum.
    """
    n_list = list(n_list)
    if not n_list:
        raise ValueError("empty n list")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n list must be strictly increasing")
    rows = []
    with mpmath.workprec(prec):
        for n in n_list:
            if v is None:
                exact = count_free_endpoint(model, u, n, backend=backend)
                est = free_endpoint_asymptotic(model, u, n, order, variant, prec)
            else:
                if not reachable(model, u, v, n):
                    raise DomainError(f"{v} is not reachable from {u} in {n} steps")
                exact = count_confined_reflection(model, u, v, n)
                est = fixed_endpoint_asymptotic(model, u, v, n, order, variant, prec)
            rows.append(ConvergenceRow(n, exact, est.log_value, est.relative_error(exact)))
        slope, pts = loglog_slope([r.n for r in rows], [r.rel_error for r in rows])
    return ConvergenceReport(rows, slope, pts)
