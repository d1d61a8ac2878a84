from fractions import Fraction as F

import mpmath
import pytest

from weylwalk.selberg import (HERMITE_MOMENTS, LAGUERRE_MOMENTS, InsufficientNodesError, Weight, schur_moment_identities,
                              hermite_moment, laguerre_moment, moment, quadrature_oracle, selberg_one)
from weylwalk.symbolic import SymbolicReal, gamma_half


def test_symbolic_canonical_equality():
    assert SymbolicReal(2, 2, 2) == SymbolicReal(4, 0, 2)
    assert hash(SymbolicReal(2, 2, 0)) == hash(SymbolicReal(4))
    assert SymbolicReal(1, 1, 0) != SymbolicReal(1)


def test_symbolic_arithmetic():
    a = SymbolicReal(F(3, 2), 1, -1)
    assert a * a == SymbolicReal(F(9, 2), 0, -2)
    assert a / a == 1
    assert a**-2 == SymbolicReal(F(2, 9), 0, 2)
    with pytest.raises(ValueError):
        SymbolicReal.sqrt_pi().to_fraction()


@pytest.mark.parametrize("x,expected", [
    (F(1, 2), SymbolicReal(1, 0, 1)),
    (F(3, 2), SymbolicReal(F(1, 2), 0, 1)),
    (F(7, 2), SymbolicReal(F(15, 8), 0, 1)),
    (4, SymbolicReal(6)),
])
def test_gamma_half(x, expected):
    assert gamma_half(x) == expected
    with mpmath.workdps(30):
        assert abs(gamma_half(x).to_mpf() - mpmath.gamma(mpmath.mpf(F(x).numerator) / F(x).denominator)) < 1e-25


def test_gamma_half_domain():
    with pytest.raises(ValueError):
        gamma_half(F(1, 3))
    with pytest.raises(ValueError):
        gamma_half(0)


def test_selberg_one_examples():
    assert selberg_one(Weight.hermite(2)) == SymbolicReal(4, 0, 2)
    assert selberg_one(Weight.laguerre(1, F(1, 2))) == SymbolicReal.sqrt_pi()
    assert selberg_one(Weight.hermite(1)) == SymbolicReal(1, 1, 1)


def test_selberg_one_closure():
    # products and quotients stay in the c * 2^(p/2) * pi^(q/2) family
    vals = [selberg_one(Weight.hermite(k)) for k in range(1, 5)]
    vals += [selberg_one(Weight.laguerre(k, a)) for k in range(1, 5) for a in (F(1, 2), F(3, 2))]
    for a in vals:
        for b in vals:
            r = a / b * a
            assert isinstance(r.two_half_power, int) and isinstance(r.pi_half_power, int)


@pytest.mark.parametrize("k,which,expected", [
    (3, "sum_sq", 9), (2, "schur_11", -1), (1, "sq_of_sum", 1), (2, "sum_4th", 18), (2, "schur_2", 3),
])
def test_hermite_moment_examples(k, which, expected):
    assert hermite_moment(k, which) == expected


@pytest.mark.parametrize("k,alpha,which,expected", [
    (1, F(1, 2), "sum", F(1, 2)), (2, F(1, 2), "sum", 3), (1, F(1, 2), "sum_sq", F(3, 4)),
])
def test_laguerre_moment_examples(k, alpha, which, expected):
    assert laguerre_moment(k, alpha, which) == expected


def test_unknown_moment():
    with pytest.raises(ValueError):
        hermite_moment(2, "cube")
    with pytest.raises(ValueError):
        laguerre_moment(2, F(1, 2), "sum_4th")


@pytest.mark.parametrize("k", range(1, 7))
def test_schur_moment_identities(k):
    assert all(schur_moment_identities(k).values())


def _weights():
    for k in (1, 2, 3):
        yield Weight.hermite(k)
        for a in (F(1, 2), F(3, 2)):
            yield Weight.laguerre(k, a)


@pytest.mark.parametrize("w", list(_weights()), ids=lambda w: f"{w.kind.value}-k{w.k}-a{w.alpha}")
def test_closed_forms_match_quadrature(w):
    names = ("one",) + (HERMITE_MOMENTS if w.alpha is None else LAGUERRE_MOMENTS)
    with mpmath.workdps(30):
        for name in names:
            r = moment(w, name)
            closed = selberg_one(w).to_mpf() * mpmath.mpf(r.numerator) / r.denominator
            q = quadrature_oracle(w, name, dps=30)
            if closed == 0:
                assert abs(q) < 1e-20
            else:
                assert abs(q / closed - 1) < 1e-9


def test_quadrature_examples():
    with mpmath.workdps(30):
        assert abs(quadrature_oracle(Weight.hermite(2), "one", nodes=3) / (4 * mpmath.pi) - 1) < 1e-10
        v = quadrature_oracle(Weight.laguerre(2, F(1, 2)), "sum", nodes=4)
        assert abs(v / (3 * selberg_one(Weight.laguerre(2, F(1, 2))).to_mpf()) - 1) < 1e-10
        assert abs(quadrature_oracle(Weight.hermite(1), "sum_sq", nodes=2) - mpmath.sqrt(2 * mpmath.pi)) < 1e-12


def test_quadrature_insufficient_nodes():
    with pytest.raises(InsufficientNodesError):
        quadrature_oracle(Weight.hermite(3), "sum_4th", nodes=3)


def test_weight_validation():
    with pytest.raises(ValueError):
        Weight.laguerre(2, 0)
    with pytest.raises(ValueError):
        Weight.hermite(0)
