import cmath
import math

import pytest

from whittaker_mono.core import (
    SectorPoint,
    TolerancePolicy,
    complex_gamma,
    digamma,
    is_nonpositive_integer,
    pochhammer,
    principal_pow,
    reciprocal_gamma,
)
from whittaker_mono.errors import DomainError, PoleError

from _frozen import GAMMA_1PI, POCH_HALF_I_3


class TestTolerancePolicy:
    def test_defaults(self):
        tol = TolerancePolicy()
        assert tol.rel_tol == 1e-10
        assert tol.abs_tol == 1e-14

    @pytest.mark.parametrize("kwargs", [
        {"rel_tol": 0.0}, {"rel_tol": -1e-10}, {"abs_tol": 0.0},
        {"max_series_terms": 0}, {"max_quad_refinements": 0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(DomainError):
            TolerancePolicy(**kwargs)


class TestSectorPoint:
    def test_caches_polar_data(self):
        x = SectorPoint(1 + 1j)
        assert x.modulus == pytest.approx(math.sqrt(2.0), rel=1e-15)
        assert x.realpart == 1.0
        assert x.argument == pytest.approx(math.pi / 4, rel=1e-15)

    @pytest.mark.parametrize("bad", [0, -1.0, -2.5 + 0j])
    def test_rejects_cut(self, bad):
        with pytest.raises(DomainError):
            SectorPoint(bad)

    def test_from_polar_round_trip(self):
        x = SectorPoint.from_polar(2.0, 2.5)
        assert x.modulus == pytest.approx(2.0, rel=1e-15)
        assert x.argument == pytest.approx(2.5, rel=1e-15)

    def test_from_polar_rejects_nonpositive_modulus(self):
        with pytest.raises(DomainError):
            SectorPoint.from_polar(0.0, 1.0)


class TestPrincipalPow:
    def test_matches_cmath_off_cut(self):
        got = principal_pow(1 + 2j, 0.3 - 0.7j)
        want = cmath.exp((0.3 - 0.7j) * cmath.log(1 + 2j))
        assert got == pytest.approx(want, rel=1e-15)

    def test_rejects_cut_base(self):
        with pytest.raises(DomainError):
            principal_pow(-1.0, 0.5)

    def test_zero_base(self):
        assert principal_pow(0.0, 2.0 + 1j) == 0j
        with pytest.raises(DomainError):
            principal_pow(0.0, -1.0)


class TestGamma:
    def test_frozen_gamma_1pi(self):
        got = complex_gamma(1 + 1j)
        assert abs(got - GAMMA_1PI) <= 1e-13 * abs(GAMMA_1PI)

    @pytest.mark.parametrize("n", [1, 2, 3, 6, 10])
    def test_integers(self, n):
        assert complex_gamma(n).real == pytest.approx(math.factorial(n - 1),
                                                      rel=1e-13)

    def test_half(self):
        assert complex_gamma(0.5).real == pytest.approx(math.sqrt(math.pi),
                                                        rel=1e-13)

    def test_reflection_region(self):
        # Gamma(-1.5) = 4 sqrt(pi) / 3
        assert complex_gamma(-1.5).real == pytest.approx(
            4.0 * math.sqrt(math.pi) / 3.0, rel=1e-12)

    @pytest.mark.parametrize("z", [0, -1, -7, 0.0 + 0j])
    def test_poles(self, z):
        with pytest.raises(PoleError):
            complex_gamma(z)
        assert reciprocal_gamma(z) == 0j

    def test_reciprocal_consistency(self):
        z = 0.3 - 2.2j
        assert reciprocal_gamma(z) * complex_gamma(z) == pytest.approx(1.0,
                                                                       rel=1e-12)


class TestDigamma:
    def test_euler_gamma(self):
        assert digamma(1.0).real == pytest.approx(-0.5772156649015329,
                                                  rel=1e-12)

    def test_recurrence(self):
        z = 0.7 + 1.3j
        assert digamma(z + 1) - digamma(z) == pytest.approx(1.0 / z, rel=1e-12)

    def test_reflection(self):
        z = -2.3 + 0.4j
        lhs = digamma(1 - z) - digamma(z)
        rhs = math.pi / cmath.tan(math.pi * z)
        assert lhs == pytest.approx(rhs, rel=1e-11)

    def test_pole(self):
        with pytest.raises(PoleError):
            digamma(-3)


class TestPochhammer:
    def test_frozen_product(self):
        assert pochhammer(0.5 + 1j, 3) == pytest.approx(POCH_HALF_I_3,
                                                        rel=1e-15)

    def test_zeroth(self):
        assert pochhammer(2.7 - 1j, 0) == 1.0 + 0j

    def test_gamma_ratio(self):
        a = 1.3 + 0.4j
        want = complex_gamma(a + 5) / complex_gamma(a)
        assert pochhammer(a, 5) == pytest.approx(want, rel=1e-12)

    def test_negative_order(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(0)
    assert is_nonpositive_integer(-4.0 + 0j)
    assert not is_nonpositive_integer(1)
    assert not is_nonpositive_integer(-4.5)
    assert not is_nonpositive_integer(-4.0 + 0.1j)
