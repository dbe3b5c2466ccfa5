import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whittaker_mono.core import TolerancePolicy
from whittaker_mono.errors import BranchError, DomainError
from whittaker_mono.hyp2f1 import (
    Hyp2F1Params,
    find_largest_negative_zero,
    hyp2f1_eval,
    hyp2f1_eval_many,
    hyp2f1_general_arg,
    legendre_identity_check,
)

from _frozen import F_1_1_2_HALF, F_CONJ_Z, P_NU1, P_NU2

TOL = TolerancePolicy()


def brute_series(a, b, c, z, terms=400):
    acc = 1.0 + 0j
    term = 1.0 + 0j
    for n in range(terms - 1):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        acc += term
    return acc


class TestParams:
    def test_rejects_nonpositive_integer_c(self):
        with pytest.raises(DomainError):
            Hyp2F1Params(1.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            Hyp2F1Params(1.0, 1.0, -2.0)

    def test_conjugate_pair_validation(self):
        with pytest.raises(DomainError):
            Hyp2F1Params(0.5 + 1j, 0.5 + 1j, 1.0, conjugate_pair=True)

    def test_from_whittaker(self):
        p = Hyp2F1Params.from_whittaker(0.1 + 0.3j, 0.7)
        assert p.a == pytest.approx(1.1 - 0.3j)
        assert p.b == pytest.approx(1.1 + 0.3j)
        assert p.c == pytest.approx(0.8)
        assert p.conjugate_pair

    def test_from_bessel(self):
        p = Hyp2F1Params.from_bessel(2.0)
        assert p.a == p.b == 2.5 + 0j
        assert p.c == 1.0 + 0j


class TestEval:
    def test_log_closed_form(self):
        got = hyp2f1_eval(Hyp2F1Params(1.0, 1.0, 2.0), 0.5, TOL)
        assert got.real == pytest.approx(F_1_1_2_HALF, rel=1e-13)

    def test_reference_zero_location(self):
        got = hyp2f1_eval(Hyp2F1Params.from_bessel(2.0), -0.4573617040, TOL)
        assert abs(got) < 1e-9

    def test_frozen_complex_point(self):
        p = Hyp2F1Params(0.5 + 1j, 0.5 - 1j, 1.0)
        got = hyp2f1_general_arg(p, 0.3 + 0.2j, TOL)
        assert got == pytest.approx(F_CONJ_Z, rel=1e-12)

    def test_conjugate_pair_is_real(self):
        p = Hyp2F1Params.from_whittaker(0.1 + 2j, 1.3)
        val = hyp2f1_eval(p, -5.0, TOL)
        assert val.imag == 0.0

    def test_rejects_z_at_or_above_one(self):
        with pytest.raises(DomainError):
            hyp2f1_eval(Hyp2F1Params(1.0, 1.0, 2.0), 1.0, TOL)

    def test_branch_cut_rejected(self):
        with pytest.raises(BranchError):
            hyp2f1_general_arg(Hyp2F1Params(0.5, 0.5, 1.5), 2.0, TOL)

    def test_many_matches_scalar(self):
        p = Hyp2F1Params.from_bessel(1.0)
        z = np.linspace(-40.0, 0.9, 257)
        vals = hyp2f1_eval_many(p, z, TOL)
        for i in range(0, 257, 32):
            assert vals[i] == pytest.approx(hyp2f1_eval(p, z[i], TOL),
                                            rel=1e-12, abs=1e-13)

    def test_terminating_polynomial(self):
        # a = -3: cubic polynomial, valid at any z including z > 1
        p = Hyp2F1Params(-3.0, 2.0, 1.5)
        got = hyp2f1_general_arg(p, 4.0 + 0j, TOL)
        want = brute_series(-3.0, 2.0, 1.5, 4.0, terms=4)
        assert got == pytest.approx(want, rel=1e-12)


@settings(max_examples=25, deadline=None)
@given(
    ar=st.floats(0.2, 2.5), ai=st.floats(-2.0, 2.0),
    c=st.floats(0.3, 3.0), z=st.floats(-0.45, 0.45),
)
def test_matches_brute_series_inside_disc(ar, ai, c, z):
    a = complex(ar, ai)
    p = Hyp2F1Params(a, a.conjugate(), c, conjugate_pair=True)
    got = hyp2f1_eval(p, z, TOL)
    want = brute_series(a, a.conjugate(), c, z)
    assert abs(got - want.real) <= 1e-12 * (1.0 + abs(want))


@settings(max_examples=20, deadline=None)
@given(nu=st.floats(0.0, 3.0), z=st.floats(-80.0, -0.5))
def test_pfaff_consistency_on_negative_axis(nu, z):
    # z/(z-1) in (0,1): the Pfaff route must agree with mpmath
    import mpmath as mp
    p = Hyp2F1Params.from_bessel(nu)
    got = hyp2f1_eval(p, z, TOL)
    want = float(mp.hyp2f1(nu + 0.5, nu + 0.5, 1, z))
    assert abs(got - want) <= 1e-10 * (1.0 + abs(want))


class TestZeroSearch:
    def test_reference_nu2(self):
        res = find_largest_negative_zero(Hyp2F1Params.from_bessel(2.0))
        assert res.kind == "Found"
        assert res.p == pytest.approx(P_NU2, abs=1e-9)

    def test_frozen_nu1(self):
        res = find_largest_negative_zero(Hyp2F1Params.from_bessel(1.0))
        assert res.kind == "Found"
        assert res.p == pytest.approx(P_NU1, abs=1e-8)

    def test_nu_half_has_no_zero(self):
        res = find_largest_negative_zero(Hyp2F1Params.from_bessel(0.5),
                                         search_floor=-1e4)
        assert res.kind == "NoneInSearchRange"
        assert res.search_floor == -1e4

    def test_analytic_flag_passthrough(self):
        res = find_largest_negative_zero(Hyp2F1Params.from_bessel(0.5),
                                         analytic_neg_infinity=True)
        assert res.kind == "AnalyticNegInfinity"

    def test_zero_is_nearest_to_origin(self):
        # F > 0 strictly between the found zero and 0
        res = find_largest_negative_zero(Hyp2F1Params.from_bessel(2.0))
        p = Hyp2F1Params.from_bessel(2.0)
        for z in np.linspace(res.p * 0.98, -1e-3, 50):
            assert hyp2f1_eval(p, float(z), TOL).real > 0

    def test_requires_conjugate_pair(self):
        with pytest.raises(DomainError):
            find_largest_negative_zero(Hyp2F1Params(1.0, 2.0, 3.0))


class TestLegendreIdentity:
    def test_spec_points(self):
        assert legendre_identity_check(1.0, 0.5, TOL) < 1e-10
        assert legendre_identity_check(2.5, 0.8, TOL) < 1e-9

    @pytest.mark.parametrize("a,z", [(0.7, 0.3), (1.5, 0.9), (0.25, 0.6)])
    def test_more_points(self, a, z):
        assert legendre_identity_check(a, z, TOL) < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            legendre_identity_check(1.0, 0.0, TOL)
