import cmath
import math

import numpy as np
import pytest

from bicomplex import (
    I1,
    I2,
    J,
    ONE,
    E1,
    ZERO,
    Bicomplex,
    NonFiniteError,
    SingularOperand,
    exp,
    exp_lattice_coords,
    log1p,
    log_branch,
    log_principal,
    log_principal_direct,
    sqrt,
    trig_form,
)
from helpers import (
    assert_close,
    ball_bicomplex,
    gauss_bicomplex,
    nonsingular_bicomplex,
)

PI = math.pi


def test_exp_zero_is_one_exact():
    assert exp(ZERO) == ONE


def test_exp_i2_pi_is_minus_one():
    assert abs(exp(I2 * PI) - (-ONE)) < 1e-12


def test_exp_closed_form():
    # exp(z1 + i2*z2) = exp(z1)*(cos(z2) + i2*sin(z2)), all complex-valued
    rng = np.random.default_rng(101)
    for _ in range(500):
        w = gauss_bicomplex(rng, 1.5)
        e = cmath.exp(w.z1)
        expected = Bicomplex(e * cmath.cos(w.z2), e * cmath.sin(w.z2))
        assert_close(exp(w), expected, rel=1e-12)


def test_exp_is_additive():
    rng = np.random.default_rng(103)
    for _ in range(300):
        a = gauss_bicomplex(rng)
        b = gauss_bicomplex(rng)
        assert_close(exp(a + b), exp(a) * exp(b), rel=1e-11)


def test_exp_periodicity():
    rng = np.random.default_rng(107)
    for _ in range(300):
        w = gauss_bicomplex(rng, 1.5)
        m = int(rng.integers(-3, 4))
        n = int(rng.integers(-3, 4))
        shift = 2 * PI * (m * I1 + n * I2)
        assert_close(exp(w + shift), exp(w), rel=1e-10)


def test_exp_never_singular():
    rng = np.random.default_rng(109)
    for _ in range(300):
        w = gauss_bicomplex(rng, 2.0)
        assert not exp(w).is_singular().is_singular


def test_exp_overflow_raises():
    with pytest.raises(NonFiniteError):
        exp(Bicomplex(1000.0))


def test_log_principal_example():
    assert_close(log_principal(J), Bicomplex(complex(0, PI / 2), PI / 2))
    assert_close(log_principal(Bicomplex(math.e)), ONE)
    assert_close(exp(log_principal(J)), J)


def test_log_principal_roundtrip():
    rng = np.random.default_rng(113)
    for _ in range(500):
        w = nonsingular_bicomplex(rng)
        assert_close(exp(log_principal(w)), w, rel=1e-12)


def test_log_principal_of_singular_raises():
    for w in (ZERO, E1, 2.5 * E1):
        with pytest.raises(SingularOperand):
            log_principal(w)


def test_log_of_exp_lands_on_lattice():
    rng = np.random.default_rng(127)
    for _ in range(500):
        w = gauss_bicomplex(rng, 2.5)
        d = log_principal(exp(w)) - w
        a, b = exp_lattice_coords(d)
        assert abs(a.imag) < 1e-8 and abs(b.imag) < 1e-8
        assert abs(a.real - round(a.real)) < 1e-8
        assert abs(b.real - round(b.real)) < 1e-8


def test_lattice_coords_recover_exact_shifts():
    rng = np.random.default_rng(131)
    for _ in range(200):
        a = int(rng.integers(-5, 6))
        b = int(rng.integers(-5, 6))
        d = Bicomplex.from_idempotent(complex(0, 2 * PI * a), complex(0, 2 * PI * b))
        ca, cb = exp_lattice_coords(d)
        assert round(ca.real) == a and round(cb.real) == b
        assert abs(ca - a) < 1e-12 and abs(cb - b) < 1e-12


def test_log_branch_roundtrip_and_shift():
    rng = np.random.default_rng(137)
    for _ in range(300):
        w = nonsingular_bicomplex(rng)
        m = int(rng.integers(-2, 3))
        n = int(rng.integers(-2, 3))
        lb = log_branch(w, (m, n))
        assert_close(exp(lb), w, rel=1e-10)
        shift = lb - log_principal(w)
        expected = Bicomplex(complex(0, 2 * PI * m), 2 * PI * n)
        assert_close(shift, expected, rel=1e-12, abs_tol=1e-12)
    assert log_branch(ONE, (0, 0)) == log_principal(ONE)


def test_log_principal_direct_is_a_logarithm():
    rng = np.random.default_rng(139)
    for _ in range(500):
        w = nonsingular_bicomplex(rng)
        assert_close(exp(log_principal_direct(w)), w, rel=1e-10)


def test_log_principal_direct_agreement_region():
    # when the principal component arguments sum into (-pi, pi], both
    # routes produce the same value
    rng = np.random.default_rng(149)
    checked = 0
    for _ in range(800):
        w = nonsingular_bicomplex(rng)
        pair = w.idempotent()
        s = cmath.phase(pair.p1) + cmath.phase(pair.p2)
        if not (-PI + 0.1 < s <= PI - 0.1):
            continue
        checked += 1
        assert_close(log_principal_direct(w), log_principal(w), rel=1e-10)
    assert checked > 100


def test_log_principal_direct_wrap_offset():
    # argument sum beyond pi: the direct route lands a full period away
    # in one component
    w = Bicomplex.from_idempotent(cmath.exp(2.8j), cmath.exp(3.0j))
    diff = log_principal(w) - log_principal_direct(w)
    a, b = exp_lattice_coords(diff)
    assert (round(a.real), round(b.real)) == (0, 1)
    assert abs(a) < 1e-12 and abs(b - 1) < 1e-12


def test_trig_form_examples():
    form = trig_form(I2)
    assert abs(form.r_c - 1.0) < 1e-12
    assert abs(form.theta_c0 - PI / 2) < 1e-12

    form = trig_form(Bicomplex(3.0))
    assert abs(form.r_c - 3.0) < 1e-12
    assert abs(form.theta_c0) < 1e-12


def test_trig_form_reconstruct():
    rng = np.random.default_rng(151)
    for _ in range(500):
        w = nonsingular_bicomplex(rng)
        form = trig_form(w)
        assert_close(form.reconstruct(), w, rel=1e-10)
        assert abs(form.r_c**2 - w.cn()) <= 1e-12 * max(1.0, abs(w.cn()))
        assert -PI < form.theta_c0.real <= PI
    with pytest.raises(SingularOperand):
        trig_form(E1)


def test_sqrt():
    assert_close(sqrt(Bicomplex(4.0)), Bicomplex(2.0))
    assert_close(sqrt(Bicomplex(-1.0)), I1)
    assert_close(sqrt(J), Bicomplex.from_idempotent(1.0, 1j))
    rng = np.random.default_rng(157)
    for _ in range(500):
        w = nonsingular_bicomplex(rng)
        r = sqrt(w)
        assert_close(r * r, w, rel=1e-12)
        # principal: components in the right half plane (or on the cut)
        pair = r.idempotent()
        assert pair.p1.real >= 0 and pair.p2.real >= 0
    with pytest.raises(SingularOperand):
        sqrt(E1)


def test_log1p_matches_reference_values():
    import mpmath as mp

    rng = np.random.default_rng(163)
    with mp.workdps(50):
        for _ in range(50):
            w = ball_bicomplex(rng, 0.45)
            got = log1p(w).idempotent()
            pair = w.idempotent()
            for got_c, dev in ((got.p1, pair.p1), (got.p2, pair.p2)):
                want = mp.log1p(mp.mpc(dev.real, dev.imag))
                err = abs(mp.mpc(got_c.real, got_c.imag) - want)
                assert err <= 1e-15 * max(1.0, float(abs(want)))


def test_log1p_agrees_with_shifted_log():
    rng = np.random.default_rng(167)
    for _ in range(300):
        w = ball_bicomplex(rng, 0.24)
        if abs(w) < 0.05:
            continue
        assert_close(log1p(w), log_principal(ONE + w), rel=1e-13)


def test_log1p_tiny_arguments_keep_precision():
    rng = np.random.default_rng(173)
    for _ in range(100):
        w = 1e-12 * gauss_bicomplex(rng)
        r = log1p(w)
        # agreement with w - w^2/2 at full relative precision; forming
        # 1 + w first would lose everything past the leading term
        expansion = w - 0.5 * (w * w)
        assert abs(r - expansion) <= 1e-15 * abs(w)


def test_log1p_exp_roundtrip():
    rng = np.random.default_rng(179)
    for _ in range(300):
        w = ball_bicomplex(rng, 0.49)
        assert_close(exp(log1p(w)), ONE + w, rel=1e-12)


def test_log1p_norm_bounds_inside_safe_radius():
    # both factor-of-two-sided comparisons hold up to norm 0.41
    rng = np.random.default_rng(181)
    for _ in range(3000):
        w = ball_bicomplex(rng, 0.41)
        norm = abs(w)
        if norm == 0.0:
            continue
        ratio = abs(log1p(w)) / norm
        assert 0.5 <= ratio <= 1.5


def test_log1p_lower_bound_whole_ball():
    rng = np.random.default_rng(191)
    for _ in range(3000):
        w = ball_bicomplex(rng, 0.4999)
        norm = abs(w)
        if norm == 0.0:
            continue
        assert abs(log1p(w)) >= 0.5 * norm


def test_log1p_upper_ratio_can_cross_outside_safe_radius():
    # near the edge of the half-ball one component modulus can reach
    # sqrt(2)*0.5, where -log(1-r)/r > 3/2
    w = Bicomplex.from_idempotent(-0.6, 0.1)
    assert abs(w) < 0.5
    ratio = abs(log1p(w)) / abs(w)
    assert ratio > 1.5
    assert ratio == pytest.approx(1.5145, abs=1e-3)
