import numpy as np
import pytest

from regpair.circle import grid, winding_number
from regpair.errors import DivisorCollision, NotDiffeomorphism
from regpair.loops import Diffeomorphism, Loop, compose, deform, reparameterize
from regpair.parser import parse_rational


def test_circle_samples():
    gamma = Loop.circle(1 + 1j, 0.5)
    np.testing.assert_allclose(gamma.sample(64), 1 + 1j + 0.5 * np.exp(1j * grid(64)))
    assert gamma.basepoint == pytest.approx(1.5 + 1j)


def test_circle_rejects_nonpositive_radius():
    with pytest.raises(ValueError):
        Loop.circle(0j, 0.0)


def test_fourier_curve_evaluate_off_grid():
    gamma = Loop.fourier_curve({0: 0.1, 1: 1.0, -2: 0.2j})
    t = np.array([0.3, 1.7])
    np.testing.assert_allclose(gamma(t), 0.1 + np.exp(1j * t) + 0.2j * np.exp(-2j * t))


def test_sampled_loop_interpolates():
    exact = Loop.fourier_curve({1: 1.0, 3: 0.1})
    sampled = Loop.sampled(exact.sample(64))
    t = np.linspace(0, 2 * np.pi, 7)
    np.testing.assert_allclose(sampled(t), exact(t), atol=1e-13)


def test_compose_values_and_winding():
    f = parse_rational("(z-0.5)/(z-3)")
    p = compose(f, Loop.circle(0j, 1.0), 256)
    z = np.exp(1j * grid(256))
    np.testing.assert_allclose(p.samples, (z - 0.5) / (z - 3))
    assert winding_number(p) == 1


def test_compose_detects_collision():
    with pytest.raises(DivisorCollision) as info:
        compose(parse_rational("1/(z-1)"), Loop.circle(0j, 1.0), 256)
    assert info.value.points[0] == pytest.approx(1.0)


def test_deform_keeps_fourier_kind():
    base = Loop.circle(0j, 1.0)
    moved = deform(base, Loop.fourier_curve({2: 1.0}), 0.1)
    assert moved.kind == "fourier"
    assert moved.basepoint == pytest.approx(1.1)
    assert deform(base, Loop.fourier_curve({2: 1.0}), 0.0) is base


def test_reparameterize():
    phi = Diffeomorphism(sin=((1, 0.3),))
    gamma = reparameterize(Loop.circle(0j, 1.0), phi, 128)
    th = grid(128)
    np.testing.assert_allclose(gamma.sample(128), np.exp(1j * (th + 0.3 * np.sin(th))), atol=1e-12)


def test_reparameterize_rejects_folding():
    with pytest.raises(NotDiffeomorphism):
        reparameterize(Loop.circle(0j, 1.0), Diffeomorphism(sin=((1, 1.5),)), 128)


def test_diffeomorphism_derivative_matches_finite_difference():
    phi = Diffeomorphism(shift=0.1, cos=((2, 0.05),), sin=((1, 0.3),))
    t, h = np.linspace(0, 6, 13), 1e-6
    np.testing.assert_allclose(phi.derivative(t), (phi(t + h) - phi(t - h)) / (2 * h), atol=1e-8)
