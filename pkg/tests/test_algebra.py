import numpy as np
import pytest

from libkovalevskaya import PencilSpec, PhasePoint, bracket, casimirs, poisson_tensor, sgrad, flow
from libkovalevskaya.algebra import jacobi_residual, random_points
from libkovalevskaya.fields import CasimirF1, CasimirF2, KovalevskayaHamiltonian, \
    KovalevskayaIntegral, coordinate_fields
from libkovalevskaya.math import finite_difference_bracket

KAPPAS = [-1.0, 0.0, 1.0]


@pytest.mark.parametrize('kappa', KAPPAS)
def test_poisson_tensor_is_antisymmetric(kappa):
    tensor = poisson_tensor(random_points(100, seed=0), PencilSpec(kappa=kappa))
    assert tensor.shape == (100, 6, 6)
    np.testing.assert_array_equal(tensor, -np.swapaxes(tensor, -1, -2))


@pytest.mark.parametrize('kappa', KAPPAS)
def test_coordinate_brackets(kappa):
    p = PhasePoint((0.3, -1.2, 0.7), (1.1, 0.4, -0.5))
    spec = PencilSpec(kappa=kappa)
    j1, j2, _, x1, x2, _ = coordinate_fields()
    assert bracket(j1, j2, p, spec) == pytest.approx(0.7)
    assert bracket(j1, x2, p, spec) == pytest.approx(-0.5)
    assert bracket(x1, x2, p, spec) == pytest.approx(kappa * 0.7, abs=1e-12)
    assert bracket(x2, x1, p, spec) == pytest.approx(-kappa * 0.7, abs=1e-12)


@pytest.mark.parametrize('kappa', KAPPAS)
def test_jacobi_identity(kappa):
    residuals = jacobi_residual(random_points(1000, seed=1), PencilSpec(kappa=kappa))
    assert np.max(residuals) < 1e-10


@pytest.mark.parametrize('kappa', KAPPAS)
def test_casimirs_are_central(kappa):
    spec = PencilSpec(kappa=kappa)
    points = random_points(1000, seed=2)
    for casimir in (CasimirF1(), CasimirF2()):
        for coordinate in coordinate_fields():
            assert np.max(np.abs(bracket(casimir, coordinate, points, spec))) < 1e-9


def test_casimir_values():
    p = PhasePoint((1.0, 2.0, 0.0), (0.5, -1.0, 2.0))
    f1, f2 = casimirs(p, PencilSpec(kappa=-1.0))
    assert f1 == pytest.approx(0.25 + 1.0 + 4.0 - 5.0)
    assert f2 == pytest.approx(0.5 - 2.0)


def _mixed(coords, spec):
    return coords[..., 0] * coords[..., 4] + coords[..., 2] ** 2 - coords[..., 5]


def test_bracket_matches_finite_differences(spec):
    points = random_points(50, seed=3)
    h = KovalevskayaHamiltonian()
    oracle = finite_difference_bracket(
        lambda c: h(c, spec).numpy(), lambda c: _mixed(c, spec),
        points, poisson_tensor(points, spec))
    analytic = bracket(h, _mixed, points, spec)
    np.testing.assert_allclose(analytic, oracle, atol=1e-5 * (1.0 + np.max(np.abs(oracle))))


def test_sgrad_is_tangent_to_orbits(spec):
    points = random_points(200, seed=4)
    field = sgrad(KovalevskayaHamiltonian(), points, spec)
    grad_f1 = CasimirF1().gradient(points, spec).numpy()
    grad_f2 = CasimirF2().gradient(points, spec).numpy()
    assert np.max(np.abs(np.sum(field * grad_f1, axis=-1))) < 1e-10
    assert np.max(np.abs(np.sum(field * grad_f2, axis=-1))) < 1e-10


def test_flow_of_zero_duration_returns_start(spec):
    p = PhasePoint((0.1, 0.2, 0.3), (1.0, 0.0, 0.0))
    trajectory = flow(p, KovalevskayaHamiltonian(), spec, t=0.0, dt=0.1)
    assert len(trajectory) == 1
    assert trajectory[0] == p


def test_flow_rejects_bad_spacing(spec):
    with pytest.raises(ValueError):
        flow(PhasePoint((0, 0, 1), (1, 0, 0)), KovalevskayaHamiltonian(), spec, t=1.0, dt=0.0)


@pytest.mark.slow
@pytest.mark.parametrize('kappa', KAPPAS)
def test_flow_conserves_integrals(kappa):
    spec = PencilSpec(kappa=kappa, c1=1.0)
    fields = (CasimirF1(), CasimirF2(), KovalevskayaHamiltonian(), KovalevskayaIntegral())
    for coords in random_points(10, seed=5, box=1.0):
        trajectory = flow(PhasePoint.from_coords(coords), KovalevskayaHamiltonian(), spec,
                          t=10.0, dt=0.5)
        assert trajectory.times[-1] == pytest.approx(10.0)
        for field in fields:
            scale = 1.0 + abs(float(field(coords, spec)))
            assert trajectory.drift(field, spec) < 1e-6 * scale
