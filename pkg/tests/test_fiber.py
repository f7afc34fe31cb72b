import numpy as np
import pytest
import tensorflow as tf

from libkovalevskaya import OrbitSpec, PhasePoint
from libkovalevskaya.bifurcation import momentum_rank
from libkovalevskaya.fiber import FiberLevel, FiberSample, InconclusiveCountError, \
    component_count, count_tori, fiber_flood_oracle, isoenergy_critical_values, \
    label_components, level_of, level_residuals, sample_fiber, sampling_radius
from libkovalevskaya.fiber.sampling import thin_out

POINT = PhasePoint((0.5, -0.3, 0.4), (1.0, 0.8, -0.6))


def _circle(center, num_points=100):
    angle = np.linspace(0.0, 2.0 * np.pi, num_points, endpoint=False)
    points = np.zeros((num_points, 6))
    points[:, 0] = np.cos(angle)
    points[:, 1] = np.sin(angle)
    return points + np.asarray(center, dtype=np.float64)


def test_level_of_a_point(spec):
    level = level_of(POINT, spec)
    residuals = level_residuals(tf.constant(POINT.coords[np.newaxis]), level, spec).numpy()
    np.testing.assert_allclose(residuals, 0.0, atol=1e-12)


def test_sampling_radius():
    assert sampling_radius(OrbitSpec(-4.0, 1.0), h=2.0) == pytest.approx(6.0)


def test_component_count_of_separated_circles(spec):
    points = np.concatenate([_circle(0.0), _circle([10.0, 0, 0, 0, 0, 0])])
    summary = component_count(points, OrbitSpec(0.0, 0.0), spec)
    assert summary.component_count == 2
    assert len(summary.representatives) == 2
    assert {round(p.J[0] / 10.0) for p in summary.representatives} == {0, 1}


def test_extra_edges_join_components():
    points = np.concatenate([_circle(0.0), _circle([10.0, 0, 0, 0, 0, 0])])
    assert label_components(points)[0] == 2
    assert label_components(points, extra_edges=[(0, 100)])[0] == 1


def test_label_components_with_a_fixed_radius():
    points = np.concatenate([_circle(0.0), _circle([10.0, 0, 0, 0, 0, 0])])
    assert label_components(points, epsilon=0.01)[0] == 200
    assert label_components(points, epsilon=0.1)[0] == 2
    assert label_components(points, epsilon=20.0)[0] == 1


def test_fiber_sample_links_at_its_growth_step(spec):
    points = np.concatenate([_circle(0.0), _circle([3.0, 0, 0, 0, 0, 0])])
    level = FiberLevel(0.0, 0.0, 0.0, 0.0)
    assert component_count(FiberSample(points, level, 0.0, 0.1), OrbitSpec(0.0, 0.0),
                           spec).component_count == 2
    assert component_count(FiberSample(points, level, 0.0, 0.5), OrbitSpec(0.0, 0.0),
                           spec).component_count == 1


def test_thin_out_keeps_points_apart():
    candidates = np.zeros((4, 6))
    candidates[:, 0] = [0.01, 1.0, 1.02, 3.0]
    kept = thin_out(candidates, np.zeros((1, 6)), 0.5)
    np.testing.assert_allclose(kept[:, 0], [1.0, 3.0])
    assert thin_out(candidates, np.zeros((0, 6)), 0.5).shape == (3, 6)


def test_empty_sample_counts_zero(spec):
    summary = component_count(np.zeros((0, 6)), OrbitSpec(-2.0, 0.0), spec)
    assert summary.component_count == 0
    assert summary.representatives == []


def test_negative_k_is_rejected(spec):
    with pytest.raises(ValueError):
        sample_fiber(OrbitSpec(-2.0, 0.0), 1.0, -0.5, spec)
    with pytest.raises(ValueError):
        sample_fiber(OrbitSpec(-2.0, 0.0), 1.0, 0.5, spec, budget=0)
    assert fiber_flood_oracle(OrbitSpec(-2.0, 0.0), 1.0, -0.5, spec) == 0


def test_energy_below_the_orbit_gives_empty_fiber(spec):
    orbit = OrbitSpec(-2.0, 0.0)
    sample = sample_fiber(orbit, -100.0, 1.0, spec, budget=64)
    assert isinstance(sample, FiberSample)
    assert sample.points.shape == (0, 6)
    assert sample.spacing == pytest.approx(sampling_radius(orbit, -100.0) / 32.0)
    assert component_count(sample, orbit, spec).component_count == 0
    assert fiber_flood_oracle(orbit, -100.0, 1.0, spec, resolution=16) == 0


def test_flood_oracle_resolution_is_limited(spec):
    with pytest.raises(ValueError):
        fiber_flood_oracle(OrbitSpec(-2.0, 0.0), 1.0, 1.0, spec, resolution=65)


@pytest.mark.slow
def test_sampled_fiber_lies_on_its_level(spec):
    level = level_of(POINT, spec)
    orbit = OrbitSpec(level.a, level.b)
    sample = sample_fiber(orbit, level.h, level.k, spec, budget=512, seed=3)
    assert len(sample.points) > 0
    assert sample.residual_max < 1e-9
    summary = component_count(sample, orbit, spec)
    assert summary.component_count >= 1
    for p in summary.representatives:
        assert np.max(np.abs(level_residuals(
            tf.constant(p.coords[np.newaxis]), level, spec).numpy())) < 1e-9


@pytest.mark.slow
def test_isoenergy_critical_values_are_sorted_levels(spec):
    orbit = OrbitSpec(-2.0, 0.0)
    levels = isoenergy_critical_values(orbit, 2.0, spec, budget=256)
    values = [level.k for level in levels]
    assert values == sorted(values)
    for level in levels:
        assert level.k >= 0.0
        assert level.circle_count >= 1
        h = level.points[:, 0] ** 2 + level.points[:, 1] ** 2 + 2.0 * level.points[:, 2] ** 2 \
            + 2.0 * spec.c1 * level.points[:, 3]
        np.testing.assert_allclose(h, 2.0, atol=1e-8)


def _near_w2_point():
    # E3 point (0, sqrt(3), 0, -1, 0, 0) of the orbit (-2, 0), moved off it with J . x = 0 kept
    j = np.sqrt(3.0)
    return PhasePoint((0.3, j, 0.2), (-1.0, 0.25 / j, 0.25))


@pytest.mark.slow
def test_fiber_near_center_center_point_has_two_tori(spec):
    p = _near_w2_point()
    level = level_of(p, spec)
    assert level.b == pytest.approx(0.0, abs=1e-12)
    assert momentum_rank(p, spec) == 2
    orbit = OrbitSpec(level.a, 0.0)
    summary = count_tori(orbit, level.h, level.k, spec)
    assert summary.component_count == 2
    # J -> -J preserves the level on b = 0 and swaps the two E3 points
    assert sorted(np.sign(rep.J[1]) for rep in summary.representatives) == [-1.0, 1.0]
    assert fiber_flood_oracle(orbit, level.h, level.k, spec) == 2


@pytest.mark.slow
def test_count_on_the_fiber_through_a_point_is_stable(spec):
    level = level_of(POINT, spec)
    orbit = OrbitSpec(level.a, level.b)
    try:
        summary = count_tori(orbit, level.h, level.k, spec, budget=1024)
    except InconclusiveCountError as e:
        pytest.fail(str(e))
    assert 1 <= summary.component_count <= 4
    assert fiber_flood_oracle(orbit, level.h, level.k, spec) == summary.component_count
