import collections
import logging

import numpy as np
import tensorflow as tf
from scipy.spatial import cKDTree

from libkovalevskaya.algebra import sgrad_tensor
from libkovalevskaya.fiber.level import FiberLevel, sampling_radius, level_residuals, \
    level_jacobian, residual_max
from libkovalevskaya.fields import KovalevskayaHamiltonian, KovalevskayaIntegral
from libkovalevskaya.math import gauss_newton

logger = logging.getLogger('libkovalevskaya')


class UnboundedFiberError(RuntimeError):
    pass


FiberSample = collections.namedtuple('FiberSample', ['points', 'level', 'residual_max', 'spacing'])

DEFAULT_BUDGET = 4096
DEFAULT_STEP_FRACTION = 1.0 / 32.0
DEFAULT_MAX_POINTS = 200000


def project_to_level(coords, level, spec, max_iterations=50, tolerance=1e-11, max_step=None):
    """
    Damped Gauss-Newton projection of a batch of points onto the level set ``level``. The three
    polynomial constraints of degree at most two are met first, then ``K`` is added.

    Returns:
        A tuple ``(points, converged)`` where ``converged`` flags points whose largest residual is
        below ``1e-9``
    """
    x = tf.constant(np.asarray(coords, dtype=np.float64))
    for num_constraints, num_iterations in ((3, 10), (4, max_iterations)):
        x, _ = gauss_newton(
            lambda z, n=num_constraints: level_residuals(z, level, spec, n), x,
            jacobian_fn=lambda z, n=num_constraints: level_jacobian(z, spec, n),
            max_iterations=num_iterations, tolerance=tolerance, max_step=max_step)
    residuals = level_residuals(x, level, spec).numpy()
    points = x.numpy()
    converged = np.all(np.isfinite(points), axis=-1) & np.all(np.abs(residuals) < 1e-9, axis=-1)
    return points, converged


def tangent_directions(coords, spec, angles):
    """
    Unit vectors in the span of ``sgrad H`` and ``sgrad K``, the tangent plane of the Liouville
    torus through each point, at the given angles in an orthonormal frame of that plane.
    """
    coords = tf.constant(coords)
    frame = tf.stack([
        sgrad_tensor(KovalevskayaHamiltonian(), coords, spec),
        sgrad_tensor(KovalevskayaIntegral(), coords, spec)], axis=-1)
    q, _ = tf.linalg.qr(frame)
    mix = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
    return tf.linalg.matvec(q, tf.constant(mix)).numpy()


def thin_out(candidates, points, min_distance):
    """
    Drops candidates closer than ``min_distance`` to ``points``, then keeps one candidate per cell
    of side ``min_distance``.
    """
    if len(points) > 0 and len(candidates) > 0:
        distances, _ = cKDTree(points).query(candidates)
        candidates = candidates[distances > min_distance]
    if len(candidates) == 0:
        return candidates
    keys = np.floor(candidates / min_distance).astype(np.int64)
    _, index = np.unique(keys, axis=0, return_index=True)
    return candidates[np.sort(index)]


def sample_fiber(orbit, h, k, spec, budget=DEFAULT_BUDGET, seed=0, step=None, num_directions=6,
                 max_points=DEFAULT_MAX_POINTS, escape_fraction=0.1):
    """
    Samples the fiber ``{f1 = a, f2 = b, H = h, K = k}``. Seeds are drawn uniformly in the box
    ``[-R, R]^6`` and projected onto the level set. The sample then grows over every torus it
    has touched: each new point tries ``num_directions`` tangent moves of length ``step``
    followed by re-projection, and a landing point is kept when no sample lies within half a
    step. Growth ends once a round adds nothing, so every torus met by a seed is covered with
    gaps of about one step and ``component_count`` can link neighbours at a fixed multiple of
    ``step``.

    Args:
        orbit: ``OrbitSpec``
        h: Value of the Hamiltonian
        k: Value of the integral ``K``; must be nonnegative
        spec: ``PencilSpec``
        budget: Number of random seeds
        seed: Seed of the random generator
        step: Length of a growth move; ``R / 32`` by default
        num_directions: Evenly spaced tangent moves tried from every new point
        max_points: Growth stops with a warning beyond this many points
        escape_fraction: Fraction of converged seeds outside the box that marks the fiber as
            possibly unbounded

    Returns:
        A ``FiberSample``. An empty fiber gives an empty array of points.

    Raises:
        ValueError: If ``k < 0`` or ``budget < 1``
        UnboundedFiberError: If too many projected seeds leave the sampling box
    """
    if k < 0:
        raise ValueError("K is a sum of squares, level k={} is empty by construction".format(k))
    if budget < 1:
        raise ValueError("Budget must be at least 1, got {}".format(budget))
    level = FiberLevel(orbit.a, orbit.b, h, k)
    radius = sampling_radius(orbit, h)
    step = radius * DEFAULT_STEP_FRACTION if step is None else float(step)
    rng = np.random.default_rng(seed)

    seeds = rng.uniform(-radius, radius, size=(budget, 6))
    points, converged = project_to_level(seeds, level, spec, max_step=radius / 8.0)
    points = points[converged]
    escaped = np.any(np.abs(points) > radius, axis=-1)
    if len(points) > 0 and np.mean(escaped) >= escape_fraction:
        raise UnboundedFiberError(
            "{} of {} projected seeds left the box of half-width {:.3g}: possibly unbounded "
            "fiber at h={}, k={}".format(int(np.sum(escaped)), len(points), radius, h, k))
    if np.any(escaped):
        logger.warning("{} projected seeds escaped the sampling box at h={}, k={}".format(
            int(np.sum(escaped)), h, k))
    points = points[~escaped]
    if len(points) == 0:
        logger.debug("Empty fiber at a={}, b={}, h={}, k={}".format(orbit.a, orbit.b, h, k))
        return FiberSample(np.zeros((0, 6)), level, 0.0, step)

    points = thin_out(points, np.zeros((0, 6)), 0.5 * step)
    frontier = points
    num_rounds, num_dropped = 0, 0
    while len(frontier) > 0:
        if len(points) > max_points:
            logger.warning("Fiber growth stopped at {} points at h={}, k={}".format(
                len(points), h, k))
            break
        starts = np.repeat(frontier, num_directions, axis=0)
        offset = np.repeat(rng.uniform(0.0, 2.0 * np.pi, size=len(frontier)), num_directions)
        angles = offset + np.tile(2.0 * np.pi * np.arange(num_directions) / num_directions,
                                  len(frontier))
        moved = starts + step * tangent_directions(starts, spec, angles)
        walked, ok = project_to_level(moved, level, spec, max_iterations=8)
        ok &= np.linalg.norm(walked - starts, axis=-1) < 2.0 * step
        inside = np.all(np.abs(walked) <= radius, axis=-1)
        num_dropped += int(np.sum(ok & ~inside))
        frontier = thin_out(walked[ok & inside], points, 0.5 * step)
        points = np.concatenate([points, frontier])
        num_rounds += 1
    if num_dropped > 0:
        logger.warning("{} growth moves left the sampling box at h={}, k={}".format(
            num_dropped, h, k))

    sample = FiberSample(points, level, residual_max(points, level, spec), step)
    logger.debug("Grew {} points in {} rounds (residual {:.2e}) at h={}, k={}".format(
        len(points), num_rounds, sample.residual_max, h, k))
    return sample
