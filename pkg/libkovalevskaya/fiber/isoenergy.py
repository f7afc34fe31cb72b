import collections
import logging

import numpy as np
import tensorflow as tf

from libkovalevskaya.algebra import sgrad_tensor
from libkovalevskaya.fiber.components import label_components
from libkovalevskaya.fiber.level import sampling_radius
from libkovalevskaya.fields import CasimirF1, CasimirF2, KovalevskayaHamiltonian, \
    KovalevskayaIntegral
from libkovalevskaya.math import gauss_newton

logger = logging.getLogger('libkovalevskaya')

CriticalLevel = collections.namedtuple(
    'CriticalLevel', ['k', 'points', 'circle_count', 'phases'])

_H = KovalevskayaHamiltonian()
_K = KovalevskayaIntegral()


def lagrange_residuals(z, orbit, h, spec):
    """
    Residuals of the critical point system of ``K`` on the isoenergy surface, with unknowns
    ``z = (p, phi)``: ``cos(phi) sgrad K - sin(phi) sgrad H = 0`` together with
    ``f1 = a``, ``f2 = b`` and ``H = h``. Rank-zero points solve it for every ``phi``.
    """
    coords, phi = z[:, :6], z[:, 6:]
    combination = tf.cos(phi) * sgrad_tensor(_K, coords, spec) \
        - tf.sin(phi) * sgrad_tensor(_H, coords, spec)
    level = tf.stack([
        CasimirF1()(coords, spec) - orbit.a,
        CasimirF2()(coords, spec) - orbit.b,
        _H(coords, spec) - h], axis=-1)
    return tf.concat([combination, level], axis=-1)


def solve_critical_points(seeds, orbit, h, spec, max_iterations=60, tolerance=1e-11):
    """
    Projects seeds ``(p, phi)`` of shape [N, 7] onto the critical set of ``K`` on the isoenergy
    surface ``H = h``.

    Returns:
        Converged solutions (p, phi) of shape [M, 7]
    """
    z, residuals = gauss_newton(
        lambda w: lagrange_residuals(w, orbit, h, spec), seeds,
        max_iterations=max_iterations, tolerance=tolerance,
        max_step=sampling_radius(orbit, h) / 8.0)
    z, residuals = z.numpy(), residuals.numpy()
    converged = np.all(np.isfinite(z), axis=-1) & np.all(np.abs(residuals) < 1e-9, axis=-1)
    return z[converged]


def group_levels(points, values, tolerance=1e-6):
    """Splits points into groups of equal ``values`` (gaps above ``tolerance (1 + |k|)``)."""
    order = np.argsort(values)
    values, points = values[order], points[order]
    breaks = np.nonzero(np.diff(values) > tolerance * (1.0 + np.abs(values[1:])))[0] + 1
    return [(float(np.mean(v)), p) for v, p in zip(np.split(values, breaks),
                                                   np.split(points, breaks))]


def isoenergy_critical_values(orbit, h, spec, budget=1024, seed=0, k_range=None):
    """
    Critical values of ``K`` restricted to the isoenergy surface ``{f1 = a, f2 = b, H = h}``.
    These are the ``k`` where the vertical line through ``h`` meets the bifurcation diagram.
    Critical points with equal ``k`` are grouped and split into critical circles.

    Args:
        orbit: ``OrbitSpec``
        h: Value of the Hamiltonian
        spec: ``PencilSpec``
        budget: Number of random seeds
        seed: Seed of the random generator
        k_range: Optional ``(k_min, k_max)``; levels outside are discarded

    Returns:
        A list of ``CriticalLevel`` sorted by ``k``
    """
    radius = sampling_radius(orbit, h)
    rng = np.random.default_rng(seed)
    seeds = np.concatenate([
        rng.uniform(-radius, radius, size=(budget, 6)),
        rng.uniform(0.0, np.pi, size=(budget, 1))], axis=-1)
    solutions = solve_critical_points(seeds, orbit, h, spec)
    solutions = solutions[np.all(np.abs(solutions[:, :6]) <= radius, axis=-1)]
    if len(solutions) == 0:
        return []

    values = _K(tf.constant(solutions[:, :6]), spec).numpy()
    levels = []
    for k, group in group_levels(solutions, values):
        if k_range is not None and not k_range[0] <= k <= k_range[1]:
            continue
        num_circles, _ = label_components(group[:, :6])
        levels.append(CriticalLevel(max(k, 0.0), group[:, :6], num_circles, group[:, 6]))
    logger.debug("Found {} critical levels at h={}".format(len(levels), h))
    return levels
