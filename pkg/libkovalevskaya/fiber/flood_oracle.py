import logging

import numpy as np
from scipy import ndimage

from libkovalevskaya.fiber.components import InconclusiveCountError

logger = logging.getLogger('libkovalevskaya')

MAX_RESOLUTION = 64


def fiber_bounds(orbit, h, spec):
    """
    Half-widths ``(R_J, R_x)`` of a box in ``(J, x)`` containing the fiber, from ``H = h`` and
    ``f1 = a``.
    """
    kappa, c1 = spec.kappa, abs(spec.c1)
    if kappa < 0:
        x_bound = abs(kappa) * c1 + np.sqrt(
            kappa ** 2 * c1 ** 2 + max(0.0, orbit.a + abs(kappa) * abs(h)))
    else:
        x_bound = np.sqrt(max(0.0, orbit.a))
    j_bound = np.sqrt(abs(h) + 2.0 * c1 * x_bound)
    return 1.05 * j_bound + 1e-3, 1.05 * x_bound + 1e-3


def level_grid_residuals(j1, j2, j3, x2, x3, orbit, h, k, spec):
    """
    Residuals of ``f1 = a``, ``f2 = b`` and ``K = k`` on the hypersurface ``H = h``, written in
    the coordinates ``(J1, J2, J3, x2, x3)`` with ``x1 = (h - J1^2 - J2^2 - 2 J3^2) / (2 c1)``.

    Returns:
        A list of three pairs ``(residual, gradient_norm)``, broadcast against the inputs
    """
    kappa, c1 = spec.kappa, spec.c1
    x1 = (h - j1 ** 2 - j2 ** 2 - 2.0 * j3 ** 2) / (2.0 * c1)
    dx1 = (-j1 / c1, -j2 / c1, -2.0 * j3 / c1)

    f1 = x1 ** 2 + x2 ** 2 + x3 ** 2 + kappa * (j1 ** 2 + j2 ** 2 + j3 ** 2) - orbit.a
    grad_f1 = [2.0 * x1 * d + 2.0 * kappa * j for d, j in zip(dx1, (j1, j2, j3))] \
        + [2.0 * x2, 2.0 * x3]

    f2 = j1 * x1 + j2 * x2 + j3 * x3 - orbit.b
    grad_f2 = [x1 + j1 * dx1[0], x2 + j1 * dx1[1], x3 + j1 * dx1[2], j2, j3]

    # x1 cancels from A up to 2 J1^2 + 2 J3^2, so dA = (4 J1, 0, 4 J3, 0, 0)
    big_a = j1 ** 2 - j2 ** 2 - 2.0 * c1 * x1 + kappa * c1 ** 2
    big_b = 2.0 * j1 * j2 - 2.0 * c1 * x2
    g_k = big_a ** 2 + big_b ** 2 - k
    grad_k = [2.0 * big_a * 4.0 * j1 + 2.0 * big_b * 2.0 * j2,
              2.0 * big_b * 2.0 * j1,
              2.0 * big_a * 4.0 * j3,
              2.0 * big_b * (-2.0 * c1),
              0.0]

    return [(value, np.sqrt(sum(np.square(g) for g in grad)))
            for value, grad in ((f1, grad_f1), (f2, grad_f2), (g_k, grad_k))]


def _thickness(values):
    """Half the largest one-sided variation of ``values`` across each grid axis, summed."""
    total = np.zeros(values.shape)
    for axis in range(values.ndim):
        diff = np.abs(np.diff(values, axis=axis))
        pad_shape = list(values.shape)
        pad_shape[axis] = 1
        pad = np.full(pad_shape, np.nan)
        forward = np.concatenate([diff, pad], axis=axis)
        backward = np.concatenate([pad, diff], axis=axis)
        total = total + 0.5 * np.fmax(forward, backward)
    return total


def fiber_marks(orbit, h, k, spec, resolution, radius=None):
    """
    Boolean grid over ``(J1, J2, J3, x2, x3)`` marking the nodes within half a cell diagonal of
    the fiber. A node is marked when every residual is below both the gradient bound
    ``|grad g| * half_diagonal`` and the largest variation of ``g`` towards its neighbours, so
    the node nearest to any point of the fiber is marked. The grid is filled one ``J1`` slab at
    a time.
    """
    if spec.c1 == 0:
        raise ValueError("The flood fill solves H = h for x1 and needs c1 != 0")
    j_radius, x_radius = radius if radius is not None else fiber_bounds(orbit, h, spec)
    j_axis = np.linspace(-j_radius, j_radius, resolution)
    x_axis = np.linspace(-x_radius, x_radius, resolution)
    j2, j3, x2, x3 = np.meshgrid(j_axis, j_axis, x_axis, x_axis, indexing='ij', sparse=True)
    spacing = np.array([j_axis[1] - j_axis[0]] * 3 + [x_axis[1] - x_axis[0]] * 2)
    half_diagonal = 0.5 * np.sqrt(np.sum(spacing ** 2))
    shape = (resolution,) * 4

    def evaluate(j1):
        return [(np.broadcast_to(value, shape), np.broadcast_to(norm, shape))
                for value, norm in level_grid_residuals(j1, j2, j3, x2, x3, orbit, h, k, spec)]

    marks = np.zeros((resolution,) + shape, dtype=bool)
    previous, current = None, evaluate(j_axis[0])
    for i in range(resolution):
        following = evaluate(j_axis[i + 1]) if i + 1 < resolution else None
        mark = np.ones(shape, dtype=bool)
        for c, (value, gradient_norm) in enumerate(current):
            across = np.max([np.abs(slab[c][0] - value) for slab in (previous, following)
                             if slab is not None], axis=0)
            variation = 0.5 * across + _thickness(value)
            mark &= np.abs(value) <= np.maximum(half_diagonal * gradient_norm, variation)
        marks[i] = mark
        previous, current = current, following
    return marks


def count_marked_components(marks):
    structure = np.ones((3,) * marks.ndim, dtype=bool)
    _, num_components = ndimage.label(marks, structure=structure)
    return num_components


def fiber_flood_oracle(orbit, h, k, spec, resolution=32, radius=None, check_resolution=None):
    """
    Brute-force count of the connected components of the fiber ``(h, k)``. The hypersurface
    ``H = h`` is a graph over ``(J1, J2, J3, x2, x3)`` since ``H`` is linear in ``x1``, so the
    fiber is the common zero set of three polynomials on that 5-dimensional space. Grid nodes
    near that zero set are marked and flood-filled. The count is repeated on a coarser grid and
    returned only if both agree.

    Args:
        orbit: ``OrbitSpec``
        h: Value of the Hamiltonian
        k: Value of the integral ``K``
        spec: ``PencilSpec`` with ``c1 != 0``
        resolution: Grid points per axis, at most 64. Memory grows as ``resolution^5``.
        radius: Optional pair ``(R_J, R_x)`` of box half-widths; derived from the level
            otherwise
        check_resolution: Resolution of the second count; three quarters of ``resolution``
            by default

    Returns:
        The number of components, zero for an empty fiber

    Raises:
        ValueError: If the resolution is out of range or ``c1 = 0``
        InconclusiveCountError: If the two resolutions give different counts
    """
    if check_resolution is None:
        check_resolution = resolution - resolution // 4
    for value in (resolution, check_resolution):
        if not 2 <= value <= MAX_RESOLUTION:
            raise ValueError("Resolution must lie in [2, {}] per axis, got {}".format(
                MAX_RESOLUTION, value))
    if k < 0:
        return 0
    counts = [count_marked_components(fiber_marks(orbit, h, k, spec, value, radius))
              for value in (resolution, check_resolution)]
    logger.debug("Flood fill at h={}, k={}: {} components at resolution {}, {} at {}".format(
        h, k, counts[0], resolution, counts[1], check_resolution))
    if counts[0] != counts[1]:
        raise InconclusiveCountError(
            "Flood fill at h={}, k={} found {} components at resolution {} and {} at "
            "{}".format(h, k, counts[0], resolution, counts[1], check_resolution))
    return counts[0]
